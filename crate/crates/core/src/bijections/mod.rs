//! Executable bijections between partition classes.
//!
//! Lemma-level maps (Glaisher, the triple-product map, the `P3_o` and `P`
//! splittings, the square-pair map) compose into the two weight-halving
//! bijections and the colored m-ary splitting. [`verify_bijection`] checks any
//! of them exhaustively up to a weight bound.

mod contracts;
mod glaisher;
mod halving;
mod mary;
mod splits;
mod triple_product;

pub use contracts::{verify_bijection, BijectionKind, ContractReport};
pub use glaisher::{glaisher_forward, glaisher_inverse};
pub use halving::{a007096_halving, a007096_halving_inverse, a103258_halving, a103258_halving_inverse};
pub use mary::{mary_merge, mary_split};
pub use splits::{
    split_p, split_p3o, split_p3o_inverse, split_p_inverse, split_parity, sstt, sstt_inverse,
};
pub use triple_product::{triple_product_forward, triple_product_inverse};
