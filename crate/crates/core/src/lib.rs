//! Exact q-series toolkit for convolutive eta-products.
//!
//! * [`series`]: truncated integer power series, eta-product expansion, the
//!   Huffing operator and the m-convolutivity verdict.
//! * [`partitions`]: restricted partition classes, exhaustive enumeration and
//!   counting oracles.
//! * [`bijections`]: executable weight-preserving and weight-halving
//!   bijections together with their exhaustive contract checks.
//! * [`dissections`]: a catalog of dissection identities verified as exact
//!   series identities to a chosen truncation order.
//! * [`oeis`]: parsing of OEIS "stripped" dumps, corpus scanning and
//!   eta-product fitting.

pub mod bijections;
pub mod dissections;
mod error;
pub mod known;
pub mod oeis;
pub mod partitions;
pub mod series;

pub use error::{Error, Result};
pub use series::{ConvolutivityVerdict, EtaProductSpec, TruncatedSeries};
