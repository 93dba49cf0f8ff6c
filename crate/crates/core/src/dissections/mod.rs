//! Dissection identities and theta functions as checkable series identities.
//!
//! Each catalog entry is a pair of [`Expr`] trees. Verification expands both
//! sides exactly and reports the first exponent where they disagree.

mod catalog;
mod expr;

pub use catalog::{
    catalog, identity_ids, lookup, verify_catalog, verify_identity, IdentityCheck, IdentityRecord,
};
pub use expr::{
    negate_q, phi_neg, psi, psi_neg, substitute_power, theta_phi_neg, theta_psi, theta_psi_neg, w,
    w_series, Expr,
};
