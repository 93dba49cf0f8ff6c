use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::series::{eta_factor, EtaProductSpec, TruncatedSeries};
use crate::{Error, Result};

pub const DEFAULT_MAX_LEVEL: u32 = 24;
pub const DEFAULT_MAX_ABS_EXP: u32 = 9;

/// Tries to write `sum terms[n] q^n` as an eta-product with levels up to
/// `max_level` and exponents bounded by `max_abs_exp` in absolute value.
///
/// Level `i` is peeled off by reading the exponent from the `q^i`
/// coefficient of the residual. The fit is accepted only when the final
/// residual is exactly 1 over every given term.
pub fn fit_eta_product(
    terms: &[BigInt],
    max_level: u32,
    max_abs_exp: u32,
) -> Result<Option<EtaProductSpec>> {
    let Some(a0) = terms.first() else {
        return Err(Error::InvalidArgument("no terms to fit".into()));
    };
    if !a0.is_one() {
        return Err(Error::NotUnitSeries(a0.clone()));
    }
    if terms.len() <= max_level as usize {
        return Err(Error::InvalidArgument(format!(
            "{} terms cannot pin down levels up to {max_level}",
            terms.len()
        )));
    }
    let order = terms.len() - 1;
    let mut residual = TruncatedSeries::new(terms.to_vec());
    let mut factors = Vec::new();
    for level in 1..=max_level {
        let c = residual.coeff(level as usize);
        if c.is_zero() {
            continue;
        }
        let delta = match (-c).to_i32() {
            Some(d) if d.unsigned_abs() <= max_abs_exp => d,
            _ => return Ok(None),
        };
        let f = eta_factor(level, order);
        for _ in 0..delta.unsigned_abs() {
            residual = if delta > 0 { f.divide_into(&residual)? } else { residual.mul(&f) };
        }
        factors.push((level, delta));
    }
    if residual != TruncatedSeries::one(order) {
        return Ok(None);
    }
    Ok(Some(EtaProductSpec::new(factors)?))
}
