use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::TruncatedSeries;
use crate::{Error, Result};

/// Outcome of testing `sum a_{mn} q^n == (sum a_n q^n)^m` on a truncated series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvolutivityVerdict {
    pub m: u32,
    /// Number of indices `n` with `m n <= order`, i.e. `floor(order / m) + 1`.
    pub terms_testable: usize,
    pub holds: bool,
    pub first_violation: Option<usize>,
}

/// Tests m-convolutivity on every index the truncation order allows.
///
/// Coefficients of `a^2, ..., a^m` are built one index at a time and compared
/// against `a_{mn}` as soon as they are known, so a sequence that fails early
/// costs `O(m n^2)` for a violation at `n` instead of a full power.
pub fn is_m_convolutive(a: &TruncatedSeries, m: u32) -> Result<ConvolutivityVerdict> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "convolutivity needs m >= 2, got {m}"
        )));
    }
    let order = a.order();
    if order < m as usize {
        return Err(Error::InsufficientTerms { order, m });
    }
    let limit = order / m as usize;
    let coeffs = a.coeffs();
    // powers[j][n] is the coefficient of q^n in a^(j+2)
    let mut powers: Vec<Vec<BigInt>> = vec![Vec::with_capacity(limit + 1); m as usize - 1];
    let mut first_violation = None;
    for n in 0..=limit {
        for j in 0..powers.len() {
            let (lower, upper) = powers.split_at_mut(j);
            let prev: &[BigInt] = if j == 0 { coeffs } else { &lower[j - 1] };
            let mut c = BigInt::zero();
            for i in 0..=n {
                if !coeffs[i].is_zero() && !prev[n - i].is_zero() {
                    c += &coeffs[i] * &prev[n - i];
                }
            }
            upper[0].push(c);
        }
        if powers[m as usize - 2][n] != coeffs[m as usize * n] {
            first_violation = Some(n);
            break;
        }
    }
    Ok(ConvolutivityVerdict {
        m,
        terms_testable: limit + 1,
        holds: first_violation.is_none(),
        first_violation,
    })
}
