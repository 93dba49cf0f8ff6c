//! Truncated formal power series with arbitrary-precision integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores `a_0, ..., a_N` and stands for
//! `a_0 + a_1 q + ... + a_N q^N + O(q^{N+1})`. Binary operations work at the
//! smaller of the two orders and record that order in the result.

mod convolutive;
mod eta;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use convolutive::{is_m_convolutive, ConvolutivityVerdict};
pub use eta::{eta_factor, eta_product_expand, EtaProductSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series from `a_0..=a_N`.
    ///
    /// Panics if `coeffs` is empty: every series knows at least `a_0`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least a_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![BigInt::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigInt::one(), order)
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    /// `c * q^k` at the given order (zero when `k > order`).
    pub fn monomial(c: impl Into<BigInt>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`. Panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`. Orders above the current one
    /// leave the series unchanged, since unknown terms cannot be invented.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self::new(self.coeffs[..keep].to_vec())
    }

    /// Indices and values of the nonzero coefficients.
    fn support(&self) -> Vec<(usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Cauchy product at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        let rhs = other.support();
        for (i, a) in self.support() {
            if i > order {
                break;
            }
            for &(j, b) in &rhs {
                if i + j > order {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `self^m` by binary exponentiation; `pow(0)` is the constant one.
    pub fn pow(&self, m: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Integer power with negative exponents realized through [`inverse`](Self::inverse).
    pub fn pow_signed(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// Multiplicative inverse of a series whose constant term is a unit (±1).
    pub fn inverse(&self) -> Result<Self> {
        self.check_unit()?;
        self.divide_into(&Self::one(self.order()))
    }

    /// `numerator / self`, at the common order.
    ///
    /// Triangular recurrence `c_n = a_0 (b_n - sum_{k>=1} a_k c_{n-k})`, which
    /// only touches the nonzero coefficients of the divisor. Because `a_0` is a
    /// unit the quotient never leaves the integers.
    pub fn divide_into(&self, numerator: &Self) -> Result<Self> {
        let a0 = self.check_unit()?.clone();
        let order = self.order().min(numerator.order());
        let divisor: Vec<(usize, &BigInt)> = self
            .support()
            .into_iter()
            .filter(|&(k, _)| k >= 1 && k <= order)
            .collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = numerator.coeffs[n].clone();
            for &(k, ak) in &divisor {
                if k > n {
                    break;
                }
                acc -= ak * &out[n - k];
            }
            // 1/a_0 == a_0 for a_0 = ±1
            if a0.is_negative() {
                acc = -acc;
            }
            out.push(acc);
        }
        Ok(Self::new(out))
    }

    fn check_unit(&self) -> Result<&BigInt> {
        let a0 = &self.coeffs[0];
        if a0.abs().is_one() {
            Ok(a0)
        } else {
            Err(Error::NonInvertible(a0.clone()))
        }
    }

    /// Huffing operator: `sum a_{mn} q^n`, of order `floor(order / m)`.
    ///
    /// Panics if `m == 0`.
    pub fn huff(&self, m: u32) -> Self {
        assert!(m >= 1, "huff needs m >= 1");
        Self::new(self.coeffs.iter().step_by(m as usize).cloned().collect())
    }

    /// The dual series `sum (-1)^n a_n q^n`; the same as substituting `q -> -q`.
    pub fn dual(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Substitutes `q -> q^k`; the result has order `order * k`.
    ///
    /// Panics if `k == 0`.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k >= 1, "substitution q -> q^k needs k >= 1");
        let k = k as usize;
        let mut out = vec![BigInt::zero(); self.order() * k + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            out[n * k] = c.clone();
        }
        Self::new(out)
    }

    /// Multiplies by `q^k`; the result has order `order + k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Index of the first coefficient where `self` and `other` differ, compared
    /// up to the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }
}

/// `prod_{k>=0} (1 + q^{m^k})^{m^k}` to the given order: the generating
/// function of colored m-ary strict partitions.
///
/// Panics if `m < 2`.
pub fn colored_mary_product(m: u32, order: usize) -> TruncatedSeries {
    assert!(m >= 2, "m-ary products need m >= 2");
    let mut out = vec![BigInt::zero(); order + 1];
    out[0] = BigInt::one();
    let mut size = 1usize;
    while size <= order {
        for _ in 0..size {
            for n in (size..=order).rev() {
                let (lo, hi) = out.split_at_mut(n);
                hi[0] += &lo[n - size];
            }
        }
        size *= m as usize;
    }
    TruncatedSeries::new(out)
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.abs();
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}*q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
