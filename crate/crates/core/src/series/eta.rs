//! Eta-products `prod_j (q^{m_j}; q^{m_j})_inf^{d_j}` and their exact expansion.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::TruncatedSeries;
use crate::{Error, Result};

/// A finite map from level `m_j > 0` to a nonzero exponent `d_j`.
///
/// Written and parsed in the grammar `1^-1 3^-1 4^1 6^2 12^-1`; the empty
/// string is the empty product.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<u32, i32>", into = "BTreeMap<u32, i32>")]
pub struct EtaProductSpec {
    factors: BTreeMap<u32, i32>,
}

impl EtaProductSpec {
    /// Builds a spec from `(level, exponent)` pairs. Levels must be positive
    /// and distinct, exponents nonzero.
    pub fn new(factors: impl IntoIterator<Item = (u32, i32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (level, exp) in factors {
            if level == 0 {
                return Err(Error::InvalidEtaSpec("level 0 is not allowed".into()));
            }
            if exp == 0 {
                return Err(Error::InvalidEtaSpec(format!(
                    "level {level} has exponent 0"
                )));
            }
            if map.insert(level, exp).is_some() {
                return Err(Error::InvalidEtaSpec(format!("level {level} repeated")));
            }
        }
        Ok(EtaProductSpec { factors: map })
    }

    /// Shorthand for specs that are known to be valid, e.g. literals in tests.
    ///
    /// Panics on an invalid spec.
    pub fn from_pairs(factors: &[(u32, i32)]) -> Self {
        Self::new(factors.iter().copied()).expect("valid eta-product spec")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(level, exponent)` pairs in ascending level order.
    pub fn factors(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.factors.iter().map(|(&l, &e)| (l, e))
    }

    pub fn exponent(&self, level: u32) -> i32 {
        self.factors.get(&level).copied().unwrap_or(0)
    }

    /// gcd of the levels is 1. The empty product counts as primitive.
    pub fn is_primitive(&self) -> bool {
        self.factors.keys().fold(0u32, |g, &l| g.gcd(&l)) <= 1
    }

    /// The product of two specs; factors whose exponents cancel are dropped.
    pub fn times(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (level, exp) in other.factors() {
            let e = factors.entry(level).or_insert(0);
            *e += exp;
            if *e == 0 {
                factors.remove(&level);
            }
        }
        EtaProductSpec { factors }
    }

    pub fn reciprocal(&self) -> Self {
        EtaProductSpec {
            factors: self.factors.iter().map(|(&l, &e)| (l, -e)).collect(),
        }
    }

    pub fn expand(&self, order: usize) -> TruncatedSeries {
        eta_product_expand(self, order)
    }
}

impl TryFrom<BTreeMap<u32, i32>> for EtaProductSpec {
    type Error = Error;

    fn try_from(map: BTreeMap<u32, i32>) -> Result<Self> {
        Self::new(map)
    }
}

impl From<EtaProductSpec> for BTreeMap<u32, i32> {
    fn from(spec: EtaProductSpec) -> Self {
        spec.factors
    }
}

impl fmt::Display for EtaProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (level, exp)) in self.factors().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{level}^{exp}")?;
        }
        Ok(())
    }
}

impl FromStr for EtaProductSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = BTreeMap::new();
        for token in s.split_whitespace() {
            let bad = |reason: &str| Error::EtaSpecParse {
                token: token.to_string(),
                reason: reason.to_string(),
            };
            let (level, exp) = token
                .split_once('^')
                .ok_or_else(|| bad("expected LEVEL^EXPONENT"))?;
            let level: u32 = level
                .parse()
                .map_err(|_| bad("level is not a positive integer"))?;
            let exp: i32 = exp
                .parse()
                .map_err(|_| bad("exponent is not an integer"))?;
            if level == 0 {
                return Err(bad("level must be positive"));
            }
            if exp == 0 {
                return Err(bad("exponent must be nonzero"));
            }
            if factors.insert(level, exp).is_some() {
                return Err(bad("level repeated"));
            }
        }
        Ok(EtaProductSpec { factors })
    }
}

/// Nonzero terms of `(q^m; q^m)_inf` up to `order`, ascending by exponent.
///
/// Euler's pentagonal number theorem: the coefficient of `q^{m k(3k-1)/2}` is
/// `(-1)^k` for every integer `k`, and all others vanish.
pub(crate) fn pentagonal_terms(m: u32, order: usize) -> Vec<(usize, i8)> {
    let m = m as usize;
    let mut terms = vec![(0usize, 1i8)];
    for k in 1usize.. {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let lo = m * (k * (3 * k - 1) / 2);
        let hi = m * (k * (3 * k + 1) / 2);
        if lo > order {
            break;
        }
        terms.push((lo, sign));
        if hi <= order {
            terms.push((hi, sign));
        }
    }
    terms
}

/// `prod_{k>=1} (1 - q^{mk})` to `order`.
pub fn eta_factor(m: u32, order: usize) -> TruncatedSeries {
    assert!(m >= 1, "eta factor level must be positive");
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for (n, sign) in pentagonal_terms(m, order) {
        coeffs[n] = BigInt::from(sign);
    }
    TruncatedSeries::new(coeffs)
}

fn mul_sparse(acc: &mut [BigInt], terms: &[(usize, i8)]) {
    for n in (0..acc.len()).rev() {
        let mut sum = BigInt::zero();
        for &(k, sign) in terms {
            if k > n {
                break;
            }
            if sign > 0 {
                sum += &acc[n - k];
            } else {
                sum -= &acc[n - k];
            }
        }
        acc[n] = sum;
    }
}

fn div_sparse(acc: &mut [BigInt], terms: &[(usize, i8)]) {
    // divisor has constant term +1, so c_n = b_n - sum_{k>=1} d_k c_{n-k}
    for n in 0..acc.len() {
        let mut sum = std::mem::take(&mut acc[n]);
        for &(k, sign) in &terms[1..] {
            if k > n {
                break;
            }
            if sign > 0 {
                sum -= &acc[n - k];
            } else {
                sum += &acc[n - k];
            }
        }
        acc[n] = sum;
    }
}

/// Exact coefficients of an eta-product up to `order`.
///
/// Each factor is applied in place as a multiplication by, or division by, the
/// sparse pentagonal expansion of `(q^m; q^m)_inf`, once per unit of exponent.
pub fn eta_product_expand(spec: &EtaProductSpec, order: usize) -> TruncatedSeries {
    let mut acc = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::from(1);
    for (level, exp) in spec.factors() {
        let terms = pentagonal_terms(level, order);
        if terms.len() == 1 {
            continue;
        }
        for _ in 0..exp.unsigned_abs() {
            if exp > 0 {
                mul_sparse(&mut acc, &terms);
            } else {
                div_sparse(&mut acc, &terms);
            }
        }
    }
    TruncatedSeries::new(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_eta(level: usize, order: usize) -> Vec<i64> {
        let mut c = vec![0i64; order + 1];
        c[0] = 1;
        let mut k = level;
        while k <= order {
            for n in (k..=order).rev() {
                c[n] -= c[n - k];
            }
            k += level;
        }
        c
    }

    /// Counts partitions of `n` into odd parts where one part of each size is
    /// marked: the number of markings is the product of the multiplicities.
    fn pdo_oracle(n: u32) -> u64 {
        fn go(rest: u32, max_part: u32, marks: u64) -> u64 {
            if rest == 0 {
                return marks;
            }
            let mut total = 0;
            let mut part = max_part.min(rest);
            if part.is_multiple_of(2) {
                part = part.saturating_sub(1);
            }
            while part >= 1 {
                let mut mult = 1;
                while mult * part <= rest {
                    total += go(rest - mult * part, part - 1, marks * mult as u64);
                    mult += 1;
                }
                if part < 2 {
                    break;
                }
                part -= 2;
            }
            total
        }
        go(n, n, 1)
    }

    fn partition_count_oracle(n: usize) -> u64 {
        // p(n) by counting compositions into weakly decreasing parts
        fn go(rest: usize, max_part: usize) -> u64 {
            if rest == 0 {
                return 1;
            }
            (1..=max_part.min(rest)).map(|p| go(rest - p, p)).sum()
        }
        go(n, n)
    }

    #[test]
    fn eta_factor_examples() {
        assert_eq!(eta_factor(1, 7), TruncatedSeries::from_i64s(&[1, -1, -1, 0, 0, 1, 0, 1]));
        assert_eq!(eta_factor(2, 3), TruncatedSeries::from_i64s(&[1, 0, -1, 0]));
        assert_eq!(eta_factor(9, 5), TruncatedSeries::one(5));
    }

    #[test]
    fn eta_factor_matches_brute_force_product() {
        for level in 1..=7 {
            assert_eq!(
                eta_factor(level, 120),
                TruncatedSeries::from_i64s(&brute_eta(level as usize, 120))
            );
        }
    }

    #[test]
    fn expand_examples() {
        assert_eq!(EtaProductSpec::empty().expand(5), TruncatedSeries::one(5));
        let p = EtaProductSpec::from_pairs(&[(1, -1)]).expand(20);
        for n in 0..=20 {
            assert_eq!(*p.coeff(n), BigInt::from(partition_count_oracle(n)));
        }
    }

    #[test]
    fn pdo_generating_function_counts_designated_summands() {
        let spec = EtaProductSpec::from_pairs(&[(1, -1), (3, -1), (4, 1), (6, 2), (12, -1)]);
        let pdo = spec.expand(13);
        let oracle: Vec<i64> = (0..=13).map(|n| pdo_oracle(n) as i64).collect();
        assert_eq!(pdo, TruncatedSeries::from_i64s(&oracle));
        assert_eq!(
            oracle,
            vec![1, 1, 2, 4, 5, 8, 12, 16, 22, 32, 42, 56, 76, 98]
        );
    }

    #[test]
    fn expansion_agrees_with_series_inverse_route() {
        let spec = EtaProductSpec::from_pairs(&[(1, -4), (2, 6), (4, -2)]);
        let order = 60;
        let mut via_inverse = TruncatedSeries::one(order);
        for (level, exp) in spec.factors() {
            via_inverse = via_inverse.mul(&eta_factor(level, order).pow_signed(exp).unwrap());
        }
        assert_eq!(spec.expand(order), via_inverse);
    }

    #[test]
    fn spec_grammar_round_trips() {
        let spec: EtaProductSpec = "1^-1 3^-1 4^1 6^2 12^-1".parse().unwrap();
        assert_eq!(spec.to_string(), "1^-1 3^-1 4^1 6^2 12^-1");
        assert_eq!(spec.exponent(6), 2);
        assert!(spec.is_primitive());
        let empty: EtaProductSpec = "".parse().unwrap();
        assert!(empty.is_empty());
        assert_eq!("  2^1   1^-1 ".parse::<EtaProductSpec>().unwrap().to_string(), "1^-1 2^1");
    }

    #[test]
    fn spec_parse_errors_name_the_token() {
        for bad in ["1^-1 x^2", "3", "0^1", "2^0", "1^1 1^2", "2^a"] {
            let err = bad.parse::<EtaProductSpec>().unwrap_err();
            let Error::EtaSpecParse { token, .. } = &err else {
                panic!("unexpected error {err}");
            };
            assert!(bad.contains(token.as_str()));
        }
    }

    #[test]
    fn primitivity_and_algebra() {
        assert!(!EtaProductSpec::from_pairs(&[(2, 1), (4, -1)]).is_primitive());
        assert!(EtaProductSpec::from_pairs(&[(2, 1), (3, -1)]).is_primitive());
        let a = EtaProductSpec::from_pairs(&[(1, -1), (2, 2)]);
        assert!(a.times(&a.reciprocal()).is_empty());
        assert!(EtaProductSpec::new([(3, 1), (3, 2)]).is_err());
    }

    #[test]
    fn serde_uses_level_exponent_map() {
        let spec = EtaProductSpec::from_pairs(&[(1, -4), (2, 6), (4, -2)]);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"1":-4,"2":6,"4":-2}"#);
        let back: EtaProductSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        assert!(serde_json::from_str::<EtaProductSpec>(r#"{"1":0}"#).is_err());
    }
}
