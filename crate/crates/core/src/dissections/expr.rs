use num_bigint::BigInt;
use num_traits::Zero;

use crate::series::{colored_mary_product, EtaProductSpec, TruncatedSeries};
use crate::Result;

/// A q-series expression built from eta-quotients and a handful of
/// coefficient-level operations. Evaluation is exact at any requested order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Eta(EtaProductSpec),
    /// `prod_{k>=0} (1 + q^{m^k})^{m^k}`.
    ColoredMary(u32),
    Int(i64),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    /// Integer power; negative exponents need a unit constant term.
    Power(Box<Expr>, i32),
    Scale(i64, Box<Expr>),
    /// Multiplication by `q^k`.
    Shift(usize, Box<Expr>),
    /// `q -> q^k`.
    Subst(u32, Box<Expr>),
    /// `q -> -q`.
    NegateQ(Box<Expr>),
    Huff(u32, Box<Expr>),
}

impl Expr {
    pub fn eta(pairs: &[(u32, i32)]) -> Self {
        Expr::Eta(EtaProductSpec::from_pairs(pairs))
    }

    pub fn q() -> Self {
        Expr::Int(1).shift(1)
    }

    pub fn times(self, other: Expr) -> Self {
        match self {
            Expr::Product(mut v) => {
                v.push(other);
                Expr::Product(v)
            }
            e => Expr::Product(vec![e, other]),
        }
    }

    pub fn plus(self, other: Expr) -> Self {
        match self {
            Expr::Sum(mut v) => {
                v.push(other);
                Expr::Sum(v)
            }
            e => Expr::Sum(vec![e, other]),
        }
    }

    pub fn pow(self, e: i32) -> Self {
        Expr::Power(Box::new(self), e)
    }

    pub fn scale(self, c: i64) -> Self {
        Expr::Scale(c, Box::new(self))
    }

    pub fn shift(self, k: usize) -> Self {
        Expr::Shift(k, Box::new(self))
    }

    pub fn subst(self, k: u32) -> Self {
        Expr::Subst(k, Box::new(self))
    }

    pub fn negate_q(self) -> Self {
        Expr::NegateQ(Box::new(self))
    }

    pub fn huff(self, m: u32) -> Self {
        Expr::Huff(m, Box::new(self))
    }

    /// Expands to exactly `order` (coefficients `0..=order`).
    pub fn eval(&self, order: usize) -> Result<TruncatedSeries> {
        Ok(match self {
            Expr::Eta(spec) => spec.expand(order),
            Expr::ColoredMary(m) => colored_mary_product(*m, order),
            Expr::Int(c) => TruncatedSeries::constant(*c, order),
            Expr::Sum(terms) => {
                let mut acc = TruncatedSeries::zero(order);
                for t in terms {
                    acc = &acc + &t.eval(order)?;
                }
                acc
            }
            Expr::Product(factors) => {
                let mut acc = TruncatedSeries::one(order);
                for f in factors {
                    acc = acc.mul(&f.eval(order)?);
                }
                acc
            }
            Expr::Power(base, e) => base.eval(order)?.pow_signed(*e)?,
            Expr::Scale(c, inner) => inner.eval(order)?.scale(&BigInt::from(*c)),
            Expr::Shift(k, inner) => {
                if *k > order {
                    TruncatedSeries::zero(order)
                } else {
                    inner.eval(order - k)?.shift(*k)
                }
            }
            Expr::Subst(k, inner) => pad(inner.eval(order / *k as usize)?.substitute_power(*k), order),
            Expr::NegateQ(inner) => inner.eval(order)?.dual(),
            Expr::Huff(m, inner) => inner.eval(order * *m as usize)?.huff(*m),
        })
    }
}

/// Extends with zero coefficients up to `order`.
fn pad(s: TruncatedSeries, order: usize) -> TruncatedSeries {
    if s.order() >= order {
        return s.truncate(order);
    }
    let mut c = s.into_coeffs();
    c.resize(order + 1, BigInt::zero());
    TruncatedSeries::new(c)
}

/// `q -> q^k`, kept at the order of `a`.
pub fn substitute_power(a: &TruncatedSeries, k: u32) -> TruncatedSeries {
    pad(a.substitute_power(k), a.order())
}

/// `q -> -q`.
pub fn negate_q(a: &TruncatedSeries) -> TruncatedSeries {
    a.dual()
}

/// `phi(-q) = f_1^2 / f_2`.
pub fn phi_neg() -> Expr {
    Expr::eta(&[(1, 2), (2, -1)])
}

/// `psi(q) = f_2^2 / f_1`.
pub fn psi() -> Expr {
    Expr::eta(&[(1, -1), (2, 2)])
}

/// `psi(-q) = f_1 f_4 / f_2`.
pub fn psi_neg() -> Expr {
    Expr::eta(&[(1, 1), (2, -1), (4, 1)])
}

/// `w(q) = f_1 f_6^3 / (f_2 f_3^3)`.
pub fn w() -> Expr {
    Expr::eta(&[(1, 1), (2, -1), (3, -3), (6, 3)])
}

pub fn theta_phi_neg(order: usize) -> TruncatedSeries {
    phi_neg().eval(order).expect("eta quotients always expand")
}

pub fn theta_psi(order: usize) -> TruncatedSeries {
    psi().eval(order).expect("eta quotients always expand")
}

pub fn theta_psi_neg(order: usize) -> TruncatedSeries {
    psi_neg().eval(order).expect("eta quotients always expand")
}

pub fn w_series(order: usize) -> TruncatedSeries {
    w().eval(order).expect("eta quotients always expand")
}
