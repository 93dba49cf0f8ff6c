use rayon::prelude::*;
use serde::Serialize;

use super::expr::{phi_neg, psi, psi_neg, w, Expr};
use crate::{Error, Result};

/// A named series identity `lhs = rhs`.
#[derive(Debug, Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub statement: &'static str,
    pub lhs: Expr,
    pub rhs: Expr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub id: String,
    pub order: usize,
    pub holds: bool,
    /// Smallest exponent at which the two sides differ.
    pub first_failure: Option<usize>,
}

impl IdentityRecord {
    /// Expands both sides to `order` and compares them coefficient by coefficient.
    pub fn verify(&self, order: usize) -> Result<IdentityCheck> {
        let lhs = self.lhs.eval(order)?;
        let rhs = self.rhs.eval(order)?;
        let first_failure = lhs.first_difference(&rhs);
        Ok(IdentityCheck {
            id: self.id.to_string(),
            order,
            holds: first_failure.is_none(),
            first_failure,
        })
    }
}

fn record(id: &'static str, statement: &'static str, lhs: Expr, rhs: Expr) -> IdentityRecord {
    IdentityRecord { id, statement, lhs, rhs }
}

fn e(pairs: &[(u32, i32)]) -> Expr {
    Expr::eta(pairs)
}

/// `even(q) + c q odd(q)`.
fn two_dissection(even: Expr, c: i64, odd: Expr) -> Expr {
    even.plus(odd.scale(c).shift(1))
}

fn dis_f1_2() -> Expr {
    two_dissection(e(&[(2, -5), (8, 5), (16, -2)]), 2, e(&[(2, -5), (4, 2), (8, -1), (16, 2)]))
}

fn dis_f1_4() -> Expr {
    two_dissection(e(&[(2, -14), (4, 14), (8, -4)]), 4, e(&[(2, -10), (4, 2), (8, 4)]))
}

fn dis_f1f3() -> Expr {
    two_dissection(e(&[(2, -9), (4, 6), (6, 3), (12, -2)]), 3, e(&[(2, -7), (4, 2), (6, 1), (12, 2)]))
}

fn dis_f1f3inv() -> Expr {
    two_dissection(
        e(&[(2, -2), (4, -1), (6, -4), (8, 2), (12, 5), (24, -2)]),
        1,
        e(&[(2, -4), (4, 5), (6, -2), (8, -2), (12, -1), (24, 2)]),
    )
}

/// `phi(-q^9)^3 / phi(-q^3)^4 (1 + 2 q w(q^3) + 4 q^2 w(q^3)^2)`.
fn dis_phi_neg_inv() -> Expr {
    let w3 = w().subst(3);
    phi_neg()
        .subst(9)
        .pow(3)
        .times(phi_neg().subst(3).pow(-4))
        .times(
            Expr::Int(1)
                .plus(w3.clone().scale(2).shift(1))
                .plus(w3.pow(2).scale(4).shift(2)),
        )
}

/// `psi(-q^9)^3 / psi(-q^3)^4 (w(-q^3)^-2 + q w(-q^3)^-1 + q^2)`.
fn dis_psi_neg_inv() -> Expr {
    let wn3 = w().negate_q().subst(3);
    psi_neg()
        .subst(9)
        .pow(3)
        .times(psi_neg().subst(3).pow(-4))
        .times(
            wn3.clone()
                .pow(-2)
                .plus(wn3.pow(-1).shift(1))
                .plus(Expr::Int(1).shift(2)),
        )
}

/// `A(q) = A(q^m)^m + q A(q^m)^m`.
fn functional_equation(m: u32) -> Expr {
    Expr::ColoredMary(m)
        .subst(m)
        .pow(m as i32)
        .times(Expr::Int(1).plus(Expr::q()))
}

/// Every identity the toolkit knows, in a stable order.
pub fn catalog() -> Vec<IdentityRecord> {
    vec![
        record(
            "eq:f1-2",
            "1/f1^2 = f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8)",
            e(&[(1, -2)]),
            dis_f1_2(),
        ),
        record(
            "eq:f1-4",
            "1/f1^4 = f4^14/(f2^14 f8^4) + 4q f4^2 f8^4/f2^10",
            e(&[(1, -4)]),
            dis_f1_4(),
        ),
        record(
            "eq:f1f3",
            "f3/f1^3 = f4^6 f6^3/(f2^9 f12^2) + 3q f4^2 f6 f12^2/f2^7",
            e(&[(1, -3), (3, 1)]),
            dis_f1f3(),
        ),
        record(
            "eq:f1f3inv",
            "1/(f1 f3) = f8^2 f12^5/(f2^2 f4 f6^4 f24^2) + q f4^5 f24^2/(f2^4 f6^2 f8^2 f12)",
            e(&[(1, -1), (3, -1)]),
            dis_f1f3inv(),
        ),
        record(
            "eq:psi-15",
            "psi(q) psi(q^15) + psi(-q) psi(-q^15) = 2 f12^2 f20^2/(f6 f10)",
            psi()
                .times(psi().subst(15))
                .plus(psi_neg().times(psi_neg().subst(15))),
            e(&[(6, -1), (10, -1), (12, 2), (20, 2)]).scale(2),
        ),
        record(
            "eq:H-psi-psi15",
            "H2(psi(q) psi(q^15)) = f6^2 f10^2/(f3 f5)",
            psi().times(psi().subst(15)).huff(2),
            e(&[(3, -1), (5, -1), (6, 2), (10, 2)]),
        ),
        record(
            "eq:H-f1f15",
            "H2(1/(f1 f15)) = f6^2 f10^2/(f1^2 f3 f5 f15^2)",
            e(&[(1, -1), (15, -1)]).huff(2),
            e(&[(1, -2), (3, -1), (5, -1), (6, 2), (10, 2), (15, -2)]),
        ),
        record(
            "eq:1/-phi--3dis",
            "1/phi(-q) = phi(-q^9)^3/phi(-q^3)^4 (1 + 2q w(q^3) + 4q^2 w(q^3)^2)",
            phi_neg().pow(-1),
            dis_phi_neg_inv(),
        ),
        record(
            "eq:1/psi--3dis",
            "1/psi(-q) = psi(-q^9)^3/psi(-q^3)^4 (1/w(-q^3)^2 + q/w(-q^3) + q^2)",
            psi_neg().pow(-1),
            dis_psi_neg_inv(),
        ),
        record(
            "eq:neg-pochhammer",
            "(-q;-q)_inf = f2^3/(f1 f4)",
            e(&[(1, 1)]).negate_q(),
            e(&[(1, -1), (2, 3), (4, -1)]),
        ),
        record(
            "eq:w-neg",
            "w(-q) = f2^2 f3^3 f12^3/(f1 f4 f6^6)",
            w().negate_q(),
            e(&[(1, -1), (2, 2), (3, 3), (4, -1), (6, -6), (12, 3)]),
        ),
        record(
            "thm-A102186",
            "H2(f4 f6^2/(f1 f3 f12)) = (f4 f6^2/(f1 f3 f12))^2",
            e(&[(4, 1), (6, 2), (12, -1)]).times(dis_f1f3inv()).huff(2),
            e(&[(1, -1), (3, -1), (4, 1), (6, 2), (12, -1)]).pow(2),
        ),
        record(
            "thm-A094023",
            "H2(f6 f10/(f1 f15)) = (f6 f10/(f1 f15))^2",
            e(&[(3, 1), (5, 1)]).times(e(&[(1, -1), (15, -1)]).huff(2)),
            e(&[(1, -1), (6, 1), (10, 1), (15, -1)]).pow(2),
        ),
        record(
            "thm-A128128",
            "H2(f2^3 f3/(f1^3 f6)) = (f2^3 f3/(f1^3 f6))^2",
            e(&[(2, 3), (6, -1)]).times(dis_f1f3()).huff(2),
            e(&[(1, -3), (2, 3), (3, 1), (6, -1)]).pow(2),
        ),
        record(
            "thm-A007096",
            "H2(f2^6/(f1^4 f4^2)) = (f2^6/(f1^4 f4^2))^2",
            e(&[(2, 6), (4, -2)]).times(dis_f1_4()).huff(2),
            e(&[(1, -4), (2, 6), (4, -2)]).pow(2),
        ),
        record(
            "thm-A103258",
            "H2(f2 f4^2/(f1^2 f8)) = (f2 f4^2/(f1^2 f8))^2",
            e(&[(2, 1), (4, 2), (8, -1)]).times(dis_f1_2()).huff(2),
            e(&[(1, -2), (2, 1), (4, 2), (8, -1)]).pow(2),
        ),
        record(
            "thm-A098151",
            "H3(f2 f3^2/(f1^2 f6)) = (f2 f3^2/(f1^2 f6))^3",
            e(&[(3, 2), (6, -1)]).times(dis_phi_neg_inv()).huff(3),
            e(&[(1, -2), (2, 1), (3, 2), (6, -1)]).pow(3),
        ),
        record(
            "thm-A385520",
            "H3(f2 f6^3/(f1 f3 f4 f12)) = (f2 f6^3/(f1 f3 f4 f12))^3",
            e(&[(3, -1), (6, 3), (12, -1)]).times(dis_psi_neg_inv()).huff(3),
            e(&[(1, -1), (2, 1), (3, -1), (4, -1), (6, 3), (12, -1)]).pow(3),
        ),
        record(
            "eq:A073707",
            "A(q) = A(q^2)^2 + q A(q^2)^2 with A(q) = prod (1 + q^(2^k))^(2^k)",
            Expr::ColoredMary(2),
            functional_equation(2),
        ),
        record(
            "eq:Am-3",
            "A(q) = A(q^3)^3 + q A(q^3)^3 with A(q) = prod (1 + q^(3^k))^(3^k)",
            Expr::ColoredMary(3),
            functional_equation(3),
        ),
    ]
}

pub fn identity_ids() -> Vec<&'static str> {
    catalog().iter().map(|r| r.id).collect()
}

pub fn lookup(id: &str) -> Result<IdentityRecord> {
    catalog()
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn check_order(order: usize) -> Result<()> {
    if order < 4 {
        return Err(Error::InvalidArgument(format!(
            "identity verification needs order >= 4, got {order}"
        )));
    }
    Ok(())
}

/// Verifies the identity named `id` to `order`.
pub fn verify_identity(id: &str, order: usize) -> Result<IdentityCheck> {
    check_order(order)?;
    lookup(id)?.verify(order)
}

/// Verifies every catalog entry to `order`, in catalog order.
pub fn verify_catalog(order: usize) -> Result<Vec<IdentityCheck>> {
    check_order(order)?;
    catalog().par_iter().map(|r| r.verify(order)).collect()
}
