//! A bijection `D_o x D_o -> S x P_e` realizing Jacobi's triple product.
//!
//! Write the odd distinct parts of `mu` and `nu` as `2a + 1` and `2b + 1`.
//! The `a`'s mark occupied nonnegative sites of a Maya diagram and the `b`'s
//! mark empty sites `-1 - b` below zero; every other negative site is filled.
//! The diagram has charge `s = l(mu) - l(nu)`, and reading its occupied sites
//! `x_1 > x_2 > ...` against the charge-`s` vacuum gives the partition
//! `kappa_i = x_i - s + i`. Then `|mu| + |nu| = s^2 + 2|kappa|`, and
//! `lambda = 2 kappa` lies in `P_e`. For `s = 0` this is the Frobenius
//! symbol `(a | b)` of `kappa`.

use std::collections::BTreeSet;

use crate::partitions::Partition;
use crate::{Error, Result};

const MAP: &str = "triple_product";

fn check_odd_distinct(p: &Partition, name: &str) -> Result<()> {
    if !p.is_distinct() || !p.all_parts(|k| k % 2 == 1) {
        return Err(Error::domain(MAP, format!("{name} = {p} is not in D_o")));
    }
    Ok(())
}

/// `(mu, nu) -> (s, lambda)` with `s = l(mu) - l(nu)` and
/// `|mu| + |nu| = s^2 + |lambda|`.
pub fn triple_product_forward(mu: &Partition, nu: &Partition) -> Result<(i64, Partition)> {
    check_odd_distinct(mu, "mu")?;
    check_odd_distinct(nu, "nu")?;
    let s = mu.len() as i64 - nu.len() as i64;
    let holes: BTreeSet<i64> = nu.parts().iter().map(|&v| -1 - (v as i64 - 1) / 2).collect();
    let lowest_hole = holes.first().copied().unwrap_or(0);

    // occupied sites in decreasing order, down to the lowest hole
    let mut sites: Vec<i64> = mu.parts().iter().map(|&u| (u as i64 - 1) / 2).collect();
    sites.extend((lowest_hole..0).rev().filter(|x| !holes.contains(x)));

    let mut kappa = Vec::new();
    for (i, &x) in sites.iter().enumerate() {
        let part = x - s + (i as i64 + 1);
        debug_assert!(part >= 0);
        if part > 0 {
            kappa.push(2 * part as u32);
        }
    }
    Ok((s, Partition::new(kappa)))
}

/// Inverse of [`triple_product_forward`].
pub fn triple_product_inverse(s: i64, lambda: &Partition) -> Result<(Partition, Partition)> {
    if !lambda.all_parts(|k| k % 2 == 0) {
        return Err(Error::domain(MAP, format!("lambda = {lambda} is not in P_e")));
    }
    let kappa: Vec<i64> = lambda.parts().iter().map(|&k| k as i64 / 2).collect();
    // Past index `len`, sites continue as s - i, so everything below the last
    // generated site is occupied.
    let len = kappa.len() + s.unsigned_abs() as usize + 1;
    let sites: Vec<i64> = (1..=len)
        .map(|i| kappa.get(i - 1).copied().unwrap_or(0) + s - i as i64)
        .collect();
    let bottom = *sites.last().expect("at least one site");
    let occupied: BTreeSet<i64> = sites.iter().copied().collect();

    let mu = sites.iter().filter(|&&x| x >= 0).map(|&x| (2 * x + 1) as u32);
    let nu = (bottom + 1..0)
        .filter(|x| !occupied.contains(x))
        .map(|x| (2 * (-1 - x) + 1) as u32);
    Ok((Partition::new(mu), Partition::new(nu)))
}
