//! `[A_m]_m -> A_m^m` on colored m-ary strict partitions.
//!
//! A part `m^k` with color `c = m (c' - 1) + r`, `1 <= r <= m`, moves to slot
//! `r` (1-based) as the part `m^(k-1)` with color `c'`.

use crate::partitions::{is_colored_mary, Partition};
use crate::{Error, Result};

fn check_m(map: &'static str, m: u32) -> Result<()> {
    if m < 2 {
        return Err(Error::domain(map, format!("m = {m} must be at least 2")));
    }
    Ok(())
}

pub fn mary_split(pi: &Partition, m: u32) -> Result<Vec<Partition>> {
    const MAP: &str = "mary_split";
    check_m(MAP, m)?;
    if !is_colored_mary(pi, m) {
        return Err(Error::domain(
            MAP,
            format!("{pi} is not a colored {m}-ary strict partition (invalid color range or repeated part)"),
        ));
    }
    if !pi.weight().is_multiple_of(m as u64) {
        return Err(Error::domain(MAP, format!("weight {} is not a multiple of {m}", pi.weight())));
    }
    let mut slots: Vec<Vec<(u32, u32)>> = vec![Vec::new(); m as usize];
    for (part, color) in pi.colored_parts() {
        // weight divisible by m rules out the single part of size 1
        debug_assert!(part > 1);
        let r = (color - 1) % m + 1;
        let c_prime = (color - r) / m + 1;
        slots[(r - 1) as usize].push((part / m, c_prime));
    }
    Ok(slots.into_iter().map(Partition::colored).collect())
}

pub fn mary_merge(lambdas: &[Partition], m: u32) -> Result<Partition> {
    const MAP: &str = "mary_merge";
    check_m(MAP, m)?;
    if lambdas.len() != m as usize {
        return Err(Error::domain(MAP, format!("expected {m} slots, got {}", lambdas.len())));
    }
    let mut pairs = Vec::new();
    for (slot, lambda) in lambdas.iter().enumerate() {
        if !is_colored_mary(lambda, m) {
            return Err(Error::domain(
                MAP,
                format!("slot {} = {lambda} is not a colored {m}-ary strict partition", slot + 1),
            ));
        }
        for (part, color) in lambda.colored_parts() {
            pairs.push((part * m, m * (color - 1) + slot as u32 + 1));
        }
    }
    Ok(Partition::colored(pairs))
}
