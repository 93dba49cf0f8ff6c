//! Colored m-ary strict partitions: parts are powers `m^k`, a part `m^k`
//! carries a color in `1..=m^k`, and no `(size, color)` pair repeats.

use std::collections::HashSet;

use num_bigint::BigInt;

use super::Partition;
use crate::series::TruncatedSeries;

/// `Some(k)` when `part == m^k`.
pub(crate) fn log_exact(part: u32, m: u32) -> Option<u32> {
    let mut k = 0;
    let mut p = 1u32;
    while p < part {
        p = p.checked_mul(m)?;
        k += 1;
    }
    (p == part).then_some(k)
}

pub fn is_colored_mary(p: &Partition, m: u32) -> bool {
    if p.colors().is_none() && !p.is_empty() {
        return false;
    }
    let mut seen = HashSet::new();
    p.colored_parts().all(|(part, color)| {
        log_exact(part, m).is_some() && color >= 1 && color <= part && seen.insert((part, color))
    })
}

/// All colored m-ary strict partitions of weight `n`, in decreasing order of
/// their `(part, color)` sequences read with colors ascending within a size.
pub fn colored_mary(m: u32, n: u64) -> Vec<Partition> {
    assert!(m >= 2, "m-ary partitions need m >= 2");
    let mut items = Vec::new();
    let mut size = 1u64;
    while size <= n {
        for color in 1..=size as u32 {
            items.push((size as u32, color));
        }
        size *= m as u64;
    }
    items.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    pick(&items, n, &mut chosen, &mut out);
    out
}

fn pick(items: &[(u32, u32)], rest: u64, chosen: &mut Vec<(u32, u32)>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::colored(chosen.iter().copied()));
        return;
    }
    // remaining capacity check: items are sorted by size, so the suffix sum bounds what is reachable
    let capacity: u64 = items.iter().map(|&(p, _)| p as u64).sum();
    if capacity < rest {
        return;
    }
    for (i, &(part, color)) in items.iter().enumerate() {
        if part as u64 <= rest {
            chosen.push((part, color));
            pick(&items[i + 1..], rest - part as u64, chosen, out);
            chosen.pop();
        }
    }
}

/// Counts of colored m-ary strict partitions, by enumeration.
pub fn colored_mary_count_series(m: u32, order: usize) -> TruncatedSeries {
    TruncatedSeries::new(
        (0..=order as u64)
            .map(|n| BigInt::from(colored_mary(m, n).len()))
            .collect(),
    )
}
