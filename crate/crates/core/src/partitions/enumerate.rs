use num_bigint::BigInt;

use super::{Element, Partition, PartitionTuple, SetSpec, WeightFilter};
use crate::series::TruncatedSeries;

/// All partitions of `n` whose parts satisfy `allowed` and whose
/// multiplicities stay within `max_mult`, in lexicographically decreasing
/// order of their (weakly decreasing) part sequences.
pub fn enumerate_restricted(
    n: u64,
    allowed: impl Fn(u32) -> bool,
    max_mult: Option<usize>,
) -> Vec<Partition> {
    let sizes: Vec<u32> = (1..=n as u32).rev().filter(|&k| allowed(k)).collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    walk(n, &sizes, max_mult, &mut stack, &mut out);
    out
}

fn walk(
    rest: u64,
    sizes: &[u32],
    max_mult: Option<usize>,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition::new(stack.iter().copied()));
        return;
    }
    for (i, &k) in sizes.iter().enumerate() {
        if k as u64 > rest {
            continue;
        }
        let fit = (rest / k as u64) as usize;
        let top = max_mult.map_or(fit, |m| m.min(fit));
        for mult in (1..=top).rev() {
            let before = stack.len();
            stack.extend(std::iter::repeat_n(k, mult));
            walk(rest - (mult as u64) * k as u64, &sizes[i + 1..], max_mult, stack, out);
            stack.truncate(before);
        }
    }
}

/// Every member of `spec` of weight exactly `n`, each once.
///
/// For the square class the members are signed roots `s` with
/// `scale * s^2 = n`, listed as `-s, s`; weight 0 yields the single root 0.
pub fn enumerate(spec: &SetSpec, n: u64) -> Vec<Element> {
    if !spec.accepts_weight(n) {
        return Vec::new();
    }
    if spec.is_squares() {
        return signed_squares(n, spec.scale);
    }
    enumerate_restricted(n, |k| spec.allows_part(k), spec.max_multiplicity())
        .into_iter()
        .map(Element::Partition)
        .collect()
}

/// Like [`enumerate`] but unwrapped to partitions; empty for the square class.
pub fn enumerate_partitions(spec: &SetSpec, n: u64) -> Vec<Partition> {
    enumerate(spec, n)
        .into_iter()
        .filter_map(Element::into_partition)
        .collect()
}

fn signed_squares(n: u64, scale: u32) -> Vec<Element> {
    let scale64 = scale as u64;
    if n == 0 {
        return vec![Element::Square { root: 0, scale }];
    }
    if !n.is_multiple_of(scale64) {
        return Vec::new();
    }
    let q = n / scale64;
    let r = q.isqrt();
    if r * r != q {
        return Vec::new();
    }
    let r = r as i64;
    vec![
        Element::Square { root: -r, scale },
        Element::Square { root: r, scale },
    ]
}

/// Coefficient `n` is the number of members of weight `n`.
pub fn count_series(spec: &SetSpec, order: usize) -> TruncatedSeries {
    TruncatedSeries::new(
        (0..=order as u64)
            .map(|n| BigInt::from(enumerate(spec, n).len()))
            .collect(),
    )
}

/// All tuples `(x_1, ..., x_k)` with `x_i` in `specs[i]` and total weight `n`,
/// optionally restricted by a filter on the total weight.
pub fn tuple_enumerate(
    specs: &[SetSpec],
    n: u64,
    filter: Option<WeightFilter>,
) -> Vec<PartitionTuple> {
    if filter.is_some_and(|f| !f.accepts(n)) {
        return Vec::new();
    }
    let tables: Vec<Vec<Vec<Element>>> = specs
        .iter()
        .map(|spec| (0..=n).map(|w| enumerate(spec, w)).collect())
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(specs.len());
    fill(&tables, n, &mut current, &mut out);
    out
}

fn fill(
    tables: &[Vec<Vec<Element>>],
    rest: u64,
    current: &mut Vec<Element>,
    out: &mut Vec<PartitionTuple>,
) {
    let i = current.len();
    if i == tables.len() {
        if rest == 0 {
            out.push(PartitionTuple::new(current.clone()));
        }
        return;
    }
    let weights: Vec<u64> = if i + 1 == tables.len() {
        vec![rest]
    } else {
        (0..=rest).collect()
    };
    for w in weights {
        for e in &tables[i][w as usize] {
            current.push(e.clone());
            fill(tables, rest - w, current, out);
            current.pop();
        }
    }
}
