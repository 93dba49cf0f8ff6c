//! Exhaustive contract checks: every bijection is run forward and backward on
//! every domain and codomain object up to a weight bound, and the slice sizes
//! are compared with generating-function coefficients.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use serde::Serialize;

use super::*;
use crate::partitions::{
    colored_mary, enumerate_partitions, enumerate_restricted, tuple_enumerate, Element, Partition,
    SetSpec, WeightFilter,
};
use crate::series::{colored_mary_product, EtaProductSpec, TruncatedSeries};
use crate::{Error, Result};

const MAX_REPORTED: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BijectionKind {
    Glaisher(u32),
    TripleProduct,
    SplitP3o,
    SplitP,
    Sstt,
    A007096,
    A103258,
    MarySplit(u32),
}

impl BijectionKind {
    pub fn all() -> Vec<Self> {
        use BijectionKind::*;
        vec![
            Glaisher(2),
            Glaisher(3),
            Glaisher(4),
            TripleProduct,
            SplitP3o,
            SplitP,
            Sstt,
            A007096,
            A103258,
            MarySplit(2),
            MarySplit(3),
        ]
    }

    pub fn name(&self) -> String {
        match self {
            BijectionKind::Glaisher(d) => format!("glaisher-d{d}"),
            BijectionKind::TripleProduct => "triple-product".into(),
            BijectionKind::SplitP3o => "split-p3o".into(),
            BijectionKind::SplitP => "split-p".into(),
            BijectionKind::Sstt => "sstt".into(),
            BijectionKind::A007096 => "a007096".into(),
            BijectionKind::A103258 => "a103258".into(),
            BijectionKind::MarySplit(m) => format!("mary-split-m{m}"),
        }
    }

    /// Resolves a user-facing name. `glaisher` and `mary-split` expand to
    /// their standard parameter sets; `all` to every bijection.
    pub fn resolve(name: &str) -> Result<Vec<Self>> {
        let all = Self::all();
        let picked: Vec<Self> = match name {
            "all" => all,
            "glaisher" => all.into_iter().filter(|k| matches!(k, Self::Glaisher(_))).collect(),
            "mary-split" => all.into_iter().filter(|k| matches!(k, Self::MarySplit(_))).collect(),
            _ => {
                if let Some(d) = name.strip_prefix("glaisher-d").and_then(|d| d.parse().ok()) {
                    vec![Self::Glaisher(d)]
                } else if let Some(m) = name.strip_prefix("mary-split-m").and_then(|m| m.parse().ok()) {
                    vec![Self::MarySplit(m)]
                } else {
                    all.into_iter().filter(|k| k.name() == name).collect()
                }
            }
        };
        match picked.as_slice() {
            [] => Err(Error::UnknownBijection(name.to_string())),
            [Self::Glaisher(d)] | [Self::MarySplit(d)] if *d < 2 => {
                Err(Error::UnknownBijection(name.to_string()))
            }
            _ => Ok(picked),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractReport {
    pub name: String,
    pub max_weight: u64,
    /// Domain objects pushed through the forward map.
    pub domain_checked: usize,
    /// Codomain objects pushed through the inverse map.
    pub codomain_checked: usize,
    pub failure_count: usize,
    /// The first few failures, for diagnosis.
    pub failures: Vec<String>,
}

impl ContractReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

type Enumerator<T> = Box<dyn Fn(u64) -> Vec<T>>;
type Map<A, B> = Box<dyn Fn(&A) -> Result<B>>;
type Statistic<D, C> = Box<dyn Fn(&D, &C) -> std::result::Result<(), String>>;

/// Everything needed to check one bijection. Domain objects of weight `w`
/// map to codomain objects of weight `w / divisor`.
struct Contract<D, C> {
    divisor: u64,
    domain: Enumerator<D>,
    codomain: Enumerator<C>,
    forward: Map<D, C>,
    inverse: Map<C, D>,
    weight_c: Box<dyn Fn(&C) -> u64>,
    weight_d: Box<dyn Fn(&D) -> u64>,
    statistic: Option<Statistic<D, C>>,
    /// Generating functions whose coefficients count the domain and codomain.
    domain_gf: TruncatedSeries,
    codomain_gf: TruncatedSeries,
}

struct Failures {
    count: usize,
    shown: Vec<String>,
}

impl Failures {
    fn push(&mut self, msg: String) {
        self.count += 1;
        if self.shown.len() < MAX_REPORTED {
            self.shown.push(msg);
        }
    }
}

impl<D, C> Contract<D, C>
where
    D: Clone + Eq + Hash + Debug,
    C: Clone + Eq + Hash + Debug,
{
    fn run(&self, name: String, max_weight: u64) -> ContractReport {
        let mut fails = Failures { count: 0, shown: Vec::new() };
        let mut domain_checked = 0;
        let mut codomain_checked = 0;
        for w in (0..=max_weight).filter(|w| w % self.divisor == 0) {
            let half = w / self.divisor;
            let dom = (self.domain)(w);
            let cod = (self.codomain)(half);
            let cod_set: HashSet<&C> = cod.iter().collect();
            let mut images = HashSet::with_capacity(dom.len());

            if dom.len() != cod.len() {
                fails.push(format!(
                    "weight {w}: domain has {} objects, codomain slice {} has {}",
                    dom.len(),
                    half,
                    cod.len()
                ));
            }
            check_count(&mut fails, "domain", w, dom.len(), &self.domain_gf);
            check_count(&mut fails, "codomain", half, cod.len(), &self.codomain_gf);

            for x in &dom {
                domain_checked += 1;
                if (self.weight_d)(x) != w {
                    fails.push(format!("{x:?}: enumerated at weight {w} but weighs {}", (self.weight_d)(x)));
                }
                let y = match (self.forward)(x) {
                    Ok(y) => y,
                    Err(e) => {
                        fails.push(format!("forward({x:?}) failed: {e}"));
                        continue;
                    }
                };
                if (self.weight_c)(&y) != half {
                    fails.push(format!("forward({x:?}) = {y:?} has weight {} not {half}", (self.weight_c)(&y)));
                }
                if !cod_set.contains(&y) {
                    fails.push(format!("forward({x:?}) = {y:?} is outside the codomain"));
                }
                if let Some(stat) = &self.statistic {
                    if let Err(msg) = stat(x, &y) {
                        fails.push(format!("statistic broken on {x:?}: {msg}"));
                    }
                }
                match (self.inverse)(&y) {
                    Ok(back) if &back == x => {}
                    Ok(back) => fails.push(format!("inverse(forward({x:?})) = {back:?}")),
                    Err(e) => fails.push(format!("inverse({y:?}) failed: {e}")),
                }
                if !images.insert(y.clone()) {
                    fails.push(format!("forward is not injective at {y:?}"));
                }
            }
            if images.len() != cod.len() {
                fails.push(format!(
                    "weight {w}: image has {} objects, codomain slice has {}",
                    images.len(),
                    cod.len()
                ));
            }

            for y in &cod {
                codomain_checked += 1;
                match (self.inverse)(y) {
                    Ok(x) => {
                        if (self.weight_d)(&x) != w {
                            fails.push(format!("inverse({y:?}) = {x:?} has weight {}", (self.weight_d)(&x)));
                        }
                        match (self.forward)(&x) {
                            Ok(again) if &again == y => {}
                            Ok(again) => fails.push(format!("forward(inverse({y:?})) = {again:?}")),
                            Err(e) => fails.push(format!("forward({x:?}) failed: {e}")),
                        }
                    }
                    Err(e) => fails.push(format!("inverse({y:?}) failed: {e}")),
                }
            }
        }
        ContractReport {
            name,
            max_weight,
            domain_checked,
            codomain_checked,
            failure_count: fails.count,
            failures: fails.shown,
        }
    }
}

fn check_count(fails: &mut Failures, what: &str, w: u64, count: usize, gf: &TruncatedSeries) {
    match gf.get(w as usize) {
        Some(c) if *c == BigInt::from(count) => {}
        Some(c) => fails.push(format!("{what} count {count} at weight {w} but series coefficient is {c}")),
        None => fails.push(format!("series for {what} too short for weight {w}")),
    }
}

fn eta(pairs: &[(u32, i32)], order: u64) -> TruncatedSeries {
    EtaProductSpec::from_pairs(pairs).expand(order as usize)
}

fn tuples(specs: Vec<SetSpec>, filter: Option<WeightFilter>) -> Enumerator<Vec<Partition>> {
    Box::new(move |w| {
        tuple_enumerate(&specs, w, filter)
            .into_iter()
            .map(|t| t.partitions().expect("partition classes only"))
            .collect()
    })
}

fn pair_of(v: Vec<Partition>) -> (Partition, Partition) {
    let [a, b]: [Partition; 2] = v.try_into().expect("two components");
    (a, b)
}

fn square_tuples(filter: Option<WeightFilter>) -> Enumerator<(i64, i64)> {
    Box::new(move |w| {
        tuple_enumerate(&[SetSpec::squares(), SetSpec::squares()], w, filter)
            .into_iter()
            .map(|t| {
                let r: Vec<i64> = t.entries.iter().map(|e| e.square_root().unwrap()).collect();
                (r[0], r[1])
            })
            .collect()
    })
}

fn weight_of(v: &[Partition]) -> u64 {
    v.iter().map(Partition::weight).sum()
}

fn pair_weight(p: &(Partition, Partition)) -> u64 {
    p.0.weight() + p.1.weight()
}

fn sq(s: i64) -> u64 {
    s.unsigned_abs().pow(2)
}

/// All `k`-tuples of colored m-ary strict partitions with total weight `n`.
fn colored_tuples(m: u32, k: usize, n: u64) -> Vec<Vec<Partition>> {
    let by_weight: Vec<Vec<Partition>> = (0..=n).map(|w| colored_mary(m, w)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(
        by_weight: &[Vec<Partition>],
        k: usize,
        rest: u64,
        cur: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if cur.len() + 1 == k {
            for p in &by_weight[rest as usize] {
                cur.push(p.clone());
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for w in 0..=rest {
            for p in &by_weight[w as usize] {
                cur.push(p.clone());
                go(by_weight, k, rest - w, cur, out);
                cur.pop();
            }
        }
    }
    go(&by_weight, k, n, &mut cur, &mut out);
    out
}

/// Runs the full contract suite for one bijection up to `max_weight`
/// (domain weight; halving maps reach codomain weight `max_weight / 2`).
pub fn verify_bijection(kind: BijectionKind, max_weight: u64) -> ContractReport {
    let name = kind.name();
    let n = max_weight;
    match kind {
        BijectionKind::Glaisher(d) => Contract::<Partition, Partition> {
            divisor: 1,
            domain: Box::new(move |w| enumerate_restricted(w, |k| k % d != 0, None)),
            codomain: Box::new(move |w| enumerate_restricted(w, |_| true, Some(d as usize - 1))),
            forward: Box::new(move |p| glaisher_forward(p, d)),
            inverse: Box::new(move |p| glaisher_inverse(p, d)),
            weight_c: Box::new(Partition::weight),
            weight_d: Box::new(Partition::weight),
            statistic: None,
            domain_gf: eta(&[(1, -1), (d, 1)], n),
            codomain_gf: eta(&[(1, -1), (d, 1)], n),
        }
        .run(name, n),
        BijectionKind::TripleProduct => Contract::<(Partition, Partition), (i64, Partition)> {
            divisor: 1,
            domain: Box::new(|w| {
                tuple_enumerate(&[SetSpec::d_odd(), SetSpec::d_odd()], w, None)
                    .into_iter()
                    .map(|t| pair_of(t.partitions().unwrap()))
                    .collect()
            }),
            codomain: Box::new(|w| {
                tuple_enumerate(&[SetSpec::squares(), SetSpec::p_even()], w, None)
                    .into_iter()
                    .map(|t| {
                        let [s, l]: [Element; 2] = t.entries.try_into().unwrap();
                        (s.square_root().unwrap(), l.into_partition().unwrap())
                    })
                    .collect()
            }),
            forward: Box::new(|(mu, nu)| triple_product_forward(mu, nu)),
            inverse: Box::new(|(s, l)| triple_product_inverse(*s, l)),
            weight_c: Box::new(|(s, l)| sq(*s) + l.weight()),
            weight_d: Box::new(pair_weight),
            statistic: Some(Box::new(|(mu, nu), (s, _)| {
                let expect = mu.len() as i64 - nu.len() as i64;
                if *s == expect {
                    Ok(())
                } else {
                    Err(format!("s = {s} but l(mu) - l(nu) = {expect}"))
                }
            })),
            domain_gf: eta(&[(1, -2), (2, 4), (4, -2)], n),
            codomain_gf: eta(&[(1, -2), (2, 4), (4, -2)], n),
        }
        .run(name, n),
        BijectionKind::SplitP3o => Contract::<Partition, (Partition, Partition)> {
            divisor: 1,
            domain: Box::new(|w| enumerate_partitions(&SetSpec::p3_odd(), w)),
            codomain: Box::new(|w| {
                tuples(vec![SetSpec::d_odd(), SetSpec::d_mod(4, 2)], None)(w)
                    .into_iter()
                    .map(pair_of)
                    .collect()
            }),
            forward: Box::new(split_p3o),
            inverse: Box::new(|(a, b)| split_p3o_inverse(a, b)),
            weight_c: Box::new(pair_weight),
            weight_d: Box::new(Partition::weight),
            statistic: None,
            domain_gf: eta(&[(1, -1), (2, 1), (4, 1), (8, -1)], n),
            codomain_gf: eta(&[(1, -1), (2, 1), (4, 1), (8, -1)], n),
        }
        .run(name, n),
        BijectionKind::SplitP => Contract::<Partition, (Partition, Partition)> {
            divisor: 1,
            domain: Box::new(|w| enumerate_partitions(&SetSpec::unrestricted(), w)),
            codomain: Box::new(|w| {
                tuples(vec![SetSpec::p3(), SetSpec::p_mod(4, 0)], None)(w)
                    .into_iter()
                    .map(pair_of)
                    .collect()
            }),
            forward: Box::new(|p| Ok(split_p(p))),
            inverse: Box::new(|(a, b)| split_p_inverse(a, b)),
            weight_c: Box::new(pair_weight),
            weight_d: Box::new(Partition::weight),
            statistic: None,
            domain_gf: eta(&[(1, -1)], n),
            codomain_gf: eta(&[(1, -1)], n),
        }
        .run(name, n),
        BijectionKind::Sstt => {
            // theta(q)^2 = f_2^10 / (f_1^4 f_4^4) counts S x S
            let gf = eta(&[(1, -4), (2, 10), (4, -4)], n);
            Contract::<(i64, i64), (i64, i64)> {
                divisor: 2,
                domain: square_tuples(Some(WeightFilter::Even)),
                codomain: square_tuples(None),
                forward: Box::new(|&(a, b)| sstt(a, b)),
                inverse: Box::new(|&(a, b)| Ok(sstt_inverse(a, b))),
                weight_c: Box::new(|&(a, b)| sq(a) + sq(b)),
                weight_d: Box::new(|&(a, b)| sq(a) + sq(b)),
                statistic: None,
                domain_gf: gf.clone(),
                codomain_gf: gf,
            }
            .run(name, n)
        }
        BijectionKind::A007096 => {
            let (d_o, d) = (SetSpec::d_odd(), SetSpec::distinct());
            let gf = eta(&[(1, -4), (2, 6), (4, -2)], n);
            Contract::<Vec<Partition>, Vec<Partition>> {
                divisor: 2,
                domain: tuples(vec![d_o, d_o, d, d], Some(WeightFilter::Even)),
                codomain: tuples(vec![d_o, d_o, d_o, d_o, d, d, d, d], None),
                forward: Box::new(|t| a007096_halving(t)),
                inverse: Box::new(|u| a007096_halving_inverse(u)),
                weight_c: Box::new(|v| weight_of(v)),
                weight_d: Box::new(|v| weight_of(v)),
                statistic: None,
                codomain_gf: gf.mul(&gf),
                domain_gf: gf,
            }
            .run(name, n)
        }
        BijectionKind::A103258 => {
            let (p3o, p3) = (SetSpec::p3_odd(), SetSpec::p3());
            let gf = eta(&[(1, -2), (2, 1), (4, 2), (8, -1)], n);
            Contract::<Vec<Partition>, Vec<Partition>> {
                divisor: 2,
                domain: tuples(vec![p3o, p3], Some(WeightFilter::Even)),
                codomain: tuples(vec![p3o, p3o, p3, p3], None),
                forward: Box::new(|t| a103258_halving(t)),
                inverse: Box::new(|u| a103258_halving_inverse(u)),
                weight_c: Box::new(|v| weight_of(v)),
                weight_d: Box::new(|v| weight_of(v)),
                statistic: None,
                codomain_gf: gf.mul(&gf),
                domain_gf: gf,
            }
            .run(name, n)
        }
        BijectionKind::MarySplit(m) => {
            let gf = colored_mary_product(m, n as usize);
            Contract::<Partition, Vec<Partition>> {
                divisor: m as u64,
                domain: Box::new(move |w| colored_mary(m, w)),
                codomain: Box::new(move |w| colored_tuples(m, m as usize, w)),
                forward: Box::new(move |p| mary_split(p, m)),
                inverse: Box::new(move |v| mary_merge(v, m)),
                weight_c: Box::new(|v| weight_of(v)),
                weight_d: Box::new(Partition::weight),
                statistic: Some(Box::new(|p, v| {
                    let total: usize = v.iter().map(Partition::len).sum();
                    if total == p.len() {
                        Ok(())
                    } else {
                        Err(format!("{} parts became {total}", p.len()))
                    }
                })),
                codomain_gf: gf.pow(m),
                domain_gf: gf,
            }
            .run(name, n)
        }
    }
}
