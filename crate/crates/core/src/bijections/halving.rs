//! Weight-halving bijections built by chaining the lemma-level maps.
//!
//! Tuple components are kept in the order the product sets are written:
//!
//! * `[D_o x D_o x D x D]_even -> D_o^4 x D^4`
//! * `[P3_o x P3]_even -> P3_o x P3_o x P3 x P3`

use super::glaisher::{glaisher_forward, glaisher_inverse};
use super::splits::{
    split_p, split_p3o, split_p3o_inverse, split_p_inverse, split_parity, sstt, sstt_inverse,
};
use super::triple_product::{triple_product_forward, triple_product_inverse};
use crate::partitions::{membership, Partition, SetSpec};
use crate::{Error, Result};

fn check_shape(
    map: &'static str,
    tuple: &[Partition],
    classes: &[SetSpec],
    even: bool,
) -> Result<()> {
    if tuple.len() != classes.len() {
        return Err(Error::domain(
            map,
            format!("expected {} components, got {}", classes.len(), tuple.len()),
        ));
    }
    for (i, (p, spec)) in tuple.iter().zip(classes).enumerate() {
        if !membership(&p.clone().into(), spec) {
            return Err(Error::domain(map, format!("component {i} = {p} is not in {spec}")));
        }
    }
    let weight: u64 = tuple.iter().map(Partition::weight).sum();
    if even && weight % 2 == 1 {
        return Err(Error::domain(map, format!("total weight {weight} is odd")));
    }
    Ok(())
}

fn halve(p: &Partition) -> Partition {
    p.divided(2).expect("all parts even")
}

/// After splitting `D` by parity and applying the triple-product map to
/// `(mu_1, mu_2)` and to the two odd halves: `S x S x P_e x P_e x D_e x D_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ThetaStage {
    pub s: [i64; 2],
    pub lambda: [Partition; 2],
    pub even: [Partition; 2],
}

#[cfg(test)]
impl ThetaStage {
    pub fn weight(&self) -> u64 {
        let sq: u64 = self.s.iter().map(|s| s.unsigned_abs().pow(2)).sum();
        sq + self.lambda.iter().chain(&self.even).map(Partition::weight).sum::<u64>()
    }
}

/// After the square-pair map and halving every part:
/// `S x S x P_e x P_e x P_o x P_o x D x D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct HalvedStage {
    pub t: [i64; 2],
    pub even: [Partition; 2],
    pub odd: [Partition; 2],
    pub distinct: [Partition; 2],
}

#[cfg(test)]
impl HalvedStage {
    pub fn weight(&self) -> u64 {
        let sq: u64 = self.t.iter().map(|t| t.unsigned_abs().pow(2)).sum();
        sq + self
            .even
            .iter()
            .chain(&self.odd)
            .chain(&self.distinct)
            .map(Partition::weight)
            .sum::<u64>()
    }
}

pub(crate) fn a007096_theta(t: &[Partition]) -> Result<ThetaStage> {
    let (d1_odd, d1_even) = split_parity(&t[2]);
    let (d2_odd, d2_even) = split_parity(&t[3]);
    let (s1, l1) = triple_product_forward(&t[0], &t[1])?;
    let (s2, l2) = triple_product_forward(&d1_odd, &d2_odd)?;
    Ok(ThetaStage {
        s: [s1, s2],
        lambda: [l1, l2],
        even: [d1_even, d2_even],
    })
}

pub(crate) fn a007096_halve(stage: &ThetaStage) -> Result<HalvedStage> {
    let (t1, t2) = sstt(stage.s[0], stage.s[1])?;
    let (o1, e1) = split_parity(&halve(&stage.lambda[0]));
    let (o2, e2) = split_parity(&halve(&stage.lambda[1]));
    Ok(HalvedStage {
        t: [t1, t2],
        even: [e1, e2],
        odd: [o1, o2],
        distinct: [halve(&stage.even[0]), halve(&stage.even[1])],
    })
}

pub(crate) fn a007096_finish(stage: &HalvedStage) -> Result<Vec<Partition>> {
    let (a1, a2) = triple_product_inverse(stage.t[0], &stage.even[0])?;
    let (a3, a4) = triple_product_inverse(stage.t[1], &stage.even[1])?;
    let g1 = glaisher_forward(&stage.odd[0], 2)?;
    let g2 = glaisher_forward(&stage.odd[1], 2)?;
    let [d1, d2] = stage.distinct.clone();
    Ok(vec![a1, a2, a3, a4, g1, g2, d1, d2])
}

/// `[D_o x D_o x D x D]_even -> D_o^4 x D^4`, halving the weight.
pub fn a007096_halving(t: &[Partition]) -> Result<Vec<Partition>> {
    let (d_o, d) = (SetSpec::d_odd(), SetSpec::distinct());
    check_shape("a007096_halving", t, &[d_o, d_o, d, d], true)?;
    a007096_finish(&a007096_halve(&a007096_theta(t)?)?)
}

pub fn a007096_halving_inverse(u: &[Partition]) -> Result<Vec<Partition>> {
    let (d_o, d) = (SetSpec::d_odd(), SetSpec::distinct());
    check_shape("a007096_halving_inverse", u, &[d_o, d_o, d_o, d_o, d, d, d, d], false)?;
    let (t1, e1) = triple_product_forward(&u[0], &u[1])?;
    let (t2, e2) = triple_product_forward(&u[2], &u[3])?;
    let o1 = glaisher_inverse(&u[4], 2)?;
    let o2 = glaisher_inverse(&u[5], 2)?;
    let (s1, s2) = sstt_inverse(t1, t2);
    let l1 = e1.merge(&o1).scaled(2);
    let l2 = e2.merge(&o2).scaled(2);
    let (mu1, mu2) = triple_product_inverse(s1, &l1)?;
    let (d1_odd, d2_odd) = triple_product_inverse(s2, &l2)?;
    Ok(vec![
        mu1,
        mu2,
        d1_odd.merge(&u[6].scaled(2)),
        d2_odd.merge(&u[7].scaled(2)),
    ])
}

/// `[P3_o x P3]_even -> P3_o x P3_o x P3 x P3`, halving the weight.
pub fn a103258_halving(t: &[Partition]) -> Result<Vec<Partition>> {
    const MAP: &str = "a103258_halving";
    check_shape(MAP, t, &[SetSpec::p3_odd(), SetSpec::p3()], true)?;
    let (pi2_odd, pi2_even) = split_parity(&t[1]);
    let (a1, b1) = split_p3o(&t[0])?;
    let (a2, b2) = split_p3o(&pi2_odd)?;
    // S x P_e x D_{4,2} x D_{4,2} x P3_e
    let (s, lambda) = triple_product_forward(&a1, &a2)?;
    if s % 2 != 0 {
        return Err(Error::domain(MAP, "odd signed square in an even-weight tuple"));
    }
    // halving: 2S x P x D_o x D_o x P3
    let s_half = s / 2;
    let (gamma, rho) = split_p(&halve(&lambda));
    // P_{4,0} = 2 P_e, and 2S x 2P_e = 2(S x P_e) -> 2(D_o x D_o) = D_{4,2} x D_{4,2}
    let (c1, c2) = triple_product_inverse(s_half, &halve(&rho))?;
    let out1 = split_p3o_inverse(&halve(&b1), &c1.scaled(2))?;
    let out2 = split_p3o_inverse(&halve(&b2), &c2.scaled(2))?;
    Ok(vec![out1, out2, halve(&pi2_even), gamma])
}

pub fn a103258_halving_inverse(u: &[Partition]) -> Result<Vec<Partition>> {
    let (p3o, p3) = (SetSpec::p3_odd(), SetSpec::p3());
    check_shape("a103258_halving_inverse", u, &[p3o, p3o, p3, p3], false)?;
    let (x1, y1) = split_p3o(&u[0])?;
    let (x2, y2) = split_p3o(&u[1])?;
    let (s_half, rho_half) = triple_product_forward(&halve(&y1), &halve(&y2))?;
    let lambda = split_p_inverse(&u[3], &rho_half.scaled(2))?.scaled(2);
    let (a1, a2) = triple_product_inverse(2 * s_half, &lambda)?;
    let pi1 = split_p3o_inverse(&a1, &x1.scaled(2))?;
    let pi2_odd = split_p3o_inverse(&a2, &x2.scaled(2))?;
    Ok(vec![pi1, pi2_odd.merge(&u[2].scaled(2))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{tuple_enumerate, WeightFilter};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn a007096_small_cases() {
        let e = Partition::empty();
        assert_eq!(a007096_halving(&vec![e.clone(); 4]).unwrap(), vec![e.clone(); 8]);
        let out = a007096_halving(&[p(&[1]), p(&[1]), e.clone(), e.clone()]).unwrap();
        assert_eq!(out.iter().map(Partition::weight).sum::<u64>(), 1);
        assert_eq!(a007096_halving_inverse(&out).unwrap(), vec![p(&[1]), p(&[1]), e.clone(), e]);
    }

    #[test]
    fn a007096_stages_conserve_weight() {
        let specs = [SetSpec::d_odd(), SetSpec::d_odd(), SetSpec::distinct(), SetSpec::distinct()];
        for n in (0..=10).step_by(2) {
            for t in tuple_enumerate(&specs, n, Some(WeightFilter::Even)) {
                let t = t.partitions().unwrap();
                let theta = a007096_theta(&t).unwrap();
                assert_eq!(theta.weight(), n);
                assert!(theta.lambda.iter().all(|l| l.all_parts(|k| k % 2 == 0)));
                let halved = a007096_halve(&theta).unwrap();
                assert_eq!(halved.weight(), n / 2);
                let out = a007096_finish(&halved).unwrap();
                assert_eq!(out.iter().map(Partition::weight).sum::<u64>(), n / 2);
            }
        }
    }

    #[test]
    fn a103258_small_cases() {
        let e = Partition::empty();
        assert_eq!(a103258_halving(&[e.clone(), e.clone()]).unwrap(), vec![e.clone(); 4]);
        let out = a103258_halving(&[p(&[1]), p(&[1])]).unwrap();
        assert_eq!(out.iter().map(Partition::weight).sum::<u64>(), 1);
        assert_eq!(a103258_halving_inverse(&out).unwrap(), vec![p(&[1]), p(&[1])]);
    }

    #[test]
    fn domain_violations() {
        let e = Partition::empty();
        assert!(a007096_halving(&[p(&[1]), e.clone(), e.clone(), e.clone()]).is_err());
        assert!(a007096_halving(&[p(&[2]), e.clone(), e.clone(), e.clone()]).is_err());
        assert!(a007096_halving(&[e.clone(), e.clone(), e.clone()]).is_err());
        assert!(a103258_halving(&[p(&[1, 1, 1, 1]), e.clone()]).is_err());
        assert!(a103258_halving_inverse(&[p(&[2]), e.clone(), e.clone(), e]).is_err());
    }
}
