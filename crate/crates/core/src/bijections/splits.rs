use super::glaisher::{glaisher_forward, glaisher_inverse};
use crate::partitions::Partition;
use crate::{Error, Result};

/// `(odd parts, even parts)`.
pub fn split_parity(pi: &Partition) -> (Partition, Partition) {
    pi.split_by(|k| k % 2 == 1)
}

/// `P3_o -> D_o x D_{4,2}`: a part `k` of multiplicity `m_k` leaves
/// `m_k mod 2` copies of `k` in the first component and `floor(m_k / 2)`
/// copies of `2k` in the second.
pub fn split_p3o(pi: &Partition) -> Result<(Partition, Partition)> {
    const MAP: &str = "split_p3o";
    if !pi.all_parts(|k| k % 2 == 1) || pi.max_multiplicity() > 3 {
        return Err(Error::domain(MAP, format!("{pi} is not in P3_o")));
    }
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for (k, m) in pi.multiplicities() {
        if m % 2 == 1 {
            alpha.push(k);
        }
        if m >= 2 {
            beta.push(2 * k);
        }
    }
    Ok((Partition::new(alpha), Partition::new(beta)))
}

pub fn split_p3o_inverse(alpha: &Partition, beta: &Partition) -> Result<Partition> {
    const MAP: &str = "split_p3o_inverse";
    if !alpha.is_distinct() || !alpha.all_parts(|k| k % 2 == 1) {
        return Err(Error::domain(MAP, format!("{alpha} is not in D_o")));
    }
    if !beta.is_distinct() || !beta.all_parts(|k| k % 4 == 2) {
        return Err(Error::domain(MAP, format!("{beta} is not in D_{{4,2}}")));
    }
    let pairs = beta.parts().iter().flat_map(|&b| [b / 2, b / 2]);
    Ok(Partition::new(alpha.parts().iter().copied().chain(pairs)))
}

/// `P -> P3 x P_{4,0}`: multiples of 4 pass through to the second component,
/// the rest goes through Glaisher's map with `d = 4`.
pub fn split_p(pi: &Partition) -> (Partition, Partition) {
    let (fours, rest) = pi.split_by(|k| k % 4 == 0);
    let alpha = glaisher_forward(&rest, 4).expect("no part divisible by 4");
    (alpha, fours)
}

pub fn split_p_inverse(alpha: &Partition, beta: &Partition) -> Result<Partition> {
    const MAP: &str = "split_p_inverse";
    if alpha.max_multiplicity() > 3 {
        return Err(Error::domain(MAP, format!("{alpha} is not in P3")));
    }
    if !beta.all_parts(|k| k % 4 == 0) {
        return Err(Error::domain(MAP, format!("{beta} is not in P_{{4,0}}")));
    }
    Ok(glaisher_inverse(alpha, 4)?.merge(beta))
}

/// `[S x S]_even -> S x S`, `(s1, s2) -> ((s1 + s2) / 2, (s1 - s2) / 2)`.
pub fn sstt(s1: i64, s2: i64) -> Result<(i64, i64)> {
    if (s1 - s2) % 2 != 0 {
        return Err(Error::domain(
            "sstt",
            format!("odd combined weight: {s1}^2 + {s2}^2"),
        ));
    }
    Ok(((s1 + s2) / 2, (s1 - s2) / 2))
}

pub fn sstt_inverse(t1: i64, t2: i64) -> (i64, i64) {
    (t1 + t2, t1 - t2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn split_p3o_examples() {
        assert_eq!(split_p3o(&p(&[3, 1, 1])).unwrap(), (p(&[3]), p(&[2])));
        assert_eq!(split_p3o(&p(&[1])).unwrap(), (p(&[1]), Partition::empty()));
        assert_eq!(split_p3o(&p(&[3, 3, 3, 1])).unwrap(), (p(&[3, 1]), p(&[6])));
        assert_eq!(split_p3o_inverse(&p(&[3, 1]), &p(&[6])).unwrap(), p(&[3, 3, 3, 1]));
        assert!(split_p3o(&p(&[1, 1, 1, 1])).is_err());
        assert!(split_p3o(&p(&[2])).is_err());
        assert!(split_p3o_inverse(&p(&[1]), &p(&[4])).is_err());
    }

    #[test]
    fn split_p_examples() {
        assert_eq!(split_p(&p(&[4])), (Partition::empty(), p(&[4])));
        assert_eq!(split_p(&p(&[1, 1, 1, 1, 2])), (p(&[4, 2]), Partition::empty()));
        assert_eq!(split_p(&Partition::empty()), (Partition::empty(), Partition::empty()));
        assert_eq!(split_p_inverse(&p(&[4, 2]), &p(&[8])).unwrap(), p(&[8, 2, 1, 1, 1, 1]));
        assert!(split_p_inverse(&p(&[1, 1, 1, 1]), &Partition::empty()).is_err());
        assert!(split_p_inverse(&Partition::empty(), &p(&[2])).is_err());
    }

    #[test]
    fn sstt_examples() {
        assert_eq!(sstt(0, 0).unwrap(), (0, 0));
        assert_eq!(sstt(3, 1).unwrap(), (2, 1));
        assert_eq!(sstt(1, -1).unwrap(), (0, 1));
        assert_eq!(sstt_inverse(0, 1), (1, -1));
        let err = sstt(2, 1).unwrap_err();
        assert!(err.to_string().contains("odd combined weight"));
    }
}
