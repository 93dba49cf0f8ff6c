use crate::partitions::Partition;
use crate::{Error, Result};

const MAP: &str = "glaisher";

/// Sends `m_k` copies of `k` (with `d` not dividing `k`) to `r_i` copies of
/// `k d^i`, where `m_k = sum r_i d^i` is the base-`d` expansion.
pub fn glaisher_forward(pi: &Partition, d: u32) -> Result<Partition> {
    check_base(d)?;
    if let Some(&bad) = pi.parts().iter().find(|&&p| p % d == 0) {
        return Err(Error::domain(MAP, format!("part divisible by d: {bad} with d = {d}")));
    }
    let mut out = Vec::with_capacity(pi.len());
    for (k, mult) in pi.multiplicities() {
        let mut rest = mult;
        let mut size = k;
        while rest > 0 {
            let digit = rest % d as usize;
            out.extend(std::iter::repeat_n(size, digit));
            rest /= d as usize;
            if rest > 0 {
                size = size
                    .checked_mul(d)
                    .ok_or_else(|| Error::domain(MAP, "part size overflow"))?;
            }
        }
    }
    Ok(Partition::new(out))
}

/// Inverse of [`glaisher_forward`]: a part `k d^i` with `d` not dividing `k`
/// becomes `d^i` copies of `k`.
pub fn glaisher_inverse(pi: &Partition, d: u32) -> Result<Partition> {
    check_base(d)?;
    if let Some((&part, &m)) = pi.multiplicities().iter().find(|(_, &m)| m >= d as usize) {
        return Err(Error::domain(
            MAP,
            format!("multiplicity {m} of part {part} is at least d = {d}"),
        ));
    }
    let mut out = Vec::new();
    for &p in pi.parts() {
        let mut k = p;
        let mut copies = 1usize;
        while k % d == 0 {
            k /= d;
            copies *= d as usize;
        }
        out.extend(std::iter::repeat_n(k, copies));
    }
    Ok(Partition::new(out))
}

fn check_base(d: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::domain(MAP, format!("base d = {d} must be at least 2")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn forward_examples() {
        assert_eq!(glaisher_forward(&p(&[1, 1, 1, 3]), 2).unwrap(), p(&[3, 2, 1]));
        assert_eq!(glaisher_forward(&Partition::empty(), 5).unwrap(), Partition::empty());
        assert_eq!(glaisher_forward(&p(&[1, 1, 1, 1, 2]), 4).unwrap(), p(&[4, 2]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(glaisher_inverse(&p(&[3, 2, 1]), 2).unwrap(), p(&[3, 1, 1, 1]));
        assert_eq!(glaisher_inverse(&Partition::empty(), 2).unwrap(), Partition::empty());
        assert_eq!(glaisher_inverse(&p(&[4, 2]), 4).unwrap(), p(&[2, 1, 1, 1, 1]));
    }

    #[test]
    fn precondition_errors() {
        let err = glaisher_forward(&p(&[4, 1]), 2).unwrap_err();
        assert!(err.to_string().contains("part divisible by d"));
        assert!(glaisher_inverse(&p(&[1, 1]), 2).is_err());
        assert!(glaisher_forward(&p(&[1]), 1).is_err());
    }
}
