//! Partitions, restricted partition classes and exhaustive enumeration.

mod colored;
mod enumerate;
mod set_spec;

use std::collections::BTreeMap;
use std::fmt;

pub use colored::{colored_mary, colored_mary_count_series, is_colored_mary};
pub use enumerate::{
    count_series, enumerate, enumerate_partitions, enumerate_restricted, tuple_enumerate,
};
pub use set_spec::{membership, BaseClass, SetSpec, WeightFilter};

/// A multiset of positive parts, stored weakly decreasing.
///
/// Colored partitions carry one color label per part; ties between equal
/// parts are then ordered by ascending color.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    colors: Option<Vec<u32>>,
}

impl Partition {
    /// Panics if any part is zero.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition {
            parts,
            colors: None,
        }
    }

    /// A colored partition from `(part, color)` pairs. Panics on a zero part.
    /// No pairs gives the (uncolored) empty partition.
    pub fn colored(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().collect();
        if pairs.is_empty() {
            return Self::empty();
        }
        assert!(pairs.iter().all(|&(p, _)| p > 0), "partition parts must be positive");
        pairs.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Partition {
            parts: pairs.iter().map(|&(p, _)| p).collect(),
            colors: Some(pairs.iter().map(|&(_, c)| c).collect()),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn colors(&self) -> Option<&[u32]> {
        self.colors.as_deref()
    }

    /// `(part, color)` pairs; uncolored partitions report color 1.
    pub fn colored_parts(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().enumerate().map(|(i, &p)| {
            (p, self.colors.as_ref().map_or(1, |c| c[i]))
        })
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Part size to multiplicity, ascending by part.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn from_multiplicities(mults: impl IntoIterator<Item = (u32, usize)>) -> Self {
        Self::new(
            mults
                .into_iter()
                .flat_map(|(p, k)| std::iter::repeat_n(p, k)),
        )
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    pub fn max_multiplicity(&self) -> usize {
        self.multiplicities().values().copied().max().unwrap_or(0)
    }

    pub fn all_parts(&self, pred: impl Fn(u32) -> bool) -> bool {
        self.parts.iter().all(|&p| pred(p))
    }

    /// Every part multiplied by `c` (colors kept).
    pub fn scaled(&self, c: u32) -> Self {
        Partition {
            parts: self.parts.iter().map(|&p| p * c).collect(),
            colors: self.colors.clone(),
        }
    }

    /// Every part divided by `c`, or `None` when some part is not a multiple.
    pub fn divided(&self, c: u32) -> Option<Self> {
        if !self.all_parts(|p| p % c == 0) {
            return None;
        }
        Some(Partition {
            parts: self.parts.iter().map(|&p| p / c).collect(),
            colors: self.colors.clone(),
        })
    }

    /// Splits into (parts satisfying `pred`, the rest).
    pub fn split_by(&self, pred: impl Fn(u32) -> bool) -> (Self, Self) {
        let (yes, no): (Vec<u32>, Vec<u32>) = self.parts.iter().partition(|&&p| pred(p));
        (Self::new(yes), Self::new(no))
    }

    /// Multiset union of two uncolored partitions.
    pub fn merge(&self, other: &Self) -> Self {
        Self::new(self.parts.iter().chain(&other.parts).copied())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        f.write_str("(")?;
        for (i, (p, c)) in self.colored_parts().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match self.colors {
                Some(_) => write!(f, "{p}_{c}")?,
                None => write!(f, "{p}")?,
            }
        }
        f.write_str(")")
    }
}

/// One member of a class: a partition, or a signed square `s` of weight
/// `scale * s^2` where `s` and `-s` are distinct objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Partition(Partition),
    Square { root: i64, scale: u32 },
}

impl Element {
    pub fn weight(&self) -> u64 {
        match self {
            Element::Partition(p) => p.weight(),
            Element::Square { root, scale } => *scale as u64 * root.unsigned_abs().pow(2),
        }
    }

    pub fn as_partition(&self) -> Option<&Partition> {
        match self {
            Element::Partition(p) => Some(p),
            Element::Square { .. } => None,
        }
    }

    pub fn into_partition(self) -> Option<Partition> {
        match self {
            Element::Partition(p) => Some(p),
            Element::Square { .. } => None,
        }
    }

    pub fn square_root(&self) -> Option<i64> {
        match self {
            Element::Square { root, .. } => Some(*root),
            Element::Partition(_) => None,
        }
    }
}

impl From<Partition> for Element {
    fn from(p: Partition) -> Self {
        Element::Partition(p)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Partition(p) => p.fmt(f),
            Element::Square { root, scale: 1 } => write!(f, "({root})^2"),
            Element::Square { root, scale } => write!(f, "{scale}*({root})^2"),
        }
    }
}

/// An ordered tuple of class members, one per factor of a product set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTuple {
    pub entries: Vec<Element>,
}

impl PartitionTuple {
    pub fn new(entries: Vec<Element>) -> Self {
        PartitionTuple { entries }
    }

    pub fn from_partitions(parts: impl IntoIterator<Item = Partition>) -> Self {
        Self::new(parts.into_iter().map(Element::Partition).collect())
    }

    pub fn weight(&self) -> u64 {
        self.entries.iter().map(Element::weight).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All entries as partitions, or `None` if any entry is a signed square.
    pub fn partitions(&self) -> Option<Vec<Partition>> {
        self.entries
            .iter()
            .map(|e| e.as_partition().cloned())
            .collect()
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            e.fmt(f)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_statistics() {
        let p = Partition::new([1, 5, 2, 2, 1, 2]);
        assert_eq!(p.parts(), &[5, 2, 2, 2, 1, 1]);
        assert_eq!(p.weight(), 13);
        assert_eq!(p.len(), 6);
        assert_eq!(p.multiplicity(2), 3);
        assert_eq!(p, Partition::from_multiplicities([(1, 2), (2, 3), (5, 1)]));
        assert_eq!(p.to_string(), "(5,2,2,2,1,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    fn colored_ties_sort_by_color() {
        let p = Partition::colored([(2, 2), (4, 3), (2, 1)]);
        assert_eq!(p.parts(), &[4, 2, 2]);
        assert_eq!(p.colors(), Some(&[3, 1, 2][..]));
        assert_eq!(p.to_string(), "(4_3,2_1,2_2)");
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn zero_part_panics() {
        Partition::new([3, 0]);
    }

    #[test]
    fn scaling_and_splitting() {
        let p = Partition::new([6, 3, 2]);
        assert_eq!(p.scaled(2), Partition::new([12, 6, 4]));
        assert_eq!(p.divided(2), None);
        assert_eq!(Partition::new([6, 4]).divided(2), Some(Partition::new([3, 2])));
        let (odd, even) = p.split_by(|x| x % 2 == 1);
        assert_eq!(odd, Partition::new([3]));
        assert_eq!(even.merge(&odd), p);
    }

    #[test]
    fn square_elements_are_signed() {
        let a = Element::Square { root: 2, scale: 1 };
        let b = Element::Square { root: -2, scale: 1 };
        assert_ne!(a, b);
        assert_eq!(a.weight(), b.weight());
        assert_eq!(Element::Square { root: 3, scale: 2 }.weight(), 18);
    }
}
