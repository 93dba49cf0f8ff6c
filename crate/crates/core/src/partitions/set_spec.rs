use std::fmt;

use super::{Element, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseClass {
    /// `P`: no restriction.
    Unrestricted,
    /// `D`: distinct parts.
    Distinct,
    /// `P3`: every part size occurs at most three times.
    AtMostThree,
    /// `S`: signed squares `s^2`, `s` in Z.
    Squares,
}

/// Restriction on the total weight of a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightFilter {
    Even,
    MultipleOf(u32),
}

impl WeightFilter {
    pub fn accepts(&self, weight: u64) -> bool {
        match *self {
            WeightFilter::Even => weight.is_multiple_of(2),
            WeightFilter::MultipleOf(m) => weight.is_multiple_of(m as u64),
        }
    }
}

/// A restricted partition class such as `D_o`, `P3`, `D_{4,2}` or `2P_e`.
///
/// The residue constraint applies to parts before scaling: `c U` multiplies
/// every part of every member of `U` by `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SetSpec {
    pub base: BaseClass,
    pub residue: Option<(u32, u32)>,
    pub scale: u32,
    pub weight_filter: Option<WeightFilter>,
}

impl SetSpec {
    const fn of(base: BaseClass) -> Self {
        SetSpec {
            base,
            residue: None,
            scale: 1,
            weight_filter: None,
        }
    }

    pub const fn unrestricted() -> Self {
        Self::of(BaseClass::Unrestricted)
    }

    pub const fn distinct() -> Self {
        Self::of(BaseClass::Distinct)
    }

    pub const fn at_most_three() -> Self {
        Self::of(BaseClass::AtMostThree)
    }

    /// Alias for [`at_most_three`](Self::at_most_three).
    pub const fn p3() -> Self {
        Self::at_most_three()
    }

    pub const fn squares() -> Self {
        Self::of(BaseClass::Squares)
    }

    /// Parts congruent to `a` modulo `modulus`. Panics on a zero modulus.
    pub fn with_residue(mut self, modulus: u32, a: u32) -> Self {
        assert!(modulus > 0, "residue modulus must be positive");
        self.residue = Some((modulus, a % modulus));
        self
    }

    pub fn scaled(mut self, c: u32) -> Self {
        assert!(c > 0, "scale must be positive");
        self.scale *= c;
        self
    }

    pub fn even(mut self) -> Self {
        self.weight_filter = Some(WeightFilter::Even);
        self
    }

    pub fn multiple_of(mut self, m: u32) -> Self {
        self.weight_filter = Some(WeightFilter::MultipleOf(m));
        self
    }

    pub fn p_odd() -> Self {
        Self::unrestricted().with_residue(2, 1)
    }

    pub fn p_even() -> Self {
        Self::unrestricted().with_residue(2, 0)
    }

    pub fn d_odd() -> Self {
        Self::distinct().with_residue(2, 1)
    }

    pub fn d_even() -> Self {
        Self::distinct().with_residue(2, 0)
    }

    pub fn p3_odd() -> Self {
        Self::at_most_three().with_residue(2, 1)
    }

    pub fn p3_even() -> Self {
        Self::at_most_three().with_residue(2, 0)
    }

    pub fn p_mod(modulus: u32, a: u32) -> Self {
        Self::unrestricted().with_residue(modulus, a)
    }

    pub fn d_mod(modulus: u32, a: u32) -> Self {
        Self::distinct().with_residue(modulus, a)
    }

    pub fn is_squares(&self) -> bool {
        self.base == BaseClass::Squares
    }

    pub fn max_multiplicity(&self) -> Option<usize> {
        match self.base {
            BaseClass::Distinct => Some(1),
            BaseClass::AtMostThree => Some(3),
            BaseClass::Unrestricted | BaseClass::Squares => None,
        }
    }

    /// Whether a part of this size may occur in a member.
    pub fn allows_part(&self, part: u32) -> bool {
        if part == 0 || !part.is_multiple_of(self.scale) {
            return false;
        }
        match self.residue {
            Some((modulus, a)) => (part / self.scale) % modulus == a,
            None => true,
        }
    }

    pub fn accepts_weight(&self, weight: u64) -> bool {
        self.weight_filter.is_none_or(|f| f.accepts(weight))
    }

    fn contains_partition(&self, p: &Partition) -> bool {
        if self.is_squares() || p.colors().is_some() {
            return false;
        }
        p.all_parts(|k| self.allows_part(k))
            && self.max_multiplicity().is_none_or(|m| p.max_multiplicity() <= m)
    }
}

/// Whether `element` belongs to the class `spec`.
pub fn membership(element: &Element, spec: &SetSpec) -> bool {
    let in_base = match element {
        Element::Partition(p) => spec.contains_partition(p),
        Element::Square { scale, .. } => spec.is_squares() && *scale == spec.scale,
    };
    in_base && spec.accepts_weight(element.weight())
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weight_filter.is_some() {
            f.write_str("[")?;
        }
        if self.scale != 1 {
            write!(f, "{}", self.scale)?;
        }
        f.write_str(match self.base {
            BaseClass::Unrestricted => "P",
            BaseClass::Distinct => "D",
            BaseClass::AtMostThree => "P3",
            BaseClass::Squares => "S",
        })?;
        match self.residue {
            None => {}
            Some((2, 1)) => f.write_str("_o")?,
            Some((2, 0)) => f.write_str("_e")?,
            Some((m, a)) => write!(f, "_{{{m},{a}}}")?,
        }
        match self.weight_filter {
            None => Ok(()),
            Some(WeightFilter::Even) => f.write_str("]_even"),
            Some(WeightFilter::MultipleOf(m)) => write!(f, "]_{m}"),
        }
    }
}
