//! Partitions, overpartitions, and the statistics defined on them.
//!
//! Everything here works by explicit enumeration. These routines are the
//! brute-force oracles the generating-function side is checked against, so
//! they deliberately share no code with [`crate::series`].

mod enumerate;
mod stats;

pub use enumerate::{enumerate_overpartitions, enumerate_partitions, for_each_partition, PartSpec, PartitionIter};
pub use stats::{
    ag_crank, m2_rank, m2_rank_distribution, residual_m2_crank_distribution, spt_family, RankComponents,
    SptVariant,
};

use std::fmt;

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order. Panics on a zero part.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// `s(π)`; `None` stands for the convention `s(∅) = ∞`.
    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn count_even(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let joined: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", joined.join("+"))
    }
}

/// A single part of an overpartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverPart {
    pub value: u32,
    pub overlined: bool,
}

/// A partition in which the first occurrence of each part size may be
/// overlined. Stored weakly decreasing by value, the overlined copy of a value
/// (if any) first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

impl Overpartition {
    /// Merges a set of distinct overlined parts with an ordinary partition.
    /// Panics if `overlined` repeats a value.
    pub fn from_split(overlined: &Partition, plain: &Partition) -> Self {
        assert!(overlined.has_distinct_parts(), "overlined parts must be distinct");
        let mut parts: Vec<OverPart> = overlined
            .parts()
            .iter()
            .map(|&value| OverPart { value, overlined: true })
            .chain(plain.parts().iter().map(|&value| OverPart { value, overlined: false }))
            .collect();
        parts.sort_unstable_by(|a, b| b.value.cmp(&a.value).then(b.overlined.cmp(&a.overlined)));
        Self { parts }
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().map(|p| p.value).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<OverPart> {
        self.parts.first().copied()
    }

    pub fn smallest_value(&self) -> Option<u32> {
        self.parts.last().map(|p| p.value)
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|p| p.value == value).count()
    }

    pub fn is_overlined(&self, value: u32) -> bool {
        self.parts.iter().any(|p| p.value == value && p.overlined)
    }

    /// The even non-overlined parts, each halved.
    pub fn halved_even_plain_parts(&self) -> Partition {
        Partition::new(
            self.parts
                .iter()
                .filter(|p| !p.overlined && p.value % 2 == 0)
                .map(|p| p.value / 2)
                .collect(),
        )
    }
}

impl fmt::Display for Overpartition {
    /// Overlined parts carry a trailing apostrophe: `3'+2+1'+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let joined: Vec<String> = self
            .parts
            .iter()
            .map(|p| if p.overlined { format!("{}'", p.value) } else { p.value.to_string() })
            .collect();
        write!(f, "{}", joined.join("+"))
    }
}
