//! The width multiset and its decreasing-lexicographic order.
//!
//! Entries are kept sorted in non-increasing order. Two multisets are
//! compared by padding the shorter one with zeros and comparing
//! lexicographically, so trailing zero entries never change the outcome of
//! a comparison. Equality and hashing follow the same rule; the stored
//! entries (zeros included) are still reported verbatim.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default)]
pub struct WidthMultiset {
    entries: Vec<u64>,
}

impl WidthMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = u64>>(entries: I) -> Self {
        let mut entries: Vec<u64> = entries.into_iter().collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Self { entries }
    }

    /// Sorted non-increasing.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, value: u64) {
        let pos = self.entries.partition_point(|&x| x >= value);
        self.entries.insert(pos, value);
    }

    /// Removes one occurrence of `value`, returning whether it was present.
    pub fn remove_one(&mut self, value: u64) -> bool {
        match self.entries.iter().position(|&x| x == value) {
            Some(pos) => {
                self.entries.remove(pos);
                true
            }
            None => false,
        }
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &WidthMultiset) -> WidthMultiset {
        let mut entries = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            if self.entries[i] >= other.entries[j] {
                entries.push(self.entries[i]);
                i += 1;
            } else {
                entries.push(other.entries[j]);
                j += 1;
            }
        }
        entries.extend_from_slice(&self.entries[i..]);
        entries.extend_from_slice(&other.entries[j..]);
        WidthMultiset { entries }
    }

    pub fn compare(&self, other: &WidthMultiset) -> Ordering {
        let n = self.entries.len().max(other.entries.len());
        for idx in 0..n {
            let a = self.entries.get(idx).copied().unwrap_or(0);
            let b = other.entries.get(idx).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Entries that are even. A level complexity built from a single
    /// component is always odd or zero, so even values usually mean several
    /// components contributed to the same level.
    pub fn even_entries(&self) -> Vec<u64> {
        self.entries.iter().copied().filter(|x| x % 2 == 0).collect()
    }

    fn nonzero(&self) -> &[u64] {
        let end = self.entries.partition_point(|&x| x > 0);
        &self.entries[..end]
    }
}

/// The minimum of a non-empty list; the first occurrence wins on ties.
pub fn min_of(candidates: &[WidthMultiset]) -> Result<&WidthMultiset> {
    let (first, rest) = candidates.split_first().ok_or(Error::EmptyCandidateSet)?;
    Ok(rest.iter().fold(first, |best, w| {
        if w.compare(best) == Ordering::Less {
            w
        } else {
            best
        }
    }))
}

impl PartialEq for WidthMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for WidthMultiset {}

impl PartialOrd for WidthMultiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WidthMultiset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl Hash for WidthMultiset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nonzero().hash(state);
    }
}

impl fmt::Debug for WidthMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WidthMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<u64> for WidthMultiset {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        Self::from_entries(iter)
    }
}

impl Serialize for WidthMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

/// Accepts either a bare array or `{"entries": [...]}`.
impl<'de> Deserialize<'de> for WidthMultiset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Bare(Vec<u64>),
            Wrapped { entries: Vec<u64> },
        }
        let entries = match Repr::deserialize(deserializer)? {
            Repr::Bare(v) => v,
            Repr::Wrapped { entries } => entries,
        };
        Ok(WidthMultiset::from_entries(entries))
    }
}
