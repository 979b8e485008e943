//! Finite sets of positive integer labels.
//!
//! Faces, bases, circuits and supports of squarefree monomials are all
//! represented by [`FiniteSet`]. Labels are arbitrary positive integers, so
//! deletion and contraction never renumber a groundset.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly increasing list of positive labels.
///
/// The ordering is the canonical one used for printing complexes: first by
/// cardinality, then lexicographically by label sequence.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FiniteSet(Vec<u32>);

impl FiniteSet {
    pub fn empty() -> Self {
        FiniteSet(Vec::new())
    }

    pub fn singleton(label: u32) -> Result<Self> {
        Self::new(vec![label])
    }

    /// Sorts and deduplicates `labels`; rejects the label 0.
    pub fn new(mut labels: Vec<u32>) -> Result<Self> {
        labels.sort_unstable();
        labels.dedup();
        if labels.first() == Some(&0) {
            return Err(Error::ZeroLabel);
        }
        Ok(FiniteSet(labels))
    }

    /// The interval `{first, first+1, ..., first+len-1}`.
    pub fn interval(first: u32, len: u32) -> Result<Self> {
        if first == 0 && len > 0 {
            return Err(Error::ZeroLabel);
        }
        Ok(FiniteSet((first..first + len).collect()))
    }

    /// `labels` must already be strictly increasing and positive.
    pub(crate) fn from_sorted_unchecked(labels: Vec<u32>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(labels.first() != Some(&0));
        FiniteSet(labels)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u32> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, label: u32) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Position of `label` in the sorted list.
    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.0.binary_search(&label).ok()
    }

    pub fn with(&self, label: u32) -> Self {
        match self.0.binary_search(&label) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, label);
                FiniteSet(v)
            }
        }
    }

    pub fn without(&self, label: u32) -> Self {
        match self.0.binary_search(&label) {
            Ok(pos) => {
                let mut v = self.0.clone();
                v.remove(pos);
                FiniteSet(v)
            }
            Err(_) => self.clone(),
        }
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for x in &self.0 {
            for y in it.by_ref() {
                match y.cmp(x) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &FiniteSet) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => {
                    v.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    v.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    v.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        FiniteSet(v)
    }

    pub fn intersection(&self, other: &FiniteSet) -> Self {
        FiniteSet(
            self.0
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        )
    }

    pub fn difference(&self, other: &FiniteSet) -> Self {
        FiniteSet(
            self.0
                .iter()
                .copied()
                .filter(|&x| !other.contains(x))
                .collect(),
        )
    }

    /// All subsets, including the empty set and `self`.
    pub fn subsets(&self) -> impl Iterator<Item = FiniteSet> + '_ {
        assert!(self.len() < 64, "too many elements to enumerate subsets");
        (0u64..(1u64 << self.len())).map(move |mask| {
            FiniteSet(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect(),
            )
        })
    }

    /// All subsets of cardinality `k`, in lexicographic order.
    pub fn k_subsets(&self, k: usize) -> KSubsets<'_> {
        KSubsets::new(&self.0, k)
    }
}

/// Iterator over the `k`-element subsets of a sorted label list.
pub struct KSubsets<'a> {
    labels: &'a [u32],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> KSubsets<'a> {
    fn new(labels: &'a [u32], k: usize) -> Self {
        KSubsets {
            labels,
            idx: (0..k).collect(),
            done: k > labels.len(),
        }
    }
}

impl Iterator for KSubsets<'_> {
    type Item = FiniteSet;

    fn next(&mut self) -> Option<FiniteSet> {
        if self.done {
            return None;
        }
        let out = FiniteSet(self.idx.iter().map(|&i| self.labels[i]).collect());
        let n = self.labels.len();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

impl Ord for FiniteSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FiniteSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for FiniteSet {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        FiniteSet::new(v)
    }
}

impl From<FiniteSet> for Vec<u32> {
    fn from(s: FiniteSet) -> Vec<u32> {
        s.0
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Builds a [`FiniteSet`] from literal labels, panicking on a zero label.
#[macro_export]
macro_rules! fset {
    () => { $crate::set::FiniteSet::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::set::FiniteSet::new(vec![$($x),+]).expect("fset! labels must be positive")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_rejects_zero() {
        assert_eq!(FiniteSet::new(vec![3, 1, 3]).unwrap().as_slice(), &[1, 3]);
        assert_eq!(FiniteSet::new(vec![0, 2]), Err(Error::ZeroLabel));
    }

    #[test]
    fn canonical_order_is_cardinality_then_lex() {
        let mut v = vec![fset![2, 4], fset![4], fset![], fset![1, 9], fset![2]];
        v.sort();
        assert_eq!(
            v,
            vec![fset![], fset![2], fset![4], fset![1, 9], fset![2, 4]]
        );
    }

    #[test]
    fn subset_and_set_algebra() {
        let a = fset![1, 3, 5];
        assert!(fset![1, 5].is_subset(&a));
        assert!(!fset![2].is_subset(&a));
        assert!(FiniteSet::empty().is_subset(&a));
        assert_eq!(a.union(&fset![2, 5]), fset![1, 2, 3, 5]);
        assert_eq!(a.intersection(&fset![2, 5]), fset![5]);
        assert_eq!(a.difference(&fset![1]), fset![3, 5]);
        assert_eq!(a.with(4), fset![1, 3, 4, 5]);
        assert_eq!(a.without(3), fset![1, 5]);
    }

    #[test]
    fn k_subsets_count() {
        let g = FiniteSet::interval(1, 6).unwrap();
        assert_eq!(g.k_subsets(3).count(), 20);
        assert_eq!(g.k_subsets(0).collect::<Vec<_>>(), vec![fset![]]);
        assert_eq!(g.k_subsets(7).count(), 0);
        assert_eq!(g.subsets().count(), 64);
    }

    #[test]
    fn display_and_json() {
        assert_eq!(fset![2, 4].to_string(), "{2,4}");
        assert_eq!(FiniteSet::empty().to_string(), "{}");
        assert_eq!(serde_json::to_string(&fset![1, 7]).unwrap(), "[1,7]");
        let s: FiniteSet = serde_json::from_str("[5,2]").unwrap();
        assert_eq!(s, fset![2, 5]);
        assert!(serde_json::from_str::<FiniteSet>("[0]").is_err());
    }
}
