//! Lattice paths, lattice path matroids and the east-step statistic that
//! realizes the canonical basis-to-face bijection on them.
//!
//! A path in `L(n,d)` is a word of `d` east steps and `n−d` north steps
//! from `(0,0)` to `(d, n−d)`. Its bases are identified with the set of
//! 1-based positions of its east steps.

mod marking;
mod render;
mod replace;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::FiniteSet;

pub use marking::{
    demarcation, hook_placement, marking_path, statistic, statistic_trivial_scan, DemStep,
    DemarcationPath, MarkStep, MarkingPath,
};
pub use render::{render_ascii, render_svg};
pub use replace::{composite_bijection, lower, path_from_statistic, raise};

/// Subset of east positions selected by a marking path.
pub type Statistic = FiniteSet;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    East,
    North,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::East => 'e',
            Step::North => 'n',
        }
    }

    pub fn flipped(self) -> Step {
        match self {
            Step::East => Step::North,
            Step::North => Step::East,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    /// Accepts `e`/`n` in either case; whitespace is ignored.
    pub fn parse(word: &str) -> Result<Self> {
        word.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'e' | 'E' => Ok(Step::East),
                'n' | 'N' => Ok(Step::North),
                other => Err(Error::IllegalStep(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath::new)
    }

    /// The path of length `n` whose east steps sit exactly at `east`.
    pub fn from_east_set(n: usize, east: &FiniteSet) -> Result<Self> {
        if let Some(m) = east.largest() {
            if m as usize > n {
                return Err(Error::ShapeMismatch(format!(
                    "east position {m} exceeds path length {n}"
                )));
            }
        }
        Ok(LatticePath::new(
            (1..=n as u32)
                .map(|i| {
                    if east.contains(i) {
                        Step::East
                    } else {
                        Step::North
                    }
                })
                .collect(),
        ))
    }

    /// `L^tr`: `d` east steps followed by `n−d` north steps.
    pub fn trivial_lower(n: usize, d: usize) -> Self {
        assert!(d <= n);
        let mut steps = vec![Step::East; d];
        steps.resize(n, Step::North);
        LatticePath::new(steps)
    }

    /// All north steps first, then all east steps.
    pub fn trivial_upper(n: usize, d: usize) -> Self {
        assert!(d <= n);
        let mut steps = vec![Step::North; n - d];
        steps.resize(n, Step::East);
        LatticePath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Total length `n`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of east steps `d`.
    pub fn east_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::East).count()
    }

    pub fn north_count(&self) -> usize {
        self.len() - self.east_count()
    }

    /// `E(C)`: 1-based positions of the east steps.
    pub fn east_set(&self) -> FiniteSet {
        FiniteSet::from_sorted_unchecked(self.east_positions())
    }

    pub(crate) fn east_positions(&self) -> Vec<u32> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::East)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// Height of each east step: entry `c` counts the north steps before
    /// the `(c+1)`-th east step.
    pub fn east_heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.east_count());
        let mut h = 0;
        for s in &self.steps {
            match s {
                Step::North => h += 1,
                Step::East => out.push(h),
            }
        }
        out
    }

    pub fn endpoint(&self) -> (usize, usize) {
        (self.east_count(), self.north_count())
    }

    /// Lattice points visited, starting at the origin.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let (mut x, mut y) = (0, 0);
        out.push((0, 0));
        for s in &self.steps {
            match s {
                Step::East => x += 1,
                Step::North => y += 1,
            }
            out.push((x, y));
        }
        out
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// `C*`: east and north swapped.
    pub fn dual(&self) -> Self {
        LatticePath::new(self.steps.iter().map(|s| s.flipped()).collect())
    }

    pub fn last(&self) -> Option<Step> {
        self.steps.last().copied()
    }

    /// The path with its last step of kind `step` removed.
    pub fn remove_last(&self, step: Step) -> Option<Self> {
        let i = self.steps.iter().rposition(|s| *s == step)?;
        let mut steps = self.steps.clone();
        steps.remove(i);
        Some(LatticePath::new(steps))
    }

    pub fn with_step_flipped(&self, index: usize) -> Self {
        let mut steps = self.steps.clone();
        steps[index] = steps[index].flipped();
        LatticePath::new(steps)
    }

    pub fn appended(&self, step: Step, count: usize) -> Self {
        let mut steps = self.steps.clone();
        steps.extend(std::iter::repeat_n(step, count));
        LatticePath::new(steps)
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LatticePath::parse(s)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({:?})", self.word())
    }
}

fn check_same_shape(upper: &LatticePath, lower: &LatticePath) -> Result<()> {
    if upper.len() != lower.len() || upper.east_count() != lower.east_count() {
        return Err(Error::ShapeMismatch(format!(
            "{} and {} differ in length or number of east steps",
            upper, lower
        )));
    }
    Ok(())
}

/// `E(L) ≤_comp E(U)`: `upper` never goes below `lower`.
pub fn weakly_above(upper: &LatticePath, lower: &LatticePath) -> Result<bool> {
    check_same_shape(upper, lower)?;
    Ok(upper
        .east_positions()
        .iter()
        .zip(lower.east_positions())
        .all(|(u, l)| l <= *u))
}

/// Pads `path ∈ L(n,d)` and `lower ∈ L(n,d')`, `d ≤ d'`, to a common shape
/// by appending `d'−d` east steps to `path` and as many north steps to
/// `lower`. Fails unless the padded `path` is weakly above the padded
/// `lower`.
pub fn extend_pair(path: &LatticePath, lower: &LatticePath) -> Result<(LatticePath, LatticePath)> {
    if path.len() != lower.len() {
        return Err(Error::ShapeMismatch(format!(
            "paths {path} and {lower} have different lengths"
        )));
    }
    let (d, d2) = (path.east_count(), lower.east_count());
    if d > d2 {
        return Err(Error::NotWeaklyAbove {
            upper: path.word(),
            lower: lower.word(),
        });
    }
    let c = path.appended(Step::East, d2 - d);
    let l = lower.appended(Step::North, d2 - d);
    if !weakly_above(&c, &l)? {
        return Err(Error::NotWeaklyAbove {
            upper: path.word(),
            lower: lower.word(),
        });
    }
    Ok((c, l))
}

/// Weakly-above in the padded sense of [`extend_pair`].
pub fn weakly_above_extended(path: &LatticePath, lower: &LatticePath) -> bool {
    extend_pair(path, lower).is_ok()
}

/// All paths in `L(n,d)`, in lexicographic word order (`e` < `n`).
pub fn all_paths(n: usize, d: usize) -> Vec<LatticePath> {
    let ground = FiniteSet::interval(1, n as u32).expect("positive labels");
    ground
        .k_subsets(d)
        .map(|e| LatticePath::from_east_set(n, &e).expect("in range"))
        .collect()
}

/// `P[U,L]`: all paths weakly below `upper` and weakly above `lower`.
pub fn paths_between(upper: &LatticePath, lower: &LatticePath) -> Result<Vec<LatticePath>> {
    if !weakly_above(upper, lower)? {
        return Err(Error::NotWeaklyAbove {
            upper: upper.word(),
            lower: lower.word(),
        });
    }
    // Prefix east counts of a path in P[U,L] are sandwiched between those of
    // U (from below) and L (from above).
    let prefix = |p: &LatticePath| {
        let mut acc = vec![0usize];
        for s in p.steps() {
            acc.push(acc.last().unwrap() + usize::from(*s == Step::East));
        }
        acc
    };
    let (lo, hi) = (prefix(upper), prefix(lower));
    let n = upper.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(
        i: usize,
        e: usize,
        lo: &[usize],
        hi: &[usize],
        cur: &mut Vec<Step>,
        out: &mut Vec<LatticePath>,
    ) {
        if i == lo.len() - 1 {
            out.push(LatticePath::new(cur.clone()));
            return;
        }
        for (step, ne) in [(Step::East, e + 1), (Step::North, e)] {
            if lo[i + 1] <= ne && ne <= hi[i + 1] {
                cur.push(step);
                go(i + 1, ne, lo, hi, cur, out);
                cur.pop();
            }
        }
    }
    go(0, 0, &lo, &hi, &mut cur, &mut out);
    debug_assert!(out.iter().all(|p| p.len() == n));
    Ok(out)
}

/// All `(U, L)` with `U` weakly above `L` in `L(n,d)`, for every `d`.
pub fn boundary_pairs(n: usize) -> Vec<(LatticePath, LatticePath)> {
    let mut out = Vec::new();
    for d in 0..=n {
        let paths = all_paths(n, d);
        for l in &paths {
            for u in &paths {
                if weakly_above(u, l).expect("same shape") {
                    out.push((u.clone(), l.clone()));
                }
            }
        }
    }
    out
}

/// `M[U,L]` on `[n]`, with the exchange axiom validated.
pub fn lpm(upper: &LatticePath, lower: &LatticePath) -> Result<Matroid> {
    let m = lpm_unvalidated(upper, lower)?;
    Matroid::from_bases(m.groundset().clone(), m.bases().to_vec())
}

/// `M[U,L]` without re-checking the exchange axiom.
pub fn lpm_unvalidated(upper: &LatticePath, lower: &LatticePath) -> Result<Matroid> {
    let bases = paths_between(upper, lower)?
        .iter()
        .map(LatticePath::east_set)
        .collect::<Vec<_>>();
    Matroid::from_bases_unvalidated(FiniteSet::interval(1, upper.len() as u32)?, bases)
}

/// `C*`, the path with east and north swapped.
pub fn dual_path(path: &LatticePath) -> LatticePath {
    path.dual()
}
