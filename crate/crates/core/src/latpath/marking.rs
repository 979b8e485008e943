//! Demarcation paths, marking paths and the unmarked-east-step statistic.

use std::collections::BTreeSet;
use std::fmt;

use super::{extend_pair, LatticePath, Statistic, Step};
use crate::error::{Error, Result};
use crate::set::FiniteSet;

/// Step of a demarcation path: the x-move of `L` combined with the y-move
/// of `C`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DemStep {
    East,
    North,
    Diagonal,
    Empty,
}

impl DemStep {
    pub fn letter(self) -> char {
        match self {
            DemStep::East => 'e',
            DemStep::North => 'n',
            DemStep::Diagonal => 'd',
            DemStep::Empty => 'ε',
        }
    }

    fn delta(self) -> (usize, usize) {
        match self {
            DemStep::East => (1, 0),
            DemStep::North => (0, 1),
            DemStep::Diagonal => (1, 1),
            DemStep::Empty => (0, 0),
        }
    }
}

/// `dem_L(C)`, one letter per position of the padded `C`/`L` pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DemarcationPath {
    steps: Vec<DemStep>,
}

impl DemarcationPath {
    pub fn steps(&self) -> &[DemStep] {
        &self.steps
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Lattice points visited (repeated points for empty steps are dropped).
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            if dx + dy > 0 {
                x += dx;
                y += dy;
                out.push((x, y));
            }
        }
        out
    }

    /// For each abscissa `x < width`, the height at which the path leaves
    /// `x` to the right (by an east or diagonal step).
    fn departure_heights(&self, width: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; width];
        let (mut x, mut y) = (0, 0);
        for s in &self.steps {
            if matches!(s, DemStep::East | DemStep::Diagonal) && x < width && out[x] == usize::MAX {
                out[x] = y;
            }
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
        }
        out
    }
}

impl fmt::Display for DemarcationPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

pub fn demarcation(path: &LatticePath, lower: &LatticePath) -> Result<DemarcationPath> {
    let (c, l) = extend_pair(path, lower)?;
    Ok(demarcation_padded(&c, &l))
}

fn demarcation_padded(c: &LatticePath, l: &LatticePath) -> DemarcationPath {
    let steps = c
        .steps()
        .iter()
        .zip(l.steps())
        .map(|(cs, ls)| match (cs, ls) {
            (Step::North, Step::North) => DemStep::North,
            (Step::East, Step::East) => DemStep::East,
            (Step::North, Step::East) => DemStep::Diagonal,
            (Step::East, Step::North) => DemStep::Empty,
        })
        .collect();
    DemarcationPath { steps }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MarkStep {
    East,
    North,
    Diagonal,
}

impl MarkStep {
    pub fn letter(self) -> char {
        match self {
            MarkStep::East => 'e',
            MarkStep::North => 'n',
            MarkStep::Diagonal => 'd',
        }
    }
}

/// `mar_L(C)`, together with the east steps of the (padded) `C` whose
/// realizations it shares.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkingPath {
    steps: Vec<MarkStep>,
    /// Positions in the padded `C` of the marked east steps. Positions past
    /// the original length belong to the padding.
    marked: FiniteSet,
    /// Length of the unpadded path.
    original_len: usize,
}

impl MarkingPath {
    pub fn steps(&self) -> &[MarkStep] {
        &self.steps
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Marked east positions, padding included.
    pub fn marked_all(&self) -> &FiniteSet {
        &self.marked
    }

    /// Marked east positions of the original path.
    pub fn marked(&self) -> FiniteSet {
        FiniteSet::from_sorted_unchecked(
            self.marked
                .iter()
                .filter(|&p| p as usize <= self.original_len)
                .collect(),
        )
    }

    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for s in &self.steps {
            match s {
                MarkStep::East => x += 1,
                MarkStep::North => y += 1,
                MarkStep::Diagonal => {
                    x += 1;
                    y += 1;
                }
            }
            out.push((x, y));
        }
        out
    }

    pub fn passes_through(&self, point: (usize, usize)) -> bool {
        self.points().contains(&point)
    }
}

/// Greedy marking path between `dem_L(C)` and `C`.
///
/// From `(x,y)` the path takes a diagonal step unless it would rise above
/// `C` (then it steps east, along an east step of `C`) or dip below the
/// demarcation path (then it steps north). Once at the right edge it
/// climbs north to the endpoint.
pub fn marking_path(path: &LatticePath, lower: &LatticePath) -> Result<MarkingPath> {
    let (c, l) = extend_pair(path, lower)?;
    let dem = demarcation_padded(&c, &l);
    let (width, height) = c.endpoint();
    let ceiling = c.east_heights();
    let floor = dem.departure_heights(width);
    let east_pos = c.east_positions();

    let mut steps = Vec::with_capacity(c.len());
    let mut marked = Vec::new();
    let (mut x, mut y) = (0, 0);
    while (x, y) != (width, height) {
        if x == width {
            steps.push(MarkStep::North);
            y += 1;
            continue;
        }
        let fits_below_c = y < ceiling[x];
        let stays_above_dem = y >= floor[x];
        match (fits_below_c, stays_above_dem) {
            (true, true) => {
                steps.push(MarkStep::Diagonal);
                x += 1;
                y += 1;
            }
            (false, true) => {
                debug_assert_eq!(y, ceiling[x]);
                steps.push(MarkStep::East);
                marked.push(east_pos[x]);
                x += 1;
            }
            (true, false) => {
                steps.push(MarkStep::North);
                y += 1;
            }
            (false, false) => return Err(Error::MarkingConflict { x, y }),
        }
    }
    Ok(MarkingPath {
        steps,
        marked: FiniteSet::from_sorted_unchecked(marked),
        original_len: path.len(),
    })
}

/// `st_L(C)`: the east positions of `C` not marked by `mar_L(C)`.
pub fn statistic(path: &LatticePath, lower: &LatticePath) -> Result<Statistic> {
    let marking = marking_path(path, lower)?;
    Ok(path.east_set().difference(marking.marked_all()))
}

/// Statistic for the trivial lower boundary by a left-to-right scan: an
/// east step is marked when the norths so far equal the unmarked easts so
/// far.
pub fn statistic_trivial_scan(path: &LatticePath) -> Statistic {
    let (mut norths, mut unmarked) = (0usize, 0usize);
    let mut out = Vec::new();
    for (i, s) in path.steps().iter().enumerate() {
        match s {
            Step::North => norths += 1,
            Step::East if norths == unmarked => {}
            Step::East => {
                unmarked += 1;
                out.push(i as u32 + 1);
            }
        }
    }
    FiniteSet::from_sorted_unchecked(out)
}

/// Statistic for the trivial lower boundary via south-east hooks.
///
/// Columns are scanned left to right; column `c` has boxes in rows
/// `1..=h_c` below the path. A hook corner goes into the highest row not
/// yet covered by an earlier hook's east arm.
pub fn hook_placement(path: &LatticePath) -> Statistic {
    let mut used_rows = BTreeSet::new();
    let mut out = Vec::new();
    for (h, pos) in path.east_heights().into_iter().zip(path.east_positions()) {
        if let Some(row) = (1..=h).rev().find(|r| !used_rows.contains(r)) {
            used_rows.insert(row);
            out.push(pos);
        }
    }
    FiniteSet::from_sorted_unchecked(out)
}
