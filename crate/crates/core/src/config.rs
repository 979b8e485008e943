//! Finite 0/1 point configurations over labeled coordinates.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::FiniteSet;

/// One 0/1 point, one bit per coordinate (in coordinate-label order).
pub type Point = Vec<bool>;

/// A duplicate-free set of 0/1 vectors indexed by an increasing list of
/// coordinate labels.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawConfig", into = "RawConfig")]
pub struct PointConfig {
    coords: FiniteSet,
    points: BTreeSet<Point>,
}

#[derive(Serialize, Deserialize)]
struct RawConfig {
    coords: Vec<u32>,
    points: Vec<Vec<i64>>,
}

impl TryFrom<RawConfig> for PointConfig {
    type Error = Error;

    fn try_from(raw: RawConfig) -> Result<Self> {
        let n = raw.coords.len();
        let coords = FiniteSet::new(raw.coords)?;
        if coords.len() != n {
            return Err(Error::Descriptor(
                "coordinate labels must be distinct".into(),
            ));
        }
        let mut points = Vec::with_capacity(raw.points.len());
        for (index, p) in raw.points.into_iter().enumerate() {
            let mut bits = Vec::with_capacity(p.len());
            for value in p {
                match value {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    value => return Err(Error::NonBinaryEntry { index, value }),
                }
            }
            points.push(bits);
        }
        PointConfig::new(coords, points)
    }
}

impl From<PointConfig> for RawConfig {
    fn from(c: PointConfig) -> RawConfig {
        RawConfig {
            coords: c.coords.into(),
            points: c
                .points
                .into_iter()
                .map(|p| p.into_iter().map(i64::from).collect())
                .collect(),
        }
    }
}

impl PointConfig {
    pub fn new(coords: FiniteSet, points: Vec<Point>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (index, p) in points.into_iter().enumerate() {
            if p.len() != coords.len() {
                return Err(Error::PointLength {
                    index,
                    found: p.len(),
                    expected: coords.len(),
                });
            }
            if !set.insert(p) {
                return Err(Error::DuplicatePoint(index));
            }
        }
        Ok(PointConfig {
            coords,
            points: set,
        })
    }

    /// Configuration of characteristic vectors of `sets` over `coords`.
    pub fn from_supports<'a, I>(coords: FiniteSet, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a FiniteSet>,
    {
        let points = sets
            .into_iter()
            .map(|s| {
                if let Some(x) = s.iter().find(|&x| !coords.contains(x)) {
                    return Err(Error::UnknownCoordinate(x));
                }
                Ok(coords.iter().map(|c| s.contains(c)).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        PointConfig::new(coords, points)
    }

    pub fn empty(coords: FiniteSet) -> Self {
        PointConfig {
            coords,
            points: BTreeSet::new(),
        }
    }

    pub fn coords(&self) -> &FiniteSet {
        &self.coords
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Coordinate labels where `point` has a 1.
    pub fn support(&self, point: &Point) -> FiniteSet {
        FiniteSet::from_sorted_unchecked(
            self.coords
                .iter()
                .zip(point)
                .filter(|(_, &b)| b)
                .map(|(c, _)| c)
                .collect(),
        )
    }

    pub fn supports(&self) -> impl Iterator<Item = FiniteSet> + '_ {
        self.points.iter().map(|p| self.support(p))
    }

    /// Points whose bit on the largest coordinate equals `bit`, with that
    /// coordinate dropped.
    pub fn slice(&self, bit: bool) -> Result<PointConfig> {
        let last = self.coords.largest().ok_or(Error::NoCoordinates)?;
        let k = self.coords.len() - 1;
        let points = self
            .points
            .iter()
            .filter(|p| p[k] == bit)
            .map(|p| p[..k].to_vec())
            .collect();
        Ok(PointConfig {
            coords: self.coords.without(last),
            points,
        })
    }

    /// Flips the bit of coordinate `label` in every point.
    pub fn reflect(&self, label: u32) -> Result<PointConfig> {
        let i = self
            .coords
            .index_of(label)
            .ok_or(Error::UnknownCoordinate(label))?;
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q[i] = !q[i];
                q
            })
            .collect();
        Ok(PointConfig {
            coords: self.coords.clone(),
            points,
        })
    }

    /// Reflection in every coordinate: `(1,…,1) − V`.
    pub fn complement(&self) -> PointConfig {
        PointConfig {
            coords: self.coords.clone(),
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|b| !b).collect())
                .collect(),
        }
    }
}

impl fmt::Debug for PointConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointConfig{{coords: {}, points: [", self.coords)?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("(")?;
            for b in p {
                f.write_str(if *b { "1" } else { "0" })?;
            }
            f.write_str(")")?;
        }
        f.write_str("]}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fset;

    fn cfg(coords: FiniteSet, pts: &[&[u8]]) -> PointConfig {
        PointConfig::new(
            coords,
            pts.iter()
                .map(|p| p.iter().map(|&b| b == 1).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn slice_examples() {
        let v = cfg(fset![1, 2], &[&[1, 0], &[0, 1]]);
        assert_eq!(v.slice(false).unwrap(), cfg(fset![1], &[&[1]]));
        assert_eq!(v.slice(true).unwrap(), cfg(fset![1], &[&[0]]));
        let w = cfg(fset![1, 2], &[&[1, 1]]);
        assert!(w.slice(false).unwrap().is_empty());
        let none = PointConfig::empty(FiniteSet::empty());
        assert_eq!(none.slice(false), Err(Error::NoCoordinates));
    }

    #[test]
    fn reflect_examples() {
        let v = cfg(fset![1, 2], &[&[1, 0], &[0, 1]]);
        assert_eq!(v.reflect(1).unwrap(), cfg(fset![1, 2], &[&[0, 0], &[1, 1]]));
        assert_eq!(v.reflect(1).unwrap().reflect(1).unwrap(), v);
        assert_eq!(v.reflect(5), Err(Error::UnknownCoordinate(5)));
    }

    #[test]
    fn rejects_bad_points() {
        assert!(matches!(
            PointConfig::new(fset![1, 2], vec![vec![true]]),
            Err(Error::PointLength { .. })
        ));
        assert_eq!(
            PointConfig::new(fset![1], vec![vec![true], vec![true]]),
            Err(Error::DuplicatePoint(1))
        );
        let bad: std::result::Result<PointConfig, _> =
            serde_json::from_str(r#"{"coords":[1],"points":[[2]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn json_round_trip() {
        let v: PointConfig =
            serde_json::from_str(r#"{"coords":[2,5],"points":[[0,1],[1,1]]}"#).unwrap();
        assert_eq!(v.coords(), &fset![2, 5]);
        assert_eq!(
            v.supports().collect::<Vec<_>>(),
            vec![fset![5], fset![2, 5]]
        );
        let back: PointConfig = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(back, v);
    }
}
