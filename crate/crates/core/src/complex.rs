//! Explicit simplicial complexes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::FiniteSet;

/// A downward-closed family of faces over a set of vertex labels.
///
/// Faces are kept in canonical order (cardinality, then lexicographic).
/// Equality compares the face families only; `vertex_labels` is the ambient
/// label set and may contain labels that no face uses.
#[derive(Clone, Default)]
pub struct SimplicialComplex {
    vertex_labels: FiniteSet,
    faces: BTreeSet<FiniteSet>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// The empty family `{}` (no faces at all, not even the empty face).
    pub fn void() -> Self {
        SimplicialComplex::default()
    }

    /// The complex `{∅}`.
    pub fn empty_face() -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(FiniteSet::empty());
        SimplicialComplex {
            vertex_labels: FiniteSet::empty(),
            faces,
        }
    }

    /// Downward closure of `faces`.
    pub fn make_complex<I: IntoIterator<Item = FiniteSet>>(faces: I) -> Self {
        let mut closed = BTreeSet::new();
        let mut vertices = FiniteSet::empty();
        for face in faces {
            if closed.contains(&face) {
                continue;
            }
            vertices = vertices.union(&face);
            for sub in face.subsets() {
                closed.insert(sub);
            }
        }
        SimplicialComplex {
            vertex_labels: vertices,
            faces: closed,
        }
    }

    /// Wraps a family already known to be downward closed.
    pub(crate) fn from_closed(vertex_labels: FiniteSet, faces: BTreeSet<FiniteSet>) -> Self {
        let c = SimplicialComplex {
            vertex_labels,
            faces,
        };
        debug_assert!(c.is_downward_closed());
        c
    }

    /// Replaces the ambient vertex labels; they must cover every used vertex.
    pub fn with_vertex_labels(mut self, labels: FiniteSet) -> Self {
        debug_assert!(self.used_vertices().is_subset(&labels));
        self.vertex_labels = labels;
        self
    }

    pub fn vertex_labels(&self) -> &FiniteSet {
        &self.vertex_labels
    }

    pub fn faces(&self) -> &BTreeSet<FiniteSet> {
        &self.faces
    }

    pub fn iter(&self) -> impl Iterator<Item = &FiniteSet> {
        self.faces.iter()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: &FiniteSet) -> bool {
        self.faces.contains(face)
    }

    pub fn used_vertices(&self) -> FiniteSet {
        let mut v = Vec::new();
        for f in &self.faces {
            if f.len() == 1 {
                v.extend(f.iter());
            }
        }
        FiniteSet::from_sorted_unchecked({
            v.sort_unstable();
            v
        })
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces
            .iter()
            .all(|f| f.iter().all(|x| self.faces.contains(&f.without(x))))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces.is_subset(&other.faces)
    }

    pub fn facets(&self) -> Vec<FiniteSet> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.len() == f.len() + 1 && f.is_subset(g))
            })
            .cloned()
            .collect()
    }

    /// `K ∪ {apex ∪ σ : σ ∈ K}`.
    pub fn cone(&self, apex: u32) -> Result<Self> {
        if apex == 0 {
            return Err(Error::ZeroLabel);
        }
        if self.faces.iter().any(|f| f.contains(apex)) || self.vertex_labels.contains(apex) {
            return Err(Error::ApexCollision(apex));
        }
        let mut faces = self.faces.clone();
        for f in &self.faces {
            faces.insert(f.with(apex));
        }
        Ok(SimplicialComplex::from_closed(
            self.vertex_labels.with(apex),
            faces,
        ))
    }

    pub fn union(&self, other: &SimplicialComplex) -> Self {
        SimplicialComplex {
            vertex_labels: self.vertex_labels.union(&other.vertex_labels),
            faces: self.faces.union(&other.faces).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> Self {
        SimplicialComplex {
            vertex_labels: self.vertex_labels.union(&other.vertex_labels),
            faces: self.faces.intersection(&other.faces).cloned().collect(),
        }
    }

    /// Entry `k` counts faces of cardinality `k`; empty for the void family.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for f in &self.faces {
            if out.len() <= f.len() {
                out.resize(f.len() + 1, 0);
            }
            out[f.len()] += 1;
        }
        out
    }

    pub fn to_face_lists(&self) -> Vec<Vec<u32>> {
        self.faces.iter().map(|f| f.as_slice().to_vec()).collect()
    }
}

impl FromIterator<FiniteSet> for SimplicialComplex {
    fn from_iter<I: IntoIterator<Item = FiniteSet>>(iter: I) -> Self {
        SimplicialComplex::make_complex(iter)
    }
}

/// Canonical text: faces in canonical order, separated by single spaces.
impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, face) in self.faces.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{face}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fset;

    fn cx(faces: &[FiniteSet]) -> SimplicialComplex {
        SimplicialComplex::make_complex(faces.iter().cloned())
    }

    #[test]
    fn make_complex_examples() {
        assert!(cx(&[]).is_empty());
        assert_eq!(
            cx(&[fset![2, 4]])
                .faces()
                .iter()
                .cloned()
                .collect::<Vec<_>>(),
            vec![fset![], fset![2], fset![4], fset![2, 4]]
        );
        let closed = cx(&[fset![], fset![2], fset![3]]);
        assert_eq!(closed.len(), 3);
        assert_eq!(
            SimplicialComplex::make_complex(closed.faces().clone()),
            closed
        );
    }

    #[test]
    fn cone_examples() {
        let k = cx(&[fset![2], fset![3]]);
        let c = k.cone(4).unwrap();
        assert_eq!(c, cx(&[fset![2, 4], fset![3, 4]]));
        assert_eq!(c.len(), 2 * k.len());
        assert!(SimplicialComplex::void().cone(1).unwrap().is_empty());
        assert_eq!(
            SimplicialComplex::empty_face().cone(7).unwrap(),
            cx(&[fset![7]])
        );
        assert_eq!(k.cone(3), Err(Error::ApexCollision(3)));
    }

    #[test]
    fn union_and_intersection() {
        let a = cx(&[fset![2]]);
        let b = cx(&[fset![3]]);
        assert_eq!(a.union(&b), cx(&[fset![2], fset![3]]));
        assert_eq!(a.intersection(&b), SimplicialComplex::empty_face());
        assert_eq!(a.intersection(&a), a);
    }

    #[test]
    fn f_vectors() {
        let k = cx(&[fset![2, 4], fset![3, 4]]);
        assert_eq!(k.f_vector(), vec![1, 3, 2]);
        assert!(SimplicialComplex::void().f_vector().is_empty());
        assert_eq!(SimplicialComplex::empty_face().f_vector(), vec![1]);
    }

    #[test]
    fn canonical_text() {
        let k = cx(&[fset![2, 4], fset![3]]);
        assert_eq!(k.to_string(), "{} {2} {3} {4} {2,4}");
        assert_eq!(k.facets(), vec![fset![3], fset![2, 4]]);
    }
}
