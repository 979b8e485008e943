//! Lexicographic standard complexes by recursion, and the canonical
//! bijection from bases to faces.
//!
//! The lexicographic order has `x_1 ≻ x_2 ≻ ⋯`, i.e. the smallest label is
//! the dominant variable. Both recursions therefore split on the largest
//! coordinate label: slicing a configuration on its last coordinate, or
//! deleting/contracting the largest groundset element `m(M)`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use crate::complex::SimplicialComplex;
use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::FiniteSet;

/// Assembles `A ∪ B ∪ (apex ∗ (A ∩ B))`.
fn mapping_cone(a: &SimplicialComplex, b: &SimplicialComplex, apex: u32) -> SimplicialComplex {
    let inter = a.intersection(b);
    a.union(b).union(
        &inter
            .cone(apex)
            .expect("apex is larger than every remaining label"),
    )
}

/// `S_lex(V)` via the slice recursion on the last coordinate.
pub fn lex_standard_complex_config(config: &PointConfig) -> SimplicialComplex {
    let mut memo = HashMap::new();
    config_rec(config, &mut memo).with_vertex_labels(config.coords().clone())
}

fn config_rec(
    config: &PointConfig,
    memo: &mut HashMap<PointConfig, SimplicialComplex>,
) -> SimplicialComplex {
    match config.len() {
        0 => return SimplicialComplex::void(),
        1 => return SimplicialComplex::empty_face(),
        _ => {}
    }
    if let Some(hit) = memo.get(config) {
        return hit.clone();
    }
    // Two or more distinct points imply at least one coordinate.
    let last = config
        .coords()
        .largest()
        .expect("distinct points need a coordinate");
    let zero = config_rec(&config.slice(false).expect("has coordinates"), memo);
    let one = config_rec(&config.slice(true).expect("has coordinates"), memo);
    let out = mapping_cone(&zero, &one, last);
    memo.insert(config.clone(), out.clone());
    out
}

/// Cache of standard complexes and bijection tables keyed by matroid.
///
/// Safe to share across threads. Entries for equal keys are identical, so a
/// racing insert simply overwrites an equal value.
#[derive(Default)]
pub struct LexMemo {
    complexes: Mutex<HashMap<Matroid, Arc<SimplicialComplex>>>,
    tables: Mutex<HashMap<Matroid, Arc<BijectionTable>>>,
}

impl LexMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn clear(&self) {
        self.complexes.lock().unwrap().clear();
        self.tables.lock().unwrap().clear();
    }

    pub fn len(&self) -> usize {
        self.complexes.lock().unwrap().len() + self.tables.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `S_lex(M)` by deletion–contraction on `m(M)`.
    pub fn complex(&self, m: &Matroid) -> Arc<SimplicialComplex> {
        if let Some(hit) = self.complexes.lock().unwrap().get(m) {
            return hit.clone();
        }
        let out = Arc::new(self.complex_uncached(m));
        self.complexes
            .lock()
            .unwrap()
            .insert(m.clone(), out.clone());
        out
    }

    fn complex_uncached(&self, m: &Matroid) -> SimplicialComplex {
        let ground = m.groundset().clone();
        let Ok(top) = m.max_element() else {
            return SimplicialComplex::empty_face();
        };
        let minor =
            |f: fn(&Matroid, u32) -> Result<Matroid>| f(m, top).expect("m(M) is in the groundset");
        let out = if m.is_coloop(top).unwrap() {
            (*self.complex(&minor(Matroid::delete))).clone()
        } else if m.is_loop(top).unwrap() {
            (*self.complex(&minor(Matroid::contract))).clone()
        } else {
            let del = self.complex(&minor(Matroid::delete));
            let con = self.complex(&minor(Matroid::contract));
            mapping_cone(&del, &con, top)
        };
        out.with_vertex_labels(ground)
    }

    /// `Λ_M` as a full table.
    pub fn table(&self, m: &Matroid) -> Arc<BijectionTable> {
        if let Some(hit) = self.tables.lock().unwrap().get(m) {
            return hit.clone();
        }
        let out = Arc::new(self.table_uncached(m));
        self.tables.lock().unwrap().insert(m.clone(), out.clone());
        out
    }

    fn table_uncached(&self, m: &Matroid) -> BijectionTable {
        let Ok(top) = m.max_element() else {
            let mut entries = BTreeMap::new();
            entries.insert(FiniteSet::empty(), FiniteSet::empty());
            return BijectionTable { entries };
        };
        let mut entries = BTreeMap::new();
        if m.is_loop(top).unwrap() {
            let del = self.table(&m.delete(top).unwrap());
            entries = del.entries.clone();
        } else if m.is_coloop(top).unwrap() {
            let con = self.table(&m.contract(top).unwrap());
            for b in m.bases() {
                entries.insert(b.clone(), con.entries[&b.without(top)].clone());
            }
        } else {
            let del = self.table(&m.delete(top).unwrap());
            let con = self.table(&m.contract(top).unwrap());
            let del_faces: HashSet<&FiniteSet> = del.entries.values().collect();
            for b in m.bases() {
                let face = if b.contains(top) {
                    let tau = &con.entries[&b.without(top)];
                    if del_faces.contains(tau) {
                        tau.with(top)
                    } else {
                        tau.clone()
                    }
                } else {
                    del.entries[b].clone()
                };
                entries.insert(b.clone(), face);
            }
        }
        BijectionTable { entries }
    }

    /// `Λ_M(B)` without building the full table for `M`.
    pub fn lambda_of_basis(&self, m: &Matroid, basis: &FiniteSet) -> Result<FiniteSet> {
        if !m.is_basis(basis) {
            return Err(Error::NotABasis(basis.clone()));
        }
        Ok(self.lambda_rec(m, basis))
    }

    fn lambda_rec(&self, m: &Matroid, basis: &FiniteSet) -> FiniteSet {
        let Ok(top) = m.max_element() else {
            return FiniteSet::empty();
        };
        if m.is_loop(top).unwrap() {
            return self.lambda_rec(&m.delete(top).unwrap(), basis);
        }
        if m.is_coloop(top).unwrap() {
            return self.lambda_rec(&m.contract(top).unwrap(), &basis.without(top));
        }
        if !basis.contains(top) {
            return self.lambda_rec(&m.delete(top).unwrap(), basis);
        }
        let tau = self.lambda_rec(&m.contract(top).unwrap(), &basis.without(top));
        if self.complex(&m.delete(top).unwrap()).contains(&tau) {
            tau.with(top)
        } else {
            tau
        }
    }
}

/// `S_lex(M)` by the deletion–contraction recursion, with a call-local cache.
pub fn lex_standard_complex_matroid(m: &Matroid) -> SimplicialComplex {
    (*LexMemo::new().complex(m)).clone()
}

/// The map `Λ_M : B(M) → S_lex(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionTable {
    entries: BTreeMap<FiniteSet, FiniteSet>,
}

impl BijectionTable {
    pub fn get(&self, basis: &FiniteSet) -> Option<&FiniteSet> {
        self.entries.get(basis)
    }

    pub fn entries(&self) -> &BTreeMap<FiniteSet, FiniteSet> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FiniteSet, &FiniteSet)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The set of faces hit by the table.
    pub fn image(&self) -> SimplicialComplex {
        SimplicialComplex::make_complex(self.entries.values().cloned())
    }

    pub fn is_injective(&self) -> bool {
        let values: HashSet<_> = self.entries.values().collect();
        values.len() == self.entries.len()
    }
}

pub fn lambda_table(m: &Matroid) -> BijectionTable {
    (*LexMemo::new().table(m)).clone()
}

pub fn lambda_of_basis(m: &Matroid, basis: &FiniteSet) -> Result<FiniteSet> {
    LexMemo::new().lambda_of_basis(m, basis)
}

/// The three pieces of the deletion–contraction split at `m(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingCone {
    pub apex: u32,
    pub deletion: SimplicialComplex,
    pub contraction: SimplicialComplex,
    pub intersection: SimplicialComplex,
}

impl MappingCone {
    /// `deletion ∪ contraction ∪ (apex ∗ intersection)`.
    pub fn assemble(&self) -> SimplicialComplex {
        self.deletion
            .union(&self.contraction)
            .union(&self.intersection.cone(self.apex).expect("apex is new"))
    }
}

/// Splits `S_lex(M)` at `m(M)`; fails when `m(M)` is a loop or coloop.
pub fn mapping_cone_decomposition(m: &Matroid) -> Result<MappingCone> {
    let top = m.max_element()?;
    if m.is_loop(top)? || m.is_coloop(top)? {
        return Err(Error::DegenerateSplit(top));
    }
    let memo = LexMemo::new();
    let deletion = (*memo.complex(&m.delete(top)?)).clone();
    let contraction = (*memo.complex(&m.contract(top)?)).clone();
    let intersection = deletion.intersection(&contraction);
    Ok(MappingCone {
        apex: top,
        deletion,
        contraction,
        intersection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fset;

    fn u(n: i64, r: i64) -> Matroid {
        Matroid::uniform(n, r, 1).unwrap()
    }

    fn cx(faces: &[FiniteSet]) -> SimplicialComplex {
        SimplicialComplex::make_complex(faces.iter().cloned())
    }

    #[test]
    fn config_recursion_examples() {
        let v = u(2, 1).basis_configuration();
        assert_eq!(lex_standard_complex_config(&v), cx(&[fset![2]]));
        let none = PointConfig::empty(fset![1, 2]);
        assert!(lex_standard_complex_config(&none).is_empty());
        let one = PointConfig::new(fset![1, 2, 3], vec![vec![true, false, true]]).unwrap();
        assert_eq!(
            lex_standard_complex_config(&one),
            SimplicialComplex::empty_face()
        );
    }

    #[test]
    fn matroid_recursion_examples() {
        assert_eq!(
            lex_standard_complex_matroid(&u(0, 0)),
            SimplicialComplex::empty_face()
        );
        assert_eq!(
            lex_standard_complex_matroid(&u(3, 0)),
            SimplicialComplex::empty_face()
        );
        assert_eq!(
            lex_standard_complex_matroid(&u(3, 1)),
            cx(&[fset![2], fset![3]])
        );
        assert_eq!(
            lex_standard_complex_matroid(&u(4, 2)),
            cx(&[fset![2, 4], fset![3, 4]])
        );
    }

    #[test]
    fn lambda_examples() {
        let t = lambda_table(&u(2, 1));
        assert_eq!(t.get(&fset![1]), Some(&fset![]));
        assert_eq!(t.get(&fset![2]), Some(&fset![2]));

        let t = lambda_table(&u(3, 3));
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&fset![1, 2, 3]), Some(&fset![]));
    }

    #[test]
    fn lambda_u24_full_table() {
        // Unrolled by hand: Λ_{U_{1,3}} = {1:∅, 2:{2}, 3:{3}} and
        // Λ_{U_{2,3}} = {12:∅, 13:{3}, 23:{2}}; every contraction face lies
        // in S_lex(U_{2,3}) = {∅,{2},{3}}, so 4 is appended.
        let expected = [
            (fset![1, 2], fset![]),
            (fset![1, 3], fset![3]),
            (fset![2, 3], fset![2]),
            (fset![1, 4], fset![4]),
            (fset![2, 4], fset![2, 4]),
            (fset![3, 4], fset![3, 4]),
        ];
        let m = u(4, 2);
        let t = lambda_table(&m);
        assert_eq!(t.len(), 6);
        for (b, f) in &expected {
            assert_eq!(t.get(b), Some(f), "basis {b}");
            assert_eq!(&lambda_of_basis(&m, b).unwrap(), f);
        }
        assert_eq!(t.image(), lex_standard_complex_matroid(&m));
        assert_eq!(
            lambda_of_basis(&m, &fset![1]),
            Err(Error::NotABasis(fset![1]))
        );
    }

    #[test]
    fn mapping_cone_examples() {
        let s = cx(&[fset![2], fset![3]]);
        let mc = mapping_cone_decomposition(&u(4, 2)).unwrap();
        assert_eq!(
            (&mc.deletion, &mc.contraction, &mc.intersection),
            (&s, &s, &s)
        );
        assert_eq!(mc.assemble(), lex_standard_complex_matroid(&u(4, 2)));

        let e = SimplicialComplex::empty_face();
        let mc = mapping_cone_decomposition(&u(2, 1)).unwrap();
        assert_eq!(
            (&mc.deletion, &mc.contraction, &mc.intersection),
            (&e, &e, &e)
        );

        assert_eq!(
            mapping_cone_decomposition(&u(2, 2)),
            Err(Error::DegenerateSplit(2))
        );
    }

    #[test]
    fn shared_memo_is_consistent() {
        let memo = LexMemo::new();
        let m = u(5, 2);
        let first = memo.complex(&m);
        assert!(!memo.is_empty());
        assert_eq!(*memo.complex(&m), *first);
        memo.clear();
        assert_eq!(*memo.complex(&m), lex_standard_complex_matroid(&m));
    }
}
