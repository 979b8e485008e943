//! Matroids given by explicit basis lists.

use std::fmt;

use crate::complex::SimplicialComplex;
use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::set::FiniteSet;

/// A matroid on a finite groundset of positive labels, stored by its bases.
///
/// Bases are kept sorted and duplicate-free, so two matroids with the same
/// groundset and basis family compare (and hash) equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    groundset: FiniteSet,
    rank: usize,
    bases: Vec<FiniteSet>,
}

impl Matroid {
    /// Validates cardinalities, containment and the basis-exchange axiom.
    pub fn from_bases<I>(groundset: FiniteSet, bases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = FiniteSet>,
    {
        let m = Self::from_bases_unvalidated(groundset, bases)?;
        m.check_exchange()?;
        Ok(m)
    }

    /// Checks cardinalities and containment but skips the exchange axiom.
    ///
    /// Meant for generated families known to be matroids (uniform, lattice
    /// path) and for building deliberately invalid inputs in tests.
    pub fn from_bases_unvalidated<I>(groundset: FiniteSet, bases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = FiniteSet>,
    {
        let mut bases: Vec<FiniteSet> = bases.into_iter().collect();
        let first = bases.first().ok_or(Error::EmptyBasisList)?.len();
        for b in &bases {
            if b.len() != first {
                return Err(Error::UnequalCardinality {
                    first,
                    other: b.len(),
                });
            }
            if !b.is_subset(&groundset) {
                return Err(Error::BasisOutsideGroundset {
                    basis: b.clone(),
                    groundset,
                });
            }
        }
        bases.sort_unstable();
        bases.dedup();
        Ok(Matroid {
            groundset,
            rank: first,
            bases,
        })
    }

    fn check_exchange(&self) -> Result<()> {
        for b1 in &self.bases {
            for b2 in &self.bases {
                for x in b1.difference(b2).iter() {
                    let without = b1.without(x);
                    let ok = b2
                        .difference(b1)
                        .iter()
                        .any(|y| self.is_basis(&without.with(y)));
                    if !ok {
                        return Err(Error::ExchangeViolation {
                            b1: b1.clone(),
                            b2: b2.clone(),
                            x,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `U_{r,n}` on `{first_label, …, first_label+n−1}`.
    pub fn uniform(n: i64, r: i64, first_label: u32) -> Result<Matroid> {
        if n < 0 || r < 0 || r > n || n > u32::MAX as i64 {
            return Err(Error::InvalidUniform { n, r });
        }
        let ground = FiniteSet::interval(first_label, n as u32)?;
        let bases: Vec<_> = ground.k_subsets(r as usize).collect();
        Self::from_bases_unvalidated(ground, bases)
    }

    /// Transversal matroid of a set system: bases are the maximum partial
    /// transversals, found by bipartite matching.
    pub fn transversal(groundset: FiniteSet, sets: &[FiniteSet]) -> Result<Matroid> {
        for s in sets {
            if let Some(x) = s.iter().find(|&x| !groundset.contains(x)) {
                return Err(Error::NotInGroundset(x));
            }
        }
        let all: Vec<u32> = groundset.iter().collect();
        let rank = max_matching(&all, sets);
        let bases: Vec<_> = groundset
            .k_subsets(rank)
            .filter(|cand| max_matching(cand.as_slice(), sets) == rank)
            .collect();
        Self::from_bases_unvalidated(groundset, bases)
    }

    pub fn groundset(&self) -> &FiniteSet {
        &self.groundset
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[FiniteSet] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, set: &FiniteSet) -> bool {
        set.len() == self.rank && self.bases.binary_search(set).is_ok()
    }

    pub fn is_independent(&self, set: &FiniteSet) -> bool {
        set.len() <= self.rank && self.bases.iter().any(|b| set.is_subset(b))
    }

    /// `m(M)`, the largest groundset label.
    pub fn max_element(&self) -> Result<u32> {
        self.groundset.largest().ok_or(Error::EmptyGroundset)
    }

    fn check_member(&self, e: u32) -> Result<()> {
        if self.groundset.contains(e) {
            Ok(())
        } else {
            Err(Error::NotInGroundset(e))
        }
    }

    pub fn is_loop(&self, e: u32) -> Result<bool> {
        self.check_member(e)?;
        Ok(self.bases.iter().all(|b| !b.contains(e)))
    }

    pub fn is_coloop(&self, e: u32) -> Result<bool> {
        self.check_member(e)?;
        Ok(self.bases.iter().all(|b| b.contains(e)))
    }

    /// `M \ e`; deleting a coloop is defined as contracting it.
    pub fn delete(&self, e: u32) -> Result<Matroid> {
        if self.is_coloop(e)? {
            return Ok(self.contract_unchecked(e));
        }
        Ok(Matroid {
            groundset: self.groundset.without(e),
            rank: self.rank,
            bases: self
                .bases
                .iter()
                .filter(|b| !b.contains(e))
                .cloned()
                .collect(),
        })
    }

    /// `M / e`; contracting a loop is defined as deleting it.
    pub fn contract(&self, e: u32) -> Result<Matroid> {
        if self.is_loop(e)? {
            return self.delete(e);
        }
        Ok(self.contract_unchecked(e))
    }

    fn contract_unchecked(&self, e: u32) -> Matroid {
        // Removing a common element keeps the lexicographic order of bases.
        Matroid {
            groundset: self.groundset.without(e),
            rank: self.rank - 1,
            bases: self
                .bases
                .iter()
                .filter(|b| b.contains(e))
                .map(|b| b.without(e))
                .collect(),
        }
    }

    pub fn dual(&self) -> Matroid {
        let mut bases: Vec<_> = self
            .bases
            .iter()
            .map(|b| self.groundset.difference(b))
            .collect();
        bases.sort_unstable();
        Matroid {
            groundset: self.groundset.clone(),
            rank: self.groundset.len() - self.rank,
            bases,
        }
    }

    /// Inclusion-minimal dependent sets, by increasing cardinality.
    pub fn circuits(&self) -> Vec<FiniteSet> {
        let mut found: Vec<FiniteSet> = Vec::new();
        let top = (self.rank + 1).min(self.groundset.len());
        for k in 1..=top {
            let mut new = Vec::new();
            for s in self.groundset.k_subsets(k) {
                if found.iter().any(|c| c.is_subset(&s)) {
                    continue;
                }
                if !self.is_independent(&s) {
                    new.push(s);
                }
            }
            found.extend(new);
        }
        found
    }

    pub fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex::make_complex(self.bases.iter().cloned())
            .with_vertex_labels(self.groundset.clone())
    }

    /// Characteristic vectors of the bases over the groundset coordinates.
    pub fn basis_configuration(&self) -> PointConfig {
        PointConfig::from_supports(self.groundset.clone(), &self.bases)
            .expect("bases are distinct subsets of the groundset")
    }

    /// Evaluates the known generators of the vanishing ideal of `V_M` on
    /// `V_M`.
    pub fn verify_vanishing_generators(&self) -> bool {
        check_vanishing_generators(&self.basis_configuration(), self.rank, &self.circuits())
    }
}

/// True iff `x_i² − x_i`, `Σ x_i − rank` and `x^C` for every `C` in
/// `circuits` vanish at every point of `config`.
///
/// This only evaluates the polynomials; it does not test ideal membership.
pub fn check_vanishing_generators(
    config: &PointConfig,
    rank: usize,
    circuits: &[FiniteSet],
) -> bool {
    config.points().iter().all(|p| {
        // Bits are 0/1 by construction, so x_i² − x_i vanishes identically.
        let support = config.support(p);
        support.len() == rank && circuits.iter().all(|c| !c.is_subset(&support))
    })
}

/// Size of a maximum matching of `elements` into distinct sets of `sets`.
fn max_matching(elements: &[u32], sets: &[FiniteSet]) -> usize {
    fn augment(
        e: usize,
        elements: &[u32],
        sets: &[FiniteSet],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for (j, s) in sets.iter().enumerate() {
            if seen[j] || !s.contains(elements[e]) {
                continue;
            }
            seen[j] = true;
            let free = match owner[j] {
                None => true,
                Some(other) => augment(other, elements, sets, owner, seen),
            };
            if free {
                owner[j] = Some(e);
                return true;
            }
        }
        false
    }

    let mut owner = vec![None; sets.len()];
    let mut size = 0;
    for e in 0..elements.len() {
        let mut seen = vec![false; sets.len()];
        if augment(e, elements, sets, &mut owner, &mut seen) {
            size += 1;
        }
    }
    size
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(groundset={}, rank={}, bases={:?})",
            self.groundset, self.rank, self.bases
        )
    }
}
