//! Generated families of matroids and point configurations used by the
//! verification suite.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::latpath::{boundary_pairs, lpm_unvalidated, LatticePath};
use crate::matroid::Matroid;
use crate::set::FiniteSet;

/// Largest `n` accepted for exhaustive sweeps.
pub const MAX_SWEEP_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Family {
    /// Every `U_{r,n}` with `1 ≤ n ≤ max_n`.
    Uniform { max_n: usize },
    /// Every `M[U,L]` with `1 ≤ n ≤ max_n`.
    LatticePath { max_n: usize },
    /// Seeded transversal matroids on at most `max_n` elements.
    Transversal {
        count: usize,
        max_n: usize,
        seed: u64,
    },
    /// Explicit basis list, validated like any descriptor.
    Bases {
        groundset: Vec<u32>,
        bases: Vec<Vec<u32>>,
    },
}

/// Random 0/1 configurations for the reflection check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFamily {
    pub per_n: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub max_points: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    pub families: Vec<Family>,
    pub duals: bool,
    pub minors: bool,
    pub configs: Option<ConfigFamily>,
    /// Bound for the exhaustive lattice path sweeps.
    pub lpm_sweep_n: usize,
    /// Bound for the decomposition sweep.
    pub decomposition_n: usize,
    /// Bound for the trivial-boundary triple check.
    pub trivial_n: usize,
    /// Seeded restriction triples.
    pub restriction_triples: usize,
    pub restriction_n: usize,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            families: vec![
                Family::Uniform { max_n: 7 },
                Family::LatticePath { max_n: 8 },
                Family::Transversal {
                    count: 50,
                    max_n: 8,
                    seed: 0x5eed,
                },
            ],
            duals: true,
            minors: true,
            configs: Some(ConfigFamily {
                per_n: 200,
                min_n: 2,
                max_n: 10,
                max_points: 24,
                seed: 0xc0f1,
            }),
            lpm_sweep_n: 10,
            decomposition_n: 9,
            trivial_n: 12,
            restriction_triples: 1000,
            restriction_n: 10,
            seed: 0,
        }
    }
}

impl CorpusSpec {
    /// A small corpus for quick runs.
    pub fn small() -> Self {
        CorpusSpec {
            families: vec![
                Family::Uniform { max_n: 5 },
                Family::LatticePath { max_n: 5 },
                Family::Transversal {
                    count: 10,
                    max_n: 6,
                    seed: 0x5eed,
                },
            ],
            configs: Some(ConfigFamily {
                per_n: 10,
                min_n: 2,
                max_n: 6,
                max_points: 12,
                seed: 0xc0f1,
            }),
            lpm_sweep_n: 6,
            decomposition_n: 6,
            trivial_n: 8,
            restriction_triples: 50,
            restriction_n: 7,
            ..CorpusSpec::default()
        }
    }

    /// Caps every size bound at `max_n`.
    pub fn capped(mut self, max_n: usize) -> Self {
        for f in &mut self.families {
            match f {
                Family::Uniform { max_n: m }
                | Family::LatticePath { max_n: m }
                | Family::Transversal { max_n: m, .. } => *m = (*m).min(max_n),
                Family::Bases { .. } => {}
            }
        }
        if let Some(c) = &mut self.configs {
            c.max_n = c.max_n.min(max_n);
        }
        for m in [
            &mut self.lpm_sweep_n,
            &mut self.decomposition_n,
            &mut self.trivial_n,
            &mut self.restriction_n,
        ] {
            *m = (*m).min(max_n);
        }
        self
    }

    /// Largest size bound appearing anywhere in the spec.
    pub fn max_n(&self) -> usize {
        let fam = self.families.iter().map(|f| match f {
            Family::Uniform { max_n }
            | Family::LatticePath { max_n }
            | Family::Transversal { max_n, .. } => *max_n,
            Family::Bases { groundset, .. } => groundset.len(),
        });
        fam.chain(self.configs.as_ref().map(|c| c.max_n))
            .chain([
                self.lpm_sweep_n,
                self.decomposition_n,
                self.trivial_n,
                self.restriction_n,
            ])
            .max()
            .unwrap_or(0)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Descriptor(e.to_string()))
    }

    pub fn matroids(&self) -> Result<Vec<Matroid>> {
        let mut out = Vec::new();
        for f in &self.families {
            out.extend(family_members(f)?);
        }
        let base = dedup(out);
        let mut all = base.clone();
        for m in &base {
            if self.duals {
                all.push(m.dual());
            }
            if self.minors {
                for e in m.groundset().iter() {
                    all.push(m.delete(e)?);
                    all.push(m.contract(e)?);
                }
            }
        }
        Ok(dedup(all))
    }

    pub fn configs(&self) -> Vec<PointConfig> {
        self.configs
            .as_ref()
            .map(random_configs)
            .unwrap_or_default()
    }
}

fn dedup(ms: Vec<Matroid>) -> Vec<Matroid> {
    let mut seen = HashSet::new();
    ms.into_iter().filter(|m| seen.insert(m.clone())).collect()
}

fn family_members(f: &Family) -> Result<Vec<Matroid>> {
    match f {
        Family::Uniform { max_n } => {
            let mut out = Vec::new();
            for n in 1..=*max_n as i64 {
                for r in 0..=n {
                    out.push(Matroid::uniform(n, r, 1)?);
                }
            }
            Ok(out)
        }
        Family::LatticePath { max_n } => {
            let mut out = Vec::new();
            for n in 1..=*max_n {
                for (u, l) in boundary_pairs(n) {
                    out.push(lpm_unvalidated(&u, &l)?);
                }
            }
            Ok(out)
        }
        Family::Transversal { count, max_n, seed } => {
            Ok(random_transversals(*count, *max_n, *seed))
        }
        Family::Bases { groundset, bases } => {
            let bases = bases
                .iter()
                .map(|b| FiniteSet::new(b.clone()))
                .collect::<Result<Vec<_>>>()?;
            Ok(vec![Matroid::from_bases(
                FiniteSet::new(groundset.clone())?,
                bases,
            )?])
        }
    }
}

pub fn random_transversals(count: usize, max_n: usize, seed: u64) -> Vec<Matroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n.max(2));
            let ground = FiniteSet::interval(1, n as u32).expect("positive labels");
            let k = rng.gen_range(1..=n.div_ceil(2) + 1);
            let sets: Vec<FiniteSet> = (0..k)
                .map(|_| {
                    let mut s: Vec<u32> = (1..=n as u32).filter(|_| rng.gen_bool(0.4)).collect();
                    if s.is_empty() {
                        s.push(rng.gen_range(1..=n as u32));
                    }
                    FiniteSet::new(s).expect("positive labels")
                })
                .collect();
            Matroid::transversal(ground, &sets).expect("sets lie in the groundset")
        })
        .collect()
}

fn random_configs(spec: &ConfigFamily) -> Vec<PointConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::new();
    for n in spec.min_n..=spec.max_n {
        let coords = FiniteSet::interval(1, n as u32).expect("positive labels");
        let cap = spec.max_points.min(1 << n).max(1);
        for _ in 0..spec.per_n {
            let size = rng.gen_range(1..=cap);
            let mut points = HashSet::new();
            while points.len() < size {
                points.insert((0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<bool>>());
            }
            let mut points: Vec<_> = points.into_iter().collect();
            points.sort();
            out.push(PointConfig::new(coords.clone(), points).expect("distinct points"));
        }
    }
    out
}

/// Seeded triples `(U, U', L)` with `L ≤ U' ≤ U` in `L(n,d)`, `n ≤ max_n`.
pub fn random_triples(
    count: usize,
    max_n: usize,
    seed: u64,
) -> Vec<(LatticePath, LatticePath, LatticePath)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            let d = rng.gen_range(0..=n);
            let pick = |rng: &mut ChaCha8Rng| {
                let mut e: Vec<u32> = (1..=n as u32).collect();
                for i in (1..e.len()).rev() {
                    e.swap(i, rng.gen_range(0..=i));
                }
                e.truncate(d);
                LatticePath::from_east_set(n, &FiniteSet::new(e).expect("positive labels"))
                    .expect("positions within n")
            };
            let mut three = [pick(&mut rng), pick(&mut rng), pick(&mut rng)];
            // Pointwise order on sorted east positions: sort each index.
            let sets: Vec<Vec<u32>> = three
                .iter()
                .map(|p| p.east_set().as_slice().to_vec())
                .collect();
            let mut cols: Vec<Vec<u32>> = (0..d)
                .map(|i| sets.iter().map(|s| s[i]).collect())
                .collect();
            for c in &mut cols {
                c.sort_unstable();
            }
            for (k, path) in three.iter_mut().enumerate() {
                let e = FiniteSet::new((0..d).map(|i| cols[i][k]).collect()).expect("distinct");
                *path = LatticePath::from_east_set(n, &e).expect("positions within n");
            }
            let [l, mid, u] = three;
            (u, mid, l)
        })
        .collect()
}
