//! Invariant suite over a corpus. Each check returns the number of instances
//! examined and a sorted list of counterexamples.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::config::PointConfig;
use crate::corpus::{random_triples, CorpusSpec, MAX_SWEEP_N};
use crate::error::{Error, Result};
use crate::latpath::{
    all_paths, boundary_pairs, hook_placement, lpm_unvalidated, paths_between, statistic,
    statistic_trivial_scan, LatticePath, Step,
};
use crate::matroid::Matroid;
use crate::oracle::{self, TermOrder, MAX_ORACLE_COORDS};
use crate::set::FiniteSet;
use crate::stdcomplex::{lex_standard_complex_config, LexMemo};

/// Counterexamples kept per invariant.
const MAX_DUMPS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub counterexamples: Vec<String>,
}

impl InvariantResult {
    fn collect(name: &'static str, checked: usize, mut failures: Vec<String>) -> Self {
        failures.sort();
        let count = failures.len();
        failures.truncate(MAX_DUMPS);
        InvariantResult {
            name,
            checked,
            failures: count,
            counterexamples: failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for InvariantResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checked", self.name, self.checked)?;
        if !self.passed() {
            write!(f, ", {} failed", self.failures)?;
        }
        write!(f, ")")?;
        for c in &self.counterexamples {
            write!(f, "\n    {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub matroids: usize,
    pub configs: usize,
    pub results: Vec<InvariantResult>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.results.iter().all(InvariantResult::passed)
    }
}

/// Refuses corpora beyond the exhaustive and oracle limits.
pub fn check_limits(spec: &CorpusSpec) -> Result<()> {
    let sweep = spec
        .families
        .iter()
        .map(|f| match f {
            crate::corpus::Family::Uniform { max_n }
            | crate::corpus::Family::LatticePath { max_n }
            | crate::corpus::Family::Transversal { max_n, .. } => *max_n,
            crate::corpus::Family::Bases { groundset, .. } => groundset.len(),
        })
        .chain([
            spec.lpm_sweep_n,
            spec.decomposition_n,
            spec.trivial_n,
            spec.restriction_n,
        ])
        .max()
        .unwrap_or(0);
    if sweep > MAX_SWEEP_N {
        return Err(Error::ResourceLimit(format!(
            "n = {sweep} exceeds the sweep limit {MAX_SWEEP_N}"
        )));
    }
    if let Some(c) = &spec.configs {
        if c.max_n > MAX_ORACLE_COORDS {
            return Err(Error::TooManyCoordinates(c.max_n));
        }
    }
    Ok(())
}

pub fn run(spec: &CorpusSpec) -> Result<Summary> {
    check_limits(spec)?;
    let matroids = spec.matroids()?;
    let configs = spec.configs();
    let memo = LexMemo::new();
    let results = vec![
        check_oracle_equivalence(&matroids, &memo),
        check_cardinality(&matroids, &memo),
        check_subcomplex(&matroids, &memo),
        check_duality(&matroids, &memo),
        check_lambda_axioms(&matroids, &memo),
        check_reflection(&configs),
        check_statistic_lambda(spec.lpm_sweep_n),
        check_trivial_equivalence(spec.trivial_n),
        check_restriction(&random_triples(
            spec.restriction_triples,
            spec.restriction_n,
            spec.seed,
        )),
        check_decomposition(spec.decomposition_n),
    ];
    Ok(Summary {
        matroids: matroids.len(),
        configs: configs.len(),
        results,
    })
}

fn describe(m: &Matroid) -> String {
    let bases: Vec<String> = m.bases().iter().map(|b| b.to_string()).collect();
    format!("M on {} with bases [{}]", m.groundset(), bases.join(" "))
}

/// Recursion output equals the greedy Gröbner oracle on `V_M`.
pub fn check_oracle_equivalence(ms: &[Matroid], memo: &LexMemo) -> InvariantResult {
    let failures = ms
        .par_iter()
        .filter_map(|m| {
            let rec = memo.complex(m);
            match oracle::standard_complex(&m.basis_configuration(), TermOrder::Lex) {
                Ok(o) if o == *rec => None,
                Ok(o) => Some(format!("{}: recursion {} oracle {}", describe(m), rec, o)),
                Err(e) => Some(format!("{}: oracle error {e}", describe(m))),
            }
        })
        .collect();
    InvariantResult::collect("oracle equivalence", ms.len(), failures)
}

/// `|S_lex(M)| = |B(M)|`.
pub fn check_cardinality(ms: &[Matroid], memo: &LexMemo) -> InvariantResult {
    let failures = ms
        .par_iter()
        .filter_map(|m| {
            let s = memo.complex(m);
            (s.len() != m.num_bases()).then(|| format!("{}: {} faces", describe(m), s.len()))
        })
        .collect();
    InvariantResult::collect("cardinality", ms.len(), failures)
}

/// `S_lex(M) ⊆ I(M)`.
pub fn check_subcomplex(ms: &[Matroid], memo: &LexMemo) -> InvariantResult {
    let failures = ms
        .par_iter()
        .filter_map(|m| {
            let s = memo.complex(m);
            let bad = s.iter().find(|f| !m.is_independent(f));
            bad.map(|f| format!("{}: dependent face {f}", describe(m)))
        })
        .collect();
    InvariantResult::collect("subcomplex of independence complex", ms.len(), failures)
}

/// `S_lex(M) = S_lex(M*)`.
pub fn check_duality(ms: &[Matroid], memo: &LexMemo) -> InvariantResult {
    let failures = ms
        .par_iter()
        .filter_map(|m| {
            let (a, b) = (memo.complex(m), memo.complex(&m.dual()));
            (a != b).then(|| format!("{}: {} vs dual {}", describe(m), a, b))
        })
        .collect();
    InvariantResult::collect("duality", ms.len(), failures)
}

/// `Λ_M` is a bijection onto `S_lex(M)` with `Λ(B) ⊆ B` and the two
/// restriction identities for `m = m(M)`.
pub fn check_lambda_axioms(ms: &[Matroid], memo: &LexMemo) -> InvariantResult {
    let failures = ms
        .par_iter()
        .flat_map_iter(|m| {
            let mut out = Vec::new();
            let table = memo.table(m);
            if table.image() != *memo.complex(m) || !table.is_injective() {
                out.push(format!("{}: not a bijection onto S_lex", describe(m)));
            }
            let top = m.max_element().ok();
            let del = top.map(|t| memo.table(&m.delete(t).expect("in groundset")));
            let con = top.map(|t| memo.table(&m.contract(t).expect("in groundset")));
            for (b, face) in table.iter() {
                if !face.is_subset(b) {
                    out.push(format!("{}: Λ({b}) = {face} ⊄ B", describe(m)));
                }
                let (Some(t), Some(del), Some(con)) = (top, &del, &con) else {
                    continue;
                };
                let ok = if b.contains(t) {
                    con.get(&b.without(t)) == Some(&face.without(t))
                } else {
                    del.get(b) == Some(face)
                };
                if !ok {
                    out.push(format!("{}: restriction fails at {b}", describe(m)));
                }
            }
            out
        })
        .collect();
    InvariantResult::collect("lambda axioms", ms.len(), failures)
}

/// `S_lex(V) = S_lex(T_i(V))` for every coordinate, both by the oracle, and
/// the oracle agrees with the slice recursion on `V`.
pub fn check_reflection(configs: &[PointConfig]) -> InvariantResult {
    let checked = configs.iter().map(|c| c.coords().len()).sum();
    let failures = configs
        .par_iter()
        .flat_map_iter(|v| {
            let mut out = Vec::new();
            let base = match oracle::standard_complex(v, TermOrder::Lex) {
                Ok(s) => s,
                Err(e) => return vec![format!("{v:?}: oracle error {e}")],
            };
            if base != lex_standard_complex_config(v) {
                out.push(format!("{v:?}: oracle and recursion differ"));
            }
            for i in v.coords().iter() {
                let t = v.reflect(i).expect("coordinate of the configuration");
                match oracle::standard_complex(&t, TermOrder::Lex) {
                    Ok(s) if s == base => {}
                    Ok(s) => out.push(format!("{v:?}: reflecting {i} gives {s}, not {base}")),
                    Err(e) => out.push(format!("{v:?}: oracle error {e}")),
                }
            }
            out
        })
        .collect();
    InvariantResult::collect("reflection", checked, failures)
}

/// `st_L(C) = Λ_{M[U,L]}(E(C))` for every boundary pair with `n ≤ max_n`.
pub fn check_statistic_lambda(max_n: usize) -> InvariantResult {
    let memo = LexMemo::new();
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let pairs = boundary_pairs(n);
        let (c, f): (Vec<usize>, Vec<Vec<String>>) = pairs
            .par_iter()
            .map(|(u, l)| {
                let m = lpm_unvalidated(u, l).expect("U weakly above L");
                let table = memo.table(&m);
                let mut bad = Vec::new();
                let paths = paths_between(u, l).expect("U weakly above L");
                for c in &paths {
                    let st = statistic(c, l);
                    let lambda = table.get(&c.east_set());
                    if st.as_ref().ok() != lambda {
                        bad.push(format!("U={u} L={l} C={c}: st {st:?} Λ {lambda:?}"));
                    }
                }
                (paths.len(), bad)
            })
            .unzip();
        checked += c.iter().sum::<usize>();
        failures.extend(f.into_iter().flatten());
        // Tables for n−1 are no longer needed once n is done.
        memo.clear();
    }
    InvariantResult::collect("statistic equals lambda", checked, failures)
}

/// Scan rule, hook placement and the general marking path agree at the
/// trivial lower boundary.
pub fn check_trivial_equivalence(max_n: usize) -> InvariantResult {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        for d in 0..=n {
            let lower = LatticePath::trivial_lower(n, d);
            for c in all_paths(n, d) {
                checked += 1;
                let (scan, hooks) = (statistic_trivial_scan(&c), hook_placement(&c));
                let general = statistic(&c, &lower);
                if scan != hooks || general.as_ref() != Ok(&scan) {
                    failures.push(format!(
                        "C={c}: scan {scan} hooks {hooks} general {general:?}"
                    ));
                }
            }
        }
    }
    InvariantResult::collect("trivial boundary equivalence", checked, failures)
}

/// For `L ≤ U' ≤ U`, `Λ_{M[U',L]}` is the restriction of `Λ_{M[U,L]}` and
/// `S_lex(M[U',L]) ⊆ S_lex(M[U,L])`.
pub fn check_restriction(triples: &[(LatticePath, LatticePath, LatticePath)]) -> InvariantResult {
    let failures = triples
        .par_iter()
        .flat_map_iter(|(u, mid, l)| {
            let memo = LexMemo::new();
            let big = lpm_unvalidated(u, l).expect("U weakly above L");
            let small = lpm_unvalidated(mid, l).expect("U' weakly above L");
            let (tb, ts) = (memo.table(&big), memo.table(&small));
            let mut out = Vec::new();
            for (b, face) in ts.iter() {
                if tb.get(b) != Some(face) {
                    out.push(format!("U={u} U'={mid} L={l}: Λ differs at {b}"));
                }
            }
            if !memo.complex(&small).is_subcomplex_of(&memo.complex(&big)) {
                out.push(format!("U={u} U'={mid} L={l}: not a subcomplex"));
            }
            out
        })
        .collect();
    InvariantResult::collect("restriction", triples.len(), failures)
}

fn statistics(u: &LatticePath, l: &LatticePath) -> BTreeSet<FiniteSet> {
    paths_between(u, l)
        .expect("U weakly above L")
        .iter()
        .map(|c| statistic(c, l).expect("C between U and L"))
        .collect()
}

/// The statistic sets satisfy `S = S^e ∪ S^n ∪ n ∗ (S^e ∩ S^n)`, where the
/// parts come from the truncated boundaries.
pub fn check_decomposition(max_n: usize) -> InvariantResult {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let pairs = boundary_pairs(n);
        checked += pairs.len();
        let bad: Vec<String> = pairs
            .par_iter()
            .filter_map(|(u, l)| {
                let whole = statistics(u, l);
                let part = |step: Step, present: bool| {
                    if !present {
                        return BTreeSet::new();
                    }
                    let uo = u.remove_last(step).expect("step occurs");
                    let lo = l.remove_last(step).expect("step occurs");
                    statistics(&uo, &lo)
                };
                let east = part(Step::East, u.last() == Some(Step::East));
                let north = part(Step::North, l.last() == Some(Step::North));
                let mut rebuilt: BTreeSet<FiniteSet> = east.union(&north).cloned().collect();
                rebuilt.extend(east.intersection(&north).map(|s| s.with(n as u32)));
                (rebuilt != whole).then(|| format!("U={u} L={l}"))
            })
            .collect();
        failures.extend(bad);
    }
    InvariantResult::collect("decomposition", checked, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_passes() {
        let summary = run(&CorpusSpec::small()).unwrap();
        for r in &summary.results {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn refuses_large_sweeps() {
        let spec = CorpusSpec {
            lpm_sweep_n: 13,
            ..CorpusSpec::small()
        };
        assert!(matches!(run(&spec), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn failures_are_sorted_and_dumped() {
        let fails = (0..8).rev().map(|i| format!("case {i}")).collect();
        let r = InvariantResult::collect("demo", 10, fails);
        assert!(!r.passed());
        assert_eq!(r.failures, 8);
        assert_eq!(r.counterexamples.len(), MAX_DUMPS);
        assert_eq!(r.counterexamples[0], "case 0");
        assert!(r
            .to_string()
            .starts_with("FAIL demo (10 checked, 8 failed)"));
    }

    #[test]
    fn corrupted_basis_list_is_an_input_error() {
        let spec = CorpusSpec {
            families: vec![crate::corpus::Family::Bases {
                groundset: vec![1, 2, 3, 4],
                bases: vec![vec![1, 2], vec![3, 4]],
            }],
            ..CorpusSpec::small()
        };
        assert!(matches!(run(&spec), Err(Error::ExchangeViolation { .. })));
        let m = Matroid::uniform(3, 1, 1).unwrap();
        assert!(check_duality(&[m], &LexMemo::new()).passed());
    }
}
