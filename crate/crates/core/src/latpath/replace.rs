//! Replacement bijections between paths with equal statistic, and
//! reconstruction of a path from its statistic.

use std::collections::HashSet;

use super::marking::marking_path;
use super::{extend_pair, statistic, weakly_above, LatticePath, Statistic, Step};
use crate::error::{Error, Result};
use crate::set::FiniteSet;

/// Turns the last north step of `path` that starts on its marking path into
/// an east step. The statistic is unchanged.
///
/// `lower` must have more east steps than `path`; otherwise the marking
/// path always ends at the endpoint of `path` and nothing can be raised.
pub fn raise(path: &LatticePath, lower: &LatticePath) -> Result<LatticePath> {
    let marking = marking_path(path, lower)?;
    let on_marking: HashSet<(usize, usize)> = marking.points().into_iter().collect();
    if on_marking.contains(&path.endpoint()) {
        return Err(Error::RaiseImpossible);
    }
    let points = path.points();
    let index = path
        .steps()
        .iter()
        .enumerate()
        .rev()
        .find(|(i, s)| **s == Step::North && on_marking.contains(&points[*i]))
        .map(|(i, _)| i)
        .ok_or(Error::RaiseImpossible)?;
    Ok(path.with_step_flipped(index))
}

/// Turns the last marked east step of `path` into a north step; inverse of
/// [`raise`].
pub fn lower(path: &LatticePath, lower: &LatticePath) -> Result<LatticePath> {
    let marked = marking_path(path, lower)?.marked();
    let pos = marked.largest().ok_or(Error::LowerImpossible)?;
    Ok(path.with_step_flipped(pos as usize - 1))
}

/// The unique path in `L(n,d)` weakly above `lower` (padded sense) whose
/// statistic is `stat`, if any.
///
/// `lower` lies in `L(n,d')`. Starting from the path whose east steps are
/// exactly `stat`, such paths exist for `d` in a contiguous range
/// `ℓ..=ℓ+k` and are reached by repeated [`raise`].
pub fn path_from_statistic(
    stat: &FiniteSet,
    n: usize,
    d: usize,
    lower: &LatticePath,
) -> Result<Option<LatticePath>> {
    if lower.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "lower boundary {lower} does not have length {n}"
        )));
    }
    let base = LatticePath::from_east_set(n, stat)?;
    let ell = stat.len();
    if d < ell || d > lower.east_count() || extend_pair(&base, lower).is_err() {
        return Ok(None);
    }
    if statistic(&base, lower)? != *stat {
        return Ok(None);
    }
    let top = n - ell;
    let slack = marking_path(&base, lower)?
        .points()
        .into_iter()
        .filter(|&(_, y)| y == top)
        .map(|(x, _)| x - ell)
        .min()
        .expect("the marking path ends at height n-ℓ");
    if d > ell + slack {
        return Ok(None);
    }
    let mut path = base;
    for _ in ell..d {
        path = raise(&path, lower)?;
    }
    Ok(Some(path))
}

/// Sends `C ∈ P[U,L]` to the unique `C' ∈ P[L*,U*]` with
/// `st_{U*}(C') = st_L(C)`.
pub fn composite_bijection(
    upper: &LatticePath,
    lower: &LatticePath,
    path: &LatticePath,
) -> Result<LatticePath> {
    if !weakly_above(upper, path)? || !weakly_above(path, lower)? {
        return Err(Error::NotWeaklyAbove {
            upper: upper.word(),
            lower: lower.word(),
        });
    }
    let stat: Statistic = statistic(path, lower)?;
    let n = path.len();
    let dual_lower = upper.dual();
    path_from_statistic(&stat, n, n - path.east_count(), &dual_lower)?
        .ok_or(Error::NoPathForStatistic { stat })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fset;
    use crate::latpath::{paths_between, statistic_trivial_scan};

    fn p(w: &str) -> LatticePath {
        LatticePath::parse(w).unwrap()
    }

    const FIG4: [&str; 5] = [
        "n n e n e n n e n e n n e n n e e n",
        "e n e n e n n e n e n n e n n e e n",
        "e n e n e e n e n e n n e n n e e n",
        "e n e n e e n e n e e n e n n e e n",
        "e n e n e e n e n e e n e n n e e e",
    ];

    #[test]
    fn raise_walks_the_fig4_family() {
        let lo = LatticePath::trivial_lower(18, 18);
        for pair in FIG4.windows(2) {
            let (a, b) = (p(pair[0]), p(pair[1]));
            assert_eq!(raise(&a, &lo).unwrap(), b);
            assert_eq!(lower(&b, &lo).unwrap(), a);
            assert_eq!(statistic_trivial_scan(&a), statistic_trivial_scan(&b));
        }
        // d = 11 = n − ℓ: the marking path reaches the endpoint.
        assert_eq!(raise(&p(FIG4[4]), &lo), Err(Error::RaiseImpossible));
        // d = 7 = ℓ: nothing is marked.
        assert_eq!(lower(&p(FIG4[0]), &lo), Err(Error::LowerImpossible));
    }

    #[test]
    fn raise_on_nontrivial_lower_boundaries() {
        let l = p("e e e n e e e n n e n e e n n n n e e n n");
        let before = p("n n n e e e n e n n e n n e n n n e e n n");
        let after = p("n n n e e e n e e n e n n e n n n e e n n");
        assert_eq!(raise(&before, &l).unwrap(), after);
        assert_eq!(lower(&after, &l).unwrap(), before);

        let l = p("e e n n e n e e e n e e e e n n");
        let before = p("n n e n n n e n n e e n n n e e");
        let after = p("e n e n n n e n n e e n n n e e");
        assert_eq!(raise(&before, &l).unwrap(), after);
        assert_eq!(lower(&after, &l).unwrap(), before);
        assert_eq!(statistic(&before, &l).unwrap(), fset![3, 7, 10, 11, 15, 16]);
        assert_eq!(statistic(&after, &l).unwrap(), fset![3, 7, 10, 11, 15, 16]);
    }

    #[test]
    fn fig4_family_from_statistic() {
        let stat = fset![3, 5, 8, 10, 13, 16, 17];
        let lo = LatticePath::trivial_lower(18, 18);
        for d in 0..=18 {
            let got = path_from_statistic(&stat, 18, d, &lo).unwrap();
            match d {
                7..=11 => assert_eq!(got, Some(p(FIG4[d - 7])), "d={d}"),
                _ => assert_eq!(got, None, "d={d}"),
            }
        }
    }

    #[test]
    fn statistic_reconstruction_edge_cases() {
        // E = "en" has statistic ∅, not {1}.
        let lo = LatticePath::trivial_lower(2, 1);
        assert_eq!(path_from_statistic(&fset![1], 2, 1, &lo).unwrap(), None);
        // Empty statistic at d = 0 is the all-north path.
        let lo = LatticePath::trivial_lower(4, 0);
        assert_eq!(
            path_from_statistic(&fset![], 4, 0, &lo).unwrap(),
            Some(p("nnnn"))
        );
        assert!(path_from_statistic(&fset![1], 3, 1, &p("en")).is_err());
    }

    #[test]
    fn running_example_reconstruction() {
        let l = p("e e e n e e e n n e n e e n n n n e e n n");
        let stat = fset![4, 5, 6, 8, 11, 14, 18, 19];
        let found: Vec<_> = (0..=11)
            .filter_map(|d| {
                path_from_statistic(&stat, 21, d, &l)
                    .unwrap()
                    .map(|c| (d, c))
            })
            .collect();
        assert_eq!(
            found.iter().map(|(d, _)| *d).collect::<Vec<_>>(),
            vec![8, 9, 10, 11]
        );
        assert_eq!(found[3].1, p("n n n e e e n e e n e n n e n n n e e e e"));
    }

    #[test]
    fn composite_bijection_small_cases() {
        // U = L: the only path maps to L* = U*.
        let c = p("enne");
        assert_eq!(composite_bijection(&c, &c, &c).unwrap(), c.dual());

        let (u, l) = (p("enen"), p("eenn"));
        let paths = paths_between(&u, &l).unwrap();
        let (ud, ld) = (u.dual(), l.dual());
        let images: Vec<_> = paths
            .iter()
            .map(|c| composite_bijection(&u, &l, c).unwrap())
            .collect();
        let mut expected = paths_between(&ld, &ud).unwrap();
        let mut sorted = images.clone();
        sorted.sort_by_key(|c| c.word());
        expected.sort_by_key(|c| c.word());
        assert_eq!(sorted, expected);
        for (c, img) in paths.iter().zip(&images) {
            assert_eq!(statistic(c, &l).unwrap(), statistic(img, &ud).unwrap());
        }
        assert_eq!(composite_bijection(&u, &l, &l).unwrap(), ud);
        assert_eq!(composite_bijection(&u, &l, &u).unwrap(), ld);
    }
}
