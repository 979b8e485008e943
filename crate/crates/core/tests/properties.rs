use proptest::prelude::*;

use lexcomplex::latpath::{
    composite_bijection, lower, marking_path, path_from_statistic, raise, statistic, weakly_above,
    LatticePath,
};
use lexcomplex::oracle::{standard_complex, standard_monomials, TermOrder};
use lexcomplex::stdcomplex::{
    lambda_table, lex_standard_complex_config, lex_standard_complex_matroid,
};
use lexcomplex::{FiniteSet, Matroid, PointConfig};

/// A path of length `n` with `d` east steps, from a shuffled position list.
fn path(n: usize, d: usize, seed: &[u32]) -> LatticePath {
    let mut pos: Vec<u32> = (1..=n as u32).collect();
    for (i, s) in seed.iter().enumerate().take(n) {
        let j = i + (*s as usize) % (n - i);
        pos.swap(i, j);
    }
    pos.truncate(d);
    LatticePath::from_east_set(n, &FiniteSet::new(pos).unwrap()).unwrap()
}

/// Three ordered paths `U ≥ C ≥ L` in `L(n,d)`.
fn triple() -> impl Strategy<Value = (LatticePath, LatticePath, LatticePath)> {
    (1usize..=12)
        .prop_flat_map(|n| (Just(n), 0..=n, prop::collection::vec(any::<u32>(), 36)))
        .prop_map(|(n, d, seed)| {
            let ps = [
                path(n, d, &seed[..12]),
                path(n, d, &seed[12..24]),
                path(n, d, &seed[24..]),
            ];
            let sets: Vec<Vec<u32>> = ps
                .iter()
                .map(|p| p.east_set().as_slice().to_vec())
                .collect();
            let mut out: Vec<Vec<u32>> = vec![Vec::new(); 3];
            for i in 0..d {
                let mut col: Vec<u32> = sets.iter().map(|s| s[i]).collect();
                col.sort_unstable();
                for k in 0..3 {
                    out[k].push(col[k]);
                }
            }
            let mk = |v: &Vec<u32>| {
                LatticePath::from_east_set(n, &FiniteSet::new(v.clone()).unwrap()).unwrap()
            };
            (mk(&out[2]), mk(&out[1]), mk(&out[0]))
        })
}

fn config() -> impl Strategy<Value = PointConfig> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::btree_set(prop::collection::vec(any::<bool>(), n), 1..=20).prop_map(
            move |pts| {
                PointConfig::new(
                    FiniteSet::interval(1, n as u32).unwrap(),
                    pts.into_iter().collect(),
                )
                .unwrap()
            },
        )
    })
}

fn transversal() -> impl Strategy<Value = Matroid> {
    (2u32..=7).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(1..=n, 1..=n as usize), 1..=4).prop_map(
            move |sets| {
                let sets: Vec<FiniteSet> = sets
                    .into_iter()
                    .map(|s| FiniteSet::new(s.into_iter().collect()).unwrap())
                    .collect();
                Matroid::transversal(FiniteSet::interval(1, n).unwrap(), &sets).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn statistic_is_a_subset_of_the_east_steps((_u, c, l) in triple()) {
        let st = statistic(&c, &l).unwrap();
        prop_assert!(st.is_subset(&c.east_set()));
        let marked = marking_path(&c, &l).unwrap().marked();
        prop_assert_eq!(st.union(&marked), c.east_set());
    }

    #[test]
    fn reconstruction_inverts_the_statistic((_u, c, l) in triple()) {
        let st = statistic(&c, &l).unwrap();
        let back = path_from_statistic(&st, c.len(), c.east_count(), &l).unwrap();
        prop_assert_eq!(back, Some(c));
    }

    #[test]
    fn raise_and_lower_are_inverse((_u, c, l) in triple()) {
        // Raising needs room: compare against L extended by one east step.
        let n = c.len();
        if c.east_count() < n {
            let lo = LatticePath::trivial_lower(n, n);
            if let Ok(up) = raise(&c, &lo) {
                prop_assert_eq!(up.east_count(), c.east_count() + 1);
                prop_assert_eq!(statistic(&up, &lo).unwrap(), statistic(&c, &lo).unwrap());
                prop_assert_eq!(lower(&up, &lo).unwrap(), c.clone());
            }
        }
        if let Ok(down) = lower(&c, &l) {
            prop_assert_eq!(statistic(&down, &l).unwrap(), statistic(&c, &l).unwrap());
        }
    }

    #[test]
    fn composite_bijection_lands_between_dual_boundaries((u, c, l) in triple()) {
        let img = composite_bijection(&u, &l, &c).unwrap();
        prop_assert!(weakly_above(&l.dual(), &img).unwrap());
        prop_assert!(weakly_above(&img, &u.dual()).unwrap());
        prop_assert_eq!(statistic(&img, &u.dual()).unwrap(), statistic(&c, &l).unwrap());
    }

    #[test]
    fn oracle_matches_recursion_and_reflection(v in config()) {
        let rec = lex_standard_complex_config(&v);
        let lex = standard_complex(&v, TermOrder::Lex).unwrap();
        prop_assert_eq!(&rec, &lex);
        prop_assert_eq!(lex.len(), v.len());
        prop_assert!(lex.is_downward_closed());
        for i in v.coords().iter() {
            prop_assert_eq!(&standard_complex(&v.reflect(i).unwrap(), TermOrder::Lex).unwrap(), &lex);
        }
        prop_assert_eq!(standard_monomials(&v, TermOrder::Grlex).unwrap().len(), v.len());
    }

    #[test]
    fn transversal_matroids_behave(m in transversal()) {
        let s = lex_standard_complex_matroid(&m);
        prop_assert_eq!(s.len(), m.num_bases());
        prop_assert_eq!(&s, &lex_standard_complex_matroid(&m.dual()));
        prop_assert_eq!(&s, &standard_complex(&m.basis_configuration(), TermOrder::Lex).unwrap());
        let t = lambda_table(&m);
        prop_assert!(t.is_injective());
        prop_assert_eq!(t.image(), s);
        prop_assert!(Matroid::from_bases(m.groundset().clone(), m.bases().to_vec()).is_ok());
    }
}
