//! Standard monomials of the vanishing ideal of a 0/1 configuration.
//!
//! This is the independent ground truth for the recursions in
//! [`crate::stdcomplex`]. Squarefree monomials are scanned in increasing term
//! order and a monomial is standard iff its evaluation vector on the points
//! is linearly independent (over ℚ) from the vectors of the monomials already
//! accepted. Linear algebra is exact: fraction-free elimination on integers,
//! promoted to arbitrary precision on overflow.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::set::FiniteSet;

/// Largest number of coordinates the oracle will enumerate monomials for.
pub const MAX_ORACLE_COORDS: usize = 24;

/// Squarefree monomial `x^τ`, identified with its support `τ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MonomialKey(pub FiniteSet);

impl MonomialKey {
    pub fn one() -> Self {
        MonomialKey(FiniteSet::empty())
    }

    pub fn support(&self) -> &FiniteSet {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for MonomialKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{x}")?;
        }
        Ok(())
    }
}

/// Term order on squarefree monomials. Variables are ranked by label with
/// the smallest label dominant (`x_1 ≻ x_2 ≻ ⋯`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    #[default]
    Lex,
    /// Total degree first, ties broken by lex.
    Grlex,
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(TermOrder::Lex),
            "grlex" => Ok(TermOrder::Grlex),
            other => Err(Error::Descriptor(format!("unknown term order {other:?}"))),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TermOrder::Lex => "lex",
            TermOrder::Grlex => "grlex",
        })
    }
}

fn lex_cmp(a: &FiniteSet, b: &FiniteSet) -> Ordering {
    // The smallest label in the symmetric difference decides; the side
    // holding it has the larger exponent there.
    let (mut i, mut j) = (0, 0);
    let (a, b) = (a.as_slice(), b.as_slice());
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(x), Some(y)) => match x.cmp(y) {
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            },
        }
    }
}

pub fn compare(order: TermOrder, a: &MonomialKey, b: &MonomialKey) -> Ordering {
    match order {
        TermOrder::Lex => lex_cmp(&a.0, &b.0),
        TermOrder::Grlex => a
            .degree()
            .cmp(&b.degree())
            .then_with(|| lex_cmp(&a.0, &b.0)),
    }
}

/// Same comparison on bitmasks over coordinate indices (bit 0 = smallest
/// label).
fn compare_masks(order: TermOrder, a: u32, b: u32) -> Ordering {
    let lex = || {
        let diff = a ^ b;
        if diff == 0 {
            Ordering::Equal
        } else if a >> diff.trailing_zeros() & 1 == 1 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    };
    match order {
        TermOrder::Lex => lex(),
        TermOrder::Grlex => a.count_ones().cmp(&b.count_ones()).then_with(lex),
    }
}

/// Rows of evaluation vectors of accepted monomials, kept so that every row
/// vanishes on the pivot columns of all earlier rows.
#[derive(Clone, Debug)]
pub struct EvalMatrix {
    width: usize,
    rows: Rows,
}

#[derive(Clone, Debug)]
enum Rows {
    Small(Vec<(usize, Vec<i64>)>),
    Big(Vec<(usize, Vec<BigInt>)>),
}

impl EvalMatrix {
    pub fn new(width: usize) -> Self {
        EvalMatrix {
            width,
            rows: Rows::Small(Vec::new()),
        }
    }

    pub fn rank(&self) -> usize {
        match &self.rows {
            Rows::Small(r) => r.len(),
            Rows::Big(r) => r.len(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn is_big(&self) -> bool {
        matches!(self.rows, Rows::Big(_))
    }

    /// Adds `v` as a row if it is independent of the current rows; returns
    /// whether it was added.
    pub fn insert_if_independent(&mut self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.width, "evaluation vector has wrong length");
        if v.iter().all(|x| *x == 0) {
            return false;
        }
        if let Rows::Small(rows) = &mut self.rows {
            match reduce_small(rows, v.to_vec()) {
                Some(Some(row)) => {
                    let pivot = row.iter().position(|x| *x != 0).unwrap();
                    rows.push((pivot, row));
                    return true;
                }
                Some(None) => return false,
                None => self.promote(),
            }
        }
        let Rows::Big(rows) = &mut self.rows else {
            unreachable!()
        };
        let mut w: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for (p, row) in rows.iter() {
            if w[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = w[*p].clone();
            for (wi, ri) in w.iter_mut().zip(row) {
                *wi = &a * &*wi - &b * ri;
            }
            normalize_big(&mut w);
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                rows.push((pivot, w));
                true
            }
            None => false,
        }
    }

    fn promote(&mut self) {
        if let Rows::Small(rows) = &self.rows {
            let big = rows
                .iter()
                .map(|(p, r)| (*p, r.iter().map(|&x| BigInt::from(x)).collect()))
                .collect();
            self.rows = Rows::Big(big);
        }
    }
}

/// `Some(Some(row))` if independent, `Some(None)` if dependent, `None` on
/// overflow.
fn reduce_small(rows: &[(usize, Vec<i64>)], mut w: Vec<i64>) -> Option<Option<Vec<i64>>> {
    for (p, row) in rows {
        let b = w[*p];
        if b == 0 {
            continue;
        }
        let a = row[*p];
        for (wi, &ri) in w.iter_mut().zip(row) {
            *wi = a.checked_mul(*wi)?.checked_sub(b.checked_mul(ri)?)?;
        }
        let g = w.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g > 1 {
            w.iter_mut().for_each(|x| *x /= g);
        }
    }
    Some(if w.iter().any(|x| *x != 0) {
        Some(w)
    } else {
        None
    })
}

fn normalize_big(w: &mut [BigInt]) {
    let g = w.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g.abs() != BigInt::from(1) {
        w.iter_mut().for_each(|x| *x /= &g);
    }
}

/// Standard monomials of `I(V)` in increasing term order.
pub fn standard_monomials(config: &PointConfig, order: TermOrder) -> Result<Vec<MonomialKey>> {
    let k = config.coords().len();
    if k > MAX_ORACLE_COORDS {
        return Err(Error::TooManyCoordinates(k));
    }
    if config.is_empty() {
        return Ok(Vec::new());
    }
    let points: Vec<u32> = config
        .points()
        .iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .filter(|(_, b)| **b)
                .fold(0u32, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let mut monomials: Vec<u32> = (0..1u32 << k).collect();
    monomials.sort_unstable_by(|&a, &b| compare_masks(order, a, b));

    let mut matrix = EvalMatrix::new(points.len());
    let mut accepted = Vec::with_capacity(points.len());
    let mut eval = vec![0i64; points.len()];
    for mono in monomials {
        for (e, &p) in eval.iter_mut().zip(&points) {
            *e = i64::from(mono & p == mono);
        }
        if matrix.insert_if_independent(&eval) {
            accepted.push(mono);
            if accepted.len() == points.len() {
                break;
            }
        }
    }
    let labels = config.coords().as_slice();
    Ok(accepted
        .into_iter()
        .map(|m| {
            MonomialKey(FiniteSet::from_sorted_unchecked(
                (0..k)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| labels[i])
                    .collect(),
            ))
        })
        .collect())
}

/// `S_≺(V)`: supports of the standard monomials.
pub fn standard_complex(config: &PointConfig, order: TermOrder) -> Result<SimplicialComplex> {
    let faces: BTreeSet<FiniteSet> = standard_monomials(config, order)?
        .into_iter()
        .map(|m| m.0)
        .collect();
    Ok(SimplicialComplex::from_closed(
        config.coords().clone(),
        faces,
    ))
}
