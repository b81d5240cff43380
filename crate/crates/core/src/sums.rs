//! Exhaustive generating-function sums over whole families.
//!
//! Every sum folds a per-tableau weight into a small table of `u128`
//! counters. With the `parallel` feature the stream is cut into prefix
//! sub-streams folded on the rayon pool; the `_seq` variants always run on
//! the calling thread and serve as the reference.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

use crate::enumerate::Enumeration;
use crate::error::{Error, Result};
use crate::grid::{EvenExtended, Kind, OddExtended, Tableau};
use crate::poly::Poly;
use crate::stats::{bar_inv, inv, tilde_inv, OddPathReport, PathReport};

/// A fixed-size table of counters indexed by `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Table {
    cols: usize,
    cells: Vec<u128>,
}

impl Table {
    fn new(rows: usize, cols: usize) -> Self {
        Table {
            cols,
            cells: vec![0; rows * cols],
        }
    }

    fn add(&mut self, a: usize, b: usize, w: u128) {
        let c = &mut self.cells[a * self.cols + b];
        *c = c.checked_add(w).expect("u128 counter overflow");
    }

    #[cfg(feature = "parallel")]
    fn merge(mut self, other: Table) -> Table {
        for (a, b) in self.cells.iter_mut().zip(other.cells) {
            *a = a.checked_add(b).expect("u128 counter overflow");
        }
        self
    }

    fn get(&self, a: usize, b: usize) -> u128 {
        self.cells[a * self.cols + b]
    }
}

fn fold_seq(e: &Enumeration, shape: (usize, usize), f: &(impl Fn(&Tableau, &mut Table) + Sync)) -> Table {
    let mut acc = Table::new(shape.0, shape.1);
    for t in e.iter() {
        f(&t, &mut acc);
    }
    acc
}

#[cfg(feature = "parallel")]
fn fold(e: &Enumeration, shape: (usize, usize), f: &(impl Fn(&Tableau, &mut Table) + Sync)) -> Table {
    use rayon::prelude::*;
    let parts = e.split(8 * rayon::current_num_threads());
    parts
        .par_iter()
        .map(|p| {
            let mut acc = Table::new(shape.0, shape.1);
            for t in e.iter_prefix(p) {
                f(&t, &mut acc);
            }
            acc
        })
        .reduce(|| Table::new(shape.0, shape.1), Table::merge)
}

#[cfg(not(feature = "parallel"))]
fn fold(e: &Enumeration, shape: (usize, usize), f: &(impl Fn(&Tableau, &mut Table) + Sync)) -> Table {
    fold_seq(e, shape, f)
}

fn poly_of(t: &Table, row: usize) -> Poly {
    Poly::from_coeffs((0..t.cols).map(|k| BigInt::from(t.get(row, k))).collect())
}

fn even_weight(t: &Tableau, acc: &mut Table) {
    let t = EvenExtended::new_unchecked(t.clone());
    let r = PathReport::new(&t);
    acc.add(0, r.max, 1u128 << (r.fr - 1 - r.max));
}

fn odd_weight(t: &Tableau, acc: &mut Table) {
    let t = OddExtended::new_unchecked(t.clone());
    let r = OddPathReport::new(&t);
    acc.add(r.v, r.g, 1u128 << (r.fr - r.g));
}

fn even_sum(n: usize, seq: bool) -> Result<Poly> {
    let e = Enumeration::new(Kind::EvenExtended, n)?;
    let shape = (1, n);
    let t = if seq { fold_seq(&e, shape, &even_weight) } else { fold(&e, shape, &even_weight) };
    Ok(poly_of(&t, 0))
}

/// `E_n(x) = sum over T_n^e of 2^{fr - 1 - max} x^max`, which equals `P_n(x)`.
pub fn e_poly(n: usize) -> Result<Poly> {
    even_sum(n, false)
}

pub fn e_poly_seq(n: usize) -> Result<Poly> {
    even_sum(n, true)
}

fn odd_sum(n: usize, seq: bool) -> Result<Poly> {
    if n < 2 {
        return Err(Error::SizeTooSmall { min: 2, got: n });
    }
    let m = n - 1;
    let e = Enumeration::new(Kind::OddExtended, m)?;
    let shape = (m + 2, m + 2);
    let t = if seq { fold_seq(&e, shape, &odd_weight) } else { fold(&e, shape, &odd_weight) };
    let one_plus_x = Poly::linear(1);
    let mut out = Poly::zero();
    for v in 0..shape.0 {
        for g in 0..shape.1 {
            let c = t.get(v, g);
            if c != 0 {
                out = &out + &(&Poly::monomial(BigInt::from(c), v) * &one_plus_x.pow(g as u32));
            }
        }
    }
    Ok(out)
}

/// `sum over T_{n-1}^o of 2^{fr - g} x^v (1 + x)^g`, which equals `P_n(x)`.
pub fn odd_poly(n: usize) -> Result<Poly> {
    odd_sum(n, false)
}

pub fn odd_poly_seq(n: usize) -> Result<Poly> {
    odd_sum(n, true)
}

fn free_weight(t: &Tableau, acc: &mut Table) {
    acc.add(0, 0, 1u128 << t.free_count());
}

fn free_sum(kind: Kind, n: usize) -> Result<BigInt> {
    let e = Enumeration::new(kind, n)?;
    let t = fold(&e, (1, 1), &free_weight);
    Ok(BigInt::from(t.get(0, 0)))
}

/// `sum over T_n^e of 2^fr`, which counts `SDC_{2n}`.
pub fn even_free_sum(n: usize) -> Result<BigInt> {
    free_sum(Kind::EvenExtended, n)
}

/// `sum over T_n^o of 2^fr`, which counts `SDC_{2n+1}`.
pub fn odd_free_sum(n: usize) -> Result<BigInt> {
    free_sum(Kind::OddExtended, n)
}

/// Number of configurations of one kind and size.
pub fn count(kind: Kind, n: usize) -> Result<BigInt> {
    let e = Enumeration::new(kind, n)?;
    let t = fold(&e, (1, 1), &|_: &Tableau, acc: &mut Table| acc.add(0, 0, 1));
    Ok(BigInt::from(t.get(0, 0)))
}

/// The three inversion statistics and the families they run over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variety {
    /// `inv` over `DC_N`.
    #[serde(rename = "a")]
    Ordinary,
    /// `tilde_inv` over `SDC_N`.
    #[serde(rename = "sp")]
    Symplectic,
    /// `bar_inv` over `SDC_N`.
    #[serde(rename = "so")]
    Orthogonal,
}

impl FromStr for Variety {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Variety::Ordinary),
            "sp" => Ok(Variety::Symplectic),
            "so" => Ok(Variety::Orthogonal),
            _ => Err(Error::Parse(format!("unknown variety {s:?}"))),
        }
    }
}

/// Poincaré polynomial in `q`: the distribution of the variety's statistic.
pub fn poincare(variety: Variety, n: usize) -> Result<Poly> {
    let (kind, stat): (Kind, fn(&Tableau) -> usize) = match variety {
        Variety::Ordinary => (Kind::Dellac, inv),
        Variety::Symplectic => (Kind::Symmetric, tilde_inv),
        Variety::Orthogonal => (Kind::Symmetric, bar_inv),
    };
    let e = Enumeration::new(kind, n)?;
    // inv is at most the number of point pairs.
    let top = n * (2 * n - 1) + 1;
    let t = fold(&e, (1, top), &|t: &Tableau, acc: &mut Table| acc.add(0, stat(t), 1));
    Ok(poly_of(&t, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::p_poly;

    #[test]
    fn even_sum_matches_p() {
        for n in 1..=5 {
            assert_eq!(e_poly(n).unwrap(), p_poly(n).unwrap());
            assert_eq!(e_poly_seq(n).unwrap(), p_poly(n).unwrap());
        }
    }

    #[test]
    fn odd_sum_matches_p() {
        assert_eq!(odd_poly(3).unwrap(), Poly::from_i64s(&[5, 10, 6]));
        for n in 2..=5 {
            assert_eq!(odd_poly(n).unwrap(), p_poly(n).unwrap());
            assert_eq!(odd_poly_seq(n).unwrap(), p_poly(n).unwrap());
        }
    }

    #[test]
    fn free_sums_count_symmetric_configurations() {
        let even: Vec<BigInt> = (1..=4).map(|n| even_free_sum(n).unwrap()).collect();
        assert_eq!(even, [2, 10, 98, 1594].map(BigInt::from));
        let odd: Vec<BigInt> = (1..=3).map(|n| odd_free_sum(n).unwrap()).collect();
        assert_eq!(odd, [3, 21, 267].map(BigInt::from));
    }

    #[test]
    fn poincare_polynomials() {
        assert_eq!(poincare(Variety::Ordinary, 3).unwrap(), Poly::from_i64s(&[1, 2, 3, 1]));
        let sp: Vec<Poly> = (1..=4).map(|n| poincare(Variety::Symplectic, n).unwrap()).collect();
        assert_eq!(
            sp,
            [&[1][..], &[1, 1], &[1, 1, 1], &[1, 2, 3, 3, 1]].map(Poly::from_i64s)
        );
        let so: Vec<Poly> = (1..=4).map(|n| poincare(Variety::Orthogonal, n).unwrap()).collect();
        assert_eq!(so, [&[1][..], &[2], &[1, 2], &[2, 4, 4]].map(Poly::from_i64s));
    }
}
