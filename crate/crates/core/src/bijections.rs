//! The maps between the configuration families.
//!
//! * [`even_expand`] / [`odd_expand`] turn a labeled extended configuration
//!   into a symmetric Dellac configuration, with inverses [`even_reduce`] and
//!   [`odd_reduce`].
//! * [`insert_point`] plots a point by its root.
//! * [`pi_forward`] is the surjection `T_n^e -> T_{n-1}^e`, with fibers built
//!   by [`pi_fiber`] and [`pi_preimage`].
//! * [`p_forward`] is the surjection `T_n^e -> T_{n-1}^o`, with fibers built
//!   by [`p_fiber`] over [`label_functions`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{
    Cell, DellacConfig, EvenExtended, LabeledEven, LabeledOdd, OddExtended, SymmetricDellac,
    Tableau,
};
use crate::stats::{forward_labels, nu_labels, root_unchecked, ForwardLabel, NuLabel, OddPathReport, PathReport};

fn integrity<T>(what: impl fmt::Display) -> Result<T> {
    Err(Error::Integrity(what.to_string()))
}

/// Labeled `T_n^e` to `SDC_{2n}`: a 0-labeled free point `(j:i)` moves to
/// `(2n+1-j : i)`, then the half-turn image of every point is added.
pub fn even_expand(l: &LabeledEven) -> Result<SymmetricDellac> {
    let t = l.base();
    let n = t.n();
    let (w, h) = (2 * n, 4 * n);
    let mut out = Tableau::empty(w, h);
    for p in t.points() {
        let col = if l.label(p) == Some(false) { w + 1 - p.col } else { p.col };
        out.set(Cell::new(col, p.row));
        out.set(Cell::new(w + 1 - col, h + 1 - p.row));
    }
    SymmetricDellac::new(out).or_else(|e| integrity(format!("even expansion is not symmetric Dellac: {e}")))
}

/// Inverse of [`even_expand`].
pub fn even_reduce(d: &DellacConfig) -> Result<LabeledEven> {
    if !d.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let size = d.n();
    if size % 2 != 0 {
        return Err(Error::Parse(format!("even reduction needs an even size, got {size}")));
    }
    let n = size / 2;
    let mut t = Tableau::empty(n, 2 * n);
    let mut labels = BTreeMap::new();
    for i in 1..=2 * n {
        let c = d.col(i).expect("Dellac rows are full");
        let (col, bit) = if c <= n { (c, true) } else { (size + 1 - c, false) };
        let p = Cell::new(col, i);
        t.set(p);
        if t.is_free(p) {
            labels.insert(p, bit);
        } else if !bit {
            return integrity(format!("mirrored point {p} is not free"));
        }
    }
    LabeledEven::new(EvenExtended::new(t)?, labels)
}

/// Labeled `T_n^o` to `SDC_{2n+1}`: as [`even_expand`] with the point
/// `(n+1 : e)` added on the empty row `e`.
pub fn odd_expand(l: &LabeledOdd) -> Result<SymmetricDellac> {
    let t = l.base();
    let n = t.n();
    let (w, h) = (2 * n + 1, 4 * n + 2);
    let mut out = Tableau::empty(w, h);
    let mut put = |p: Cell| {
        out.set(p);
        out.set(Cell::new(w + 1 - p.col, h + 1 - p.row));
    };
    for p in t.points() {
        let col = if l.label(p) == Some(false) { w + 1 - p.col } else { p.col };
        put(Cell::new(col, p.row));
    }
    put(Cell::new(n + 1, t.empty_row()));
    SymmetricDellac::new(out).or_else(|e| integrity(format!("odd expansion is not symmetric Dellac: {e}")))
}

/// Inverse of [`odd_expand`].
pub fn odd_reduce(d: &DellacConfig) -> Result<LabeledOdd> {
    if !d.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let size = d.n();
    if size % 2 != 1 || size < 3 {
        return Err(Error::Parse(format!("odd reduction needs an odd size of at least 3, got {size}")));
    }
    let n = size / 2;
    let mut t = Tableau::empty(n, 2 * n + 1);
    let mut labels = BTreeMap::new();
    for i in 1..=2 * n + 1 {
        let c = d.col(i).expect("Dellac rows are full");
        if c == n + 1 {
            continue;
        }
        let (col, bit) = if c <= n { (c, true) } else { (size + 1 - c, false) };
        let p = Cell::new(col, i);
        t.set(p);
        if t.is_free(p) {
            labels.insert(p, bit);
        } else if !bit {
            return integrity(format!("mirrored point {p} is not free"));
        }
    }
    LabeledOdd::new(OddExtended::new(t)?, labels)
}

/// Plots a point in column `j` at the row whose root is `target`.
///
/// Requires the root hypotheses for column `j`: rows `1..j` hold points on or
/// right of the diagonal, columns `1..j` are full.
pub fn insert_point(t: &Tableau, j: usize, target: usize) -> Result<(Tableau, Cell)> {
    let h = t.height();
    let want = Cell::new(j, target);
    if j == 0 || j > t.width() || !((target >= j && target + j <= h) || target == h) {
        return Err(Error::NoInsertionRow { target: want });
    }
    let cols = t.columns();
    for r in 1..j {
        if !t.col(r).is_some_and(|c| c <= r) {
            return Err(Error::RootHypothesis {
                col: j,
                reason: format!("row {r} lacks a point on or right of the diagonal"),
            });
        }
    }
    for c in 1..j {
        if cols.count(c) != 2 {
            return Err(Error::RootHypothesis {
                col: j,
                reason: format!("column {c} does not hold two points"),
            });
        }
    }
    let row = (j..=h)
        .filter(|&i| t.col(i).is_none_or(|c| c >= j))
        .find(|&i| root_unchecked(&cols, h, j, i) == target)
        .ok_or(Error::NoInsertionRow { target: want })?;
    if t.col(row).is_some() {
        return Err(Error::RowOccupied { target: want, row });
    }
    let mut out = t.clone();
    let cell = Cell::new(j, row);
    out.set(cell);
    Ok((out, cell))
}

/// `Π(T)` together with the set `X_T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiImage {
    pub tableau: EvenExtended,
    pub x: Vec<Cell>,
}

fn forward_target(label: ForwardLabel, j: usize, n: usize) -> usize {
    match label {
        ForwardLabel::Beta => n - 1,
        ForwardLabel::Rho => 2 * n - 2,
        ForwardLabel::Gamma => j,
    }
}

/// `Π : T_n^e -> T_{n-1}^e` and the set `X_T` of points inserted from `Max(T)`.
pub fn pi_forward(t: &EvenExtended) -> Result<PiImage> {
    let n = t.n();
    if n < 2 {
        return Err(Error::SizeTooSmall { min: 2, got: n });
    }
    let rep = PathReport::new(t);
    let primed = rep.primed.as_ref().expect("n >= 2");
    let labels = forward_labels(t, &rep);
    let max = rep.max_set();
    let gone = |p: &Cell| {
        rep.blue.contains(p)
            || rep.red.contains(p)
            || rep.green.contains(p)
            || primed.blue.contains(p)
            || primed.red.contains(p)
            || primed.green.contains(p)
    };
    let mut base = Tableau::empty(n - 1, 2 * n - 2);
    for p in t.points().filter(|p| !gone(p)) {
        if p.col == n || p.row == n || p.row == n + 1 {
            return integrity(format!("point {p} survives the deletion step"));
        }
        let row = if p.row < n { p.row } else { p.row - 2 };
        base.set(Cell::new(p.col, row));
    }
    let mut x = Vec::new();
    for j in 1..n {
        let mut todo: Vec<(usize, Cell)> = labels
            .iter()
            .filter(|(p, _)| p.col == j)
            .map(|&(p, l)| (forward_target(l, j, n), p))
            .collect();
        todo.sort();
        for (target, p) in todo {
            let (next, cell) = insert_point(&base, j, target)?;
            base = next;
            if max.contains(&p) {
                x.push(cell);
            }
        }
    }
    x.sort();
    let tableau = EvenExtended::new(base).or_else(|e| integrity(format!("Π produced an invalid tableau: {e}")))?;
    Ok(PiImage { tableau, x })
}

/// Labels on `Omax(T_0)` used to rebuild a preimage under `Π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FiberLabel {
    #[serde(rename = "b")]
    Blue,
    #[serde(rename = "r")]
    Red,
    #[serde(rename = "g")]
    Green,
    #[serde(rename = "b'")]
    BluePrime,
    #[serde(rename = "r'")]
    RedPrime,
    #[serde(rename = "g'")]
    GreenPrime,
}

impl FiberLabel {
    /// The unprimed labels mark exactly the points of `X`.
    pub fn in_x(self) -> bool {
        matches!(self, FiberLabel::Blue | FiberLabel::Red | FiberLabel::Green)
    }
}

fn check_proper_subset(omax: &[Cell], x: &[Cell]) -> Result<()> {
    let mut xs = x.to_vec();
    xs.sort();
    xs.dedup();
    if xs.len() != x.len() || xs.len() >= omax.len() || xs.iter().any(|p| !omax.contains(p)) {
        return Err(Error::NotProperSubset);
    }
    Ok(())
}

/// Labels every point of `Omax(T_0)` given `X ⊊ Omax(T_0)`.
pub fn fiber_labels(t0: &EvenExtended, rep: &PathReport, x: &[Cell]) -> Result<Vec<(Cell, FiberLabel)>> {
    use FiberLabel::*;
    let omax = rep.omax_set();
    check_proper_subset(&omax, x)?;
    let m = t0.n();
    let cols = t0.columns();
    let inx = |p: &Cell| x.contains(p);
    let pb = *rep.blue.last().unwrap();
    let pr = *rep.red.last().unwrap();
    let mut labels: BTreeMap<Cell, FiberLabel> = BTreeMap::new();
    for &p in &rep.green {
        let q = cols.partner(p).expect("full column");
        let (lp, lq) = match (inx(&p), inx(&q)) {
            (false, false) => (GreenPrime, BluePrime),
            (false, true) => (BluePrime, Blue),
            (true, false) => (Red, RedPrime),
            (true, true) => (Green, Blue),
        };
        labels.insert(p, lp);
        labels.insert(q, lq);
    }
    let (nb, nr) = (rep.blue.len() - 1, rep.red.len() - 1);
    for &p in &rep.blue[..nb] {
        labels.entry(p).or_insert(if inx(&p) { Blue } else { BluePrime });
    }
    for &p in &rep.red[..nr] {
        labels.entry(p).or_insert(if inx(&p) { Red } else { RedPrime });
    }
    let blue_for = |p: &Cell| if inx(p) { Blue } else { BluePrime };
    let (lb, lr) = if !inx(&pr) {
        (blue_for(&pb), RedPrime)
    } else {
        let jmin = omax
            .iter()
            .filter(|p| !inx(p))
            .map(|p| p.col)
            .min()
            .expect("X is a proper subset");
        if jmin == m {
            (BluePrime, Red)
        } else if labels.iter().any(|(p, &l)| p.col == jmin && l == BluePrime) {
            (blue_for(&pb), Red)
        } else if !inx(&pb) {
            (RedPrime, Red)
        } else {
            (Blue, Green)
        }
    };
    labels.insert(pb, lb);
    labels.insert(pr, lr);
    Ok(labels.into_iter().collect())
}

/// The three ways a fiber of `Π` is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Situation {
    S1,
    S2,
    S3,
}

impl fmt::Display for Situation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Classification of a preimage `T` read off `T` itself: `p_{n+1}` free gives
/// `S2`; otherwise column `n - 1` meeting `R(T)` or `G(T)` gives `S3`, else `S1`.
pub fn situation_of(t: &EvenExtended, rep: &PathReport) -> Situation {
    let n = t.n();
    let above = t.point(n + 1).expect("full row");
    if t.is_free(above) {
        Situation::S2
    } else if rep.red.iter().chain(&rep.green).any(|p| p.col == n - 1) {
        Situation::S3
    } else {
        Situation::S1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub situation: Situation,
    pub labels: Vec<(Cell, FiberLabel)>,
    /// One tableau in `S1` and `S2`; in `S3` the pair `[T^{3/}, T^{3\}]`.
    pub tableaux: Vec<EvenExtended>,
}

/// The set of `T` with `Π(T) = T_0` and `X_T = X`.
pub fn pi_fiber(t0: &EvenExtended, x: &[Cell]) -> Result<Fiber> {
    use FiberLabel::*;
    let rep = PathReport::new(t0);
    let labels = fiber_labels(t0, &rep, x)?;
    let m = t0.n();
    let n = m + 1;
    let (k, i) = (x.len(), rep.max);
    let last: Vec<FiberLabel> = labels.iter().filter(|(p, _)| p.col == m).map(|&(_, l)| l).collect();
    let flagged = last.iter().any(|&l| l == Red || l == Green);
    let outside: Vec<FiberLabel> = labels.iter().map(|&(_, l)| l).filter(|l| !l.in_x()).collect();
    let both_primes = outside.contains(&BluePrime) && outside.contains(&RedPrime);
    let situation = if k <= i && !flagged {
        Situation::S1
    } else if k == i + 1 || (flagged && !both_primes) {
        Situation::S2
    } else {
        Situation::S3
    };
    let swapped = {
        let mut l = last.clone();
        l.sort();
        l == [Red, RedPrime] || l == [Blue, Green]
    };
    // (target for b', target for r') in each tableau to build.
    let prime_targets: Vec<(usize, usize)> = match situation {
        Situation::S1 => vec![(n - 1, n + 1)],
        Situation::S2 => vec![(n - 1, n - 1)],
        Situation::S3 if swapped => vec![(n + 1, n - 1), (n - 1, n + 1)],
        Situation::S3 => vec![(n - 1, n + 1), (n + 1, n - 1)],
    };
    let omax = rep.omax_set();
    let mut base = Tableau::empty(n, 2 * n);
    for p in t0.points().filter(|p| !omax.contains(p)) {
        let row = if p.row < n { p.row } else { p.row + 2 };
        base.set(Cell::new(p.col, row));
    }
    let mut tableaux = Vec::with_capacity(prime_targets.len());
    for (tb, tr) in prime_targets {
        let mut t = base.clone();
        for j in 1..n {
            let mut targets: Vec<usize> = labels
                .iter()
                .filter(|(p, _)| p.col == j)
                .map(|&(_, l)| match l {
                    Blue => n,
                    Red => 2 * n,
                    Green | GreenPrime => j,
                    BluePrime => tb,
                    RedPrime => tr,
                })
                .collect();
            targets.sort();
            for target in targets {
                t = insert_point(&t, j, target)?.0;
            }
        }
        t = insert_point(&t, n, n)?.0;
        t = insert_point(&t, n, 2 * n)?.0;
        let t = EvenExtended::new(t).or_else(|e| integrity(format!("fiber tableau is invalid: {e}")))?;
        let side = situation_of(&t, &PathReport::new(&t));
        if side != situation {
            return integrity(format!(
                "labels give {situation} but the tableau reads as {side} for X = {x:?}"
            ));
        }
        tableaux.push(t);
    }
    Ok(Fiber {
        situation,
        labels,
        tableaux,
    })
}

/// Every proper subset of `Omax(T_0)` with its fiber; together they form `Π^{-1}(T_0)`.
pub fn pi_preimage(t0: &EvenExtended) -> Result<Vec<(Vec<Cell>, Fiber)>> {
    let omax = PathReport::new(t0).omax_set();
    let full = (1u64 << omax.len()) - 1;
    (0..full)
        .map(|mask| {
            let x: Vec<Cell> = omax
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            pi_fiber(t0, &x).map(|f| (x, f))
        })
        .collect()
}

/// `P : T_n^e -> T_{n-1}^o`.
pub fn p_forward(t: &EvenExtended) -> Result<OddExtended> {
    let n = t.n();
    if n < 2 {
        return Err(Error::SizeTooSmall { min: 2, got: n });
    }
    let rep = PathReport::new(t);
    let omax = rep.omax_set();
    let labels = nu_labels(&rep);
    let h = 2 * n - 1;
    let mut base = Tableau::empty(n - 1, h);
    for p in t.points().filter(|p| !omax.contains(p)) {
        if p.col == n || p.row == n {
            return integrity(format!("point {p} survives the deletion step"));
        }
        let row = if p.row < n { p.row } else { p.row - 1 };
        base.set(Cell::new(p.col, row));
    }
    for j in 1..n {
        let here: Vec<NuLabel> = labels.iter().filter(|(p, _)| p.col == j).map(|&(_, l)| l).collect();
        let mut targets: Vec<usize> = match here.as_slice() {
            // Two points of B ∪ R in one column come back as a path point and its green partner.
            [NuLabel::Nu, NuLabel::Nu] => vec![j, h],
            ls => ls
                .iter()
                .map(|l| match l {
                    NuLabel::Nu => h,
                    NuLabel::Gamma => j,
                })
                .collect(),
        };
        targets.sort();
        for target in targets {
            base = insert_point(&base, j, target)?.0;
        }
    }
    OddExtended::new(base).or_else(|e| integrity(format!("P produced an invalid tableau: {e}")))
}

/// A value of a label function on one column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Word {
    #[serde(rename = "b")]
    B,
    #[serde(rename = "r")]
    R,
    #[serde(rename = "br")]
    BR,
    #[serde(rename = "bg")]
    BG,
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" => Ok(Word::B),
            "r" => Ok(Word::R),
            "br" => Ok(Word::BR),
            "bg" => Ok(Word::BG),
            _ => Err(Error::Parse(format!("unknown column word {s:?}"))),
        }
    }
}

/// A map from the columns `J(T_0)` holding a point of `V(T_0)` to words.
pub type LabelFunction = BTreeMap<usize, Word>;

fn v_columns(rep: &OddPathReport) -> (Vec<usize>, Vec<usize>) {
    let mut j: Vec<usize> = rep.violet.iter().map(|p| p.col).collect();
    let mut jg: Vec<usize> = rep.green.iter().map(|p| p.col).collect();
    j.sort();
    jg.sort();
    (j, jg)
}

/// All of `L(T_0)`: `b` or `r` off the green columns, `br`, `bg` or `r` on them.
pub fn label_functions(t0: &OddExtended) -> Vec<LabelFunction> {
    let (j, jg) = v_columns(&OddPathReport::new(t0));
    let mut out = vec![LabelFunction::new()];
    for c in j {
        let words: &[Word] = if jg.contains(&c) { &[Word::BR, Word::BG, Word::R] } else { &[Word::B, Word::R] };
        out = out
            .into_iter()
            .flat_map(|l| {
                words.iter().map(move |&w| {
                    let mut l = l.clone();
                    l.insert(c, w);
                    l
                })
            })
            .collect();
    }
    out
}

/// `U^l(T_0)`, the preimage under `P` selected by `l`.
pub fn p_fiber(t0: &OddExtended, l: &LabelFunction) -> Result<EvenExtended> {
    let rep = OddPathReport::new(t0);
    let (jv, jg) = v_columns(&rep);
    let keys: Vec<usize> = l.keys().copied().collect();
    if keys != jv {
        return Err(Error::BadLabelFunction(format!("domain {keys:?}, expected {jv:?}")));
    }
    for (&c, &w) in l {
        let ok = if jg.contains(&c) { w != Word::B } else { matches!(w, Word::B | Word::R) };
        if !ok {
            return Err(Error::BadLabelFunction(format!("word {w:?} not allowed on column {c}")));
        }
    }
    let n = t0.n() + 1;
    let mut t = Tableau::empty(n, 2 * n);
    for p in t0
        .points()
        .filter(|p| !rep.violet.contains(p) && !rep.green.contains(p))
    {
        let row = if p.row < n { p.row } else { p.row + 1 };
        t.set(Cell::new(p.col, row));
    }
    for (&j, &w) in l {
        let green = jg.contains(&j);
        let mut targets = match w {
            Word::B => vec![n],
            Word::R if green => vec![j, 2 * n],
            Word::R => vec![2 * n],
            Word::BR => vec![n, 2 * n],
            Word::BG => vec![j, n],
        };
        targets.sort();
        for target in targets {
            t = insert_point(&t, j, target)?.0;
        }
    }
    t = insert_point(&t, n, n)?.0;
    t = insert_point(&t, n, 2 * n)?.0;
    EvenExtended::new(t).or_else(|e| integrity(format!("U^l produced an invalid tableau: {e}")))
}

/// `P^{-1}(T_0)`, one tableau per label function.
pub fn p_preimage(t0: &OddExtended) -> Result<Vec<EvenExtended>> {
    label_functions(t0).iter().map(|l| p_fiber(t0, l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enum_labeled, enum_sdc, enum_te, enum_to};
    use std::collections::BTreeSet;

    fn c(col: usize, row: usize) -> Cell {
        Cell::new(col, row)
    }

    fn t1() -> EvenExtended {
        EvenExtended::from_cols(7, &[1, 1, 3, 4, 5, 5, 2, 6, 6, 7, 7, 3, 2, 4]).unwrap()
    }

    fn t3() -> OddExtended {
        OddExtended::from_cols(6, &[1, 1, 3, 4, 5, 5, 6, 6, 0, 4, 3, 2, 2]).unwrap()
    }

    #[test]
    fn even_expansion_example() {
        let t = EvenExtended::from_cols(2, &[1, 2, 2, 1]).unwrap();
        let l = LabeledEven::new(t, BTreeMap::from([(c(2, 3), false), (c(1, 4), true)])).unwrap();
        let d = even_expand(&l).unwrap();
        assert_eq!(d.tableau(), &Tableau::from_cols(4, &[1, 2, 3, 1, 4, 2, 3, 4]).unwrap());
        assert_eq!(even_reduce(&d.as_dellac()).unwrap(), l);
    }

    #[test]
    fn odd_expansion_example() {
        let t = OddExtended::from_cols(2, &[1, 1, 0, 2, 2]).unwrap();
        let l = LabeledOdd::new(t, BTreeMap::from([(c(2, 4), true), (c(2, 5), false)])).unwrap();
        let d = odd_expand(&l).unwrap();
        assert_eq!(d.tableau(), &Tableau::from_cols(5, &[1, 1, 3, 2, 4, 2, 4, 3, 5, 5]).unwrap());
        assert_eq!(odd_reduce(&d.as_dellac()).unwrap(), l);
    }

    #[test]
    fn reductions_reject_asymmetric_input() {
        let d = DellacConfig::from_cols(2, &[1, 1, 2, 2]).unwrap();
        assert!(d.is_symmetric());
        let d = crate::enumerate::enum_dc(3).unwrap().find(|d| !d.is_symmetric()).unwrap();
        assert_eq!(even_reduce(&d), Err(Error::NotSymmetric));
        assert_eq!(odd_reduce(&d), Err(Error::NotSymmetric));
    }

    #[test]
    fn expansions_are_bijective() {
        for n in 1..=3 {
            let image: BTreeSet<Tableau> = enum_te(n)
                .unwrap()
                .flat_map(|t| enum_labeled(&t).map(|l| even_expand(&l).unwrap().into_tableau()).collect::<Vec<_>>())
                .collect();
            let sdc: BTreeSet<Tableau> = enum_sdc(2 * n).unwrap().map(|d| d.into_tableau()).collect();
            assert_eq!(image, sdc);
        }
        for n in 1..=2 {
            let mut total = 0;
            let image: BTreeSet<Tableau> = enum_to(n)
                .unwrap()
                .flat_map(|t| {
                    enum_labeled(&t)
                        .map(|l| {
                            let d = odd_expand(&l).unwrap();
                            assert_eq!(odd_reduce(&d.as_dellac()).unwrap(), l);
                            d.into_tableau()
                        })
                        .collect::<Vec<_>>()
                })
                .inspect(|_| total += 1)
                .collect();
            let sdc: BTreeSet<Tableau> = enum_sdc(2 * n + 1).unwrap().map(|d| d.into_tableau()).collect();
            assert_eq!(total, image.len());
            assert_eq!(image, sdc);
        }
    }

    #[test]
    fn insertion_example() {
        let mut t = Tableau::empty(7, 14);
        t.set(c(1, 1));
        t.set(c(1, 2));
        assert_eq!(insert_point(&t, 2, 2).unwrap().1, c(2, 13));
        assert_eq!(insert_point(&t, 2, 7).unwrap().1, c(2, 7));
        assert!(matches!(insert_point(&t, 2, 13), Err(Error::NoInsertionRow { .. })));
        assert!(matches!(insert_point(&t, 3, 3), Err(Error::RootHypothesis { .. })));
    }

    #[test]
    fn pi_of_the_seven_column_example() {
        let img = pi_forward(&t1()).unwrap();
        let want = EvenExtended::from_cols(6, &[1, 1, 3, 4, 5, 2, 6, 6, 5, 3, 2, 4]).unwrap();
        assert_eq!(img.tableau, want);
        assert_eq!(img.x, vec![c(2, 6), c(2, 11), c(3, 10), c(4, 12)]);
        let rep = PathReport::new(&img.tableau);
        assert_eq!((rep.b, rep.r, rep.g), (3, 1, 1));
        let fiber = pi_fiber(&img.tableau, &img.x).unwrap();
        assert!(fiber.tableaux.contains(&t1()));
    }

    #[test]
    fn p_of_the_seven_column_example() {
        assert_eq!(p_forward(&t1()).unwrap(), t3());
        let l = LabelFunction::from([(2, Word::BG), (3, Word::B), (4, Word::R)]);
        assert_eq!(p_fiber(&t3(), &l).unwrap(), t1());
        assert_eq!(label_functions(&t3()).len(), 12);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        let t0 = EvenExtended::from_cols(2, &[1, 1, 2, 2]).unwrap();
        let omax = PathReport::new(&t0).omax_set();
        assert_eq!(pi_fiber(&t0, &omax).unwrap_err(), Error::NotProperSubset);
        assert_eq!(pi_fiber(&t0, &[c(1, 3)]).unwrap_err(), Error::NotProperSubset);
        let l = LabelFunction::from([(2, Word::B), (3, Word::B), (4, Word::R)]);
        assert!(matches!(p_fiber(&t3(), &l), Err(Error::BadLabelFunction(_))));
        let l = LabelFunction::from([(3, Word::B), (4, Word::R)]);
        assert!(matches!(p_fiber(&t3(), &l), Err(Error::BadLabelFunction(_))));
    }
}
