//! Inversion statistics and the path statistics of extended configurations.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Cell, Columns, EvenExtended, OddExtended, Tableau};

/// Ordered pairs `(p1, p2)` with `p1` strictly left of and strictly above `p2`.
pub fn inversions(t: &Tableau) -> Vec<(Cell, Cell)> {
    let pts: Vec<Cell> = t.points().collect();
    let mut out = Vec::new();
    for &p1 in &pts {
        for &p2 in &pts {
            if p1.col < p2.col && p1.row > p2.row {
                out.push((p1, p2));
            }
        }
    }
    out
}

pub fn inv(t: &Tableau) -> usize {
    inversions(t).len()
}

fn rot(t: &Tableau, p: Cell) -> Cell {
    Cell::new(t.width() + 1 - p.col, t.height() + 1 - p.row)
}

/// Number of orbits of `(p1, p2) -> (r(p2), r(p1))` on the inversions, `r` the half-turn.
pub fn tilde_inv(t: &Tableau) -> usize {
    let set = inversions(t);
    let mut canon: Vec<(Cell, Cell)> = set
        .iter()
        .map(|&(p1, p2)| {
            let img = (rot(t, p2), rot(t, p1));
            if img < (p1, p2) {
                img
            } else {
                (p1, p2)
            }
        })
        .collect();
    canon.sort_unstable();
    canon.dedup();
    canon.len()
}

/// Inversions of the form `(p, r(p))`.
pub fn fixed_pairs(t: &Tableau) -> usize {
    inversions(t)
        .iter()
        .filter(|&&(p1, p2)| rot(t, p2) == p1)
        .count()
}

pub fn bar_inv(t: &Tableau) -> usize {
    tilde_inv(t) - fixed_pairs(t)
}

/// The column-maximum subsequence `S_T(i)` of the walk started at `p_i`.
///
/// Works for even tableaux (`H = 2n`) and odd ones (`H = 2n + 1`): a start on
/// the empty row gives the empty path, and a step into the empty row freezes
/// the walk.
pub fn path_s(t: &Tableau, i: usize) -> Vec<Cell> {
    path_with(t, &t.columns(), i)
}

pub(crate) fn path_with(t: &Tableau, cols: &Columns, i: usize) -> Vec<Cell> {
    let (n, h) = (t.width(), t.height());
    let Some(start) = t.point(i) else {
        return Vec::new();
    };
    let mut walk = vec![start];
    let mut seen = vec![false; h + 1];
    seen[i] = true;
    let mut p = start;
    loop {
        assert!(walk.len() <= 4 * h, "walk from row {i} exceeded {} steps", 4 * h);
        if p.col == n {
            break;
        }
        let next_row = if cols.is_upper(p) { h - p.col } else { p.col };
        let Some(q) = t.point(next_row) else {
            break;
        };
        if seen[next_row] {
            break;
        }
        seen[next_row] = true;
        walk.push(q);
        p = q;
    }
    let top = walk.iter().map(|c| c.col).max().unwrap_or(0);
    let mut out = vec![walk[0]];
    for &q in &walk[1..] {
        let last = out.last().unwrap().col;
        if last == top {
            break;
        }
        if q.col > last {
            out.push(q);
        }
    }
    out
}

/// Checks the hypotheses under which the reverse walk from `(j:i)` is defined.
fn root_hypotheses(t: &Tableau, cols: &Columns, cell: Cell) -> Result<()> {
    let Cell { col: j, row: i } = cell;
    let fail = |reason: String| Err(Error::RootHypothesis { col: j, reason });
    if j == 0 || j > t.width() {
        return fail(format!("column outside 1..={}", t.width()));
    }
    if i < j || i > t.height() {
        return fail(format!("row {i} outside {j}..={}", t.height()));
    }
    for r in 1..j {
        match t.col(r) {
            Some(c) if c <= r => {}
            _ => return fail(format!("row {r} lacks a point on or right of the diagonal")),
        }
    }
    for c in 1..j {
        if cols.count(c) != 2 {
            return fail(format!("column {c} does not hold two points"));
        }
    }
    if let Some(c) = t.col(i) {
        if c < j {
            return fail(format!("row {i} has a point in column {c}"));
        }
    }
    Ok(())
}

fn is_root_value(j: usize, h: usize, v: usize) -> bool {
    (v >= j && v + j <= h) || v == h
}

pub(crate) fn iota_unchecked(cols: &Columns, h: usize, j: usize, i: usize) -> Vec<usize> {
    let mut seq = vec![i];
    let mut cur = i;
    while !is_root_value(j, h, cur) {
        assert!(seq.len() <= 4 * h, "reverse walk from ({j}:{i}) does not settle");
        cur = if cur + j > h {
            cols.upper(h - cur).expect("full column")
        } else {
            cols.lower(cur).expect("full column")
        };
        seq.push(cur);
    }
    seq.push(cur);
    seq
}

pub(crate) fn root_unchecked(cols: &Columns, h: usize, j: usize, i: usize) -> usize {
    let mut cur = i;
    let mut steps = 0;
    while !is_root_value(j, h, cur) {
        steps += 1;
        assert!(steps <= 4 * h, "reverse walk from ({j}:{i}) does not settle");
        cur = if cur + j > h {
            cols.upper(h - cur).expect("full column")
        } else {
            cols.lower(cur).expect("full column")
        };
    }
    cur
}

/// `root_T(j:i)`, the value at which the reverse walk from `(j:i)` settles.
pub fn root(t: &Tableau, cell: Cell) -> Result<usize> {
    let cols = t.columns();
    root_hypotheses(t, &cols, cell)?;
    Ok(root_unchecked(&cols, t.height(), cell.col, cell.row))
}

/// The sequence `I_T(j:i)` up to and including the first repetition of the root.
pub fn iota_path(t: &Tableau, cell: Cell) -> Result<Vec<usize>> {
    let cols = t.columns();
    root_hypotheses(t, &cols, cell)?;
    Ok(iota_unchecked(&cols, t.height(), cell.col, cell.row))
}

/// Free points whose partner lies on `anchor` and whose root is their own column.
fn green_points(t: &Tableau, cols: &Columns, anchor: &[Cell]) -> Vec<Cell> {
    let h = t.height();
    let mut out: Vec<Cell> = t
        .points()
        .filter(|&p| t.is_free(p))
        .filter(|&p| cols.partner(p).is_some_and(|q| anchor.contains(&q)))
        .filter(|&p| root_unchecked(cols, h, p.col, p.row) == p.col)
        .collect();
    out.sort_by_key(|p| (p.col, p.row));
    out
}

/// Which of the four rules produced the primed paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimedCase {
    /// Column `n - 1` meets `R`.
    RedInPenultimate,
    /// Column `n - 1` meets `G`.
    GreenInPenultimate,
    /// `p_{n+1}` is free.
    FreeAbove,
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimedReport {
    pub case: PrimedCase,
    pub blue: Vec<Cell>,
    pub red: Vec<Cell>,
    pub green: Vec<Cell>,
    /// Counts restricted to columns `1..n-1`.
    pub b: usize,
    pub r: usize,
    pub g: usize,
    pub max: usize,
}

impl PrimedReport {
    /// Elements of `B'`, `R'` and `G'` in columns `1..n-1`.
    pub fn max_set(&self, n: usize) -> Vec<Cell> {
        let mut out: Vec<Cell> = self
            .blue
            .iter()
            .chain(&self.red)
            .chain(&self.green)
            .copied()
            .filter(|p| p.col < n)
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Path statistics of an even extended configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathReport {
    pub n: usize,
    pub blue: Vec<Cell>,
    pub red: Vec<Cell>,
    pub green: Vec<Cell>,
    pub b: usize,
    pub r: usize,
    pub g: usize,
    pub max: usize,
    pub omax: usize,
    pub fr: usize,
    pub primed: Option<PrimedReport>,
}

impl PathReport {
    pub fn new(t: &EvenExtended) -> Self {
        Self::with_columns(t, &t.columns())
    }

    pub(crate) fn with_columns(t: &EvenExtended, cols: &Columns) -> Self {
        let n = t.n();
        let blue = path_with(t, cols, n);
        let red = path_with(t, cols, 2 * n);
        let green = green_points(t, cols, &blue);
        let mut all: Vec<Cell> = blue.iter().chain(&red).chain(&green).copied().collect();
        all.sort();
        all.dedup();
        let (b, r, g) = (blue.len() - 1, red.len() - 1, green.len());
        let primed = (n >= 2).then(|| primed_paths(t, cols, &red, &green));
        PathReport {
            n,
            b,
            r,
            g,
            max: b + r + g,
            omax: all.len(),
            fr: t.free_count(),
            blue,
            red,
            green,
            primed,
        }
    }

    /// `Omax(T)`, sorted.
    pub fn omax_set(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = self
            .blue
            .iter()
            .chain(&self.red)
            .chain(&self.green)
            .copied()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `Max(T)`: `Omax(T)` without the last points of `B` and `R`.
    pub fn max_set(&self) -> Vec<Cell> {
        let (lb, lr) = (*self.blue.last().unwrap(), *self.red.last().unwrap());
        self.omax_set()
            .into_iter()
            .filter(|&p| p != lb && p != lr)
            .collect()
    }

    pub fn in_blue(&self, p: Cell) -> bool {
        self.blue.contains(&p)
    }

    pub fn in_red(&self, p: Cell) -> bool {
        self.red.contains(&p)
    }

    pub fn in_green(&self, p: Cell) -> bool {
        self.green.contains(&p)
    }
}

fn primed_paths(t: &Tableau, cols: &Columns, red: &[Cell], green: &[Cell]) -> PrimedReport {
    let n = t.width();
    let (jlo, jhi) = (t.col(n - 1).unwrap(), t.col(n + 1).unwrap());
    let (imin, imax) = if jlo <= jhi { (n - 1, n + 1) } else { (n + 1, n - 1) };
    let meets = |set: &[Cell]| set.iter().any(|p| p.col == n - 1);
    let above = t.point(n + 1).unwrap();
    let (case, bi, ri) = if meets(red) {
        (PrimedCase::RedInPenultimate, imin, imax)
    } else if meets(green) {
        (PrimedCase::GreenInPenultimate, imax, imin)
    } else if t.is_free(above) {
        (PrimedCase::FreeAbove, n + 1, n - 1)
    } else {
        (PrimedCase::Plain, n - 1, n + 1)
    };
    let blue = path_with(t, cols, bi);
    let red = path_with(t, cols, ri);
    let green = green_points(t, cols, &blue);
    let inner = |s: &[Cell]| s.iter().filter(|p| p.col < n).count();
    let (b, r, g) = (inner(&blue), inner(&red), inner(&green));
    PrimedReport {
        case,
        blue,
        red,
        green,
        b,
        r,
        g,
        max: b + r + g,
    }
}

/// Path statistics of an odd extended configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddPathReport {
    pub n: usize,
    pub violet: Vec<Cell>,
    pub green: Vec<Cell>,
    pub v: usize,
    pub g: usize,
    pub fr: usize,
}

impl OddPathReport {
    pub fn new(t: &OddExtended) -> Self {
        let cols = t.columns();
        let violet = path_with(t, &cols, t.height());
        let green = green_points(t, &cols, &violet);
        OddPathReport {
            n: t.n(),
            v: violet.len(),
            g: green.len(),
            fr: t.free_count(),
            violet,
            green,
        }
    }
}

/// Labels carried into `Π(T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ForwardLabel {
    #[serde(rename = "beta")]
    Beta,
    #[serde(rename = "rho")]
    Rho,
    #[serde(rename = "gamma")]
    Gamma,
}

/// Labels carried into `P(T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NuLabel {
    #[serde(rename = "nu")]
    Nu,
    #[serde(rename = "gamma")]
    Gamma,
}

/// Labels on `Max(T) ∪ Max'(T)` (columns `1..n-1`), sorted by cell.
///
/// A column holding a point of `B` and a point of `B'` (or a point of `R'` and
/// a point of `R`) labels them `β` and `γ`; otherwise `B ∪ B'` gives `β`,
/// then `R ∪ R'` gives `ρ`, then `G ∪ G'` gives `γ`, earliest match first.
pub fn forward_labels(t: &Tableau, report: &PathReport) -> Vec<(Cell, ForwardLabel)> {
    let n = report.n;
    let primed = report.primed.as_ref().expect("forward labels need n >= 2");
    let cols = t.columns();
    let mut cells: Vec<Cell> = report.max_set();
    cells.extend(primed.max_set(n));
    cells.sort();
    cells.dedup();
    let in_b = |p: &Cell| report.blue.contains(p);
    let in_r = |p: &Cell| report.red.contains(p);
    let in_bp = |p: &Cell| primed.blue.contains(p);
    let in_rp = |p: &Cell| primed.red.contains(p);
    let mut out = Vec::with_capacity(cells.len());
    for &p in &cells {
        let q = cols.partner(p);
        let paired = |first: &dyn Fn(&Cell) -> bool, second: &dyn Fn(&Cell) -> bool| {
            q.filter(|q| cells.contains(q)).map(|q| {
                if first(&p) && second(&q) {
                    Some(ForwardLabel::Beta)
                } else if first(&q) && second(&p) {
                    Some(ForwardLabel::Gamma)
                } else {
                    None
                }
            })
        };
        let rule1 = paired(&in_b, &in_bp)
            .flatten()
            .or_else(|| paired(&in_rp, &in_r).flatten());
        let label = rule1.unwrap_or_else(|| {
            if in_b(&p) || in_bp(&p) {
                ForwardLabel::Beta
            } else if in_r(&p) || in_rp(&p) {
                ForwardLabel::Rho
            } else {
                ForwardLabel::Gamma
            }
        });
        out.push((p, label));
    }
    // In column n - 1 the targets of β and γ coincide, so the column is
    // split by roots instead: the point that will be the last red point of
    // Π(T) takes ρ, the other one β.
    if n >= 2 {
        let j = n - 1;
        let pair: Vec<usize> = (0..out.len()).filter(|&k| out[k].0.col == j).collect();
        if let [a, b] = pair[..] {
            let h = t.height();
            let rank = |p: Cell| match root_unchecked(&cols, h, j, p.row) {
                r if r == h => 0,
                r if r == n + 1 => 1,
                r if r == n - 1 => 2,
                _ => 3,
            };
            let (red, blue) = if rank(out[a].0) <= rank(out[b].0) { (a, b) } else { (b, a) };
            out[red].1 = ForwardLabel::Rho;
            out[blue].1 = ForwardLabel::Beta;
        }
    }
    out
}

/// `ν` on the points of `B` and `R` in `Max(T)`, `γ` on the rest of `G`.
pub fn nu_labels(report: &PathReport) -> Vec<(Cell, NuLabel)> {
    report
        .max_set()
        .into_iter()
        .map(|p| {
            let l = if report.in_blue(p) || report.in_red(p) {
                NuLabel::Nu
            } else {
                NuLabel::Gamma
            };
            (p, l)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enum_dc, enum_sdc, enum_te};
    use crate::grid::DellacConfig;

    fn c(col: usize, row: usize) -> Cell {
        Cell::new(col, row)
    }

    fn t1() -> EvenExtended {
        EvenExtended::from_cols(7, &[1, 1, 3, 4, 5, 5, 2, 6, 6, 7, 7, 3, 2, 4]).unwrap()
    }

    #[test]
    fn inversions_of_small_examples() {
        let d = DellacConfig::from_cols(3, &[1, 2, 3, 1, 2, 3]).unwrap();
        assert_eq!(inv(&d), 3);
        let d = DellacConfig::from_cols(1, &[1, 1]).unwrap();
        assert_eq!(inv(&d), 0);
    }

    #[test]
    fn poincare_of_dc3() {
        let mut hist = [0usize; 8];
        for d in enum_dc(3).unwrap() {
            hist[inv(&d)] += 1;
        }
        assert_eq!(&hist[..4], &[1, 2, 3, 1]);
    }

    #[test]
    fn orbit_counting_matches_closed_form() {
        for n in 1..=6 {
            for d in enum_sdc(n).unwrap() {
                let f = fixed_pairs(&d);
                assert_eq!(2 * tilde_inv(&d), inv(&d) + f);
                assert_eq!(2 * bar_inv(&d), inv(&d) - f);
            }
        }
    }

    #[test]
    fn paths_of_the_seven_column_example() {
        let t = t1();
        assert_eq!(path_s(&t, 7), vec![c(2, 7), c(3, 12), c(7, 11)]);
        assert_eq!(path_s(&t, 14), vec![c(4, 14), c(7, 10)]);
        let rep = PathReport::new(&t);
        assert_eq!(rep.green, vec![c(2, 13)]);
        assert_eq!((rep.b, rep.r, rep.g), (2, 1, 1));
        assert_eq!(rep.fr, 6);
        assert_eq!(rep.omax, rep.max + 2);
        let p = rep.primed.as_ref().unwrap();
        assert_eq!(p.case, PrimedCase::Plain);
        assert_eq!(p.blue, vec![c(5, 6), c(6, 9)]);
        assert_eq!(p.red, vec![c(6, 8)]);
        assert_eq!((p.b, p.r, p.g), (2, 1, 0));
    }

    #[test]
    fn roots_of_the_seven_column_example() {
        let t = t1();
        assert_eq!(iota_path(&t, c(7, 10)).unwrap(), vec![10, 14, 14]);
        assert_eq!(iota_path(&t, c(7, 11)).unwrap(), vec![11, 12, 13, 2, 7, 7]);
        assert_eq!(iota_path(&t, c(2, 13)).unwrap(), vec![13, 2, 2]);
        assert_eq!(root(&t, c(2, 13)).unwrap(), 2);
        assert!(matches!(
            root(&t, c(3, 7)),
            Err(Error::RootHypothesis { col: 3, .. })
        ));
    }

    #[test]
    fn path_in_last_column_is_a_single_point() {
        let t = t1();
        assert_eq!(path_s(&t, 10), vec![c(7, 10)]);
    }

    #[test]
    fn maximal_tableau() {
        let t = EvenExtended::max_tableau(4);
        let rep = PathReport::new(&t);
        assert_eq!((rep.b, rep.r, rep.g, rep.max), (0, 3, 0, 3));
    }

    #[test]
    fn odd_reports() {
        let t3 = OddExtended::from_cols(6, &[1, 1, 3, 4, 5, 5, 6, 6, 0, 4, 3, 2, 2]).unwrap();
        let rep = OddPathReport::new(&t3);
        assert_eq!(rep.violet, vec![c(2, 13), c(3, 11), c(4, 10)]);
        assert_eq!(rep.green, vec![c(2, 12)]);
        assert_eq!((rep.v, rep.g, rep.fr), (3, 1, 5));
        let a = OddExtended::from_cols(1, &[1, 1, 0]).unwrap();
        assert_eq!(OddPathReport::new(&a).v, 0);
        let b = OddExtended::from_cols(1, &[1, 0, 1]).unwrap();
        assert_eq!(OddPathReport::new(&b).violet, vec![c(1, 3)]);
    }

    #[test]
    fn labels_of_the_seven_column_example() {
        let t = t1();
        let rep = PathReport::new(&t);
        let fl = forward_labels(&t, &rep);
        let get = |p: Cell| fl.iter().find(|(q, _)| *q == p).map(|(_, l)| *l);
        assert_eq!(get(c(2, 7)), Some(ForwardLabel::Beta));
        assert_eq!(get(c(4, 14)), Some(ForwardLabel::Rho));
        assert_eq!(get(c(2, 13)), Some(ForwardLabel::Gamma));
        assert_eq!(get(c(6, 8)), Some(ForwardLabel::Rho));
        let nl = nu_labels(&rep);
        assert!(nl.contains(&(c(2, 7), NuLabel::Nu)));
        assert!(nl.contains(&(c(4, 14), NuLabel::Nu)));
        assert!(nl.contains(&(c(2, 13), NuLabel::Gamma)));
    }

    #[test]
    fn root_is_a_bijection_per_column() {
        for n in 1..=5 {
            for t in enum_te(n).unwrap() {
                let h = 2 * n;
                for j in 1..=n {
                    let mut roots: Vec<usize> = (j..=h)
                        .filter(|&i| t.col(i).is_none_or(|c| c >= j))
                        .map(|i| root(&t, c(j, i)).unwrap())
                        .collect();
                    roots.sort();
                    let want: Vec<usize> = (j..=h - j).chain(std::iter::once(h)).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
                    assert_eq!(roots, want);
                }
            }
        }
    }

    #[test]
    fn maximal_points_are_distinct_free_points() {
        for n in 2..=6 {
            for t in enum_te(n).unwrap() {
                let rep = PathReport::new(&t);
                assert_eq!(rep.omax, rep.max + 2);
                assert!(rep.fr >= rep.max + 1);
                assert!(rep.red.iter().all(|&p| t.is_free(p)));
                assert!(rep.blue[1..].iter().all(|&p| t.is_free(p)));
                let pr = rep.primed.unwrap();
                assert!(pr.b + pr.r >= 1);
            }
        }
    }
}
