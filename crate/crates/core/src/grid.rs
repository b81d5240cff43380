//! Tableaux and the four configuration kinds built on them.
//!
//! A tableau is stored row-major: for every row (bottom to top) the column
//! of its unique point, or nothing. Columns and rows are 1-based, matching
//! the usual `(j:i)` box notation where `j` is the column and `i` the row.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The box `(col:row)` of a tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub const fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.col, self.row)
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (c, r) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected \"j:i\", got {s:?}")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad coordinate in {s:?}: {e}")))
        };
        Ok(Cell::new(parse(c)?, parse(r)?))
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Rectangular grid with at most one point per row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    width: usize,
    // rows[i - 1] is the column of the point of row i, 0 when empty.
    rows: Vec<u8>,
}

impl Tableau {
    pub fn empty(width: usize, height: usize) -> Self {
        assert!(width < u8::MAX as usize, "width {width} too large");
        Tableau {
            width,
            rows: vec![0; height],
        }
    }

    /// Builds a tableau from bottom-to-top row entries. Columns must lie in `1..=width`.
    pub fn from_rows(width: usize, rows: &[Option<usize>]) -> Result<Self> {
        let mut t = Tableau::empty(width, rows.len());
        for (idx, entry) in rows.iter().enumerate() {
            if let Some(c) = *entry {
                if c == 0 || c > width {
                    return Err(Error::Parse(format!(
                        "row {} holds column {c}, outside 1..={width}",
                        idx + 1
                    )));
                }
                t.rows[idx] = c as u8;
            }
        }
        Ok(t)
    }

    /// Shorthand for fully populated rows, used heavily in tests.
    pub fn from_cols(width: usize, cols: &[usize]) -> Result<Self> {
        let rows: Vec<Option<usize>> = cols.iter().map(|&c| (c != 0).then_some(c)).collect();
        Tableau::from_rows(width, &rows)
    }

    pub(crate) fn from_raw(width: usize, rows: Vec<u8>) -> Self {
        Tableau { width, rows }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    #[cfg(test)]
    pub(crate) fn raw_rows(&self) -> &[u8] {
        &self.rows
    }

    /// Column of the point in `row`, if any.
    pub fn col(&self, row: usize) -> Option<usize> {
        match self.rows[row - 1] {
            0 => None,
            c => Some(c as usize),
        }
    }

    /// The point `p_i` of row `i`.
    pub fn point(&self, row: usize) -> Option<Cell> {
        self.col(row).map(|c| Cell::new(c, row))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.row <= self.height() && self.col(cell.row) == Some(cell.col)
    }

    pub fn rows(&self) -> Vec<Option<usize>> {
        (1..=self.height()).map(|i| self.col(i)).collect()
    }

    /// Points in ascending row order.
    pub fn points(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| Cell::new(c as usize, i + 1))
    }

    pub fn point_count(&self) -> usize {
        self.rows.iter().filter(|&&c| c != 0).count()
    }

    pub(crate) fn set(&mut self, cell: Cell) {
        self.rows[cell.row - 1] = cell.col as u8;
    }

    pub fn empty_rows(&self) -> Vec<usize> {
        (1..=self.height()).filter(|&i| self.col(i).is_none()).collect()
    }

    pub fn columns(&self) -> Columns {
        Columns::of(self)
    }

    /// Image under the half-turn about the centre of the grid.
    pub fn rotated(&self) -> Tableau {
        let (w, h) = (self.width, self.height());
        let mut out = Tableau::empty(w, h);
        for p in self.points() {
            out.set(Cell::new(w + 1 - p.col, h + 1 - p.row));
        }
        out
    }

    /// A point is free when it lies on or beyond the anti-diagonal `i + j > H`.
    pub fn is_free(&self, cell: Cell) -> bool {
        cell.row + cell.col > self.height()
    }

    pub fn free_points(&self) -> Vec<Cell> {
        self.points().filter(|&p| self.is_free(p)).collect()
    }

    pub fn free_count(&self) -> usize {
        self.points().filter(|&p| self.is_free(p)).count()
    }
}

impl fmt::Display for Tableau {
    /// Top row first, `*` for a point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (1..=self.height()).rev() {
            write!(f, "{i:>3} |")?;
            for j in 1..=self.width {
                let mark = if self.col(i) == Some(j) { '*' } else { '.' };
                write!(f, "{mark}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Per-column lookup of the lower and upper point rows.
#[derive(Clone, Debug)]
pub struct Columns {
    lower: Vec<usize>,
    upper: Vec<usize>,
    count: Vec<u8>,
}

impl Columns {
    fn of(t: &Tableau) -> Self {
        let w = t.width();
        let mut lower = vec![0; w + 1];
        let mut upper = vec![0; w + 1];
        let mut count = vec![0u8; w + 1];
        for p in t.points() {
            let j = p.col;
            count[j] = count[j].saturating_add(1);
            if lower[j] == 0 {
                lower[j] = p.row;
            } else {
                upper[j] = p.row;
            }
        }
        Columns {
            lower,
            upper,
            count,
        }
    }

    pub fn count(&self, col: usize) -> usize {
        self.count[col] as usize
    }

    /// Row of the lower point of a column holding two points.
    pub fn lower(&self, col: usize) -> Option<usize> {
        (self.lower[col] != 0).then_some(self.lower[col])
    }

    pub fn upper(&self, col: usize) -> Option<usize> {
        (self.upper[col] != 0).then_some(self.upper[col])
    }

    pub fn is_upper(&self, p: Cell) -> bool {
        self.upper[p.col] == p.row
    }

    /// The other point of the column of `p`.
    pub fn partner(&self, p: Cell) -> Option<Cell> {
        let other = if self.lower[p.col] == p.row {
            self.upper[p.col]
        } else {
            self.lower[p.col]
        };
        (other != 0).then_some(Cell::new(p.col, other))
    }
}

/// The configuration kinds, with their JSON tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "dc")]
    Dellac,
    #[serde(rename = "sdc")]
    Symmetric,
    #[serde(rename = "te")]
    EvenExtended,
    #[serde(rename = "to")]
    OddExtended,
}

impl Kind {
    pub fn tag(self) -> &'static str {
        match self {
            Kind::Dellac => "dc",
            Kind::Symmetric => "sdc",
            Kind::EvenExtended => "te",
            Kind::OddExtended => "to",
        }
    }

    /// `(width, height)` of a configuration of size `n`.
    pub fn shape(self, n: usize) -> (usize, usize) {
        match self {
            Kind::Dellac | Kind::Symmetric | Kind::EvenExtended => (n, 2 * n),
            Kind::OddExtended => (n, 2 * n + 1),
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dc" => Ok(Kind::Dellac),
            "sdc" => Ok(Kind::Symmetric),
            "te" => Ok(Kind::EvenExtended),
            "to" => Ok(Kind::OddExtended),
            other => Err(Error::Parse(format!("unknown kind {other:?}"))),
        }
    }
}

/// The first broken invariant found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "constraint", rename_all = "snake_case")]
pub enum Violation {
    Shape {
        expected: (usize, usize),
        found: (usize, usize),
    },
    EmptyRow {
        row: usize,
    },
    /// A point `(j:i)` with `j > i`.
    BelowDiagonal {
        at: Cell,
    },
    /// A point `(j:i)` with `i > N + j`.
    AboveBand {
        at: Cell,
    },
    ColumnCount {
        col: usize,
        points: usize,
    },
    /// Odd configurations need exactly one empty row among the upper `n + 1`.
    EmptyRowCount {
        empty: usize,
    },
    EmptyRowPosition {
        row: usize,
    },
    NotSymmetric {
        at: Cell,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { expected, found } => write!(
                f,
                "shape {}x{} expected, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Violation::EmptyRow { row } => write!(f, "row {row} is empty"),
            Violation::BelowDiagonal { at } => write!(f, "point ({at}) violates j <= i"),
            Violation::AboveBand { at } => write!(f, "point ({at}) violates i <= N + j"),
            Violation::ColumnCount { col, points } => {
                write!(f, "column {col} holds {points} points instead of 2")
            }
            Violation::EmptyRowCount { empty } => {
                write!(f, "{empty} empty rows, exactly one required")
            }
            Violation::EmptyRowPosition { row } => {
                write!(f, "empty row {row} lies in the lower half")
            }
            Violation::NotSymmetric { at } => {
                write!(f, "point ({at}) has no mirror image under the half-turn")
            }
        }
    }
}

/// Checks `t` against the invariants of `kind` at size `n`. Never panics on bad input.
pub fn validate(t: &Tableau, kind: Kind, n: usize) -> std::result::Result<(), Violation> {
    let expected = kind.shape(n);
    let found = (t.width(), t.height());
    if expected != found || n == 0 {
        return Err(Violation::Shape { expected, found });
    }
    let mut counts = vec![0usize; n + 1];
    let mut empty = Vec::new();
    for i in 1..=t.height() {
        match t.col(i) {
            None => {
                if kind != Kind::OddExtended || i <= n {
                    return Err(Violation::EmptyRow { row: i });
                }
                empty.push(i);
            }
            Some(j) => {
                let at = Cell::new(j, i);
                if j > i {
                    return Err(Violation::BelowDiagonal { at });
                }
                if matches!(kind, Kind::Dellac | Kind::Symmetric) && i > n + j {
                    return Err(Violation::AboveBand { at });
                }
                counts[j] += 1;
            }
        }
    }
    for (j, &points) in counts.iter().enumerate().skip(1) {
        if points != 2 {
            return Err(Violation::ColumnCount { col: j, points });
        }
    }
    if kind == Kind::OddExtended {
        if empty.len() != 1 {
            return Err(Violation::EmptyRowCount { empty: empty.len() });
        }
        if empty[0] < n + 1 {
            return Err(Violation::EmptyRowPosition { row: empty[0] });
        }
    }
    if kind == Kind::Symmetric {
        let rot = t.rotated();
        if let Some(at) = t.points().find(|&p| !rot.contains(p)) {
            return Err(Violation::NotSymmetric { at });
        }
    }
    Ok(())
}

macro_rules! refined {
    ($(#[$meta:meta])* $name:ident, $kind:expr) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(Tableau);

        impl $name {
            pub const KIND: Kind = $kind;

            /// Validates `t` as a configuration of size `t.width()`.
            pub fn new(t: Tableau) -> Result<Self> {
                validate(&t, $kind, t.width()).map_err(Error::Invalid)?;
                Ok($name(t))
            }

            pub(crate) fn new_unchecked(t: Tableau) -> Self {
                debug_assert!(validate(&t, $kind, t.width()).is_ok(), "{}", t);
                $name(t)
            }

            pub fn from_cols(width: usize, cols: &[usize]) -> Result<Self> {
                Self::new(Tableau::from_cols(width, cols)?)
            }

            pub fn n(&self) -> usize {
                self.0.width()
            }

            pub fn tableau(&self) -> &Tableau {
                &self.0
            }

            pub fn into_tableau(self) -> Tableau {
                self.0
            }
        }

        impl Deref for $name {
            type Target = Tableau;

            fn deref(&self) -> &Tableau {
                &self.0
            }
        }

        impl TryFrom<Tableau> for $name {
            type Error = Error;

            fn try_from(t: Tableau) -> Result<Self> {
                $name::new(t)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }
    };
}

refined!(
    /// `N` columns, `2N` rows, two points per column, every point within `j <= i <= N + j`.
    DellacConfig,
    Kind::Dellac
);
refined!(
    /// A Dellac configuration fixed by the half-turn.
    SymmetricDellac,
    Kind::Symmetric
);
refined!(
    /// `n` columns, `2n` rows, two points per column, every point on or above `j <= i`.
    EvenExtended,
    Kind::EvenExtended
);
refined!(
    /// `n` columns, `2n + 1` rows, one empty row among the upper `n + 1`.
    OddExtended,
    Kind::OddExtended
);

impl DellacConfig {
    pub fn rotate_pi(&self) -> DellacConfig {
        DellacConfig::new_unchecked(self.0.rotated())
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.rotated() == self.0
    }

    pub fn into_symmetric(self) -> Result<SymmetricDellac> {
        SymmetricDellac::new(self.0)
    }
}

impl SymmetricDellac {
    pub fn as_dellac(&self) -> DellacConfig {
        DellacConfig::new_unchecked(self.0.clone())
    }
}

impl OddExtended {
    pub fn empty_row(&self) -> usize {
        self.0.rows.iter().position(|&c| c == 0).expect("validated") + 1
    }

    /// Deletes the empty row; rows above it shift down by one.
    pub fn delete_empty_row(&self) -> EvenExtended {
        let e = self.empty_row();
        let mut rows = self.0.rows.clone();
        rows.remove(e - 1);
        EvenExtended::new_unchecked(Tableau::from_raw(self.0.width, rows))
    }
}

impl EvenExtended {
    /// Reinserts an empty row at index `row` (in `n + 1 ..= 2n + 1`).
    pub fn insert_empty_row(&self, row: usize) -> Result<OddExtended> {
        if row < self.n() + 1 || row > 2 * self.n() + 1 {
            return Err(Error::Invalid(Violation::EmptyRowPosition { row }));
        }
        let mut rows = self.0.rows.clone();
        rows.insert(row - 1, 0);
        OddExtended::new(Tableau::from_raw(self.0.width, rows))
    }

    /// Points `(j:j)` and `(j:2n+1-j)`; the unique tableau with `max = n - 1` and no blue path.
    pub fn max_tableau(n: usize) -> EvenExtended {
        let mut t = Tableau::empty(n, 2 * n);
        for j in 1..=n {
            t.set(Cell::new(j, j));
            t.set(Cell::new(j, 2 * n + 1 - j));
        }
        EvenExtended::new_unchecked(t)
    }
}

/// Extended configurations: the ones whose free points carry labels.
pub trait Extended: Deref<Target = Tableau> + Clone {
    const KIND: Kind;

    fn size(&self) -> usize {
        self.width()
    }
}

impl Extended for EvenExtended {
    const KIND: Kind = Kind::EvenExtended;
}

impl Extended for OddExtended {
    const KIND: Kind = Kind::OddExtended;
}

/// An extended configuration with a bit on each free point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeled<T> {
    base: T,
    labels: BTreeMap<Cell, bool>,
}

impl<T: Extended> Labeled<T> {
    /// Fails unless the label domain is exactly the free-point set of `base`.
    pub fn new(base: T, labels: BTreeMap<Cell, bool>) -> Result<Self> {
        let free = base.free_points();
        if free.len() != labels.len() || free.iter().any(|p| !labels.contains_key(p)) {
            let keys: Vec<String> = labels.keys().map(|c| c.to_string()).collect();
            let want: Vec<String> = free.iter().map(|c| c.to_string()).collect();
            return Err(Error::LabelDomain(format!(
                "got {{{}}}, free points are {{{}}}",
                keys.join(", "),
                want.join(", ")
            )));
        }
        Ok(Labeled { base, labels })
    }

    /// Labeling number `mask`: bit `k` of `mask` is the label of the `k`-th free point by row.
    pub fn from_mask(base: T, mask: u64) -> Self {
        let labels = base
            .free_points()
            .into_iter()
            .enumerate()
            .map(|(k, p)| (p, mask >> k & 1 == 1))
            .collect();
        Labeled { base, labels }
    }

    pub fn base(&self) -> &T {
        &self.base
    }

    pub fn labels(&self) -> &BTreeMap<Cell, bool> {
        &self.labels
    }

    pub fn label(&self, p: Cell) -> Option<bool> {
        self.labels.get(&p).copied()
    }
}

pub type LabeledEven = Labeled<EvenExtended>;
pub type LabeledOdd = Labeled<OddExtended>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_column_dellac_is_valid() {
        let t = Tableau::from_cols(1, &[1, 1]).unwrap();
        assert_eq!(validate(&t, Kind::Dellac, 1), Ok(()));
    }

    #[test]
    fn first_even_extended_of_size_two_is_valid() {
        let t = Tableau::from_cols(2, &[1, 1, 2, 2]).unwrap();
        assert_eq!(validate(&t, Kind::EvenExtended, 2), Ok(()));
    }

    #[test]
    fn point_below_diagonal_is_reported_with_its_box() {
        let t = Tableau::from_cols(2, &[2, 1, 1, 2]).unwrap();
        assert_eq!(
            validate(&t, Kind::EvenExtended, 2),
            Err(Violation::BelowDiagonal {
                at: Cell::new(2, 1)
            })
        );
    }

    #[test]
    fn dellac_band_and_column_counts() {
        // (1:4) escapes the band i <= N + j for N = 2.
        let t = Tableau::from_cols(2, &[1, 2, 2, 1]).unwrap();
        assert_eq!(
            validate(&t, Kind::Dellac, 2),
            Err(Violation::AboveBand {
                at: Cell::new(1, 4)
            })
        );
        assert_eq!(validate(&t, Kind::EvenExtended, 2), Ok(()));
        let t = Tableau::from_cols(2, &[1, 1, 1, 2]).unwrap();
        assert_eq!(
            validate(&t, Kind::EvenExtended, 2),
            Err(Violation::ColumnCount { col: 1, points: 3 })
        );
    }

    #[test]
    fn odd_empty_row_rules() {
        let t = Tableau::from_cols(1, &[1, 0, 1]).unwrap();
        assert_eq!(validate(&t, Kind::OddExtended, 1), Ok(()));
        let t = Tableau::from_cols(2, &[1, 0, 1, 2, 2]).unwrap();
        assert_eq!(
            validate(&t, Kind::OddExtended, 2),
            Err(Violation::EmptyRow { row: 2 })
        );
        let t = Tableau::from_cols(2, &[1, 1, 2, 2, 2]).unwrap();
        assert!(matches!(
            validate(&t, Kind::OddExtended, 2),
            Err(Violation::ColumnCount { .. })
        ));
    }

    #[test]
    fn shape_mismatch() {
        let t = Tableau::from_cols(1, &[1, 1]).unwrap();
        assert!(matches!(
            validate(&t, Kind::OddExtended, 1),
            Err(Violation::Shape { .. })
        ));
    }

    #[test]
    fn rotation_fixes_symmetric_examples() {
        let d = DellacConfig::from_cols(1, &[1, 1]).unwrap();
        assert_eq!(d.rotate_pi(), d);
        let d = DellacConfig::from_cols(2, &[1, 2, 1, 2]).unwrap();
        assert_eq!(d.rotate_pi(), d);
        assert!(d.is_symmetric());
        let d = DellacConfig::from_cols(3, &[1, 2, 2, 1, 3, 3]).unwrap();
        assert!(!d.is_symmetric());
        assert_eq!(d.rotate_pi().rotate_pi(), d);
    }

    #[test]
    fn free_points_of_the_three_size_two_tableaux() {
        let counts: Vec<usize> = [[1, 1, 2, 2], [1, 2, 1, 2], [1, 2, 2, 1]]
            .iter()
            .map(|c| EvenExtended::from_cols(2, c).unwrap().free_count())
            .collect();
        assert_eq!(counts, vec![2, 1, 2]);
        let t = EvenExtended::from_cols(2, &[1, 1, 2, 2]).unwrap();
        assert_eq!(t.free_points(), vec![Cell::new(2, 3), Cell::new(2, 4)]);
        let t = EvenExtended::from_cols(2, &[1, 2, 1, 2]).unwrap();
        assert_eq!(t.free_points(), vec![Cell::new(2, 4)]);
    }

    #[test]
    fn odd_free_rule_uses_the_shifted_line() {
        // (2:4) sits on the line i + j = 2n + 2 and counts; (2:3) does not.
        let t = OddExtended::from_cols(2, &[1, 1, 2, 2, 0]).unwrap();
        assert_eq!(t.free_points(), vec![Cell::new(2, 4)]);
    }

    #[test]
    fn deleting_the_empty_row() {
        let t = OddExtended::from_cols(1, &[1, 0, 1]).unwrap();
        let e = t.delete_empty_row();
        assert_eq!(e.tableau(), &Tableau::from_cols(1, &[1, 1]).unwrap());
        assert_eq!(e.insert_empty_row(2).unwrap(), t);
        assert!(e.insert_empty_row(1).is_err());
    }

    #[test]
    fn cell_text_round_trip() {
        let c: Cell = "7:11".parse().unwrap();
        assert_eq!(c, Cell::new(7, 11));
        assert_eq!(c.to_string(), "7:11");
        assert!("7-11".parse::<Cell>().is_err());
    }

    #[test]
    fn labels_must_cover_exactly_the_free_points() {
        let t = EvenExtended::from_cols(2, &[1, 2, 1, 2]).unwrap();
        let ok = BTreeMap::from([(Cell::new(2, 4), true)]);
        assert!(Labeled::new(t.clone(), ok).is_ok());
        let bad = BTreeMap::from([(Cell::new(1, 3), true)]);
        assert!(matches!(
            Labeled::new(t, bad),
            Err(Error::LabelDomain(_))
        ));
    }
}
