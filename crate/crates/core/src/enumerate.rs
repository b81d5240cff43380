//! Exhaustive generation of every configuration kind and of surjective pistols.
//!
//! Generation backtracks over rows bottom to top, choosing the column of each
//! row's point under the remaining column capacities and the kind's diagonal
//! constraints. Symmetric configurations place a row and its mirror together.
//! Every stream is in ascending lexicographic order of the row encoding, with
//! an empty row sorting before any column.

use crate::error::{Error, Result};
use crate::grid::{
    Cell, DellacConfig, EvenExtended, Extended, Kind, Labeled, OddExtended, SymmetricDellac,
    Tableau,
};

#[derive(Clone, Debug)]
struct Search {
    kind: Kind,
    n: usize,
    rows: Vec<u8>,
    cap: Vec<u8>,
    empty_used: bool,
}

impl Search {
    fn new(kind: Kind, n: usize) -> Self {
        let (w, h) = kind.shape(n);
        let mut cap = vec![2u8; w + 1];
        cap[0] = 0;
        Search {
            kind,
            n,
            rows: vec![0; h],
            cap,
            empty_used: false,
        }
    }

    fn slots(&self) -> usize {
        match self.kind {
            Kind::Symmetric => self.n,
            _ => self.rows.len(),
        }
    }

    fn try_apply(&mut self, slot: usize, c: usize) -> bool {
        let n = self.n;
        let i = slot + 1;
        match self.kind {
            Kind::Symmetric => {
                if c == 0 || c > i || i > n + c {
                    return false;
                }
                let m = n + 1 - c;
                if c == m {
                    if self.cap[c] < 2 {
                        return false;
                    }
                } else if self.cap[c] == 0 || self.cap[m] == 0 {
                    return false;
                }
                self.cap[c] -= 1;
                self.cap[m] -= 1;
                self.rows[i - 1] = c as u8;
                self.rows[2 * n - i] = m as u8;
                true
            }
            _ => {
                if c == 0 {
                    if self.kind != Kind::OddExtended || i <= n || self.empty_used {
                        return false;
                    }
                    self.empty_used = true;
                    self.rows[i - 1] = 0;
                    return true;
                }
                if c > i || self.cap[c] == 0 {
                    return false;
                }
                if self.kind == Kind::Dellac && i > n + c {
                    return false;
                }
                self.cap[c] -= 1;
                // A Dellac column j must be complete once row N + j is placed.
                if self.kind == Kind::Dellac && i > n && self.cap[i - n] != 0 {
                    self.cap[c] += 1;
                    return false;
                }
                self.rows[i - 1] = c as u8;
                true
            }
        }
    }

    fn undo(&mut self, slot: usize) {
        let i = slot + 1;
        let c = self.rows[i - 1] as usize;
        match self.kind {
            Kind::Symmetric => {
                let m = self.n + 1 - c;
                self.cap[c] += 1;
                self.cap[m] += 1;
                self.rows[i - 1] = 0;
                self.rows[2 * self.n - i] = 0;
            }
            _ => {
                if c == 0 {
                    self.empty_used = false;
                } else {
                    self.cap[c] += 1;
                    self.rows[i - 1] = 0;
                }
            }
        }
    }

    fn snapshot(&self) -> Tableau {
        Tableau::from_raw(self.n, self.rows.clone())
    }
}

/// A fixed assignment of the first few slots, used to split a stream into
/// independent sub-streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prefix {
    choices: Vec<usize>,
}

impl Prefix {
    pub fn choices(&self) -> &[usize] {
        &self.choices
    }
}

/// All configurations of one kind and size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    kind: Kind,
    n: usize,
}

impl Enumeration {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeTooSmall { min: 1, got: 0 });
        }
        Ok(Enumeration { kind, n })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> Configs {
        Configs::start(Search::new(self.kind, self.n), &[])
    }

    pub fn iter_prefix(&self, prefix: &Prefix) -> Configs {
        Configs::start(Search::new(self.kind, self.n), &prefix.choices)
    }

    /// Every feasible assignment of the first `depth` slots, in stream order.
    /// Concatenating the sub-streams of the prefixes reproduces [`Enumeration::iter`].
    pub fn prefixes(&self, depth: usize) -> Vec<Prefix> {
        fn go(s: &mut Search, slot: usize, depth: usize, acc: &mut Vec<usize>, out: &mut Vec<Prefix>) {
            if slot == depth {
                out.push(Prefix {
                    choices: acc.clone(),
                });
                return;
            }
            for c in 0..=s.n {
                if s.try_apply(slot, c) {
                    acc.push(c);
                    go(s, slot + 1, depth, acc, out);
                    acc.pop();
                    s.undo(slot);
                }
            }
        }
        let mut s = Search::new(self.kind, self.n);
        let depth = depth.min(s.slots());
        let mut out = Vec::new();
        go(&mut s, 0, depth, &mut Vec::new(), &mut out);
        out
    }

    /// Smallest prefix split with at least `tasks` parts (or the deepest one).
    pub fn split(&self, tasks: usize) -> Vec<Prefix> {
        let slots = Search::new(self.kind, self.n).slots();
        let mut depth = 0;
        loop {
            let p = self.prefixes(depth);
            if p.len() >= tasks || depth >= slots {
                return p;
            }
            depth += 1;
        }
    }

    /// Visits every configuration, failing once more than `limit` would be produced.
    pub fn for_each_limited(&self, limit: usize, mut f: impl FnMut(&Tableau)) -> Result<usize> {
        let mut seen = 0;
        for t in self.iter() {
            if seen == limit {
                return Err(Error::LimitExceeded { limit });
            }
            f(&t);
            seen += 1;
        }
        Ok(seen)
    }
}

/// Iterative depth-first stream over one enumeration (or one prefix of it).
#[derive(Clone, Debug)]
pub struct Configs {
    search: Search,
    next_choice: Vec<usize>,
    depth: usize,
    floor: usize,
    done: bool,
}

impl Configs {
    fn start(mut search: Search, prefix: &[usize]) -> Self {
        let slots = search.slots();
        let mut done = false;
        for (slot, &c) in prefix.iter().enumerate() {
            if slot >= slots || !search.try_apply(slot, c) {
                done = true;
                break;
            }
        }
        let floor = prefix.len().min(slots);
        Configs {
            search,
            next_choice: vec![0; slots + 1],
            depth: floor,
            floor,
            done,
        }
    }
}

impl Iterator for Configs {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let slots = self.search.slots();
        let max_choice = self.search.n;
        loop {
            if self.depth == slots {
                let out = self.search.snapshot();
                if self.depth == self.floor {
                    self.done = true;
                } else {
                    self.depth -= 1;
                    self.search.undo(self.depth);
                }
                return Some(out);
            }
            let d = self.depth;
            let mut advanced = false;
            while self.next_choice[d] <= max_choice {
                let c = self.next_choice[d];
                self.next_choice[d] += 1;
                if self.search.try_apply(d, c) {
                    self.depth += 1;
                    self.next_choice[self.depth] = 0;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if d == self.floor {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.search.undo(self.depth);
            }
        }
    }
}

pub fn enum_dc(n: usize) -> Result<impl Iterator<Item = DellacConfig>> {
    Ok(Enumeration::new(Kind::Dellac, n)?
        .iter()
        .map(DellacConfig::new_unchecked))
}

pub fn enum_sdc(n: usize) -> Result<impl Iterator<Item = SymmetricDellac>> {
    Ok(Enumeration::new(Kind::Symmetric, n)?
        .iter()
        .map(SymmetricDellac::new_unchecked))
}

pub fn enum_te(n: usize) -> Result<impl Iterator<Item = EvenExtended>> {
    Ok(Enumeration::new(Kind::EvenExtended, n)?
        .iter()
        .map(EvenExtended::new_unchecked))
}

pub fn enum_to(n: usize) -> Result<impl Iterator<Item = OddExtended>> {
    Ok(Enumeration::new(Kind::OddExtended, n)?
        .iter()
        .map(OddExtended::new_unchecked))
}

/// All `2^fr` labelings of the free points of `t`.
pub fn enum_labeled<T: Extended>(t: &T) -> impl Iterator<Item = Labeled<T>> + '_ {
    let fr = t.free_count();
    (0..1u64 << fr).map(move |mask| Labeled::from_mask(t.clone(), mask))
}

/// Collects at most `limit` items, failing if the iterator has more.
pub fn take_limited<I: Iterator>(iter: I, limit: usize) -> Result<Vec<I::Item>> {
    let mut out = Vec::new();
    for item in iter {
        if out.len() == limit {
            return Err(Error::LimitExceeded { limit });
        }
        out.push(item);
    }
    Ok(out)
}

/// `|T_n^e| = (n+1)! n! / 2^n`.
pub fn even_extended_count(n: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    fact(n + 1) * fact(n) >> n
}

/// `|T_n^o| = ((n+1)!)^2 / 2^n`.
pub fn odd_extended_count(n: usize) -> u128 {
    even_extended_count(n) * (n as u128 + 1)
}

/// A surjection `f : [2n] -> {2, 4, ..., 2n}` with `f(j) >= j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurjectivePistol {
    values: Vec<usize>,
}

impl SurjectivePistol {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let len = values.len();
        if len == 0 || len % 2 != 0 {
            return Err(Error::Parse(format!("pistol needs an even positive length, got {len}")));
        }
        let mut hit = vec![false; len + 1];
        for (idx, &v) in values.iter().enumerate() {
            let j = idx + 1;
            if v % 2 != 0 || v < j || v > len {
                return Err(Error::Parse(format!("f({j}) = {v} is not admissible")));
            }
            hit[v] = true;
        }
        if let Some(miss) = (2..=len).step_by(2).find(|&v| !hit[v]) {
            return Err(Error::Parse(format!("value {miss} is not attained")));
        }
        Ok(SurjectivePistol { values })
    }

    pub fn n(&self) -> usize {
        self.values.len() / 2
    }

    /// `f(j)` for `j` in `1..=2n`.
    pub fn value(&self, j: usize) -> usize {
        self.values[j - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Number of `j <= 2n - 2` with `f(j) = 2n`.
    pub fn max_points(&self) -> usize {
        let top = self.values.len();
        self.values[..top - 2].iter().filter(|&&v| v == top).count()
    }

    /// Number of `j <= 2n - 2` with `f(j) = j` and `f(j') = j` for some `j' < j`.
    pub fn doubled_fixed_points(&self) -> usize {
        let top = self.values.len();
        (1..=top - 2)
            .filter(|&j| self.value(j) == j && self.values[..j - 1].contains(&j))
            .count()
    }
}

/// All surjective pistols of size `n` in lexicographic order.
pub fn enum_sp(n: usize) -> Result<Vec<SurjectivePistol>> {
    if n == 0 {
        return Err(Error::SizeTooSmall { min: 1, got: 0 });
    }
    fn go(j: usize, len: usize, f: &mut Vec<usize>, hits: &mut [u32], missing: usize, out: &mut Vec<SurjectivePistol>) {
        if j > len {
            if missing == 0 {
                out.push(SurjectivePistol { values: f.clone() });
            }
            return;
        }
        // Values below j can no longer be reached.
        if (2..j).step_by(2).any(|v| hits[v] == 0) {
            return;
        }
        if missing > len - j + 1 {
            return;
        }
        let start = if j % 2 == 0 { j } else { j + 1 };
        for v in (start..=len).step_by(2) {
            let fresh = hits[v] == 0;
            hits[v] += 1;
            f.push(v);
            go(j + 1, len, f, hits, missing - usize::from(fresh), out);
            f.pop();
            hits[v] -= 1;
        }
    }
    let len = 2 * n;
    let mut out = Vec::new();
    go(1, len, &mut Vec::with_capacity(len), &mut vec![0; len + 1], n, &mut out);
    Ok(out)
}

/// Rows of `p_{2n-j}`-style targets are handy in tests; exposed for the renderer.
pub fn cells_of(t: &Tableau) -> Vec<Cell> {
    t.points().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::validate;

    #[test]
    fn small_dellac_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enum_dc(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 7, 38, 295]);
        let only: Vec<_> = enum_dc(1).unwrap().collect();
        assert_eq!(only[0].tableau(), &Tableau::from_cols(1, &[1, 1]).unwrap());
    }

    #[test]
    fn symmetric_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enum_sdc(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 3, 10, 21]);
    }

    #[test]
    fn extended_counts_match_closed_forms() {
        for n in 1..=5 {
            assert_eq!(enum_te(n).unwrap().count() as u128, even_extended_count(n));
            assert_eq!(enum_to(n).unwrap().count() as u128, odd_extended_count(n));
        }
        assert_eq!(even_extended_count(4), 180);
        assert_eq!(odd_extended_count(2), 9);
    }

    #[test]
    fn streams_are_sorted_and_valid() {
        for kind in [Kind::Dellac, Kind::Symmetric, Kind::EvenExtended, Kind::OddExtended] {
            let e = Enumeration::new(kind, 4).unwrap();
            let all: Vec<Tableau> = e.iter().collect();
            for w in all.windows(2) {
                assert!(w[0].raw_rows() < w[1].raw_rows(), "{kind:?} not strictly increasing");
            }
            for t in &all {
                assert_eq!(validate(t, kind, 4), Ok(()));
            }
        }
    }

    #[test]
    fn prefixes_partition_the_stream() {
        for kind in [Kind::Dellac, Kind::Symmetric, Kind::EvenExtended, Kind::OddExtended] {
            let e = Enumeration::new(kind, 4).unwrap();
            let whole: Vec<Tableau> = e.iter().collect();
            for depth in 0..=4 {
                let joined: Vec<Tableau> =
                    e.prefixes(depth).iter().flat_map(|p| e.iter_prefix(p)).collect();
                assert_eq!(joined, whole, "{kind:?} depth {depth}");
            }
        }
    }

    #[test]
    fn limit_is_enforced() {
        let e = Enumeration::new(Kind::Dellac, 3).unwrap();
        assert_eq!(e.for_each_limited(7, |_| {}), Ok(7));
        assert_eq!(
            e.for_each_limited(6, |_| {}),
            Err(Error::LimitExceeded { limit: 6 })
        );
        assert!(take_limited(enum_dc(3).unwrap(), 3).is_err());
        assert_eq!(take_limited(enum_dc(3).unwrap(), 10).unwrap().len(), 7);
    }

    #[test]
    fn zero_size_is_rejected() {
        assert!(enum_dc(0).is_err());
        assert!(enum_sp(0).is_err());
    }

    #[test]
    fn labelings() {
        let t = EvenExtended::from_cols(2, &[1, 2, 1, 2]).unwrap();
        assert_eq!(enum_labeled(&t).count(), 2);
        let t = EvenExtended::from_cols(1, &[1, 1]).unwrap();
        let all: Vec<_> = enum_labeled(&t).collect();
        assert_eq!(all.len(), 2);
        let t = OddExtended::from_cols(1, &[1, 1, 0]).unwrap();
        let all: Vec<_> = enum_labeled(&t).collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].labels().is_empty());
        let total: usize = enum_te(2).unwrap().map(|t| enum_labeled(&t).count()).sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn pistols_of_size_two() {
        let sp = enum_sp(2).unwrap();
        let vals: Vec<&[usize]> = sp.iter().map(|f| f.values()).collect();
        assert_eq!(vals, vec![&[2, 2, 4, 4][..], &[2, 4, 4, 4], &[4, 2, 4, 4]]);
        let one = enum_sp(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].values(), &[2, 2]);
    }

    #[test]
    fn pistol_validation() {
        assert!(SurjectivePistol::new(vec![2, 2, 4, 4]).is_ok());
        assert!(SurjectivePistol::new(vec![4, 4, 4, 4]).is_err());
        assert!(SurjectivePistol::new(vec![2, 2, 2, 4]).is_err());
        assert!(SurjectivePistol::new(vec![2, 2, 3, 4]).is_err());
    }

    // Brute force over every map [2n] -> {2, 4, ..., 2n}.
    fn pistols_brute(n: usize) -> Vec<Vec<usize>> {
        let len = 2 * n;
        let mut out = Vec::new();
        let total = n.pow(len as u32);
        for code in 0..total {
            let mut c = code;
            let f: Vec<usize> = (0..len)
                .map(|_| {
                    let v = 2 * (c % n + 1);
                    c /= n;
                    v
                })
                .collect();
            let ok_bound = f.iter().enumerate().all(|(i, &v)| v > i);
            let ok_onto = (1..=n).all(|k| f.contains(&(2 * k)));
            if ok_bound && ok_onto {
                out.push(f);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn pistols_agree_with_brute_force() {
        for n in 1..=4 {
            let fast: Vec<Vec<usize>> = enum_sp(n).unwrap().into_iter().map(|f| f.values).collect();
            assert_eq!(fast, pistols_brute(n));
        }
        assert_eq!(pistols_brute(3).len(), 17);
    }
}
