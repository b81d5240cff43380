//! Exhaustive checks of the surjections `Π` and `P` at one size.
//!
//! Each census runs the forward map over every tableau, groups the images,
//! and compares the groups with the fiber statements; independently it builds
//! every fiber and maps it back. Failures are counted and a few are kept as
//! readable examples, never raised.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bijections::{label_functions, p_fiber, p_forward, pi_fiber, pi_forward};
use crate::enumerate::{enum_te, enum_to};
use crate::error::Result;
use crate::grid::{Cell, EvenExtended, OddExtended, Tableau};
use crate::poly::Poly;
use crate::stats::{OddPathReport, PathReport};

const KEEP: usize = 5;

/// Failure count with a few examples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub examples: Vec<String>,
}

impl Tally {
    fn pass(&mut self) {
        self.checked += 1;
    }

    fn fail(&mut self, what: impl FnOnce() -> String) {
        self.checked += 1;
        self.failed += 1;
        if self.examples.len() < KEEP {
            self.examples.push(what());
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(what)
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn rows(t: &Tableau) -> String {
    let r: Vec<String> = t.rows().iter().map(|c| c.map_or("0".into(), |c| c.to_string())).collect();
    format!("[{}]", r.join(","))
}

fn cells(x: &[Cell]) -> String {
    let v: Vec<String> = x.iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(","))
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Results of [`pi_census`] for `Π : T_n^e -> T_{n-1}^e`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PiCensus {
    pub n: usize,
    /// `Π(T)` is defined.
    pub forward: Tally,
    /// `max(Π(T)) = max(T) + max'(T) - 2`.
    pub max_identity: Tally,
    /// Per `(T_0, k)`: the preimages of maximum `k` split as the fiber-partition statement says.
    pub partition: Tally,
    /// Per `T_0`: the weighted preimage sum matches the recurrence terms.
    pub weights: Tally,
    /// Per `(T_0, X)`: the fiber is built and maps back onto `(T_0, X)`.
    pub fibers: Tally,
    /// Built fibers cover `T_n^e` exactly once.
    pub cover: Tally,
    /// `e_{n,k}` read off `T_n^e` satisfies the three triangle recurrences in terms of `e_{n-1,.}`.
    pub recurrence: Tally,
}

impl PiCensus {
    pub fn ok(&self) -> bool {
        [&self.forward, &self.max_identity, &self.partition, &self.weights, &self.fibers, &self.cover, &self.recurrence]
            .iter()
            .all(|t| t.ok())
    }
}

struct Pre {
    t: EvenExtended,
    max: usize,
    fr: usize,
    above_free: bool,
    penultimate_rg: bool,
}

/// `e_{n,k}`: the coefficients of `sum 2^{fr - 1 - max} x^max` over `T_n^e`.
fn e_row(reports: &[PathReport], n: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n];
    for r in reports {
        e[r.max] += BigInt::one() << (r.fr - 1 - r.max);
    }
    e
}

/// Checks `Π` exhaustively at size `n >= 2`.
pub fn pi_census(n: usize) -> Result<PiCensus> {
    let mut out = PiCensus {
        n,
        ..Default::default()
    };
    let mut groups: BTreeMap<EvenExtended, Vec<Pre>> = BTreeMap::new();
    let mut reports = Vec::new();
    for t in enum_te(n)? {
        let rep = PathReport::new(&t);
        match pi_forward(&t) {
            Ok(img) => {
                out.forward.pass();
                let want = rep.max + rep.primed.as_ref().expect("n >= 2").max;
                let got = PathReport::new(&img.tableau).max;
                out.max_identity.record(got + 2 == want, || {
                    format!("T = {}: max + max' - 2 = {}, max(Π(T)) = {got}", rows(&t), want as isize - 2)
                });
                let above = t.point(n + 1).expect("full row");
                let pre = Pre {
                    max: rep.max,
                    fr: rep.fr,
                    above_free: t.is_free(above),
                    penultimate_rg: rep.red.iter().chain(&rep.green).any(|p| p.col == n - 1),
                    t: t.clone(),
                };
                groups.entry(img.tableau).or_default().push(pre);
            }
            Err(e) => out.forward.fail(|| format!("T = {}: {e}", rows(&t))),
        }
        reports.push(rep);
    }

    let mut lower = Vec::new();
    let mut built: BTreeMap<EvenExtended, usize> = BTreeMap::new();
    for t0 in enum_te(n - 1)? {
        let rep0 = PathReport::new(&t0);
        let (i, fr0) = (rep0.max, rep0.fr);
        let pre = groups.remove(&t0).unwrap_or_default();
        for k in 0..=n - 1 {
            let class: Vec<&Pre> = pre.iter().filter(|p| p.max == k).collect();
            let count = |f: &dyn Fn(&Pre) -> bool| class.iter().filter(|p| f(p)).count();
            let (ok, want) = if k == 0 {
                (class.len() == 1 && count(&|p| p.fr == fr0) == 1, "1 element with fr(T_0) free points".to_string())
            } else if k == i + 1 {
                (
                    class.len() == i + 2 && count(&|p| p.fr == fr0 + 1) == i + 2,
                    format!("{} elements with fr(T_0) + 1 free points", i + 2),
                )
            } else if k <= i {
                let nk = count(&|p| p.above_free);
                let s1 = count(&|p| !p.above_free && !p.penultimate_rg && p.fr == fr0);
                let s3 = count(&|p| !p.above_free && p.penultimate_rg && p.fr == fr0);
                let lifted = count(&|p| p.above_free && p.fr == fr0 + 1);
                let b1 = binom(i + 1, k - 1);
                (
                    nk <= b1 && lifted == nk && s1 == binom(i + 1, k) && s3 == 2 * (b1 - nk) && class.len() == s1 + nk + s3,
                    format!("C({},{k}) + N_k + 2(C({},{}) - N_k) with N_k = {nk}", i + 1, i + 1, k - 1),
                )
            } else {
                (class.is_empty(), "no element".to_string())
            };
            out.partition.record(ok, || {
                let got: Vec<String> = class.iter().map(|p| rows(&p.t)).collect();
                format!("T_0 = {} (max {i}), k = {k}: expected {want}, got {} [{}]", rows(&t0), class.len(), got.join(" "))
            });
        }
        // Weighted sum over the preimages, against the terms of the recurrences.
        let mut got = vec![BigInt::zero(); n];
        for p in &pre {
            got[p.max] += BigInt::one() << (p.fr - 1 - p.max);
        }
        let base = BigInt::one() << (fr0 - 1 - i);
        let mut want = vec![BigInt::zero(); n];
        want[0] = BigInt::from(1u32) << (fr0 - 1);
        want[i + 1] = BigInt::from(i + 2) * &base;
        for k in 1..=i {
            want[k] = (BigInt::one() << (i - k)) * (binom(i + 1, k) + 2 * binom(i + 1, k - 1)) * &base;
        }
        out.weights.record(got == want, || {
            format!("T_0 = {}: weights {:?}, expected {:?}", rows(&t0), strs(&got), strs(&want))
        });

        let omax = rep0.omax_set();
        for mask in 0..(1u64 << omax.len()) - 1 {
            let x: Vec<Cell> = omax
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            match pi_fiber(&t0, &x) {
                Ok(fiber) => {
                    let mut bad = Vec::new();
                    for t in fiber.tableaux {
                        match pi_forward(&t) {
                            Ok(img) if img.tableau == t0 && img.x == x => {}
                            Ok(img) => bad.push(format!("{} maps to {} with X = {}", rows(&t), rows(&img.tableau), cells(&img.x))),
                            Err(e) => bad.push(format!("{}: {e}", rows(&t))),
                        }
                        *built.entry(t).or_default() += 1;
                    }
                    out.fibers.record(bad.is_empty(), || {
                        format!("T_0 = {}, X = {}: {}", rows(&t0), cells(&x), bad.join("; "))
                    });
                }
                Err(e) => out.fibers.fail(|| format!("T_0 = {}, X = {}: {e}", rows(&t0), cells(&x))),
            }
        }
        lower.push(rep0);
    }
    for (t, pre) in &groups {
        out.partition.fail(|| format!("{} is an image outside T_{}^e ({} preimages)", rows(t), n - 1, pre.len()));
    }

    for t in enum_te(n)? {
        match built.get(&t).copied().unwrap_or(0) {
            1 => out.cover.pass(),
            c => out.cover.fail(|| format!("{} is built {c} times", rows(&t))),
        }
    }

    let e = e_row(&reports, n);
    let e1 = e_row(&lower, n - 1);
    for (k, ek) in e.iter().enumerate() {
        let want: BigInt = if k == 0 {
            (0..n - 1).map(|i| (BigInt::one() << i) * &e1[i]).sum()
        } else if k == n - 1 {
            BigInt::from(n) * &e1[n - 2]
        } else {
            let mut acc = BigInt::from(k + 1) * &e1[k - 1];
            for i in k..=n - 2 {
                acc += (BigInt::one() << (i - k)) * (binom(i + 1, k) + 2 * binom(i + 1, k - 1)) * &e1[i];
            }
            acc
        };
        out.recurrence.record(*ek == want, || format!("e_{{{n},{k}}} = {ek}, recurrence gives {want}"));
    }
    Ok(out)
}

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Results of [`p_census`] for `P : T_n^e -> T_{n-1}^o`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PCensus {
    pub n: usize,
    /// `P(T)` is defined.
    pub forward: Tally,
    /// Per `T_0`: `|P^{-1}(T_0)| = 2^{v-g} 3^g`.
    pub sizes: Tally,
    /// Per `T_0`: the weighted preimage sum is `2^{fr-g} x^v (1+x)^g`.
    pub weights: Tally,
    /// Per `(T_0, l)`: `U^l(T_0)` is built, maps back onto `T_0` and has `fr(T_0) + 1` free points.
    pub fibers: Tally,
    /// Built fibers cover `T_n^e` exactly once.
    pub cover: Tally,
}

impl PCensus {
    pub fn ok(&self) -> bool {
        [&self.forward, &self.sizes, &self.weights, &self.fibers, &self.cover].iter().all(|t| t.ok())
    }
}

/// Checks `P` exhaustively at size `n >= 2`.
pub fn p_census(n: usize) -> Result<PCensus> {
    let mut out = PCensus {
        n,
        ..Default::default()
    };
    let mut groups: BTreeMap<OddExtended, Vec<PathReport>> = BTreeMap::new();
    for t in enum_te(n)? {
        match p_forward(&t) {
            Ok(t0) => {
                out.forward.pass();
                groups.entry(t0).or_default().push(PathReport::new(&t));
            }
            Err(e) => out.forward.fail(|| format!("T = {}: {e}", rows(&t))),
        }
    }
    let mut built: BTreeMap<EvenExtended, usize> = BTreeMap::new();
    for t0 in enum_to(n - 1)? {
        let rep0 = OddPathReport::new(&t0);
        let (v, g) = (rep0.v, rep0.g);
        let pre = groups.remove(&t0).unwrap_or_default();
        let size = (1usize << (v - g)) * 3usize.pow(g as u32);
        out.sizes.record(pre.len() == size, || {
            format!("T_0 = {}: {} preimages, expected 2^{} 3^{g} = {size}", rows(&t0), pre.len(), v - g)
        });
        let got: Poly = pre
            .iter()
            .map(|r| Poly::monomial(BigInt::one() << (r.fr - 1 - r.max), r.max))
            .sum();
        let want = &Poly::monomial(BigInt::one() << (rep0.fr - g), v) * &Poly::linear(1).pow(g as u32);
        out.weights.record(got == want, || format!("T_0 = {}: sum {got}, expected {want}", rows(&t0)));

        for l in label_functions(&t0) {
            let word = || format!("{l:?}");
            match p_fiber(&t0, &l) {
                Ok(t) => {
                    let back = p_forward(&t);
                    let fr_ok = t.free_count() == rep0.fr + 1;
                    out.fibers.record(back.as_ref() == Ok(&t0) && fr_ok, || match &back {
                        Ok(b) if *b != t0 => format!("T_0 = {}, l = {}: U^l = {} maps to {}", rows(&t0), word(), rows(&t), rows(b)),
                        Ok(_) => format!("T_0 = {}, l = {}: U^l = {} has {} free points", rows(&t0), word(), rows(&t), t.free_count()),
                        Err(e) => format!("T_0 = {}, l = {}: U^l = {}: {e}", rows(&t0), word(), rows(&t)),
                    });
                    *built.entry(t).or_default() += 1;
                }
                Err(e) => out.fibers.fail(|| format!("T_0 = {}, l = {}: {e}", rows(&t0), word())),
            }
        }
    }
    for (t, pre) in &groups {
        out.sizes.fail(|| format!("{} is an image outside T_{}^o ({} preimages)", rows(t), n - 1, pre.len()));
    }
    let all: BTreeSet<EvenExtended> = enum_te(n)?.collect();
    for t in &all {
        match built.get(t).copied().unwrap_or(0) {
            1 => out.cover.pass(),
            c => out.cover.fail(|| format!("{} is built {c} times", rows(t))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes_are_consistent() {
        let pi = pi_census(2).unwrap();
        assert!(pi.ok(), "{pi:?}");
        for n in 2..=3 {
            let p = p_census(n).unwrap();
            assert!(p.ok(), "{p:?}");
        }
    }

    #[test]
    fn forward_maps_are_total_through_five() {
        for n in 2..=5 {
            assert!(pi_census(n).unwrap().forward.ok(), "Π at n = {n}");
        }
    }
}
