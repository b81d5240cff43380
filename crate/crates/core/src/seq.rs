//! The polynomial families `D_n`, `P_n`, their coefficient triangle, the
//! derived integer sequences and the two alternative formulas for `P_n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enumerate::{enum_sp, SurjectivePistol};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolySeries};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `D_0 = 1`, `D_{n+1}(x) = (x+1)(x+2) D_n(x+2) - x(x+1) D_n(x)`.
pub fn d_poly(n: usize) -> Poly {
    let a = &Poly::linear(1) * &Poly::linear(2);
    let b = &Poly::x() * &Poly::linear(1);
    let mut d = Poly::one();
    for _ in 0..n {
        d = &(&a * &d.shift_compose(&big(2))) - &(&b * &d);
    }
    d
}

/// `P_1 = 1`, `P_{n+1}(x) = (x+2)(x+1)/2 P_n(x+2) - x(x-1)/2 P_n(x)`.
///
/// The two products are only integer-valued separately, so the halving is
/// applied to their difference, which is checked to be even coefficientwise.
pub fn p_poly(n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::SizeTooSmall { min: 1, got: 0 });
    }
    let a = &Poly::linear(2) * &Poly::linear(1);
    let b = &Poly::x() * &Poly::linear(-1);
    let two = big(2);
    let mut p = Poly::one();
    for m in 1..n {
        let diff = &(&a * &p.shift_compose(&two)) - &(&b * &p);
        p = diff
            .div_exact(&two)
            .ok_or_else(|| Error::Integrity(format!("odd coefficient while halving P_{}", m + 1)))?;
    }
    Ok(p)
}

fn binom(n: usize, k: isize) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = k as usize;
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Rows `1..=nmax` of the coefficient triangle, built from its three recurrences.
/// Entry `[n - 1][k]` is `c_{n,k}`.
pub fn c_triangle(nmax: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(nmax);
    if nmax == 0 {
        return rows;
    }
    rows.push(vec![BigInt::one()]);
    for n in 2..=nmax {
        let prev = &rows[n - 2];
        let mut row = vec![BigInt::zero(); n];
        row[0] = (0..=n - 2).map(|i| (BigInt::one() << i) * &prev[i]).sum();
        for k in 1..=n - 2 {
            let mut acc = BigInt::from(k + 1) * &prev[k - 1];
            for i in k..=n - 2 {
                let w = binom(i + 1, k as isize) + 2 * binom(i + 1, k as isize - 1);
                acc += (BigInt::one() << (i - k)) * w * &prev[i];
            }
            row[k] = acc;
        }
        row[n - 1] = BigInt::from(n) * &prev[n - 2];
        rows.push(row);
    }
    rows
}

/// `l_n = P_n(1)` for `n >= 1`, `l_0 = 1`.
pub fn l_seq(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    Ok(p_poly(n)?.eval_int(&BigInt::one()))
}

/// `r_n = 2 P_n(2)` for `n >= 1`, `r_0 = 1`.
pub fn r_seq(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    Ok(2 * p_poly(n)?.eval_int(&big(2)))
}

/// `D_n(x) / 2^n` at an integer point; `l_n` at 0 and `r_n` at 1.
pub fn d_scaled(n: usize, x: i64) -> Result<BigInt> {
    let v = d_poly(n).eval_int(&big(x));
    let den = BigInt::one() << n;
    if !(&v % &den).is_zero() {
        return Err(Error::Integrity(format!("D_{n}({x}) is not divisible by 2^{n}")));
    }
    Ok(v / den)
}

pub fn d_eval(n: usize, x: &BigRational) -> BigRational {
    d_poly(n).eval_rational(x)
}

fn half(sign: i64) -> BigRational {
    BigRational::new(big(sign), big(2))
}

/// `L_n`, the value of `D_n` at `-1/2`: 1, 1, 4, 46, 1024, ...
pub fn median_l(n: usize) -> Result<BigInt> {
    integral(d_eval(n, &half(-1)), "L")
}

/// `R_n`, the value of `D_n` at `1/2`: 1, 3, 24, 402, ...
pub fn median_r(n: usize) -> Result<BigInt> {
    integral(d_eval(n, &half(1)), "R")
}

fn integral(v: BigRational, name: &str) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::Integrity(format!("{name} value {v} is not an integer")))
    }
}

/// Coefficient of the `k`-th level (from 1) of the continued fraction:
/// `m(x + 2m - 2)` at `k = 2m - 1` and `m(x + 2m - 1)` at `k = 2m`.
pub fn cf_level(k: usize) -> Poly {
    let m = k.div_ceil(2) as i64;
    let shift = if k % 2 == 1 { 2 * m - 2 } else { 2 * m - 1 };
    Poly::linear(shift).scale(&big(m))
}

/// Expands the fraction with `depth` levels, truncated after `t^order`.
pub fn cf_expand(order: usize, depth: usize) -> PolySeries {
    let mut f = PolySeries::one(order);
    for k in (1..=depth).rev() {
        let u = PolySeries::linear_t(cf_level(k), order).mul(&f);
        f = u.geometric();
    }
    f
}

/// The continued fraction through `t^order`, checked stable against a deeper expansion.
pub fn cf_series(order: usize) -> Result<PolySeries> {
    if order == 0 {
        return Err(Error::SizeTooSmall { min: 1, got: 0 });
    }
    let s = cf_expand(order, 2 * order + 2);
    if s != cf_expand(order, 2 * order + 4) {
        return Err(Error::Integrity(format!(
            "continued fraction not stable through order {order}"
        )));
    }
    Ok(s)
}

/// `(max(f), fd(f))`.
pub fn pistol_stats(f: &SurjectivePistol) -> (usize, usize) {
    (f.max_points(), f.doubled_fixed_points())
}

/// `sum over SP_n of 2^{n-1-max-fd} x^max`.
pub fn p_via_pistols(n: usize) -> Result<Poly> {
    let mut counts = vec![BigInt::zero(); n];
    for f in enum_sp(n)? {
        let (m, fd) = pistol_stats(&f);
        let e = (n - 1)
            .checked_sub(m + fd)
            .ok_or_else(|| Error::Integrity(format!("negative exponent for pistol {:?}", f.values())))?;
        counts[m] += BigInt::one() << e;
    }
    Ok(Poly::from_coeffs(counts))
}

/// `P_n` read off the continued fraction.
pub fn p_via_cf(n: usize) -> Result<Poly> {
    let s = cf_series(n)?;
    let xp = &s.terms[n];
    if !xp.coeff(0).is_zero() {
        return Err(Error::Integrity(format!("t^{n} coefficient not divisible by x")));
    }
    Ok(Poly::from_coeffs(xp.coeffs()[1..].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| big(x)).collect()
    }

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn first_p_polynomials() {
        assert_eq!(p_poly(1).unwrap(), p(&[1]));
        assert_eq!(p_poly(2).unwrap(), p(&[1, 2]));
        assert_eq!(p_poly(3).unwrap(), p(&[5, 10, 6]));
        assert_eq!(p_poly(4).unwrap(), p(&[49, 110, 84, 24]));
        assert_eq!(p_poly(5).unwrap(), p(&[797, 1954, 1758, 720, 120]));
    }

    #[test]
    fn d_factors_through_p() {
        for n in 1..=8 {
            let rhs = (&Poly::linear(1) * &p_poly(n).unwrap().shift_compose(&big(1)))
                .scale(&(BigInt::one() << n));
            assert_eq!(d_poly(n), rhs);
        }
    }

    #[test]
    fn triangle_matches_p() {
        let tri = c_triangle(8);
        assert_eq!(tri[1], ints(&[1, 2]));
        assert_eq!(tri[3], ints(&[49, 110, 84, 24]));
        let mut fact = BigInt::one();
        for n in 1..=8 {
            fact *= n;
            assert_eq!(tri[n - 1], p_poly(n).unwrap().coeffs().to_vec());
            assert_eq!(tri[n - 1][n - 1], fact);
        }
    }

    #[test]
    fn integer_sequences() {
        let l: Vec<BigInt> = (0..5).map(|n| l_seq(n).unwrap()).collect();
        assert_eq!(l, ints(&[1, 1, 3, 21, 267]));
        let r: Vec<BigInt> = (0..5).map(|n| r_seq(n).unwrap()).collect();
        assert_eq!(r, ints(&[1, 2, 10, 98, 1594]));
        for n in 0..=8 {
            assert_eq!(d_scaled(n, 0).unwrap(), l_seq(n).unwrap());
            assert_eq!(d_scaled(n, 1).unwrap(), r_seq(n).unwrap());
        }
        for n in 1..=8 {
            let next0 = p_poly(n + 1).unwrap().eval_int(&BigInt::zero());
            assert_eq!(r_seq(n).unwrap(), 2 * next0);
        }
    }

    #[test]
    fn median_euler_numbers() {
        let l: Vec<BigInt> = (0..5).map(|n| median_l(n).unwrap()).collect();
        assert_eq!(l, ints(&[1, 1, 4, 46, 1024]));
        let r: Vec<BigInt> = (0..4).map(|n| median_r(n).unwrap()).collect();
        assert_eq!(r, ints(&[1, 3, 24, 402]));
    }

    #[test]
    fn continued_fraction_levels() {
        let want = [p(&[0, 1]), p(&[1, 1]), p(&[4, 2]), p(&[6, 2]), p(&[12, 3]), p(&[15, 3])];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(&cf_level(k + 1), w);
        }
    }

    #[test]
    fn continued_fraction_gives_x_p() {
        let s = cf_series(7).unwrap();
        assert_eq!(s.terms[0], Poly::one());
        for k in 1..=7 {
            assert_eq!(s.terms[k], &Poly::x() * &p_poly(k).unwrap());
        }
    }

    #[test]
    fn pistols_give_p() {
        let sp = enum_sp(2).unwrap();
        let stats: Vec<(usize, usize)> = sp.iter().map(pistol_stats).collect();
        assert_eq!(stats, vec![(0, 1), (1, 0), (1, 0)]);
        for n in 1..=5 {
            assert_eq!(p_via_pistols(n).unwrap(), p_poly(n).unwrap());
        }
    }
}
