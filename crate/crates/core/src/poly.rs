//! Dense univariate polynomials over arbitrary-precision integers, and
//! truncated power series whose coefficients are such polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// `coeffs[k]` is the coefficient of `x^k`; no trailing zeros, so zero is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::from_coeffs(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// `x + a`.
    pub fn linear(a: impl Into<BigInt>) -> Self {
        Poly::from_coeffs(vec![a.into(), BigInt::one()])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `d`, or `None` if some coefficient is not a multiple.
    pub fn div_exact(&self, d: &BigInt) -> Option<Poly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Poly::from_coeffs(out))
    }

    /// `P(x + a)`, by binomial expansion.
    pub fn shift_compose(&self, a: &BigInt) -> Poly {
        let d = self.coeffs.len();
        let mut out = vec![BigInt::zero(); d];
        // Pascal rows: binom[k] holds C(m, k) for the current m.
        let mut binom = vec![BigInt::zero(); d];
        for (m, c) in self.coeffs.iter().enumerate() {
            binom[m] = BigInt::one();
            for k in (1..m).rev() {
                let prev = binom[k - 1].clone();
                binom[k] += prev;
            }
            let mut apow = BigInt::one();
            for k in (0..=m).rev() {
                out[k] += c * &binom[k] * &apow;
                apow *= a;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Coefficients as decimal strings, the interchange format.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl fmt::Display for Poly {
    /// Highest degree first, e.g. `6x^2 + 10x + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

/// Power series in `t` truncated after `t^order`, with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolySeries {
    pub order: usize,
    pub terms: Vec<Poly>,
}

impl PolySeries {
    pub fn zero(order: usize) -> Self {
        PolySeries {
            order,
            terms: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = PolySeries::zero(order);
        s.terms[0] = Poly::one();
        s
    }

    /// `c * t`.
    pub fn linear_t(c: Poly, order: usize) -> Self {
        let mut s = PolySeries::zero(order);
        if order >= 1 {
            s.terms[1] = c;
        }
        s
    }

    pub fn add(&self, rhs: &PolySeries) -> PolySeries {
        let terms = self.terms.iter().zip(&rhs.terms).map(|(a, b)| a + b).collect();
        PolySeries {
            order: self.order,
            terms,
        }
    }

    pub fn mul(&self, rhs: &PolySeries) -> PolySeries {
        let mut out = PolySeries::zero(self.order);
        for (i, a) in self.terms.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.terms.iter().enumerate().take(self.order + 1 - i) {
                out.terms[i + j] = &out.terms[i + j] + &(a * b);
            }
        }
        out
    }

    /// `1 / (1 - self)`, requiring a zero constant term.
    pub fn geometric(&self) -> PolySeries {
        assert!(self.terms[0].is_zero(), "geometric series needs a zero constant term");
        let mut acc = PolySeries::one(self.order);
        let mut power = PolySeries::one(self.order);
        for _ in 0..self.order {
            power = power.mul(self);
            acc = acc.add(&power);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn shift_of_square() {
        assert_eq!(p(&[0, 0, 1]).shift_compose(&BigInt::from(2)), p(&[4, 4, 1]));
    }

    #[test]
    fn rational_evaluation() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            p(&[1, 2]).eval_rational(&half),
            BigRational::from_integer(2.into())
        );
    }

    #[test]
    fn product() {
        assert_eq!(&p(&[1, 2]) * &Poly::x(), p(&[0, 1, 2]));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[1, 0, 0]), p(&[1]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), Poly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[5, 10, 6]).to_string(), "6x^2 + 10x + 5");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn geometric_series() {
        let s = PolySeries::linear_t(Poly::one(), 4).geometric();
        assert!(s.terms.iter().all(|c| *c == Poly::one()));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|v| Poly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn shift_matches_evaluation(a in arb_poly(), s in -5i64..5, x in -5i64..5) {
            let shifted = a.shift_compose(&BigInt::from(s));
            prop_assert_eq!(shifted.eval_int(&BigInt::from(x)), a.eval_int(&BigInt::from(x + s)));
        }

        #[test]
        fn product_matches_evaluation(a in arb_poly(), b in arb_poly(), x in -5i64..5) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval_int(&x), a.eval_int(&x) * b.eval_int(&x));
        }

        #[test]
        fn sub_inverts_add(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
