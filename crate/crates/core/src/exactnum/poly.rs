use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::binomial::binomial;
use super::quadratic::{Quadratic, Radicand};
use super::ring::{pow, Ring, Scalar};
use crate::error::{Error, Result};
use crate::Rational;

/// Dense polynomial in `x`, coefficients in ascending degree. The top stored
/// coefficient is never zero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^deg`.
    pub fn monomial(c: R, deg: usize) -> Self {
        let mut coeffs = vec![R::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `p(a·x)`.
    pub fn scale_var(&self, a: &R) -> Self {
        let mut f = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * f.clone());
            f = f * a.clone();
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        pow(self, e)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Scalar> Polynomial<R> {
    /// `p(x + c)`, expanded term by term: the coefficient of `x^j` is
    /// `Σ_{i≥j} p_i·C(i,j)·c^(i−j)`.
    pub fn shift(&self, c: &R) -> Self {
        let n = self.coeffs.len();
        let powers: Vec<R> = std::iter::successors(Some(R::one()), |p| Some(p.clone() * c.clone()))
            .take(n)
            .collect();
        let out = (0..n)
            .map(|j| {
                (j..n).fold(R::zero(), |acc, i| {
                    let b = R::from_integer(&binomial(i as u64, j as u64));
                    acc + self.coeffs[i].clone() * b * powers[i - j].clone()
                })
            })
            .collect();
        Self::new(out)
    }

    /// `p(a·x + b)`.
    pub fn compose_linear(&self, a: &R, b: &R) -> Self {
        self.shift(b).scale_var(a)
    }

    /// `(a·x + b)^e` by the binomial theorem.
    pub fn linear_power(a: &R, b: &R, e: u32) -> Self {
        let out = (0..=e)
            .map(|j| {
                R::from_integer(&binomial(e as u64, j as u64)) * pow(a, j) * pow(b, e - j)
            })
            .collect();
        Self::new(out)
    }

    /// `(x + c)^e`.
    pub fn shifted_power(c: &R, e: u32) -> Self {
        Self::linear_power(&R::one(), c, e)
    }
}

impl<D: Radicand> Polynomial<Quadratic<Rational, D>> {
    /// Drops the `√d` parts, which must all be zero.
    pub fn reduce_to_rational(&self) -> Result<Polynomial<Rational>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (degree, c) in self.coeffs.iter().enumerate() {
            if !c.b().is_zero() {
                return Err(Error::NonRealResidue { degree, coefficient: c.to_string() });
            }
            out.push(c.a().clone());
        }
        Ok(Polynomial::new(out))
    }
}

impl<D: Radicand> From<&Polynomial<Rational>> for Polynomial<Quadratic<Rational, D>> {
    fn from(p: &Polynomial<Rational>) -> Self {
        p.map(Quadratic::from_rational)
    }
}

impl<R: Ring> Add for Polynomial<R> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        Self::new(long)
    }
}

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(Neg::neg).collect() }
    }
}

impl<R: Ring> Sub for Polynomial<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for Polynomial<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<R: Ring> Zero for Polynomial<R> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Polynomial<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Scalar> Scalar for Polynomial<R> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            let neg = s.starts_with('-') && !s[1..].contains(' ');
            if neg {
                s.remove(0);
            }
            if s.contains(' ') {
                s = format!("({s})");
            }
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = deg > 0 && c.is_one();
            let neg_unit = deg > 0 && (-c.clone()).is_one();
            if !(unit || neg_unit) {
                write!(f, "{s}")?;
                if deg > 0 {
                    write!(f, "*")?;
                }
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polynomial").field(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::{EisensteinPoly, EisensteinRational as Eis, RatPoly};
    use proptest::prelude::*;

    fn qp(cs: &[i64]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn trims_and_degree() {
        assert_eq!(qp(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(qp(&[0, 0]).degree(), None);
        assert!(qp(&[0]).is_zero());
        assert_eq!(qp(&[3, 0, 1]).degree(), Some(2));
    }

    #[test]
    fn shift_x_squared_by_minus_one() {
        let p = RatPoly::monomial(int(1), 2);
        assert_eq!(p.shift(&int(-1)), qp(&[1, -2, 1]));
    }

    #[test]
    fn shift_of_constant_is_constant() {
        assert_eq!(qp(&[5]).shift(&rat(7, 3)), qp(&[5]));
        let w = Eis::omega();
        assert_eq!(EisensteinPoly::constant(Eis::from_i64(5)).shift(&w), EisensteinPoly::constant(Eis::from_i64(5)));
    }

    #[test]
    fn shift_x_cubed_by_omega() {
        // x³ + 3ωx² + 3ω²x + 1 with ω² = −1 − ω
        let w = Eis::omega();
        let w2 = Eis::from_i64(-1) - w.clone();
        let expected = EisensteinPoly::new(vec![
            Eis::one(),
            Eis::from_i64(3) * w2,
            Eis::from_i64(3) * w.clone(),
            Eis::one(),
        ]);
        assert_eq!(EisensteinPoly::monomial(Eis::one(), 3).shift(&w), expected);
    }

    #[test]
    fn reduce_conjugate_sums() {
        let w = Eis::omega();
        let w2 = Eis::omega_squared();
        let s = EisensteinPoly::shifted_power(&w, 1) + EisensteinPoly::shifted_power(&w2, 1);
        assert_eq!(s.reduce_to_rational().unwrap(), qp(&[-1, 2]));
        let s = EisensteinPoly::shifted_power(&w, 3) + EisensteinPoly::shifted_power(&w2, 3);
        assert_eq!(s.reduce_to_rational().unwrap(), qp(&[2, -3, -3, 2]));
    }

    #[test]
    fn reduce_rejects_irrational_part() {
        let p = EisensteinPoly::shifted_power(&Eis::omega(), 1);
        match p.reduce_to_rational() {
            Err(Error::NonRealResidue { degree: 0, .. }) => {}
            other => panic!("expected NonRealResidue at degree 0, got {other:?}"),
        }
    }

    #[test]
    fn linear_power_matches_repeated_product() {
        let lin = qp(&[-1, 2]);
        let mut acc = RatPoly::one();
        for e in 0..8u32 {
            assert_eq!(RatPoly::linear_power(&int(2), &int(-1), e), acc);
            acc = acc * lin.clone();
        }
    }

    #[test]
    fn compose_linear_evaluates_consistently() {
        let p = qp(&[1, -3, 0, 2]);
        let q = p.compose_linear(&rat(1, 2), &rat(-1, 3));
        for x in [-2i64, 0, 1, 5] {
            let x = int(x);
            assert_eq!(q.eval(&x), p.eval(&(rat(1, 2) * x.clone() + rat(-1, 3))));
        }
    }

    #[test]
    fn display() {
        assert_eq!(RatPoly::new(vec![rat(1, 6), int(-1), int(1)]).to_string(), "x^2 - x + 1/6");
        assert_eq!(qp(&[0, -1]).to_string(), "-x");
        assert_eq!(qp(&[0, -2]).to_string(), "-2*x");
        assert_eq!(qp(&[]).to_string(), "0");
        assert_eq!(RatPoly::new(vec![int(0), rat(-1, 2), rat(1, 2)]).to_string(), "1/2*x^2 - 1/2*x");
    }

    #[test]
    fn float_coefficients() {
        let p = Polynomial::<f64>::new(vec![1.0, 0.0, 1.0]);
        assert_eq!(p.shift(&1.0).coeffs(), &[2.0, 2.0, 1.0]);
        assert_eq!(p.eval(&0.5), 1.25);
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec((-9i64..9, 1i64..4), 0..7)
            .prop_map(|v| RatPoly::new(v.into_iter().map(|(a, b)| rat(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn shift_round_trips(p in small_poly(), a in -5i64..5, b in 1i64..4) {
            let c = rat(a, b);
            prop_assert_eq!(p.shift(&c).shift(&-c), p);
        }

        #[test]
        fn shift_agrees_with_evaluation(p in small_poly(), a in -5i64..5, x in -5i64..5) {
            let c = int(a);
            prop_assert_eq!(p.shift(&c).eval(&int(x)), p.eval(&(int(x) + c)));
        }

        #[test]
        fn product_evaluates_pointwise(p in small_poly(), q in small_poly(), x in -4i64..4) {
            let x = int(x);
            prop_assert_eq!((p.clone() * q.clone()).eval(&x), p.eval(&x) * q.eval(&x));
        }
    }
}
