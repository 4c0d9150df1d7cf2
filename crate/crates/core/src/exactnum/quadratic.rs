use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ring::{pow, Scalar};
use crate::Rational;

/// Squarefree negative `d` selecting the field `Q(√d)`.
pub trait Radicand:
    Copy + Default + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static
{
    const D: i64;
}

/// `d = −1`: the Gaussian field `Q(i)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct MinusOne;

/// `d = −3`: the Eisenstein field `Q(ω)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct MinusThree;

impl Radicand for MinusOne {
    const D: i64 = -1;
}

impl Radicand for MinusThree {
    const D: i64 = -3;
}

/// `a + b·√d`. The radicand is part of the type, so elements of different
/// fields never meet in one expression.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quadratic<T, D> {
    a: T,
    b: T,
    _field: PhantomData<D>,
}

pub type Gaussian<T> = Quadratic<T, MinusOne>;
pub type Eisenstein<T> = Quadratic<T, MinusThree>;

impl<T, D: Radicand> Quadratic<T, D> {
    pub fn new(a: T, b: T) -> Self {
        Self { a, b, _field: PhantomData }
    }

    pub fn radicand() -> i64 {
        D::D
    }

    /// Rational part.
    pub fn a(&self) -> &T {
        &self.a
    }

    /// Coefficient of `√d`.
    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn into_parts(self) -> (T, T) {
        (self.a, self.b)
    }
}

impl<T: Scalar, D: Radicand> Quadratic<T, D> {
    pub fn from_base(a: T) -> Self {
        Self::new(a, T::zero())
    }

    /// Embedded element with no `√d` part.
    pub fn is_base(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// `a² − d·b²`, the product with the conjugate.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - T::from_i64(D::D) * self.b.clone() * self.b.clone()
    }

    pub fn pow(&self, e: u32) -> Self {
        pow(self, e)
    }

    /// `z^e + conj(z)^e`. The `√d` parts cancel; a survivor is a bug.
    pub fn trace_power(&self, e: u32) -> T {
        let s = self.pow(e) + self.conj().pow(e);
        assert!(s.b.is_zero(), "trace has nonzero irrational part {:?}", s.b);
        s.a
    }
}

impl<T: Scalar> Gaussian<T> {
    pub fn i() -> Self {
        Self::new(T::zero(), T::one())
    }
}

impl<T: Scalar> Eisenstein<T> {
    /// `(−1 + √−3)/2`.
    pub fn omega() -> Self {
        let half = T::from_rational(&Rational::new(1.into(), 2.into()));
        Self::new(-half.clone(), half)
    }

    /// `ω² = conj(ω) = −1 − ω`.
    pub fn omega_squared() -> Self {
        Self::omega().conj()
    }
}

impl<T: Scalar, D: Radicand> Add for Quadratic<T, D> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: Scalar, D: Radicand> Sub for Quadratic<T, D> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: Scalar, D: Radicand> Neg for Quadratic<T, D> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<T: Scalar, D: Radicand> Mul for Quadratic<T, D> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        // (a + b√d)(a' + b'√d) = (aa' + bb'd) + (ab' + a'b)√d
        let a = self.a.clone() * rhs.a.clone() + T::from_i64(D::D) * self.b.clone() * rhs.b.clone();
        let b = self.a * rhs.b + rhs.a * self.b;
        Self::new(a, b)
    }
}

impl<T: Scalar, D: Radicand> Zero for Quadratic<T, D> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Scalar, D: Radicand> One for Quadratic<T, D> {
    fn one() -> Self {
        Self::new(T::one(), T::zero())
    }
}

impl<T: Scalar, D: Radicand> Scalar for Quadratic<T, D> {
    fn from_rational(q: &Rational) -> Self {
        Self::from_base(T::from_rational(q))
    }
}

impl<T: fmt::Display + Zero, D: Radicand> fmt::Display for Quadratic<T, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let b = self.b.to_string();
        if self.a.is_zero() {
            return write!(f, "{b}*sqrt({})", D::D);
        }
        match b.strip_prefix('-') {
            Some(mag) => write!(f, "{} - {mag}*sqrt({})", self.a, D::D),
            None => write!(f, "{} + {b}*sqrt({})", self.a, D::D),
        }
    }
}

impl<T: fmt::Debug, D: Radicand> fmt::Debug for Quadratic<T, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}*sqrt({}))", self.a, self.b, D::D)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::{EisensteinRational as Eis, GaussianRational as Gau};
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> Gau {
        Gau::new(int(a), int(b))
    }

    #[test]
    fn one_plus_i_to_the_fourth() {
        // repeated multiplication oracle
        let z = g(1, 1);
        let slow = z.clone() * z.clone() * z.clone() * z.clone();
        assert_eq!(slow, g(-4, 0));
        assert_eq!(z.pow(4), slow);
    }

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let w = Eis::omega();
        assert_eq!(w.pow(3), Eis::one());
        assert_eq!(Eis::one() + w.clone() + w.pow(2), Eis::zero());
        assert_eq!(w.pow(2), Eis::omega_squared());
        assert_eq!(w.norm(), int(1));
    }

    #[test]
    fn zeroth_power_is_one() {
        assert_eq!(g(0, 0).pow(0), Gau::one());
        assert_eq!(g(3, -7).pow(0), Gau::one());
    }

    #[test]
    fn trace_powers() {
        assert_eq!(Eis::omega().trace_power(3), int(2));
        assert_eq!(g(1, 2).trace_power(2), int(-6));
        // 1 + 3ω, whose trace powers are V_n(1, 7)
        let z = Eis::new(rat(-1, 2), rat(3, 2));
        assert_eq!(z.trace_power(4), int(71));
    }

    #[test]
    fn display() {
        assert_eq!(Eis::omega().to_string(), "-1/2 + 1/2*sqrt(-3)");
        assert_eq!(g(2, -1).to_string(), "2 - 1*sqrt(-1)");
        assert_eq!(Gau::i().to_string(), "1*sqrt(-1)");
        assert_eq!(g(5, 0).to_string(), "5");
    }

    proptest! {
        #[test]
        fn trace_matches_rational_part_of_sum(a in -20i64..20, b in 1i64..5, c in -20i64..20, d in 1i64..5, e in 0u32..25) {
            let z = Eis::new(rat(a, b), rat(c, d));
            let s = z.pow(e) + z.conj().pow(e);
            prop_assert!(s.b().is_zero());
            prop_assert_eq!(z.trace_power(e), s.a().clone());
        }

        #[test]
        fn conj_is_multiplicative(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9) {
            let (x, y) = (g(a, b), g(c, d));
            prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
            prop_assert_eq!(x.clone() * x.conj(), Gau::from_base(x.norm()));
        }
    }
}
