use std::fmt;
use std::ops::{Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use crate::{Integer, Rational};

/// Commutative ring with identity, as needed by the polynomial and Lucas
/// machinery. Blanket-implemented for anything with the right operators.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Send
        + Sync
{
}

/// A ring that the rationals embed into.
pub trait Scalar: Ring {
    fn from_rational(q: &Rational) -> Self;

    fn from_integer(v: &Integer) -> Self {
        Self::from_rational(&Rational::from_integer(v.clone()))
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(Integer::from(v)))
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

// Lossy; handy for plotting or quick numeric checks of exact results.
impl Scalar for f64 {
    fn from_rational(q: &Rational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn from_rational(q: &Rational) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }
}

/// `base^e` by repeated squaring; `base^0 = 1` for every base, zero included.
pub fn pow<R: Ring>(base: &R, e: u32) -> R {
    num_traits::pow::pow(base.clone(), e as usize)
}
