//! Exact Bernoulli and Euler numbers and polynomials.
//!
//! Values are computed two ways: by the classic defining recurrences, and by
//! lacunary recurrences that only consult every sixth (or fourth) earlier
//! term. Every gap identity is evaluated over exact rationals, using the
//! Gaussian and Eisenstein quadratic fields for the intermediate powers of
//! `i` and `ω`, and the [`verify`] engine checks them over parameter ranges.
//!
//! The arithmetic layer is generic over the coefficient ring ([`Scalar`]);
//! the aliases below pin the concrete rings used throughout.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod lacunary;
pub mod lucas;
pub mod seqcore;
pub mod verify;

pub use error::{Error, Result};
pub use seqcore::SequenceCache;
pub use exactnum::{
    binomial, parse_rational, Eisenstein, Gaussian, MinusOne, MinusThree, Polynomial, Quadratic,
    Radicand, Ring, Scalar,
};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Reduced fraction of two [`Integer`]s with a positive denominator.
pub type Rational = num_rational::BigRational;
/// `a + b·i` with rational parts.
pub type GaussianRational = Quadratic<Rational, MinusOne>;
/// `a + b·√−3` with rational parts; houses `ω`.
pub type EisensteinRational = Quadratic<Rational, MinusThree>;
/// Polynomial in `x` over the rationals.
pub type RatPoly = Polynomial<Rational>;
/// Polynomial in `x` over `Q(i)`.
pub type GaussianPoly = Polynomial<GaussianRational>;
/// Polynomial in `x` over `Q(√−3)`.
pub type EisensteinPoly = Polynomial<EisensteinRational>;
