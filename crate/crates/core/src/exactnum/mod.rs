//! Exact arithmetic: rationals, imaginary quadratic fields, dense
//! polynomials and binomial coefficients.

mod binomial;
mod poly;
mod quadratic;
mod rational;
mod ring;
mod sum;

pub use binomial::{binomial, PascalTable};
pub use poly::Polynomial;
pub use quadratic::{Eisenstein, Gaussian, MinusOne, MinusThree, Quadratic, Radicand};
pub use rational::{int, is_canonical, parse_rational, pow_signed, rat};
pub use ring::{pow, Ring, Scalar};
pub use sum::RationalSum;
