//! Gap identities for Bernoulli and Euler polynomials, evaluated exactly on
//! both sides, and solvers that compute `B_n`, `E_n` from every sixth or
//! fourth earlier term only.
//!
//! Right-hand sides involving `ω` or `i` are built over `Q(√−3)` or `Q(i)`
//! and brought back to `Q[x]` with
//! [`Polynomial::reduce_to_rational`](crate::Polynomial::reduce_to_rational),
//! which fails loudly if an irrational part survives.

mod bernoulli6;
mod euler;
mod gaussian4;
mod instance;
mod lemmas;
mod solvers;

pub use bernoulli6::{
    delta_mn, eq15_pair, gap6_corollary_pair, gap6_scaled_closed_rhs, gap6_scaled_lhs, thm21_pair,
    thm22_pair,
};
pub use euler::{
    cor31_pair, cor32_pair, eq16_pair, thm31_pair, thm32_pair, thm33_pair, Thm32Variant,
};
pub use gaussian4::{
    cor28_pair, gap4_corollary_lhs, gap4_corollary_pair, gap4_scaled_closed_rhs, thm23_pair,
    thm24_pair, thm25_pair,
};
pub use instance::{IdentityInstance, Params, Value, ZPoint};
pub use lemmas::{lemma21, lemma31, lemma_pair, Lemma};
pub use solvers::{solve_bernoulli_gap6, solve_euler_gap4, solve_euler_gap6};

use crate::Rational;

/// `(−1)^e` as a rational.
pub(crate) fn sign(e: usize) -> Rational {
    crate::exactnum::int(if e % 2 == 0 { 1 } else { -1 })
}

pub(crate) fn two_pow(e: usize) -> Rational {
    crate::exactnum::pow(&crate::exactnum::int(2), e as u32)
}
