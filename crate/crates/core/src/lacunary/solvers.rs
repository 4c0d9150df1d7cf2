//! Gap solvers. Each fills its chain `n mod g, n mod g + g, …, n` bottom-up,
//! so computing a term reads only earlier members of the same chain.

use num_traits::{One, Zero};

use super::bernoulli6::ramanujan_rhs;
use super::sign;
use crate::error::{Error, Result};
use crate::exactnum::{int, pow, RationalSum};
use crate::seqcore::{SequenceCache, Table};
use crate::{Integer, Rational};

/// `B_n` from Ramanujan's gap-6 sum at `N = n + 3`:
/// `C(N,3)·B_n = rhs(N) − Σ_{k≡3 (6), k≥9} C(N,k)·B_{N−k}`.
///
/// Reads exactly `B_{n−6}, B_{n−12}, …`. Odd `n ≥ 3` is zero; `n = 1` is
/// not reachable from the gap sum.
pub fn solve_bernoulli_gap6(cache: &mut SequenceCache, n: usize) -> Result<Rational> {
    if n == 1 {
        return Err(Error::BadParity { what: "bernoulli gap6", n });
    }
    if n % 2 == 1 {
        return Ok(Rational::zero());
    }
    for m in (n % 6..=n).step_by(6) {
        if cache.peek(Table::BernoulliNumber, m).is_some() {
            continue;
        }
        let value = if m == 0 {
            Rational::one()
        } else {
            let big = m + 3;
            let mut acc = RationalSum::starting_at(&ramanujan_rhs(big));
            for k in (9..=big).step_by(6) {
                let c = -cache.binom(big, k);
                acc.add_scaled(&c, &cache.read(Table::BernoulliNumber, big - k));
                cache.add_mults(1);
            }
            acc.finish() / Rational::from_integer(cache.binom(big, 3))
        };
        cache.store_number(Table::BernoulliNumber, m, value);
    }
    Ok(cache.peek(Table::BernoulliNumber, n).expect("just stored"))
}

/// `E_n = (−1)^(n/2) − Σ_{4|k, k≥4} C(n,k)·(−4)^(k/4)·E_{n−k}`. Reads exactly
/// `E_{n−4}, E_{n−8}, …`; odd `n` is zero.
pub fn solve_euler_gap4(cache: &mut SequenceCache, n: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    for m in (n % 4..=n).step_by(4) {
        if cache.peek(Table::EulerNumber, m).is_some() {
            continue;
        }
        let mut acc = RationalSum::starting_at(&sign(m / 2));
        for k in (4..=m).step_by(4) {
            let c = -cache.binom(m, k) * Integer::from(-4).pow((k / 4) as u32);
            acc.add_scaled(&c, &cache.read(Table::EulerNumber, m - k));
            cache.add_mults(1);
        }
        cache.store_number(Table::EulerNumber, m, acc.finish());
    }
    cache.peek(Table::EulerNumber, n).expect("just stored")
}

/// `4E_n = 2(1 + (−3)^(n/2)) − 3Σ_{k=1}^{[n/6]} C(n,6k)·2^(6k)·E_{n−6k}`.
/// Reads exactly `E_{n−6}, E_{n−12}, …`. Odd `n` is rejected.
pub fn solve_euler_gap6(cache: &mut SequenceCache, n: usize) -> Result<Rational> {
    if n % 2 == 1 {
        return Err(Error::BadParity { what: "euler gap6", n });
    }
    for m in (n % 6..=n).step_by(6) {
        if cache.peek(Table::EulerNumber, m).is_some() {
            continue;
        }
        let mut acc = RationalSum::starting_at(&(int(2) * (Rational::one() + pow(&int(-3), (m / 2) as u32))));
        for k in (6..=m).step_by(6) {
            let c = -(Integer::from(3) * cache.binom(m, k)) << k;
            acc.add_scaled(&c, &cache.read(Table::EulerNumber, m - k));
            cache.add_mults(1);
        }
        cache.store_number(Table::EulerNumber, m, acc.finish() / int(4));
    }
    Ok(cache.peek(Table::EulerNumber, n).expect("just stored"))
}
