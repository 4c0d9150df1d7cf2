use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Integer, Rational};

/// `num/den` reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// `q^e` for a possibly negative exponent. Panics on `0^(negative)`.
pub fn pow_signed(q: &Rational, e: i64) -> Rational {
    let p = num_traits::pow::pow(q.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Canonical form: `gcd(|num|, den) = 1` and `den ≥ 1`.
pub fn is_canonical(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

/// Parses the canonical text form `-?[0-9]+(/[0-9]+)?` with a nonzero
/// denominator. Non-reduced input is accepted and reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| -> Result<Integer> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<Integer>().map_err(|_| bad())
    };
    let mut num = digits(num)?;
    let den = match den {
        Some(d) => digits(d)?,
        None => Integer::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    if neg {
        num = -num;
    }
    Ok(Rational::new(num, den))
}
