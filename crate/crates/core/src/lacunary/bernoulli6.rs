use num_traits::{One, Zero};

use super::instance::{IdentityInstance, Params};
use crate::error::{Error, Result};
use crate::exactnum::{int, pow, rat, Scalar};
use crate::lucas::LucasParams;
use crate::seqcore::SequenceCache;
use crate::{EisensteinPoly, EisensteinRational, RatPoly, Rational};

fn require_odd_ge3(what: &'static str, n: usize) -> Result<()> {
    if n % 2 == 1 && n >= 3 {
        Ok(())
    } else {
        Err(Error::BadParity { what, n })
    }
}

fn pow_int(base: i64, e: usize) -> Rational {
    pow(&int(base), e as u32)
}

/// Indices `k ≤ n` with `k ≡ 3 (mod 6)`.
fn gap6_indices(n: usize) -> impl Iterator<Item = usize> {
    (3..=n).step_by(6)
}

/// The correction term of the general scaled identity, by parity of `m`
/// and whether `3 | n − 1`.
pub fn delta_mn(m: usize, n: usize) -> Result<Rational> {
    require_odd_ge3("delta(m,n)", n)?;
    let mp = pow_int(m as i64, n - 1);
    let base = if (n - 1) % 3 == 0 { -mp * rat(1, 2) } else { mp };
    if m % 2 == 1 {
        return Ok(base);
    }
    let tail = pow_int(-3, (n - 1) / 2) * pow_int((m / 2) as i64, n - 1);
    Ok(base - tail)
}

/// `Σ_{k ≡ 3 (6)} C(n,k)·m^k·B_{n−k}`.
pub fn gap6_scaled_lhs(cache: &mut SequenceCache, m: usize, n: usize) -> Rational {
    let mut acc = Rational::zero();
    for k in gap6_indices(n) {
        let c = Rational::from_integer(cache.binom(n, k));
        acc += c * pow_int(m as i64, k) * cache.bernoulli_number(n - k);
    }
    acc
}

/// Ramanujan's gap-6 sum: `Σ_{k≡3 (6)} C(n,k)·B_{n−k}` is `−n/6` when
/// `n ≡ 1 (mod 6)` and `n/3` otherwise, for odd `n ≥ 3`.
pub fn eq15_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    require_odd_ge3("eq15", n)?;
    let lhs = gap6_scaled_lhs(cache, 1, n);
    Ok(IdentityInstance::new("eq15", Params::n(n), lhs, ramanujan_rhs(n)))
}

pub(crate) fn ramanujan_rhs(n: usize) -> Rational {
    if n % 6 == 1 {
        rat(-(n as i64), 6)
    } else {
        rat(n as i64, 3)
    }
}

/// `Σ_{k≡3 (6)} C(n,k)·B_{n−k}(x)` against
/// `n/6·(x^(n−1) + (x−1)^(n−1) − (x+ω)^(n−1) − (x+ω²)^(n−1))`.
pub fn thm21_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    if n == 0 {
        return Err(Error::BadN { what: "thm21", n });
    }
    let mut lhs = RatPoly::zero();
    for k in gap6_indices(n) {
        let c = Rational::from_integer(cache.binom(n, k));
        lhs = lhs + cache.bernoulli_poly(n - k).scale(&c);
    }
    let e = (n - 1) as u32;
    let one = EisensteinRational::one();
    let w = EisensteinRational::omega();
    let bracket = EisensteinPoly::monomial(one.clone(), n - 1)
        + EisensteinPoly::shifted_power(&-one, e)
        - EisensteinPoly::shifted_power(&w, e)
        - EisensteinPoly::shifted_power(&EisensteinRational::omega_squared(), e);
    let rhs = bracket.scale(&EisensteinRational::from_rational(&rat(n as i64, 6)));
    Ok(IdentityInstance::new("thm21", Params::n(n), lhs, rhs.reduce_to_rational()?))
}

/// The scaled gap-6 sum for any `m ≥ 1`:
/// `n/3·{Σ_{r<m} r^(n−1) − Σ_{r ≤ (m−1)/2} [(r+mω)^(n−1) + (r+mω²)^(n−1)] + δ(m,n)}`.
pub fn thm22_pair(cache: &mut SequenceCache, m: usize, n: usize) -> Result<IdentityInstance> {
    require_odd_ge3("thm22", n)?;
    if m == 0 {
        return Err(Error::BadM { what: "thm22", m });
    }
    let lhs = gap6_scaled_lhs(cache, m, n);
    let delta = delta_mn(m, n)?;
    let e = (n - 1) as u32;
    let powers: Rational = (1..m).map(|r| pow_int(r as i64, n - 1)).sum();
    let mut traces = Rational::zero();
    for r in 1..=(m - 1) / 2 {
        // r + mω = (r − m/2) + (m/2)√−3
        let z = EisensteinRational::new(int(r as i64) - rat(m as i64, 2), rat(m as i64, 2));
        traces += z.trace_power(e);
    }
    let rhs = rat(n as i64, 3) * (powers - traces + delta.clone());
    Ok(IdentityInstance::new("thm22", Params::nm(n, m), lhs, rhs).with_aux(delta))
}

/// Closed forms of the scaled gap-6 sum for `m = 2, 3, 4`, the last two in
/// terms of `V_{n−1}(1,7)` and `V_{n−1}(2,13)`.
pub fn gap6_scaled_closed_rhs(m: usize, n: usize) -> Result<Rational> {
    require_odd_ge3("gap6 closed form", n)?;
    let third = rat(n as i64, 3);
    let one_mod_six = (n - 1) % 6 == 0;
    let half = (n - 1) / 2;
    let p = |b: i64, e: usize| pow_int(b, e);
    let inner = match m {
        2 => {
            let mid = if one_mod_six { -p(2, n - 2) } else { p(2, n - 1) };
            int(1) + mid - p(-3, half)
        }
        3 => {
            let v = LucasParams::new(int(1), int(7)).v(n - 1);
            let three = if one_mod_six { -p(3, n - 1) * rat(1, 2) } else { p(3, n - 1) };
            int(1) + p(2, n - 1) + three - v
        }
        4 => {
            let v = LucasParams::new(int(2), int(13)).v(n - 1);
            let four = if one_mod_six { -p(2, 2 * n - 3) } else { p(4, n - 1) };
            int(1) + p(2, n - 1) + p(3, n - 1) + four - p(-12, half) - v
        }
        _ => return Err(Error::BadM { what: "gap6 closed form", m }),
    };
    Ok(third * inner)
}

/// Direct scaled sum against its closed form; named `cor21`, `cor22`,
/// `cor23` for `m = 2, 3, 4`.
pub fn gap6_corollary_pair(cache: &mut SequenceCache, m: usize, n: usize) -> Result<IdentityInstance> {
    let rhs = gap6_scaled_closed_rhs(m, n)?;
    let name = match m {
        2 => "cor21",
        3 => "cor22",
        _ => "cor23",
    };
    let lhs = gap6_scaled_lhs(cache, m, n);
    Ok(IdentityInstance::new(name, Params::nm(n, m), lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lacunary::Value;

    #[test]
    fn delta_examples() {
        assert_eq!(delta_mn(1, 3).unwrap(), int(1));
        assert_eq!(delta_mn(2, 5).unwrap(), int(7));
        assert_eq!(delta_mn(3, 7).unwrap(), rat(-729, 2));
        assert!(matches!(delta_mn(2, 4), Err(Error::BadParity { .. })));
        assert!(matches!(delta_mn(2, 1), Err(Error::BadParity { .. })));
    }

    #[test]
    fn eq15_examples() {
        let mut c = SequenceCache::new();
        for (n, v) in [(3, int(1)), (7, rat(-7, 6)), (9, int(3))] {
            let inst = eq15_pair(&mut c, n).unwrap();
            assert_eq!(inst.lhs, Value::Number(v.clone()), "n={n}");
            assert_eq!(inst.rhs, Value::Number(v));
            assert!(inst.holds());
        }
        assert!(eq15_pair(&mut c, 4).is_err());
    }

    #[test]
    fn thm21_examples() {
        let mut c = SequenceCache::new();
        let inst = thm21_pair(&mut c, 1).unwrap();
        assert!(inst.lhs.is_zero() && inst.rhs.is_zero());
        let inst = thm21_pair(&mut c, 3).unwrap();
        assert_eq!(inst.lhs, Value::Poly(RatPoly::constant(int(1))));
        assert!(inst.holds());
        let inst = thm21_pair(&mut c, 4).unwrap();
        assert_eq!(inst.lhs, Value::Poly(RatPoly::new(vec![int(-2), int(4)])));
        assert!(inst.holds());
    }

    #[test]
    fn thm22_examples() {
        let mut c = SequenceCache::new();
        for (m, n, v) in [(2, 5, rat(40, 3)), (3, 5, int(45)), (4, 3, int(64))] {
            let inst = thm22_pair(&mut c, m, n).unwrap();
            assert_eq!(inst.lhs, Value::Number(v.clone()), "m={m} n={n}");
            assert_eq!(inst.rhs, Value::Number(v));
            assert_eq!(inst.rhs_aux, Some(delta_mn(m, n).unwrap()));
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(gap6_scaled_closed_rhs(2, 7).unwrap(), rat(-28, 3));
        assert_eq!(gap6_scaled_closed_rhs(3, 7).unwrap(), rat(-63, 2));
        assert_eq!(gap6_scaled_closed_rhs(4, 3).unwrap(), int(64));
        assert!(matches!(gap6_scaled_closed_rhs(5, 7), Err(Error::BadM { .. })));
        assert!(matches!(gap6_scaled_closed_rhs(2, 8), Err(Error::BadParity { .. })));
        let mut c = SequenceCache::new();
        assert_eq!(gap6_scaled_lhs(&mut c, 2, 7), rat(-28, 3));
        assert_eq!(gap6_scaled_lhs(&mut c, 3, 7), rat(-63, 2));
    }
}
