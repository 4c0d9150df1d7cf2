use num_traits::{One, Zero};

use super::instance::{IdentityInstance, Params};
use super::{sign, two_pow};
use crate::error::{Error, Result};
use crate::exactnum::{int, pow, rat, Scalar};
use crate::lucas::LucasParams;
use crate::seqcore::SequenceCache;
use crate::{GaussianPoly, GaussianRational, RatPoly, Rational};

fn require_even_ge2(what: &'static str, n: usize) -> Result<()> {
    if n % 2 == 0 && n >= 2 {
        Ok(())
    } else {
        Err(Error::BadParity { what, n })
    }
}

/// Indices `k ≤ n` with `k ≡ 2 (mod 4)`.
fn gap4_indices(n: usize) -> impl Iterator<Item = usize> {
    (2..=n).step_by(4)
}

fn real_part(z: GaussianRational) -> Result<Rational> {
    if !z.is_base() {
        return Err(Error::NonRealResidue { degree: 0, coefficient: z.to_string() });
    }
    Ok(z.into_parts().0)
}

/// `Σ_{k≡2 (4)} C(n,k)·B_{n−k}(x)·(−1)^((k−2)/4)·2^(n+1−k/2)` against
/// `n·i·((2x−1−i)^(n−1) − (2x−1+i)^(n−1))`.
pub fn thm23_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    if n == 0 {
        return Err(Error::BadN { what: "thm23", n });
    }
    let mut lhs = RatPoly::zero();
    for k in gap4_indices(n) {
        let w = Rational::from_integer(cache.binom(n, k)) * sign((k - 2) / 4) * two_pow(n + 1 - k / 2);
        lhs = lhs + cache.bernoulli_poly(n - k).scale(&w);
    }
    let i = GaussianRational::i();
    let two = GaussianRational::from_i64(2);
    let e = (n - 1) as u32;
    let minus = GaussianPoly::linear_power(&two, &(GaussianRational::from_i64(-1) - i.clone()), e);
    let plus = GaussianPoly::linear_power(&two, &(GaussianRational::from_i64(-1) + i.clone()), e);
    let rhs = (minus - plus).scale(&(GaussianRational::from_i64(n as i64) * i));
    Ok(IdentityInstance::new("thm23", Params::n(n), lhs, rhs.reduce_to_rational()?))
}

/// The scaled gap-4 sum for any `m ≥ 1` and even `n`.
pub fn thm24_pair(cache: &mut SequenceCache, m: usize, n: usize) -> Result<IdentityInstance> {
    require_even_ge2("thm24", n)?;
    if m == 0 {
        return Err(Error::BadM { what: "thm24", m });
    }
    let mut lhs = Rational::zero();
    for k in gap4_indices(n) {
        let w = Rational::from_integer(cache.binom(n, k))
            * sign((k - 2) / 4)
            * two_pow(n - k / 2)
            * pow(&int(m as i64), k as u32);
        lhs += w * cache.bernoulli_number(n - k);
    }

    let mm = int(m as i64);
    let parity_term = if m % 2 == 0 { int(2) * sign(n / 2) } else { Rational::zero() };
    let head = pow(&mm, (n - 1) as u32) * (sign((n - 2) / 4) * two_pow(n / 2) - parity_term);
    let e = (n - 1) as u32;
    let mut diff = GaussianRational::zero();
    for r in 1..=(m - 1) / 2 {
        let a = GaussianRational::new(int(2 * r as i64 - m as i64), -mm.clone());
        diff = diff + a.pow(e) - a.conj().pow(e);
    }
    let tail = real_part(GaussianRational::from_i64(2) * GaussianRational::i() * diff)?;
    let rhs = rat(n as i64, 2) * (head + tail);
    Ok(IdentityInstance::new("thm24", Params::nm(n, m), lhs, rhs))
}

/// Weight on `B_{n−k}` in the corollary-normalized scaled gap-4 sum:
/// `2^((n−k)/2)` for `m = 1`, `2^(k/2)` for `m = 2`, `2^(n−k/2)·3^k` for
/// `m = 3` and `2^(3k/2)` for `m = 4`, times `(−1)^((k−2)/4)`.
fn gap4_weight(m: usize, n: usize, k: usize) -> Rational {
    let w = match m {
        1 => two_pow((n - k) / 2),
        2 => two_pow(k / 2),
        3 => two_pow(n - k / 2) * pow(&int(3), k as u32),
        4 => two_pow(3 * k / 2),
        _ => unreachable!("checked by callers"),
    };
    w * sign((k - 2) / 4)
}

pub fn gap4_corollary_lhs(cache: &mut SequenceCache, m: usize, n: usize) -> Result<Rational> {
    require_even_ge2("gap4 corollary", n)?;
    if !(1..=4).contains(&m) {
        return Err(Error::BadM { what: "gap4 corollary", m });
    }
    let mut acc = Rational::zero();
    for k in gap4_indices(n) {
        let c = Rational::from_integer(cache.binom(n, k));
        acc += c * gap4_weight(m, n, k) * cache.bernoulli_number(n - k);
    }
    Ok(acc)
}

/// Closed forms of the corollary-normalized gap-4 sums, `m = 1..=4`; the
/// `m = 3, 4` cases use `U_{n−1}(2,10)` and `U_{n−1}(2,5)`.
pub fn gap4_scaled_closed_rhs(m: usize, n: usize) -> Result<Rational> {
    require_even_ge2("gap4 closed form", n)?;
    let s = sign((n - 2) / 4);
    let half_n = rat(n as i64, 2);
    let inner = match m {
        1 => s,
        2 => s * two_pow((n - 2) / 2) + sign((n - 2) / 2),
        3 => {
            let u = LucasParams::new(int(2), int(10)).u(n - 1);
            s * two_pow(n / 2) * pow(&int(3), (n - 1) as u32) + int(12) * u
        }
        4 => {
            let u = LucasParams::new(int(2), int(5)).u(n - 1);
            s * two_pow(3 * n / 2 - 2) - sign(n / 2) * two_pow(n - 1) + int(4) * u
        }
        _ => return Err(Error::BadM { what: "gap4 closed form", m }),
    };
    Ok(half_n * inner)
}

/// Named `cor24`, `cor25`, `cor27`, `cor26` for `m = 1, 2, 3, 4`.
pub fn gap4_corollary_pair(cache: &mut SequenceCache, m: usize, n: usize) -> Result<IdentityInstance> {
    let rhs = gap4_scaled_closed_rhs(m, n)?;
    let lhs = gap4_corollary_lhs(cache, m, n)?;
    let name = match m {
        1 => "cor24",
        2 => "cor25",
        3 => "cor27",
        _ => "cor26",
    };
    Ok(IdentityInstance::new(name, Params::nm(n, m), lhs, rhs))
}

/// `Σ_{k≡0 (4), k≥4} C(n,k)·B_{n−k}(x)·((−1)^(k/4)·2^(k/2−1) − 1)` against
/// `n/8·{2(x−1)^(n−1) − 2x^(n−1) + (x+i)^(n−1) + (x−i)^(n−1) − (x−1+i)^(n−1) − (x−1−i)^(n−1)}`.
pub fn thm25_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    if n == 0 {
        return Err(Error::BadN { what: "thm25", n });
    }
    let mut lhs = RatPoly::zero();
    for k in (4..=n).step_by(4) {
        let w = Rational::from_integer(cache.binom(n, k)) * (sign(k / 4) * two_pow(k / 2 - 1) - Rational::one());
        lhs = lhs + cache.bernoulli_poly(n - k).scale(&w);
    }
    let e = (n - 1) as u32;
    let i = GaussianRational::i();
    let one = GaussianRational::one();
    let sp = |c: GaussianRational| GaussianPoly::shifted_power(&c, e);
    let two = GaussianRational::from_i64(2);
    let bracket = sp(-one.clone()).scale(&two) - GaussianPoly::monomial(two, n - 1)
        + sp(i.clone())
        + sp(-i.clone())
        - sp(i.clone() - one.clone())
        - sp(-i - one);
    let rhs = bracket.scale(&GaussianRational::from_rational(&rat(n as i64, 8)));
    Ok(IdentityInstance::new("thm25", Params::n(n), lhs, rhs.reduce_to_rational()?))
}

/// `Σ_{k≡0 (4), k≥4} C(n,k)·((−4)^(k/4) − 2)·B_{n−k} = n/2·((−1)^[n/4]·2^(n/2−1) − 1)`
/// for even `n ≥ 2`.
pub fn cor28_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    require_even_ge2("cor28", n)?;
    let mut lhs = Rational::zero();
    for k in (4..=n).step_by(4) {
        let w = Rational::from_integer(cache.binom(n, k)) * (pow(&int(-4), (k / 4) as u32) - int(2));
        lhs += w * cache.bernoulli_number(n - k);
    }
    let rhs = rat(n as i64, 2) * (sign(n / 4) * two_pow(n / 2 - 1) - Rational::one());
    Ok(IdentityInstance::new("cor28", Params::n(n), lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lacunary::Value;

    #[test]
    fn thm23_examples() {
        let mut c = SequenceCache::new();
        let inst = thm23_pair(&mut c, 1).unwrap();
        assert!(inst.lhs.is_zero() && inst.holds());
        let inst = thm23_pair(&mut c, 2).unwrap();
        assert_eq!(inst.lhs, Value::Poly(RatPoly::constant(int(4))));
        assert!(inst.holds());
        let inst = thm23_pair(&mut c, 4).unwrap();
        assert_eq!(inst.lhs, Value::Poly(RatPoly::new(vec![int(16), int(-96), int(96)])));
        assert!(inst.holds());
    }

    #[test]
    fn thm24_examples() {
        let mut c = SequenceCache::new();
        // m = 1 collapses the r-sum; direct summation gives 2^(2−1)·B_0 = 2.
        for (m, n, v) in [(1, 2, 2), (2, 2, 8), (4, 2, 32)] {
            let inst = thm24_pair(&mut c, m, n).unwrap();
            assert_eq!(inst.lhs, Value::Number(int(v)), "m={m}");
            assert_eq!(inst.rhs, Value::Number(int(v)), "m={m}");
        }
        assert!(thm24_pair(&mut c, 1, 3).is_err());
    }

    #[test]
    fn gap4_closed_examples() {
        assert_eq!(gap4_scaled_closed_rhs(1, 2).unwrap(), int(1));
        assert_eq!(gap4_scaled_closed_rhs(4, 2).unwrap(), int(8));
        assert_eq!(gap4_scaled_closed_rhs(3, 2).unwrap(), int(18));
        assert!(matches!(gap4_scaled_closed_rhs(5, 2), Err(Error::BadM { .. })));
        assert!(matches!(gap4_scaled_closed_rhs(1, 3), Err(Error::BadParity { .. })));
        let mut c = SequenceCache::new();
        assert_eq!(gap4_corollary_lhs(&mut c, 3, 2).unwrap(), int(18));
    }

    #[test]
    fn thm25_examples() {
        let mut c = SequenceCache::new();
        for n in [1, 2] {
            let inst = thm25_pair(&mut c, n).unwrap();
            assert!(inst.lhs.is_zero() && inst.rhs.is_zero(), "n={n}");
        }
        let inst = thm25_pair(&mut c, 4).unwrap();
        assert_eq!(inst.lhs, Value::Poly(RatPoly::constant(int(-3))));
        assert!(inst.holds());
    }

    #[test]
    fn cor28_small() {
        let mut c = SequenceCache::new();
        let inst = cor28_pair(&mut c, 4).unwrap();
        assert_eq!(inst.lhs, Value::Number(int(-6)));
        assert!(inst.holds());
        assert!(cor28_pair(&mut c, 2).unwrap().holds());
    }
}
