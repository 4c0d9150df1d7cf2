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

fn mult4(n: usize) -> impl Iterator<Item = usize> {
    (0..=n).step_by(4)
}

/// `Σ_{4|k} C(n,k)·(−1)^(k/4)·2^(−k/2)·E_{n−k}(x)` against
/// `½·((x − ½ + ½i)^n + (x − ½ − ½i)^n)`.
pub fn thm31_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    let mut lhs = RatPoly::zero();
    for k in mult4(n) {
        let w = Rational::from_integer(cache.binom(n, k)) * sign(k / 4) / two_pow(k / 2);
        lhs = lhs + cache.euler_poly(n - k).scale(&w);
    }
    let c = GaussianRational::new(rat(-1, 2), rat(1, 2));
    let e = n as u32;
    let sum = GaussianPoly::shifted_power(&c, e) + GaussianPoly::shifted_power(&c.conj(), e);
    let rhs = sum.scale(&GaussianRational::from_rational(&rat(1, 2)));
    Ok(IdentityInstance::new("thm31", Params::n(n), lhs, rhs.reduce_to_rational()?))
}

/// `Σ_{4|k} C(n,k)·(−4)^(k/4)·E_{n−k} = (−1)^(n/2)` for even `n ≥ 2`.
pub fn cor31_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    require_even_ge2("cor31", n)?;
    let mut lhs = Rational::zero();
    for k in mult4(n) {
        let w = Rational::from_integer(cache.binom(n, k)) * pow(&int(-4), (k / 4) as u32);
        lhs += w * cache.euler_number(n - k);
    }
    Ok(IdentityInstance::new("cor31", Params::n(n), lhs, sign(n / 2)))
}

/// `Σ_{4|k, k<n} C(n,k)·(−1)^(k/4)·2^((n−k)/2)·(2^(n−k) − 1)·B_{n−k} = (−1)^[n/4]·n/2`
/// for even `n ≥ 2`.
pub fn cor32_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    require_even_ge2("cor32", n)?;
    let mut lhs = Rational::zero();
    for k in mult4(n - 1) {
        let w = Rational::from_integer(cache.binom(n, k))
            * sign(k / 4)
            * two_pow((n - k) / 2)
            * (two_pow(n - k) - Rational::one());
        lhs += w * cache.bernoulli_number(n - k);
    }
    let rhs = sign(n / 4) * rat(n as i64, 2);
    Ok(IdentityInstance::new("cor32", Params::n(n), lhs, rhs))
}

/// Which right-hand side of the weighted gap-4 Euler identity to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm32Variant {
    /// `¼(2x^n + 2(x−1)^n + (x+i)^n + (x−i)^n + (x−1+i)^n + (x−1−i)^n)`.
    /// Fails for every `n`: the residual is `−E_n(x)/2`.
    Printed,
    /// The printed form with the missing `−2E_n(x)` inside the bracket.
    Corrected,
}

impl Thm32Variant {
    pub fn name(self) -> &'static str {
        match self {
            Thm32Variant::Printed => "thm32_printed",
            Thm32Variant::Corrected => "thm32_corrected",
        }
    }
}

/// `Σ_{4|k} C(n,k)·((−1)^(k/4)·2^(k/2−1) + 1)·E_{n−k}(x)` against the
/// chosen right-hand side.
pub fn thm32_pair(cache: &mut SequenceCache, n: usize, variant: Thm32Variant) -> Result<IdentityInstance> {
    let mut lhs = RatPoly::zero();
    for k in mult4(n) {
        let f = sign(k / 4) * two_pow(k / 2) / int(2) + Rational::one();
        let w = Rational::from_integer(cache.binom(n, k)) * f;
        lhs = lhs + cache.euler_poly(n - k).scale(&w);
    }
    let e = n as u32;
    let i = GaussianRational::i();
    let one = GaussianRational::one();
    let two = GaussianRational::from_i64(2);
    let sp = |c: GaussianRational| GaussianPoly::shifted_power(&c, e);
    let mut bracket = GaussianPoly::monomial(two.clone(), n)
        + sp(-one.clone()).scale(&two)
        + sp(i.clone())
        + sp(-i.clone())
        + sp(i.clone() - one.clone())
        + sp(-i - one);
    if variant == Thm32Variant::Corrected {
        bracket = bracket - GaussianPoly::from(&cache.euler_poly(n)).scale(&two);
    }
    let rhs = bracket.scale(&GaussianRational::from_rational(&rat(1, 4))).reduce_to_rational()?;
    let params = Params { variant: Some(variant.name()), ..Params::n(n) };
    Ok(IdentityInstance::new(variant.name(), params, lhs, rhs))
}

/// `4E_n(x) + 3Σ_{k=1}^{[n/6]} C(n,6k)·E_{n−6k}(x)` against
/// `x^n + (x−1)^n + (−1)^n·V_n(1−2x, x²−x+1)`.
pub fn thm33_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    let mut lhs = cache.euler_poly(n).scale(&int(4));
    for k in (6..=n).step_by(6) {
        let w = int(3) * Rational::from_integer(cache.binom(n, k));
        lhs = lhs + cache.euler_poly(n - k).scale(&w);
    }
    let params = LucasParams::new(
        RatPoly::new(vec![int(1), int(-2)]),
        RatPoly::new(vec![int(1), int(-1), int(1)]),
    );
    let v = params.v(n).scale(&sign(n));
    let rhs = RatPoly::monomial(Rational::one(), n) + RatPoly::shifted_power(&int(-1), n as u32) + v;
    Ok(IdentityInstance::new("thm33", Params::n(n), lhs, rhs))
}

/// Lehmer's gap-6 Euler recurrence:
/// `4E_n + 3Σ_{k=1}^{[n/6]} C(n,6k)·2^(6k)·E_{n−6k} = 2(1 + (−3)^(n/2))`, even `n ≥ 2`.
pub fn eq16_pair(cache: &mut SequenceCache, n: usize) -> Result<IdentityInstance> {
    require_even_ge2("eq16", n)?;
    let lhs = lehmer_lhs(cache, n);
    let rhs = int(2) * (Rational::one() + pow(&int(-3), (n / 2) as u32));
    Ok(IdentityInstance::new("eq16", Params::n(n), lhs, rhs))
}

pub(crate) fn lehmer_lhs(cache: &mut SequenceCache, n: usize) -> Rational {
    let mut acc = int(4) * cache.euler_number(n);
    for k in (6..=n).step_by(6) {
        acc += int(3) * Rational::from_integer(cache.binom(n, k)) * two_pow(k) * cache.euler_number(n - k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lacunary::Value;

    fn poly(cs: &[Rational]) -> Value {
        Value::Poly(RatPoly::new(cs.to_vec()))
    }

    #[test]
    fn thm31_examples() {
        let mut c = SequenceCache::new();
        let inst = thm31_pair(&mut c, 0).unwrap();
        assert_eq!(inst.lhs, poly(&[int(1)]));
        assert!(inst.holds());
        let inst = thm31_pair(&mut c, 2).unwrap();
        assert_eq!(inst.lhs, poly(&[int(0), int(-1), int(1)]));
        assert!(inst.holds());
        let inst = thm31_pair(&mut c, 4).unwrap();
        assert_eq!(inst.lhs.at(&int(1)), Value::Number(rat(-1, 4)));
        assert_eq!(inst.rhs.at(&int(1)), Value::Number(rat(-1, 4)));
    }

    #[test]
    fn thm32_printed_fails_at_zero_and_two() {
        let mut c = SequenceCache::new();
        let inst = thm32_pair(&mut c, 0, Thm32Variant::Printed).unwrap();
        assert_eq!(inst.lhs, poly(&[rat(3, 2)]));
        assert_eq!(inst.rhs, poly(&[int(2)]));
        assert_eq!(inst.residual, poly(&[rat(-1, 2)]));
        let inst = thm32_pair(&mut c, 2, Thm32Variant::Printed).unwrap();
        assert_eq!(inst.lhs, poly(&[int(0), rat(-3, 2), rat(3, 2)]));
        assert_eq!(inst.rhs, poly(&[int(0), int(-2), int(2)]));
        assert_eq!(inst.residual, poly(&[int(0), rat(1, 2), rat(-1, 2)]));
    }

    #[test]
    fn thm32_corrected_small() {
        let mut c = SequenceCache::new();
        let inst = thm32_pair(&mut c, 2, Thm32Variant::Corrected).unwrap();
        assert_eq!(inst.rhs, poly(&[int(0), rat(-3, 2), rat(3, 2)]));
        assert!(inst.holds());
        assert_eq!(inst.params.variant, Some("thm32_corrected"));
    }

    #[test]
    fn thm33_examples() {
        let mut c = SequenceCache::new();
        let want = [poly(&[int(4)]), poly(&[int(-2), int(4)]), poly(&[int(0), int(-4), int(4)])];
        for (n, w) in want.into_iter().enumerate() {
            let inst = thm33_pair(&mut c, n).unwrap();
            assert_eq!(inst.lhs, w, "n={n}");
            assert!(inst.holds(), "n={n}");
        }
    }

    #[test]
    fn eq16_and_cor31_small() {
        let mut c = SequenceCache::new();
        let inst = eq16_pair(&mut c, 6).unwrap();
        assert_eq!(inst.rhs, Value::Number(int(-52)));
        assert!(inst.holds());
        assert!(eq16_pair(&mut c, 3).is_err());
        for n in [2, 4, 6, 8, 10] {
            assert!(cor31_pair(&mut c, n).unwrap().holds(), "cor31 n={n}");
            assert!(cor32_pair(&mut c, n).unwrap().holds(), "cor32 n={n}");
        }
    }
}
