
use super::instance::{IdentityInstance, Params, Value, ZPoint};
use crate::error::{Error, Result};
use crate::exactnum::{pow, Scalar};
use crate::seqcore::SequenceCache;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    /// `Σ_{k<n} C(n,k)·B_k(x)·((1+z)^(n−k) − z^(n−k)) = n(x+z)^(n−1)`, `n ≥ 1`.
    L21,
    /// `Σ_{k≤n} C(n,k)·E_k(x)·(z^(n−k) + (1+z)^(n−k)) = 2(x+z)^n`.
    L31,
}

impl Lemma {
    pub fn name(self) -> &'static str {
        match self {
            Lemma::L21 => "lemma21",
            Lemma::L31 => "lemma31",
        }
    }
}

fn params(n: usize, x0: &Rational, z: ZPoint) -> Params {
    Params { x0: Some(x0.clone()), z: Some(z), ..Params::n(n) }
}

/// `(z^j, (1+z)^j)` for `j = 0..=n`, with `0^0 = 1`.
fn powers<S: Scalar>(z: &S, n: usize) -> (Vec<S>, Vec<S>) {
    let one_z = S::one() + z.clone();
    let mut zp = vec![S::one()];
    let mut one_zp = vec![S::one()];
    for j in 1..=n {
        zp.push(zp[j - 1].clone() * z.clone());
        one_zp.push(one_zp[j - 1].clone() * one_z.clone());
    }
    (zp, one_zp)
}

/// Both sides of the Bernoulli lemma at `x = x0`, evaluated in the ring of `z`.
pub fn lemma21<S>(cache: &mut SequenceCache, n: usize, x0: &Rational, z: &S) -> Result<(S, S)>
where
    S: Scalar,
{
    if n == 0 {
        return Err(Error::BadN { what: "lemma21", n });
    }
    let (zp, one_zp) = powers(z, n);
    let mut lhs = S::zero();
    for k in 0..n {
        let b = cache.bernoulli_poly_at(k, x0);
        let c = S::from_rational(&(Rational::from_integer(cache.binom(n, k)) * b));
        lhs = lhs + c * (one_zp[n - k].clone() - zp[n - k].clone());
    }
    let rhs = S::from_i64(n as i64) * pow(&(S::from_rational(x0) + z.clone()), (n - 1) as u32);
    Ok((lhs, rhs))
}

/// Both sides of the Euler lemma at `x = x0`, evaluated in the ring of `z`.
/// `0^0 = 1`.
pub fn lemma31<S>(cache: &mut SequenceCache, n: usize, x0: &Rational, z: &S) -> (S, S)
where
    S: Scalar,
{
    let (zp, one_zp) = powers(z, n);
    let mut lhs = S::zero();
    for k in 0..=n {
        let e = cache.euler_poly_at(k, x0);
        let c = S::from_rational(&(Rational::from_integer(cache.binom(n, k)) * e));
        lhs = lhs + c * (zp[n - k].clone() + one_zp[n - k].clone());
    }
    let rhs = S::from_i64(2) * pow(&(S::from_rational(x0) + z.clone()), n as u32);
    (lhs, rhs)
}

fn eval<S>(cache: &mut SequenceCache, which: Lemma, n: usize, x0: &Rational, z: &S) -> Result<(Value, Value)>
where
    S: Scalar + Into<Value>,
{
    let (l, r) = match which {
        Lemma::L21 => lemma21(cache, n, x0, z)?,
        Lemma::L31 => lemma31(cache, n, x0, z),
    };
    Ok((l.into(), r.into()))
}

pub fn lemma_pair(
    cache: &mut SequenceCache,
    which: Lemma,
    n: usize,
    x0: &Rational,
    z: &ZPoint,
) -> Result<IdentityInstance> {
    let (lhs, rhs) = match z {
        ZPoint::Rational(q) => eval(cache, which, n, x0, q)?,
        ZPoint::Gaussian(g) => eval(cache, which, n, x0, g)?,
        ZPoint::Eisenstein(w) => eval(cache, which, n, x0, w)?,
    };
    Ok(IdentityInstance::new(which.name(), params(n, x0, z.clone()), lhs, rhs))
}
