use num_traits::{One, Zero};

use super::SequenceCache;
use crate::exactnum::{int, pow, pow_signed, rat};
use crate::{RatPoly, Rational};

/// `E_k(0) = 2^−k·Σ_j C(k,j)·(−1)^(k−j)·E_j` for `k = 0..=n`, from the
/// Euler numbers alone.
pub fn euler_constants(cache: &mut SequenceCache, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut scale = Rational::one();
    for k in 0..=n {
        let mut acc = Rational::zero();
        for j in (0..=k).step_by(2) {
            let t = Rational::from_integer(cache.binom(k, j)) * cache.euler_number(j);
            if (k - j) % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        out.push(acc * &scale);
        scale *= rat(1, 2);
    }
    out
}

/// `E_n(x) = Σ_i C(n,i)·E_(n−i)(0)·x^i` with the constants taken from
/// [`euler_constants`], so the result never consults the polynomial table.
pub fn euler_poly_from_numbers(cache: &mut SequenceCache, n: usize) -> RatPoly {
    let consts = euler_constants(cache, n);
    euler_poly_from_constants(cache, &consts, n)
}

pub(crate) fn euler_poly_from_constants(cache: &mut SequenceCache, consts: &[Rational], n: usize) -> RatPoly {
    RatPoly::new((0..=n).map(|i| Rational::from_integer(cache.binom(n, i)) * &consts[n - i]).collect())
}

/// The three classical expressions for `E_n(x)`:
/// `2^−n·Σ_r C(n,r)(2x−1)^(n−r)·E_r`,
/// `2/(n+1)·(B_{n+1}(x) − 2^(n+1)·B_{n+1}(x/2))` and
/// `2^(n+1)/(n+1)·(B_{n+1}((x+1)/2) − B_{n+1}(x/2))`.
pub fn euler_poly_via_bernoulli(cache: &mut SequenceCache, n: usize) -> (RatPoly, RatPoly, RatPoly) {
    let two = int(2);
    let from_numbers = euler_poly_from_numbers(cache, n);

    let b = cache.bernoulli_poly(n + 1);
    let half = rat(1, 2);
    let b_half_x = b.scale_var(&half);
    let two_pow = pow(&two, n as u32 + 1);
    let inv = Rational::one() / int(n as i64 + 1);

    let duplication = (b.clone() - b_half_x.scale(&two_pow)).scale(&(int(2) * inv.clone()));
    let halves = (b.compose_linear(&half, &half) - b_half_x).scale(&(two_pow * inv));
    (from_numbers, duplication, halves)
}

/// `(E_n, 2^n·E_n(1/2), E_n(0), 2(1 − 2^(n+1))·B_{n+1}/(n+1))`; the first two
/// agree and the last two agree.
pub fn euler_number_identities(
    cache: &mut SequenceCache,
    n: usize,
) -> (Rational, Rational, Rational, Rational) {
    let e = cache.euler_number(n);
    let poly = cache.euler_poly(n);
    let at_half = pow(&int(2), n as u32) * poly.eval(&rat(1, 2));
    let at_zero = poly.coeff(0);
    let two_pow = pow(&int(2), n as u32 + 1);
    let via_b = int(2) * (Rational::one() - two_pow) * cache.bernoulli_number(n + 1) / int(n as i64 + 1);
    (e, at_half, at_zero, via_b)
}

/// `(Σ_{r=0}^{m−1} B_n(r/m), m^(1−n)·B_n)`. Panics for `m = 0`.
pub fn raabe_sum(cache: &mut SequenceCache, n: usize, m: usize) -> (Rational, Rational) {
    assert!(m >= 1, "raabe_sum needs m >= 1");
    let p = cache.bernoulli_poly(n);
    let sum = (0..m).fold(Rational::zero(), |acc, r| acc + p.eval(&rat(r as i64, m as i64)));
    let scaled = pow_signed(&int(m as i64), 1 - n as i64) * cache.bernoulli_number(n);
    (sum, scaled)
}

/// `(Σ_k C(n,k)·B_k(x)·y^(n−k), B_n(x + y))`.
pub fn bernoulli_translate(cache: &mut SequenceCache, n: usize, y: &Rational) -> (RatPoly, RatPoly) {
    let mut sum = RatPoly::zero();
    for k in 0..=n {
        let c = Rational::from_integer(cache.binom(n, k)) * pow(y, (n - k) as u32);
        sum = sum + cache.bernoulli_poly(k).scale(&c);
    }
    (sum, cache.bernoulli_poly(n).shift(y))
}

/// `(B_n(x+1) − B_n(x), n·x^(n−1))`, the latter zero at `n = 0`.
pub fn bernoulli_forward_difference(cache: &mut SequenceCache, n: usize) -> (RatPoly, RatPoly) {
    let b = cache.bernoulli_poly(n);
    let diff = b.shift(&Rational::one()) - b;
    let rhs = match n {
        0 => RatPoly::zero(),
        _ => RatPoly::monomial(int(n as i64), n - 1),
    };
    (diff, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(cs: &[Rational]) -> RatPoly {
        RatPoly::new(cs.to_vec())
    }

    #[test]
    fn euler_from_numbers_matches_table() {
        let mut c = SequenceCache::new();
        for n in 0..30 {
            assert_eq!(euler_poly_from_numbers(&mut c, n), c.euler_poly(n), "n={n}");
        }
        assert_eq!(euler_constants(&mut c, 3), vec![int(1), rat(-1, 2), int(0), rat(1, 4)]);
    }

    #[test]
    fn euler_forms_small_n() {
        let mut c = SequenceCache::new();
        let cases = [
            (0, qp(&[int(1)])),
            (1, qp(&[rat(-1, 2), int(1)])),
            (2, qp(&[int(0), int(-1), int(1)])),
        ];
        for (n, want) in cases {
            let (a, b, d) = euler_poly_via_bernoulli(&mut c, n);
            assert_eq!(a, want, "form 1, n={n}");
            assert_eq!(b, want, "form 2, n={n}");
            assert_eq!(d, want, "form 3, n={n}");
        }
    }

    #[test]
    fn euler_number_identity_examples() {
        let mut c = SequenceCache::new();
        assert_eq!(euler_number_identities(&mut c, 0), (int(1), int(1), int(1), int(1)));
        assert_eq!(euler_number_identities(&mut c, 2), (int(-1), int(-1), int(0), int(0)));
        assert_eq!(euler_number_identities(&mut c, 4), (int(5), int(5), int(0), int(0)));
    }

    #[test]
    fn raabe_examples() {
        let mut c = SequenceCache::new();
        assert_eq!(raabe_sum(&mut c, 2, 2), (rat(1, 12), rat(1, 12)));
        assert_eq!(raabe_sum(&mut c, 4, 2), (rat(-1, 240), rat(-1, 240)));
        for n in 0..10 {
            let b = c.bernoulli_number(n);
            assert_eq!(raabe_sum(&mut c, n, 1), (b.clone(), b));
        }
    }

    #[test]
    fn translate_examples() {
        let mut c = SequenceCache::new();
        let want = qp(&[rat(1, 6), int(1), int(1)]);
        assert_eq!(bernoulli_translate(&mut c, 2, &int(1)), (want.clone(), want));
        assert_eq!(bernoulli_forward_difference(&mut c, 2), (qp(&[int(0), int(2)]), qp(&[int(0), int(2)])));
        let one = qp(&[int(1)]);
        assert_eq!(bernoulli_translate(&mut c, 0, &rat(5, 7)), (one.clone(), one));
        let want = qp(&[rat(-3, 2), int(1)]);
        assert_eq!(bernoulli_translate(&mut c, 1, &int(-1)), (want.clone(), want));
    }

    #[test]
    fn invariants_over_desk_range() {
        let mut c = SequenceCache::new();
        let ys = [int(-2), int(-1), rat(-1, 2), rat(1, 3), int(1), int(2)];
        for n in 0..=60 {
            let (a, b, d) = euler_poly_via_bernoulli(&mut c, n);
            let e = c.euler_poly(n);
            assert!(a == e && b == e && d == e, "(1.3) forms differ at n={n}");
            for m in 1..=8 {
                let (l, r) = raabe_sum(&mut c, n, m);
                assert_eq!(l, r, "raabe n={n} m={m}");
            }
            for y in &ys {
                let (l, r) = bernoulli_translate(&mut c, n, y);
                assert_eq!(l, r, "translate n={n} y={y}");
            }
            let (l, r) = bernoulli_forward_difference(&mut c, n);
            assert_eq!(l, r);
        }
    }
}
