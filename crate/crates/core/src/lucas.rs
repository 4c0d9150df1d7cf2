//! Lucas sequences `U_n(b,c)`, `V_n(b,c)` over any [`Ring`], and their
//! closed forms through the roots of `t² − bt + c` in `Q(i)` or `Q(√−3)`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, MinusOne, MinusThree, Quadratic, Radicand, Ring, Scalar};
use crate::{Integer, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LucasKind {
    U,
    V,
}

/// Parameters of `X_{n+1} = b·X_n − c·X_{n−1}`. The ring is the type
/// parameter: rationals, quadratic elements or polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct LucasParams<R> {
    pub b: R,
    pub c: R,
}

impl<R: Ring> LucasParams<R> {
    pub fn new(b: R, c: R) -> Self {
        Self { b, c }
    }

    pub fn u(&self, n: usize) -> R {
        self.run(R::zero(), R::one(), n)
    }

    pub fn v(&self, n: usize) -> R {
        let two = R::one() + R::one();
        self.run(two, self.b.clone(), n)
    }

    pub fn term(&self, kind: LucasKind, n: usize) -> R {
        match kind {
            LucasKind::U => self.u(n),
            LucasKind::V => self.v(n),
        }
    }

    fn run(&self, x0: R, x1: R, n: usize) -> R {
        let (mut prev, mut cur) = (x0, x1);
        if n == 0 {
            return prev;
        }
        for _ in 1..n {
            let next = self.b.clone() * cur.clone() - self.c.clone() * prev;
            prev = cur;
            cur = next;
        }
        cur
    }
}

impl<R: Scalar> LucasParams<R> {
    /// `b² − 4c`.
    pub fn discriminant(&self) -> R {
        self.b.clone() * self.b.clone() - R::from_i64(4) * self.c.clone()
    }
}

pub fn lucas_u<R: Ring>(params: &LucasParams<R>, n: usize) -> R {
    params.u(n)
}

pub fn lucas_v<R: Ring>(params: &LucasParams<R>, n: usize) -> R {
    params.v(n)
}

/// `√(b² − 4c)` written as `r·√d`, `d ∈ {−1, −3}`, `r > 0` rational.
#[derive(Debug, Clone, PartialEq)]
pub enum SqrtDiscriminant {
    Gaussian(Rational),
    Eisenstein(Rational),
}

/// Factors the discriminant as `r²·d`. With `D = p/q` reduced, `D = pq/q²`,
/// so it is enough to test `|pq|` and `|pq|/3` for being perfect squares.
pub fn sqrt_discriminant(disc: &Rational) -> Result<SqrtDiscriminant> {
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let unsupported = || Error::UnsupportedDiscriminant(disc.to_string());
    if disc.is_positive() {
        return Err(unsupported());
    }
    let t: Integer = (disc.numer() * disc.denom()).abs();
    let q = disc.denom().clone();
    let exact_sqrt = |v: &Integer| {
        let s = v.sqrt();
        (&s * &s == *v).then_some(s)
    };
    if let Some(s) = exact_sqrt(&t) {
        return Ok(SqrtDiscriminant::Gaussian(Rational::new(s, q)));
    }
    let three = Integer::from(3);
    if (&t % &three).is_zero() {
        if let Some(s) = exact_sqrt(&(&t / &three)) {
            return Ok(SqrtDiscriminant::Eisenstein(Rational::new(s, q)));
        }
    }
    Err(unsupported())
}

/// Closed form `(α^n ± β^n)` with `α, β = (b ± √(b²−4c))/2`, evaluated in
/// the matching quadratic field.
pub fn lucas_closed(params: &LucasParams<Rational>, n: usize, kind: LucasKind) -> Result<Rational> {
    let n = u32::try_from(n).expect("index fits in u32");
    Ok(match sqrt_discriminant(&params.discriminant())? {
        SqrtDiscriminant::Gaussian(r) => closed_in::<MinusOne>(&params.b, &r, n, kind),
        SqrtDiscriminant::Eisenstein(r) => closed_in::<MinusThree>(&params.b, &r, n, kind),
    })
}

fn closed_in<D: Radicand>(b: &Rational, r: &Rational, n: u32, kind: LucasKind) -> Rational {
    let half = rat(1, 2);
    let alpha = Quadratic::<Rational, D>::new(b * &half, r * &half);
    match kind {
        LucasKind::V => alpha.trace_power(n),
        LucasKind::U => {
            // α^n − β^n = 2·Im(α^n)·√d, and √(b²−4c) = r·√d
            let p = alpha.pow(n);
            int(2) * p.b() / r
        }
    }
}
