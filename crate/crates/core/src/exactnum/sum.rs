use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::{Integer, Rational};

/// Running sum of `c·q` terms with an integer `c`, kept as an unreduced
/// fraction and reduced once by [`finish`](RationalSum::finish).
///
/// Reducing after every step costs a gcd per term, which dominates when the
/// terms are long integers; recurrences over Euler numbers are all integer.
#[derive(Debug, Clone)]
pub struct RationalSum {
    num: Integer,
    den: Integer,
}

impl Default for RationalSum {
    fn default() -> Self {
        Self { num: Integer::zero(), den: Integer::one() }
    }
}

impl RationalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn starting_at(q: &Rational) -> Self {
        Self { num: q.numer().clone(), den: q.denom().clone() }
    }

    /// Adds `c·q`.
    pub fn add_scaled(&mut self, c: &Integer, q: &Rational) {
        let (p, d) = (q.numer(), q.denom());
        if p.is_zero() || c.is_zero() {
            return;
        }
        if d == &self.den {
            self.num += c * p;
        } else if d.is_one() {
            self.num += c * p * &self.den;
        } else {
            let (quot, rem) = self.den.div_rem(d);
            if rem.is_zero() {
                self.num += c * p * quot;
            } else {
                self.num = &self.num * d + c * p * &self.den;
                self.den *= d;
            }
        }
    }

    pub fn add(&mut self, q: &Rational) {
        self.add_scaled(&Integer::one(), q);
    }

    pub fn finish(self) -> Rational {
        Rational::new(self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn mixed_denominators() {
        let mut s = RationalSum::new();
        s.add(&rat(1, 2));
        s.add_scaled(&Integer::from(3), &rat(1, 3));
        s.add_scaled(&Integer::from(-2), &rat(5, 6));
        s.add(&int(4));
        assert_eq!(s.finish(), rat(1, 2) + int(1) - rat(5, 3) + int(4));
        assert_eq!(RationalSum::new().finish(), int(0));
    }

    proptest! {
        #[test]
        fn matches_reduced_arithmetic(
            start in (-50i64..50, 1i64..30),
            terms in proptest::collection::vec((-20i64..20, -50i64..50, 1i64..30), 0..20),
        ) {
            let q0 = rat(start.0, start.1);
            let mut s = RationalSum::starting_at(&q0);
            let mut expect = q0;
            for (c, a, b) in terms {
                let q = rat(a, b);
                s.add_scaled(&Integer::from(c), &q);
                expect += int(c) * q;
            }
            prop_assert_eq!(s.finish(), expect);
        }
    }
}
