use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::exactnum::{int, rat, PascalTable, RationalSum};
use crate::{Integer, RatPoly, Rational};

/// Which memo table an index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    BernoulliNumber,
    EulerNumber,
    BernoulliPoly,
    EulerPoly,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TouchCount {
    pub reads: u64,
    pub writes: u64,
}

/// Aggregate counters over every table.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TouchStats {
    pub reads: u64,
    pub writes: u64,
    pub distinct_read: usize,
    pub mults: u64,
}

impl TouchStats {
    pub fn merge(self, other: Self) -> Self {
        Self {
            reads: self.reads + other.reads,
            writes: self.writes + other.writes,
            distinct_read: self.distinct_read + other.distinct_read,
            mults: self.mults + other.mults,
        }
    }
}

/// Memo tables for `B_n`, `E_n`, `B_n(x)` and `E_n(x)`.
///
/// Entries are written once and never change. Every read made while
/// evaluating a recurrence is counted per `(table, index)`, which is how the
/// gap solvers demonstrate which earlier terms they consulted. Lookups of a
/// requested value itself are not counted.
///
/// The cache is plain mutable state: keep one per thread, or wrap it in a
/// lock.
#[derive(Debug, Clone, Default)]
pub struct SequenceCache {
    bernoulli_numbers: BTreeMap<usize, Rational>,
    euler_numbers: BTreeMap<usize, Rational>,
    bernoulli_polys: BTreeMap<usize, RatPoly>,
    euler_polys: BTreeMap<usize, RatPoly>,
    poly_values: HashMap<(Table, usize, Rational), Rational>,
    touches: BTreeMap<(Table, usize), TouchCount>,
    pascal: PascalTable,
    mults: u64,
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `B_n`, filling every lower index bottom-up from
    /// `Σ_{k=0}^{m} C(m+1,k)·B_k = 0`. Odd indices past 1 are zero and skip
    /// the recurrence.
    pub fn bernoulli_number(&mut self, n: usize) -> Rational {
        for m in 0..=n {
            if self.bernoulli_numbers.contains_key(&m) {
                continue;
            }
            let value = match m {
                0 => Rational::one(),
                _ if m % 2 == 1 && m >= 3 => Rational::zero(),
                _ => {
                    let mut acc = RationalSum::new();
                    for k in 0..m {
                        let c = self.binom(m + 1, k);
                        let b = self.read(Table::BernoulliNumber, k);
                        acc.add_scaled(&c, &b);
                        self.mults += 1;
                    }
                    -acc.finish() / int(m as i64 + 1)
                }
            };
            self.store_number(Table::BernoulliNumber, m, value);
        }
        self.bernoulli_numbers[&n].clone()
    }

    /// `E_n` from `Σ_{r=0}^{n/2} C(n,2r)·E_{2r} = 0`; odd `n` gives zero
    /// without touching the table.
    pub fn euler_number(&mut self, n: usize) -> Rational {
        if n % 2 == 1 {
            return Rational::zero();
        }
        for m in (0..=n).step_by(2) {
            if self.euler_numbers.contains_key(&m) {
                continue;
            }
            let value = if m == 0 {
                Rational::one()
            } else {
                let mut acc = RationalSum::new();
                for r in (0..m).step_by(2) {
                    let c = self.binom(m, r);
                    let e = self.read(Table::EulerNumber, r);
                    acc.add_scaled(&c, &e);
                    self.mults += 1;
                }
                -acc.finish()
            };
            self.store_number(Table::EulerNumber, m, value);
        }
        self.euler_numbers[&n].clone()
    }

    /// `B_n(x) = Σ_k C(n,k)·B_k·x^(n−k)`.
    pub fn bernoulli_poly(&mut self, n: usize) -> RatPoly {
        if let Some(p) = self.bernoulli_polys.get(&n) {
            return p.clone();
        }
        self.bernoulli_number(n);
        let mut coeffs = vec![Rational::zero(); n + 1];
        for k in 0..=n {
            let c = self.binom(n, k);
            coeffs[n - k] = self.read(Table::BernoulliNumber, k) * Rational::from_integer(c);
        }
        let p = RatPoly::new(coeffs);
        self.bernoulli_polys.insert(n, p.clone());
        self.note_write(Table::BernoulliPoly, n);
        p
    }

    /// `E_n(x)` by solving `E_n(x) + Σ_{r=0}^{n} C(n,r)·E_r(x) = 2x^n` for the
    /// top term, bottom-up.
    pub fn euler_poly(&mut self, n: usize) -> RatPoly {
        for m in 0..=n {
            if self.euler_polys.contains_key(&m) {
                continue;
            }
            let mut acc = RatPoly::zero();
            for r in 0..m {
                let c = Rational::from_integer(self.binom(m, r));
                let e = self.read_poly(Table::EulerPoly, r);
                acc = acc + e.scale(&c);
            }
            let p = RatPoly::monomial(Rational::one(), m) - acc.scale(&rat(1, 2));
            self.euler_polys.insert(m, p);
            self.note_write(Table::EulerPoly, m);
        }
        self.euler_polys[&n].clone()
    }

    /// `B_n(x)` at a rational point, memoized per point.
    pub fn bernoulli_poly_at(&mut self, n: usize, x: &Rational) -> Rational {
        let key = (Table::BernoulliPoly, n, x.clone());
        if let Some(v) = self.poly_values.get(&key) {
            return v.clone();
        }
        let v = self.bernoulli_poly(n).eval(x);
        self.poly_values.insert(key, v.clone());
        v
    }

    /// `E_n(x)` at a rational point, memoized per point.
    pub fn euler_poly_at(&mut self, n: usize, x: &Rational) -> Rational {
        let key = (Table::EulerPoly, n, x.clone());
        if let Some(v) = self.poly_values.get(&key) {
            return v.clone();
        }
        let v = self.euler_poly(n).eval(x);
        self.poly_values.insert(key, v.clone());
        v
    }

    pub fn binom(&mut self, n: usize, k: usize) -> Integer {
        self.pascal.get(n, k)
    }

    /// Cached value without counting a read.
    pub fn peek(&self, table: Table, n: usize) -> Option<Rational> {
        match table {
            Table::BernoulliNumber => self.bernoulli_numbers.get(&n).cloned(),
            Table::EulerNumber => self.euler_numbers.get(&n).cloned(),
            Table::BernoulliPoly | Table::EulerPoly => None,
        }
    }

    /// Reads a cached number as a recurrence input. Panics if absent.
    pub(crate) fn read(&mut self, table: Table, n: usize) -> Rational {
        let v = match table {
            Table::BernoulliNumber => self.bernoulli_numbers.get(&n),
            Table::EulerNumber => self.euler_numbers.get(&n),
            _ => None,
        }
        .unwrap_or_else(|| panic!("{table:?}[{n}] read before it was computed"))
        .clone();
        self.touches.entry((table, n)).or_default().reads += 1;
        v
    }

    fn read_poly(&mut self, table: Table, n: usize) -> RatPoly {
        let p = match table {
            Table::BernoulliPoly => self.bernoulli_polys.get(&n),
            Table::EulerPoly => self.euler_polys.get(&n),
            _ => None,
        }
        .unwrap_or_else(|| panic!("{table:?}[{n}] read before it was computed"))
        .clone();
        self.touches.entry((table, n)).or_default().reads += 1;
        p
    }

    /// Writes a number once; a second write must agree with the first.
    pub(crate) fn store_number(&mut self, table: Table, n: usize, value: Rational) {
        let map = match table {
            Table::BernoulliNumber => &mut self.bernoulli_numbers,
            Table::EulerNumber => &mut self.euler_numbers,
            _ => unreachable!("polynomial tables are written by their own builders"),
        };
        if let Some(old) = map.get(&n) {
            assert_eq!(old, &value, "{table:?}[{n}] would change");
            return;
        }
        map.insert(n, value);
        self.note_write(table, n);
    }

    pub(crate) fn add_mults(&mut self, k: u64) {
        self.mults += k;
    }

    fn note_write(&mut self, table: Table, n: usize) {
        self.touches.entry((table, n)).or_default().writes += 1;
    }

    pub fn touch(&self, table: Table, n: usize) -> TouchCount {
        self.touches.get(&(table, n)).copied().unwrap_or_default()
    }

    /// Indices of `table` read at least once.
    pub fn indices_read(&self, table: Table) -> BTreeSet<usize> {
        self.touches
            .iter()
            .filter(|((t, _), c)| *t == table && c.reads > 0)
            .map(|((_, n), _)| *n)
            .collect()
    }

    pub fn stats(&self) -> TouchStats {
        let mut s = TouchStats { mults: self.mults, ..TouchStats::default() };
        for c in self.touches.values() {
            s.reads += c.reads;
            s.writes += c.writes;
            if c.reads > 0 {
                s.distinct_read += 1;
            }
        }
        s
    }

    pub fn mults(&self) -> u64 {
        self.mults
    }

    /// Clears counters but keeps cached values.
    pub fn reset_counters(&mut self) {
        self.touches.clear();
        self.mults = 0;
    }
}
