use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::Integer;

/// `n` choose `k`, zero when `k > n`. Multiplicative formula with exact
/// division at every step.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division below is exact.
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Binomial rows, built on demand and kept for the life of the table.
#[derive(Debug, Clone, Default)]
pub struct PascalTable {
    rows: HashMap<usize, Vec<Integer>>,
}

impl PascalTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Row `n`: `[C(n,0), …, C(n,n)]`, built on first use by
    /// `C(n,k+1) = C(n,k)·(n−k)/(k+1)`.
    pub fn row(&mut self, n: usize) -> &[Integer] {
        self.rows.entry(n).or_insert_with(|| {
            let mut row = Vec::with_capacity(n + 1);
            row.push(Integer::one());
            for k in 0..n {
                let next = &row[k] * Integer::from(n - k) / Integer::from(k + 1);
                row.push(next);
            }
            row
        })
    }

    pub fn get(&mut self, n: usize, k: usize) -> Integer {
        if k > n {
            return Integer::zero();
        }
        self.row(n)[k].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 3), Integer::from(10));
        assert_eq!(binomial(11, 9), Integer::from(55));
        assert_eq!(binomial(3, 7), Integer::zero());
        for n in 0..20 {
            assert_eq!(binomial(n, 0), Integer::one());
        }
    }

    #[test]
    fn table_matches_formula() {
        let mut t = PascalTable::new();
        assert_eq!(t.get(11, 9), Integer::from(55));
        for n in 0..60u64 {
            for k in 0..=n + 1 {
                assert_eq!(t.get(n as usize, k as usize), binomial(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn pascal_rule_up_to_500() {
        let mut table = PascalTable::new();
        let mut prev: Vec<Integer> = vec![Integer::one()];
        for n in 1..=500u64 {
            let row: Vec<Integer> = (0..=n).map(|k| binomial(n, k)).collect();
            assert_eq!(table.row(n as usize), &row[..]);
            for k in 1..n as usize {
                assert_eq!(row[k], &prev[k - 1] + &prev[k], "C({n},{k})");
            }
            assert!(row[0].is_one() && row[n as usize].is_one());
            prev = row;
        }
    }
}
