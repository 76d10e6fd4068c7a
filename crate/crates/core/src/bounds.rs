//! Counting and upper bounds on code sizes for ternary words.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::codes::{one_region_patterns, one_region_size};
use crate::oracle::irreducible_counts;
use crate::roots::RootMode;

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

/// Upper bound on `T(n, r)` for a root of length `i` with `m` regions.
/// Roots without regions admit a single codeword.
pub fn u_bound(n: usize, i: usize, m: usize) -> u128 {
    assert!(i <= n, "root longer than the code length");
    if m == 0 {
        return 1;
    }
    let (d, m) = ((n - i) as u64, m as u64);
    if d % 3 == 0 {
        let s = d / 3;
        binomial(s + m, m) - binomial(s + m - 1, m - 1) + 1
    } else {
        binomial(d / 3 + m, m)
    }
}

/// Whether the first three symbols of the counted roots repeat (`aba`) or
/// are distinct (`abc`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Head {
    Aba,
    Abc,
}

fn count_head(head: Head, i: usize, m: usize, memo: &mut HashMap<(Head, usize, usize), u64>) -> u64 {
    if i < 3 {
        return 0;
    }
    if let Some(&v) = memo.get(&(head, i, m)) {
        return v;
    }
    let v = match head {
        Head::Aba => match (i, m) {
            (3, 0) => 6,
            (3, _) => 0,
            _ => count_head(Head::Abc, i - 1, m, memo),
        },
        Head::Abc => match (i, m) {
            (_, 0) => 0,
            (3, 1) => 6,
            (3, _) => 0,
            (4, 1) => 12,
            (4, _) => 0,
            (5, 1) => 12,
            (5, 2) => 6,
            (5, _) => 0,
            _ => (1..=3)
                .map(|d| count_head(Head::Aba, i - d, m - 1, memo))
                .sum(),
        },
    };
    memo.insert((head, i, m), v);
    v
}

/// `I(i, m)`: ternary `<=3`-irreducible words of length `i` with exactly `m`
/// regions.
pub fn count_i(i: usize, m: usize) -> u64 {
    match (i, m) {
        (0, _) => 0,
        (1, 0) => 3,
        (2, 0) => 6,
        (1 | 2, _) => 0,
        _ => {
            let mut memo = HashMap::new();
            count_head(Head::Aba, i, m, &mut memo) + count_head(Head::Abc, i, m, &mut memo)
        }
    }
}

fn cumulative(mode: RootMode, n: usize) -> u64 {
    static TABLES: OnceLock<RwLock<HashMap<RootMode, Vec<u64>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().unwrap().get(&mode) {
        if t.len() >= n {
            return t[..n].iter().sum();
        }
    }
    let t = irreducible_counts(n, 3, mode);
    let total = t.iter().sum();
    tables.write().unwrap().insert(mode, t);
    total
}

/// Size of the code from padded irreducible words: `sum_{i<=n} |Irr_{<=3}(i,3)|`.
pub fn constr1_size(n: usize) -> u64 {
    cumulative(RootMode::Le3, n)
}

/// Upper bound from `<=2`-irreducible words: `sum_{i<=n} |Irr_{<=2}(i,3)|`.
pub fn prop4_upper(n: usize) -> u64 {
    cumulative(RootMode::Le2, n)
}

/// Upper bound on `T(n)` summing per-root bounds: roots with no region give
/// one word each, one-region roots their exact optimum, the rest `U`.
pub fn eq1_upper(n: usize) -> u128 {
    let zero_region: u64 = (1..=n.min(3)).map(|i| count_i(i, 0)).sum();
    let one_region: u128 = one_region_patterns()
        .iter()
        .filter(|p| p.len() <= n)
        .map(|p| 6 * one_region_size(p.len(), p.x_len(2), n) as u128)
        .sum();
    let mut multi: u128 = 0;
    for i in 5..=n {
        for m in 2..=i {
            let c = count_i(i, m);
            if c > 0 {
                multi += c as u128 * u_bound(n, i, m);
            }
        }
    }
    zero_region as u128 + one_region + multi
}

/// Memoized bound columns for a range of lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsTable {
    pub u: HashMap<(usize, usize, usize), u128>,
    pub i: HashMap<(usize, usize), u64>,
    pub eq1: HashMap<usize, u128>,
    pub prop4: HashMap<usize, u64>,
}

impl BoundsTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn u(&mut self, n: usize, i: usize, m: usize) -> u128 {
        *self.u.entry((n, i, m)).or_insert_with(|| u_bound(n, i, m))
    }

    pub fn count_i(&mut self, i: usize, m: usize) -> u64 {
        *self.i.entry((i, m)).or_insert_with(|| count_i(i, m))
    }

    pub fn eq1(&mut self, n: usize) -> u128 {
        *self.eq1.entry(n).or_insert_with(|| eq1_upper(n))
    }

    pub fn prop4(&mut self, n: usize) -> u64 {
        *self.prop4.entry(n).or_insert_with(|| prop4_upper(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn u_examples() {
        for i in 3..10 {
            for m in 1..4 {
                assert_eq!(u_bound(i, i, m), 1);
                assert_eq!(u_bound(i + 3, i, m), 2);
            }
        }
        assert_eq!(u_bound(10, 3, 1), 3);
    }

    #[test]
    fn i_examples() {
        assert_eq!(count_i(3, 1), 6);
        assert_eq!(count_i(3, 0), 6);
        assert_eq!(count_i(5, 2), 6);
        assert_eq!(count_i(6, 2), 24);
        assert_eq!(count_i(1, 0), 3);
        assert_eq!(count_i(2, 0), 6);
    }

    #[test]
    fn one_region_roots_total() {
        let total: u64 = (1..=8).map(|i| count_i(i, 1)).sum();
        assert_eq!(total, 72);
    }

    #[test]
    fn eq1_examples() {
        assert_eq!(eq1_upper(6), 117);
        assert_eq!(eq1_upper(11), 1227);
        assert_eq!(eq1_upper(2), 9);
        assert_eq!(eq1_upper(1), 3);
    }

    #[test]
    fn prop4_examples() {
        assert_eq!(prop4_upper(5), 69);
        assert_eq!(prop4_upper(6), 117);
        assert_eq!(prop4_upper(1), 3);
        assert_eq!(constr1_size(6), 111);
    }

    #[test]
    fn table_memoizes() {
        let mut t = BoundsTable::new();
        assert_eq!(t.eq1(6), 117);
        assert_eq!(t.prop4(6), 117);
        assert_eq!(t.u(10, 3, 1), 3);
        assert_eq!(t.count_i(6, 2), 24);
        assert_eq!(t.eq1.len(), 1);
    }
}
