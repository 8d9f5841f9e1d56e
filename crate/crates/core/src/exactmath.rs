//! Exact integer arithmetic for poly-Bernoulli numbers of negative upper index.
//!
//! Every value returned here is a [`BigNat`]. There is no fixed-width fast path:
//! a single arbitrary-precision code path keeps all results exact at any size.

use std::collections::HashMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, ParseBigIntError};
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigNat(BigUint);

impl BigNat {
    pub fn zero() -> Self {
        BigNat(BigUint::zero())
    }

    pub fn one() -> Self {
        BigNat(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// Signed view, used by identities with alternating signs.
    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        BigNat(self.0.pow(exp))
    }
}

impl From<u64> for BigNat {
    fn from(v: u64) -> Self {
        BigNat(BigUint::from(v))
    }
}

impl From<usize> for BigNat {
    fn from(v: usize) -> Self {
        BigNat(BigUint::from(v))
    }
}

impl From<BigUint> for BigNat {
    fn from(v: BigUint) -> Self {
        BigNat(v)
    }
}

impl PartialEq<u64> for BigNat {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for BigNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigNat {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s).map(BigNat)
    }
}

impl Add for BigNat {
    type Output = BigNat;
    fn add(self, rhs: BigNat) -> BigNat {
        BigNat(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigNat> for &'a BigNat {
    type Output = BigNat;
    fn add(self, rhs: &'a BigNat) -> BigNat {
        BigNat(&self.0 + &rhs.0)
    }
}

impl AddAssign<&BigNat> for BigNat {
    fn add_assign(&mut self, rhs: &BigNat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for BigNat {
    fn add_assign(&mut self, rhs: BigNat) {
        self.0 += rhs.0;
    }
}

impl Mul for BigNat {
    type Output = BigNat;
    fn mul(self, rhs: BigNat) -> BigNat {
        BigNat(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a BigNat> for &'a BigNat {
    type Output = BigNat;
    fn mul(self, rhs: &'a BigNat) -> BigNat {
        BigNat(&self.0 * &rhs.0)
    }
}

impl Sum for BigNat {
    fn sum<I: Iterator<Item = BigNat>>(iter: I) -> BigNat {
        iter.fold(BigNat::zero(), |acc, x| acc + x)
    }
}

/// `C(n, m)`, zero when `m > n`.
pub fn binomial(n: usize, m: usize) -> BigNat {
    if m > n {
        return BigNat::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigUint::one();
    // acc * (n - i) is always divisible by (i + 1) after the multiplication.
    for i in 0..m {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    BigNat(acc)
}

pub fn factorial(n: usize) -> BigNat {
    BigNat((1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i)))
}

/// Table of Stirling numbers of the second kind, `S(a, b)` for `a, b <= max`.
///
/// Built by `S(a, b) = b * S(a-1, b) + S(a-1, b-1)` with `S(0, 0) = 1`,
/// `S(a, 0) = 0` for `a > 0` and `S(a, b) = 0` for `b > a`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    max: usize,
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(max: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max + 1);
        rows.push((0..=max).map(|b| if b == 0 { BigUint::one() } else { BigUint::zero() }).collect());
        for a in 1..=max {
            let prev = &rows[a - 1];
            let mut row = vec![BigUint::zero(); max + 1];
            for b in 1..=a.min(max) {
                row[b] = BigUint::from(b) * &prev[b] + &prev[b - 1];
            }
            rows.push(row);
        }
        StirlingTable { max, rows }
    }

    pub fn max(&self) -> usize {
        self.max
    }

    /// Panics if `a` or `b` exceeds the table bound.
    pub fn get(&self, a: usize, b: usize) -> &BigUint {
        &self.rows[a][b]
    }
}

pub fn stirling2(a: usize, b: usize) -> BigNat {
    if b > a {
        return BigNat::zero();
    }
    BigNat(StirlingTable::new(a).get(a, b).clone())
}

/// `B_n^(-k)` by the closed formula `sum_m m! S(n+1, m+1) m! S(k+1, m+1)`.
///
/// Terms with `m > min(n, k)` vanish, so the sum stops there.
pub fn polybernoulli_formula(n: usize, k: usize) -> BigNat {
    let table = StirlingTable::new(n.max(k) + 1);
    polybernoulli_formula_with(&table, n, k)
}

/// Same as [`polybernoulli_formula`], reusing a precomputed Stirling table.
pub fn polybernoulli_formula_with(table: &StirlingTable, n: usize, k: usize) -> BigNat {
    assert!(table.max() > n.max(k), "stirling table too small for ({n}, {k})");
    let mut fact = BigUint::one();
    let mut total = BigUint::zero();
    for m in 0..=n.min(k) {
        if m > 0 {
            fact *= BigUint::from(m);
        }
        let term = &fact * table.get(n + 1, m + 1) * &fact * table.get(k + 1, m + 1);
        total += term;
    }
    BigNat(total)
}

/// Memo table for the column recursion
/// `B_n^(-k) = B_n^(-(k-1)) + sum_{j=1..n} C(n, j) B_{n-j+1}^(-(k-1))`
/// with base `B_n^(0) = 1`.
#[derive(Debug, Default)]
pub struct RecursionMemo {
    memo: HashMap<(usize, usize), BigUint>,
    binomials: HashMap<(usize, usize), BigUint>,
}

impl RecursionMemo {
    pub fn new() -> Self {
        Self::default()
    }

    fn binomial(&mut self, n: usize, j: usize) -> BigUint {
        self.binomials
            .entry((n, j))
            .or_insert_with(|| binomial(n, j).into_biguint())
            .clone()
    }

    pub fn get(&mut self, n: usize, k: usize) -> BigNat {
        // Fill column by column so no call stack deeper than one level is needed.
        for col in 0..=k {
            for row in 0..=n + k - col {
                if self.memo.contains_key(&(row, col)) {
                    continue;
                }
                let value = if col == 0 {
                    BigUint::one()
                } else {
                    let mut acc = self.memo[&(row, col - 1)].clone();
                    for j in 1..=row {
                        let c = self.binomial(row, j);
                        acc += c * &self.memo[&(row - j + 1, col - 1)];
                    }
                    acc
                };
                self.memo.insert((row, col), value);
            }
        }
        BigNat(self.memo[&(n, k)].clone())
    }
}

/// `B_n^(-k)` by the column recursion, independent of Stirling numbers.
pub fn polybernoulli_recursion(n: usize, k: usize) -> BigNat {
    RecursionMemo::new().get(n, k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub max_n: usize,
    pub max_k: usize,
    /// Pairs `(n, k)` where either evaluation path broke `B_n^(-k) = B_k^(-n)`.
    pub violations: Vec<(usize, usize)>,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `B_n^(-k) = B_k^(-n)` on the grid through both the closed formula
/// and the (not manifestly symmetric) recursion.
pub fn check_symmetry(max_n: usize, max_k: usize) -> SymmetryReport {
    let bound = max_n.max(max_k);
    let table = StirlingTable::new(bound + 1);
    let mut memo = RecursionMemo::new();
    let mut violations = Vec::new();
    for n in 0..=max_n {
        for k in 0..=max_k {
            let by_formula = polybernoulli_formula_with(&table, n, k) == polybernoulli_formula_with(&table, k, n);
            let by_recursion = memo.get(n, k) == memo.get(k, n);
            if !(by_formula && by_recursion) {
                violations.push((n, k));
            }
        }
    }
    SymmetryReport { max_n, max_k, violations }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingSumReport {
    pub total: usize,
    /// `sum_{n+k=N} (-1)^n B_n^(-k)`.
    pub sum: BigInt,
    /// `N = 0` has the single term `B_0^(0) = 1` and cannot vanish.
    pub degenerate: bool,
}

impl AlternatingSumReport {
    pub fn vanishes(&self) -> bool {
        !self.degenerate && self.sum.is_zero()
    }
}

pub fn check_alternating_sum(total: usize) -> AlternatingSumReport {
    let table = StirlingTable::new(total + 1);
    let mut sum = BigInt::zero();
    for n in 0..=total {
        let term = polybernoulli_formula_with(&table, n, total - n).to_bigint();
        if n % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    AlternatingSumReport { total, sum, degenerate: total == 0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force set partitions via restricted growth strings.
    fn count_partitions(a: usize, b: usize) -> u64 {
        fn rec(pos: usize, a: usize, used: usize, b: usize) -> u64 {
            if pos == a {
                return u64::from(used == b);
            }
            let mut total = 0;
            for label in 0..=used {
                if label < b {
                    total += rec(pos + 1, a, used.max(label + 1), b);
                }
            }
            total
        }
        rec(0, a, 0, b)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(4, 2), 7);
        assert_eq!(count_partitions(4, 2), 7);
        for n in 0..8 {
            assert_eq!(stirling2(n, n), 1);
        }
        assert_eq!(stirling2(3, 1), 1);
        assert_eq!(stirling2(0, 0), 1);
        assert_eq!(stirling2(5, 0), 0);
        assert_eq!(stirling2(2, 5), 0);
    }

    #[test]
    fn stirling_matches_partition_enumeration() {
        for a in 0..=8 {
            for b in 0..=8 {
                assert_eq!(stirling2(a, b), count_partitions(a, b), "S({a},{b})");
            }
        }
    }

    #[test]
    fn stirling_recurrence_to_thirty() {
        let t = StirlingTable::new(30);
        for a in 1..=30 {
            for b in 1..=30 {
                let lhs = t.get(a, b).clone();
                let rhs = BigUint::from(b) * t.get(a - 1, b) + t.get(a - 1, b - 1);
                assert_eq!(lhs, rhs, "S({a},{b})");
            }
        }
    }

    #[test]
    fn formula_examples() {
        assert_eq!(polybernoulli_formula(2, 2), 14);
        assert_eq!(polybernoulli_formula(3, 3), 230);
        assert_eq!(polybernoulli_formula(2, 3), 46);
        for k in 0..10 {
            assert_eq!(polybernoulli_formula(0, k), 1);
        }
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(polybernoulli_recursion(2, 2), 14);
        assert_eq!(polybernoulli_recursion(1, 3), 8);
        for n in 0..10 {
            assert_eq!(polybernoulli_recursion(n, 0), 1);
        }
    }

    #[test]
    fn methods_agree_and_edges() {
        let mut memo = RecursionMemo::new();
        for n in 0..=10 {
            for k in 0..=10 {
                let f = polybernoulli_formula(n, k);
                assert_eq!(f, memo.get(n, k), "({n},{k})");
                assert_eq!(f, polybernoulli_formula(k, n));
            }
            let two_pow = BigNat::from(2u64).pow(n as u32);
            assert_eq!(polybernoulli_formula(1, n), two_pow);
            assert_eq!(polybernoulli_formula(n, 1), two_pow);
        }
    }

    #[test]
    fn symmetry_reports() {
        assert!(check_symmetry(8, 8).holds());
        assert!(check_symmetry(0, 5).holds());
        assert_eq!(polybernoulli_formula(2, 3), polybernoulli_formula(3, 2));
    }

    #[test]
    fn alternating_sum() {
        let r = check_alternating_sum(4);
        assert!(r.vanishes());
        let terms: Vec<u64> = (0..=4).map(|n| polybernoulli_formula(n, 4 - n).to_string().parse().unwrap()).collect();
        assert_eq!(terms, vec![1, 8, 14, 8, 1]);
        let zero = check_alternating_sum(0);
        assert_eq!(zero.sum, BigInt::one());
        assert!(zero.degenerate);
        assert!(!zero.vanishes());
        for total in 1..=12 {
            assert!(check_alternating_sum(total).vanishes(), "N={total}");
        }
    }

    #[test]
    fn decimal_round_trip() {
        let v = polybernoulli_formula(30, 30);
        let s = v.to_string();
        assert_eq!(s.parse::<BigNat>().unwrap(), v);
    }

    #[test]
    fn concurrent_calls_agree() {
        let expected = polybernoulli_recursion(9, 7);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..4).map(|_| s.spawn(|| polybernoulli_recursion(9, 7))).collect();
            for h in handles {
                assert_eq!(h.join().unwrap(), expected);
            }
        });
    }
}
