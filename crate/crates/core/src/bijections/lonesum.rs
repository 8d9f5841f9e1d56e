use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::families::is_lonesum;
use crate::matrix::Matrix01;
use crate::partition::OrderedPartitionPair;

/// Groups `1..=len` (plus the zero-sum extension element `len+1`) by sum;
/// returns (special class, ordinary classes by decreasing sum).
fn classes_by_sum(sums: &[usize]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut special = Vec::new();
    let mut by_sum: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &s) in sums.iter().enumerate() {
        if s == 0 {
            special.push(i + 1);
        } else {
            by_sum.entry(s).or_default().push(i + 1);
        }
    }
    special.push(sums.len() + 1);
    (special, by_sum.into_values().rev().collect())
}

/// Rows and columns are classed by equal sum; zero-sum classes are special
/// and ordinary classes are ordered by decreasing sum.
pub fn lonesum_encode(m: &Matrix01) -> Result<OrderedPartitionPair> {
    if !is_lonesum(m) {
        return Err(Error::NotLonesum);
    }
    let (rs, ro) = classes_by_sum(&m.row_sums());
    let (cs, co) = classes_by_sum(&m.col_sums());
    OrderedPartitionPair::new(m.rows(), m.cols(), rs, ro, cs, co)
}

/// A row in the r-th ordinary class (1-based, largest sum first) has ones in
/// exactly the columns of ordinary column classes `1..=m+1-r`.
pub fn lonesum_decode(pair: &OrderedPartitionPair) -> Matrix01 {
    let m = pair.m();
    let row_labels = pair.row_labels();
    let col_labels = pair.col_labels();
    let mut out = Matrix01::zeros(pair.n(), pair.k());
    for (i, &r) in row_labels.iter().enumerate() {
        if r == 0 {
            continue;
        }
        for (j, &c) in col_labels.iter().enumerate() {
            if c != 0 && c <= m + 1 - r {
                out.set(i, j, true);
            }
        }
    }
    out
}
