//! First-column decomposition of gamma-free matrices.
//!
//! Rows are of type A (first entry 0), B (first entry 1 and nothing else) or
//! C (first entry 1 and at least one more 1). With `j` rows of type B or C,
//! the first `j - 1` of them are forced to be type B, so the matrix is
//! determined by the chosen row set and a gamma-free remainder of size
//! `(n - j + 1) x (k - 1)`.

use crate::error::{Error, Result};
use crate::families::is_gamma_free;
use crate::matrix::Matrix01;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RecursionSplit {
    /// First column all 0; the remainder drops it.
    Empty { remainder: Matrix01 },
    /// `rows` (1-based, ascending) are the rows starting with a 1; the
    /// remainder drops the first column and all chosen rows but the last.
    Chosen { j: usize, rows: Vec<usize>, remainder: Matrix01 },
}

impl RecursionSplit {
    pub fn remainder(&self) -> &Matrix01 {
        match self {
            RecursionSplit::Empty { remainder } | RecursionSplit::Chosen { remainder, .. } => remainder,
        }
    }
}

pub fn recursion_split(m: &Matrix01) -> Result<RecursionSplit> {
    if m.cols() == 0 {
        return Err(Error::Precondition("split needs at least one column".into()));
    }
    if !is_gamma_free(m) {
        return Err(Error::NotGammaFree);
    }
    let rest_cols: Vec<usize> = (1..m.cols()).collect();
    let chosen: Vec<usize> = (0..m.rows()).filter(|&i| m.get(i, 0)).collect();
    if chosen.is_empty() {
        let all_rows: Vec<usize> = (0..m.rows()).collect();
        return Ok(RecursionSplit::Empty { remainder: m.select(&all_rows, &rest_cols) });
    }
    let forced = &chosen[..chosen.len() - 1];
    if let Some(&bad) = forced.iter().find(|&&i| rest_cols.iter().any(|&c| m.get(i, c))) {
        return Err(Error::Precondition(format!("row {} starts with 1 above another such row but is not type B", bad + 1)));
    }
    let kept: Vec<usize> = (0..m.rows()).filter(|i| !forced.contains(i)).collect();
    Ok(RecursionSplit::Chosen {
        j: chosen.len(),
        rows: chosen.iter().map(|i| i + 1).collect(),
        remainder: m.select(&kept, &rest_cols),
    })
}

pub fn recursion_join(split: &RecursionSplit, n: usize, k: usize) -> Result<Matrix01> {
    if k == 0 {
        return Err(Error::Dimension("join needs k >= 1".into()));
    }
    let remainder = split.remainder();
    if !is_gamma_free(remainder) {
        return Err(Error::NotGammaFree);
    }
    let mut out = Matrix01::zeros(n, k);
    match split {
        RecursionSplit::Empty { remainder } => {
            if remainder.rows() != n || remainder.cols() != k - 1 {
                return Err(Error::Dimension(format!(
                    "remainder {}x{} for a {n}x{k} matrix",
                    remainder.rows(),
                    remainder.cols()
                )));
            }
            for i in 0..n {
                for c in 0..k - 1 {
                    out.set(i, c + 1, remainder.get(i, c));
                }
            }
        }
        RecursionSplit::Chosen { j, rows, remainder } => {
            if *j == 0 || rows.len() != *j || rows.windows(2).any(|w| w[0] >= w[1]) || rows.iter().any(|&r| r == 0 || r > n) {
                return Err(Error::malformed("recursion split", format!("row set {rows:?} for j={j}, n={n}")));
            }
            if remainder.rows() != n - j + 1 || remainder.cols() != k - 1 {
                return Err(Error::Dimension(format!(
                    "remainder {}x{} for j={j} in a {n}x{k} matrix",
                    remainder.rows(),
                    remainder.cols()
                )));
            }
            let forced: Vec<usize> = rows[..j - 1].iter().map(|r| r - 1).collect();
            for &r in rows {
                out.set(r - 1, 0, true);
            }
            let kept = (0..n).filter(|i| !forced.contains(i));
            for (src, dst) in kept.enumerate() {
                for c in 0..k - 1 {
                    out.set(dst, c + 1, remainder.get(src, c));
                }
            }
        }
    }
    debug_assert!(is_gamma_free(&out));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{binomial, BigNat};
    use crate::families::{count_family, family_matrices, EnumerationLimits, FamilyId};
    use std::collections::BTreeMap;

    #[test]
    fn examples() {
        assert_eq!(
            recursion_split(&Matrix01::zeros(3, 2)).unwrap(),
            RecursionSplit::Empty { remainder: Matrix01::zeros(3, 1) }
        );
        let m = Matrix01::from_rows(&[[1u8, 0], [0, 0]]);
        let s = recursion_split(&m).unwrap();
        assert_eq!(s, RecursionSplit::Chosen { j: 1, rows: vec![1], remainder: Matrix01::zeros(2, 1) });
        assert_eq!(recursion_join(&s, 2, 2).unwrap(), m);
        assert_eq!(recursion_join(&RecursionSplit::Empty { remainder: Matrix01::zeros(2, 1) }, 2, 2).unwrap(), Matrix01::zeros(2, 2));
    }

    #[test]
    fn errors() {
        assert!(recursion_split(&Matrix01::ones(2, 2)).is_err());
        assert!(recursion_split(&Matrix01::zeros(2, 0)).is_err());
        let wrong_dims = RecursionSplit::Chosen { j: 1, rows: vec![1], remainder: Matrix01::zeros(1, 1) };
        assert!(matches!(recursion_join(&wrong_dims, 2, 2), Err(Error::Dimension(_))));
        let gamma_rest = RecursionSplit::Empty { remainder: Matrix01::ones(2, 2) };
        assert_eq!(recursion_join(&gamma_rest, 2, 3), Err(Error::NotGammaFree));
    }

    #[test]
    fn round_trip_and_term_counts() {
        let lim = EnumerationLimits::default();
        for n in 0..=4 {
            for k in 1..=4 {
                let mut by_j: BTreeMap<usize, u64> = BTreeMap::new();
                for m in family_matrices(FamilyId::GammaFree, n, k, &lim).unwrap() {
                    let s = recursion_split(&m).unwrap();
                    assert_eq!(recursion_join(&s, n, k).unwrap(), m);
                    let j = match &s {
                        RecursionSplit::Empty { .. } => 0,
                        RecursionSplit::Chosen { j, .. } => *j,
                    };
                    *by_j.entry(j).or_default() += 1;
                }
                let count = |a: usize, b: usize| count_family(FamilyId::GammaFree, a, b, &lim, 1).unwrap();
                assert_eq!(BigNat::from(by_j.get(&0).copied().unwrap_or(0)), count(n, k - 1));
                for j in 1..=n {
                    let expected = binomial(n, j) * count(n - j + 1, k - 1);
                    assert_eq!(BigNat::from(by_j.get(&j).copied().unwrap_or(0)), expected, "n={n} k={k} j={j}");
                }
            }
        }
    }
}
