//! Permutation carriers.
//!
//! Text format for both types: the decimal values of `seq` separated by single
//! spaces. The left/right split of an [`ExtPermutation`] is not part of the
//! text and has to be supplied when parsing.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, ..., n+k+1}` that starts with `0` and ends with
/// `n+k+1`. Values `0..=n` are left values, `n+1..=n+k+1` right values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtPermutation {
    n: usize,
    k: usize,
    seq: Vec<usize>,
}

impl ExtPermutation {
    pub fn new(n: usize, k: usize, seq: Vec<usize>) -> Result<Self> {
        let len = n + k + 2;
        if seq.len() != len {
            return Err(Error::malformed("extended permutation", format!("length {} for n={n}, k={k}", seq.len())));
        }
        let mut seen = vec![false; len];
        for &v in &seq {
            if v >= len || seen[v] {
                return Err(Error::malformed("extended permutation", format!("value {v} repeated or out of range")));
            }
            seen[v] = true;
        }
        if seq[0] != 0 || seq[len - 1] != len - 1 {
            return Err(Error::malformed("extended permutation", "must start with 0 and end with n+k+1"));
        }
        Ok(ExtPermutation { n, k, seq })
    }

    /// `0 1 ... n+k+1`.
    pub fn identity(n: usize, k: usize) -> Self {
        ExtPermutation { n, k, seq: (0..n + k + 2).collect() }
    }

    pub fn parse(text: &str, n: usize, k: usize) -> Result<Self> {
        let seq = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        ExtPermutation::new(n, k, seq)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn is_left_value(&self, v: usize) -> bool {
        v <= self.n
    }

    /// Positions `0..=n` are left positions.
    #[inline]
    pub fn is_left_position(&self, p: usize) -> bool {
        p <= self.n
    }

    /// The functional inverse, as a permutation with the same `(n, k)`.
    pub fn inverse(&self) -> ExtPermutation {
        let mut inv = vec![0; self.seq.len()];
        for (pos, &v) in self.seq.iter().enumerate() {
            inv[v] = pos;
        }
        ExtPermutation { n: self.n, k: self.k, seq: inv }
    }

    /// Maximal runs of same-side values, in order of appearance.
    pub fn value_blocks(&self) -> Vec<&[usize]> {
        let mut blocks = Vec::new();
        let mut start = 0;
        for p in 1..=self.seq.len() {
            if p == self.seq.len() || self.is_left_value(self.seq[p]) != self.is_left_value(self.seq[start]) {
                blocks.push(&self.seq[start..p]);
                start = p;
            }
        }
        blocks
    }

    pub fn to_text(&self) -> String {
        join_values(&self.seq)
    }
}

impl fmt::Display for ExtPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A permutation of `{1, ..., size}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlainPermutation {
    seq: Vec<usize>,
}

impl PlainPermutation {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; seq.len() + 1];
        for &v in &seq {
            if v == 0 || v > seq.len() || seen[v] {
                return Err(Error::malformed("permutation", format!("value {v} repeated or out of range")));
            }
            seen[v] = true;
        }
        Ok(PlainPermutation { seq })
    }

    pub fn identity(size: usize) -> Self {
        PlainPermutation { seq: (1..=size).collect() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let seq = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        PlainPermutation::new(seq)
    }

    pub fn size(&self) -> usize {
        self.seq.len()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// Value at the 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.seq[i - 1]
    }

    pub fn to_text(&self) -> String {
        join_values(&self.seq)
    }
}

impl fmt::Display for PlainPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn join_values(seq: &[usize]) -> String {
    seq.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}
