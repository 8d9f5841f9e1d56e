//! Dense 0-1 matrices and their text format.
//!
//! Text format: one line per row made of the characters `0` and `1` with no
//! separators; consecutive matrices are separated by one blank line. A matrix
//! without cells (zero rows or zero columns) is written as the single line `-`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An `n x k` 0-1 matrix stored row-major. Indices are zero-based in the API;
/// row 0 is the top row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix01 {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl Matrix01 {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix01 { rows, cols, bits: vec![false; rows * cols] }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Matrix01 { rows, cols, bits: vec![true; rows * cols] }
    }

    pub fn from_bits(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != rows * cols {
            return Err(Error::Dimension(format!("{} cells for a {rows}x{cols} matrix", bits.len())));
        }
        Ok(Matrix01 { rows, cols, bits })
    }

    /// Builds a matrix from the low `rows * cols` bits of `word`, row-major,
    /// first cell in the most significant position. Lexicographic order of the
    /// cell sequence then coincides with numeric order of `word`.
    pub fn from_index(rows: usize, cols: usize, word: u64) -> Self {
        let total = rows * cols;
        assert!(total <= 64);
        let bits = (0..total).map(|p| (word >> (total - 1 - p)) & 1 == 1).collect();
        Matrix01 { rows, cols, bits }
    }

    /// Convenience constructor for tests and examples; panics on ragged input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut bits = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            bits.extend(r.iter().map(|&b| b != 0));
        }
        Matrix01 { rows: rows.len(), cols, bits }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.bits[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        self.bits[i * self.cols + j] = v;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.bits[i * self.cols..(i + 1) * self.cols]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows).map(|i| self.row(i).iter().filter(|&&b| b).count()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols).map(|j| (0..self.rows).filter(|&i| self.get(i, j)).count()).collect()
    }

    pub fn transpose(&self) -> Matrix01 {
        let mut t = Matrix01::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Submatrix keeping the listed rows and columns in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix01 {
        let mut bits = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                bits.push(self.get(i, j));
            }
        }
        Matrix01 { rows: rows.len(), cols: cols.len(), bits }
    }

    /// Copy with one extra all-0 row at the bottom and one extra all-0 column
    /// at the right.
    pub fn extended(&self) -> Matrix01 {
        let mut out = Matrix01::zeros(self.rows + 1, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }

    /// Text form, without a trailing newline.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "-".to_string();
        }
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            if i > 0 {
                s.push('\n');
            }
            s.extend(self.row(i).iter().map(|&b| if b { '1' } else { '0' }));
        }
        s
    }
}

impl fmt::Display for Matrix01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Matrix01 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().collect();
        if lines.len() == 1 && lines[0] == "-" {
            return Ok(Matrix01::zeros(0, 0));
        }
        if lines.is_empty() {
            return Err(Error::Parse("empty matrix block".into()));
        }
        let cols = lines[0].len();
        let mut bits = Vec::with_capacity(lines.len() * cols);
        for (i, line) in lines.iter().enumerate() {
            if line.len() != cols {
                return Err(Error::Parse(format!("row {} has {} cells, expected {cols}", i + 1, line.len())));
            }
            for ch in line.chars() {
                match ch {
                    '0' => bits.push(false),
                    '1' => bits.push(true),
                    other => return Err(Error::Parse(format!("unexpected character {other:?} in matrix"))),
                }
            }
        }
        Ok(Matrix01 { rows: lines.len(), cols, bits })
    }
}

/// Parses a sequence of blank-line separated matrices.
pub fn parse_matrices(text: &str) -> Result<Vec<Matrix01>> {
    let mut out = Vec::new();
    let mut block: Vec<&str> = Vec::new();
    for line in text.lines() {
        if line.is_empty() {
            if !block.is_empty() {
                out.push(block.join("\n").parse()?);
                block.clear();
            }
        } else {
            block.push(line);
        }
    }
    if !block.is_empty() {
        out.push(block.join("\n").parse()?);
    }
    Ok(out)
}

/// Inverse of [`parse_matrices`]; ends with a newline when non-empty.
pub fn format_matrices(ms: &[Matrix01]) -> String {
    let mut s = String::new();
    for (idx, m) in ms.iter().enumerate() {
        if idx > 0 {
            s.push('\n');
        }
        s.push_str(&m.to_text());
        s.push('\n');
    }
    s
}
