//! Pairs of ordered set partitions with a special class.
//!
//! The row side partitions `[n+1]` and the column side `[k+1]`; the class
//! holding the added element (`n+1`, resp. `k+1`) is special, the other `m`
//! classes on each side are ordinary and ordered.
//!
//! Text format: `S O1 O2 ... | S O1 O2 ...` where `S` is the special class,
//! `Oi` the i-th ordinary class, and each class is written `{a,b,c}` with
//! ascending elements. Example: `{3} {1} {2} | {3} {1} {2}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartitionPair {
    n: usize,
    k: usize,
    row_special: Vec<usize>,
    row_ordinary: Vec<Vec<usize>>,
    col_special: Vec<usize>,
    col_ordinary: Vec<Vec<usize>>,
}

/// Checks that `special` and `ordinary` partition `[size]` with
/// `size` in the special class and every class nonempty. Classes are sorted
/// in place.
fn normalize_side(size: usize, special: &mut [usize], ordinary: &mut [Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; size + 1];
    let mut mark = |class: &[usize]| -> Result<()> {
        if class.is_empty() {
            return Err(Error::malformed("ordered partition pair", "empty class"));
        }
        for &v in class {
            if v == 0 || v > size || seen[v] {
                return Err(Error::malformed("ordered partition pair", format!("element {v} out of range or repeated")));
            }
            seen[v] = true;
        }
        Ok(())
    };
    mark(special)?;
    for class in ordinary.iter() {
        mark(class)?;
    }
    if seen[1..].iter().any(|s| !s) {
        return Err(Error::malformed("ordered partition pair", format!("classes do not cover [{size}]")));
    }
    if !special.contains(&size) {
        return Err(Error::malformed("ordered partition pair", format!("special class must contain {size}")));
    }
    special.sort_unstable();
    for class in ordinary.iter_mut() {
        class.sort_unstable();
    }
    Ok(())
}

impl OrderedPartitionPair {
    pub fn new(
        n: usize,
        k: usize,
        mut row_special: Vec<usize>,
        mut row_ordinary: Vec<Vec<usize>>,
        mut col_special: Vec<usize>,
        mut col_ordinary: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if row_ordinary.len() != col_ordinary.len() {
            return Err(Error::malformed(
                "ordered partition pair",
                format!("{} ordinary row classes vs {} column classes", row_ordinary.len(), col_ordinary.len()),
            ));
        }
        normalize_side(n + 1, &mut row_special, &mut row_ordinary)?;
        normalize_side(k + 1, &mut col_special, &mut col_ordinary)?;
        Ok(OrderedPartitionPair { n, k, row_special, row_ordinary, col_special, col_ordinary })
    }

    /// Builds a pair from class labels of the elements `1..=n` and `1..=k`;
    /// label 0 is the special class, label `r >= 1` the r-th ordinary class.
    pub fn from_labels(row_labels: &[usize], col_labels: &[usize]) -> Result<Self> {
        let n = row_labels.len();
        let k = col_labels.len();
        let m = row_labels.iter().copied().max().unwrap_or(0);
        let side = |labels: &[usize], size: usize| {
            let mut special = vec![size + 1];
            let mut ordinary = vec![Vec::new(); m];
            for (i, &l) in labels.iter().enumerate() {
                if l == 0 {
                    special.push(i + 1);
                } else if l <= m {
                    ordinary[l - 1].push(i + 1);
                } else {
                    return Err(Error::malformed("ordered partition pair", format!("label {l} exceeds m={m}")));
                }
            }
            Ok((special, ordinary))
        };
        let (rs, ro) = side(row_labels, n)?;
        let (cs, co) = side(col_labels, k)?;
        OrderedPartitionPair::new(n, k, rs, ro, cs, co)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.row_ordinary.len()
    }

    pub fn row_special(&self) -> &[usize] {
        &self.row_special
    }

    pub fn row_ordinary(&self) -> &[Vec<usize>] {
        &self.row_ordinary
    }

    pub fn col_special(&self) -> &[usize] {
        &self.col_special
    }

    pub fn col_ordinary(&self) -> &[Vec<usize>] {
        &self.col_ordinary
    }

    /// Label of each of `1..=n` (0 = special, r = r-th ordinary class).
    pub fn row_labels(&self) -> Vec<usize> {
        labels_of(self.n, &self.row_ordinary)
    }

    pub fn col_labels(&self) -> Vec<usize> {
        labels_of(self.k, &self.col_ordinary)
    }

    pub fn to_text(&self) -> String {
        format!(
            "{} | {}",
            side_text(&self.row_special, &self.row_ordinary),
            side_text(&self.col_special, &self.col_ordinary)
        )
    }
}

fn labels_of(size: usize, ordinary: &[Vec<usize>]) -> Vec<usize> {
    let mut labels = vec![0; size];
    for (r, class) in ordinary.iter().enumerate() {
        for &v in class {
            labels[v - 1] = r + 1;
        }
    }
    labels
}

fn class_text(class: &[usize]) -> String {
    let inner: Vec<String> = class.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn side_text(special: &[usize], ordinary: &[Vec<usize>]) -> String {
    let mut parts = vec![class_text(special)];
    parts.extend(ordinary.iter().map(|c| class_text(c)));
    parts.join(" ")
}

fn parse_side(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split_whitespace()
        .map(|tok| {
            let inner = tok
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("expected {{...}}, got {tok:?}")))?;
            inner
                .split(',')
                .map(|v| v.parse::<usize>().map_err(|e| Error::Parse(format!("{v:?}: {e}"))))
                .collect()
        })
        .collect()
}

impl fmt::Display for OrderedPartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for OrderedPartitionPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (rows, cols) = s.split_once('|').ok_or_else(|| Error::Parse("missing '|'".into()))?;
        let mut rows = parse_side(rows)?;
        let mut cols = parse_side(cols)?;
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::Parse("each side needs a special class".into()));
        }
        let row_special = rows.remove(0);
        let col_special = cols.remove(0);
        let n = row_special.iter().chain(rows.iter().flatten()).copied().max().unwrap_or(0);
        let k = col_special.iter().chain(cols.iter().flatten()).copied().max().unwrap_or(0);
        if n == 0 || k == 0 {
            return Err(Error::Parse("classes must be nonempty".into()));
        }
        OrderedPartitionPair::new(n - 1, k - 1, row_special, rows, col_special, cols)
    }
}

/// Label words of length `len` whose nonzero labels are exactly `1..=m` for
/// some `m <= max_m`, in lexicographic order, paired with their `m`.
pub(crate) fn surjective_label_words(len: usize, max_m: usize) -> Vec<(usize, Vec<usize>)> {
    let alphabet = len.min(max_m) + 1;
    let mut out = Vec::new();
    let mut word = vec![0usize; len];
    loop {
        let m = word.iter().copied().max().unwrap_or(0);
        let mut present = vec![false; m + 1];
        for &l in &word {
            present[l] = true;
        }
        if present[1..].iter().all(|&p| p) {
            out.push((m, word.clone()));
        }
        // odometer increment, last position fastest
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            word[pos] += 1;
            if word[pos] < alphabet {
                break;
            }
            word[pos] = 0;
        }
    }
}

/// All ordered partition pairs for `(n, k)`, in lexicographic order of the
/// concatenated label word (row labels, then column labels).
pub fn all_pairs(n: usize, k: usize) -> Vec<OrderedPartitionPair> {
    let rows = surjective_label_words(n, n.min(k));
    let cols = surjective_label_words(k, n.min(k));
    let mut out = Vec::new();
    for (m, rw) in &rows {
        for (mc, cw) in &cols {
            if m == mc {
                out.push(OrderedPartitionPair::from_labels(rw, cw).expect("generated labels are valid"));
            }
        }
    }
    out
}
