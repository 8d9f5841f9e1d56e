//! Coding of gamma-free matrices by two partitions, a matching and an
//! information word.
//!
//! Let `H` be the matrix extended by an all-0 bottom row and right column.
//! Columns are classed by the row of their top-1 (all-0 columns are special);
//! the last column of each ordinary class is important and the important
//! columns, in index order, form `M0`. Each nonzero row has one important 1
//! in `M0`: its top-1 if it holds one, its leading 1 otherwise. Rows are
//! classed by the `M0` column of that 1. Pairing a column class with the row
//! class indexed by the same `M0` column gives the matching.
//!
//! The remaining freedom sits at questionable positions. For the crucial 1 of
//! `M0` column `i` (the lowest known 1 of the column) at row `rho`, every later
//! column `j` contributes one position: `(rho, j)` when the top-1 of `j` is
//! above `rho`, `(top(j), i)` otherwise. Columns are processed left to right
//! and the information word records, per column, the offset `j - i` of the
//! revealed 1 or 0 when none of the positions holds a 1. A revealed 1 in the
//! crucial's row becomes the crucial of column `j` if it is lower than the
//! current one.
//!
//! Record text format (one code):
//!
//! ```text
//! m
//! cols | rows          (m lines, one per ordinary class pair)
//! colSpecial | rowSpecial
//! w1 w2 ... wm         (a single "-" when m = 0)
//! ```
//!
//! Index sets are ascending, 1-based and comma separated. Records are
//! separated by one blank line.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::is_gamma_free;
use crate::matrix::Matrix01;
use crate::partition::surjective_label_words;

/// One ordinary column class together with its matched row class (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassPair {
    pub cols: Vec<usize>,
    pub rows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaCode {
    classes: Vec<ClassPair>,
    col_special: Vec<usize>,
    row_special: Vec<usize>,
    info: Vec<usize>,
}

fn check_cover(what: &'static str, size: usize, special: &[usize], classes: &mut dyn Iterator<Item = &[usize]>) -> Result<()> {
    let mut seen = vec![false; size + 1];
    let mut mark = |class: &[usize]| -> Result<()> {
        if class.is_empty() {
            return Err(Error::malformed("gamma code", format!("empty {what} class")));
        }
        if class.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::malformed("gamma code", format!("{what} class {class:?} not strictly ascending")));
        }
        for &v in class {
            if v == 0 || v > size || seen[v] {
                return Err(Error::malformed("gamma code", format!("{what} index {v} out of range or repeated")));
            }
            seen[v] = true;
        }
        Ok(())
    };
    mark(special)?;
    for class in classes {
        mark(class)?;
    }
    if seen[1..].iter().any(|s| !s) {
        return Err(Error::malformed("gamma code", format!("{what} classes do not cover [{size}]")));
    }
    if !special.contains(&size) {
        return Err(Error::malformed("gamma code", format!("special {what} class must contain {size}")));
    }
    Ok(())
}

impl GammaCode {
    pub fn new(classes: Vec<ClassPair>, col_special: Vec<usize>, row_special: Vec<usize>, info: Vec<usize>) -> Result<Self> {
        let m = classes.len();
        let col_size = col_special.iter().chain(classes.iter().flat_map(|c| c.cols.iter())).copied().max().unwrap_or(0);
        let row_size = row_special.iter().chain(classes.iter().flat_map(|c| c.rows.iter())).copied().max().unwrap_or(0);
        check_cover("column", col_size, &col_special, &mut classes.iter().map(|c| c.cols.as_slice()))?;
        check_cover("row", row_size, &row_special, &mut classes.iter().map(|c| c.rows.as_slice()))?;
        if classes.windows(2).any(|w| w[0].cols.last() >= w[1].cols.last()) {
            return Err(Error::malformed("gamma code", "classes must be ordered by their last column"));
        }
        if info.len() != m {
            return Err(Error::malformed("gamma code", format!("information word has {} entries, expected {m}", info.len())));
        }
        for (i, &w) in info.iter().enumerate() {
            if w > m - 1 - i {
                return Err(Error::malformed(
                    "gamma code",
                    format!("information entry {} is {w}, allowed 0..={}", i + 1, m - 1 - i),
                ));
            }
        }
        Ok(GammaCode { classes, col_special, row_special, info })
    }

    pub fn m(&self) -> usize {
        self.classes.len()
    }

    /// Row count of the coded matrix.
    pub fn n(&self) -> usize {
        self.row_special.last().copied().unwrap_or(1) - 1
    }

    /// Column count of the coded matrix.
    pub fn k(&self) -> usize {
        self.col_special.last().copied().unwrap_or(1) - 1
    }

    pub fn classes(&self) -> &[ClassPair] {
        &self.classes
    }

    pub fn col_special(&self) -> &[usize] {
        &self.col_special
    }

    pub fn row_special(&self) -> &[usize] {
        &self.row_special
    }

    pub fn info(&self) -> &[usize] {
        &self.info
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![self.m().to_string()];
        for c in &self.classes {
            lines.push(format!("{} | {}", join_indices(&c.cols), join_indices(&c.rows)));
        }
        lines.push(format!("{} | {}", join_indices(&self.col_special), join_indices(&self.row_special)));
        if self.info.is_empty() {
            lines.push("-".to_string());
        } else {
            lines.push(self.info.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
        }
        lines.join("\n")
    }
}

fn join_indices(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("index {t:?}: {e}"))))
        .collect()
}

fn parse_class_line(line: &str) -> Result<(Vec<usize>, Vec<usize>)> {
    let (cols, rows) = line.split_once(" | ").ok_or_else(|| Error::Parse(format!("expected 'cols | rows', got {line:?}")))?;
    Ok((parse_indices(cols)?, parse_indices(rows)?))
}

impl fmt::Display for GammaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for GammaCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().collect();
        let m: usize = lines
            .first()
            .ok_or_else(|| Error::Parse("empty code record".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("class count: {e}")))?;
        if lines.len() != m + 3 {
            return Err(Error::Parse(format!("record for m={m} needs {} lines, got {}", m + 3, lines.len())));
        }
        let mut classes = Vec::with_capacity(m);
        for line in &lines[1..=m] {
            let (cols, rows) = parse_class_line(line)?;
            classes.push(ClassPair { cols, rows });
        }
        let (col_special, row_special) = parse_class_line(lines[m + 1])?;
        let info_line = lines[m + 2];
        let info = if info_line == "-" {
            Vec::new()
        } else {
            info_line
                .split(' ')
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("information entry {t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        };
        GammaCode::new(classes, col_special, row_special, info)
    }
}

/// Parses blank-line separated code records.
pub fn parse_gamma_codes(text: &str) -> Result<Vec<GammaCode>> {
    let mut out = Vec::new();
    let mut block: Vec<&str> = Vec::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.is_empty() {
            if !block.is_empty() {
                out.push(block.join("\n").parse()?);
                block.clear();
            }
        } else {
            block.push(line);
        }
    }
    Ok(out)
}

/// The frame fixed by partitions and matching, in zero-based coordinates of
/// the extended matrix.
struct Frame {
    /// Important column of each `M0` column.
    important: Vec<usize>,
    /// Row of the top-1 of each `M0` column.
    top: Vec<usize>,
    /// Lowest important 1 of each `M0` column.
    crucial: Vec<usize>,
}

impl Frame {
    /// Questionable position of the crucial at `rho` in `M0` column `i` for
    /// later column `j`, as (row, column) of the extended matrix, plus whether
    /// it lies in the crucial's row.
    fn questionable(&self, i: usize, rho: usize, j: usize) -> (usize, usize, bool) {
        if self.top[j] < rho {
            (rho, self.important[j], true)
        } else {
            (self.top[j], self.important[i], false)
        }
    }
}

pub fn gamma_encode(m: &Matrix01) -> Result<GammaCode> {
    if !is_gamma_free(m) {
        return Err(Error::NotGammaFree);
    }
    let h = m.extended();
    let (rows, cols) = (h.rows(), h.cols());
    let top_of: Vec<Option<usize>> = (0..cols).map(|c| (0..rows).find(|&r| h.get(r, c))).collect();

    let mut by_top: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut col_special = Vec::new();
    for (c, t) in top_of.iter().enumerate() {
        match t {
            Some(r) => by_top.entry(*r).or_default().push(c),
            None => col_special.push(c + 1),
        }
    }
    let mut col_classes: Vec<(usize, Vec<usize>)> = by_top.into_iter().collect();
    col_classes.sort_by_key(|(_, cs)| *cs.last().expect("classes are nonempty"));
    let important: Vec<usize> = col_classes.iter().map(|(_, cs)| *cs.last().unwrap()).collect();
    let top: Vec<usize> = col_classes.iter().map(|(r, _)| *r).collect();
    let m0 = important.len();

    let indentation: Vec<Option<usize>> = (0..rows)
        .map(|r| top.iter().position(|&t| t == r).or_else(|| (0..m0).find(|&t| h.get(r, important[t]))))
        .collect();
    let mut row_classes = vec![Vec::new(); m0];
    let mut row_special = Vec::new();
    for (r, ind) in indentation.iter().enumerate() {
        match ind {
            Some(t) => row_classes[*t].push(r + 1),
            None => row_special.push(r + 1),
        }
    }
    let crucial: Vec<usize> = row_classes.iter().map(|rs| rs.last().unwrap() - 1).collect();
    let mut frame = Frame { important, top, crucial };

    let mut info = Vec::with_capacity(m0);
    for i in 0..m0 {
        let rho = frame.crucial[i];
        let mut word = 0;
        for j in i + 1..m0 {
            let (r, c, in_row) = frame.questionable(i, rho, j);
            if in_row && h.get(r, c) {
                word = j - i;
                if rho > frame.crucial[j] {
                    frame.crucial[j] = rho;
                }
                break;
            }
        }
        if word == 0 {
            let below: Vec<usize> = (i + 1..m0)
                .filter(|&j| {
                    let (r, c, in_row) = frame.questionable(i, rho, j);
                    !in_row && h.get(r, c)
                })
                .collect();
            match below.as_slice() {
                [] => {}
                [j] => word = j - i,
                _ => return Err(Error::NotGammaFree),
            }
        }
        info.push(word);
    }

    let classes = col_classes
        .into_iter()
        .zip(row_classes)
        .map(|((_, cs), rs)| ClassPair { cols: cs.into_iter().map(|c| c + 1).collect(), rows: rs })
        .collect();
    GammaCode::new(classes, col_special, row_special, info)
}

pub fn gamma_decode(code: &GammaCode) -> Matrix01 {
    let (n, k) = (code.n(), code.k());
    let mut h = Matrix01::zeros(n + 1, k + 1);
    let mut frame = Frame { important: Vec::new(), top: Vec::new(), crucial: Vec::new() };
    for class in code.classes() {
        let top = class.rows[0] - 1;
        let important = *class.cols.last().unwrap() - 1;
        for &c in &class.cols {
            h.set(top, c - 1, true);
        }
        for &r in &class.rows {
            h.set(r - 1, important, true);
        }
        frame.important.push(important);
        frame.top.push(top);
        frame.crucial.push(*class.rows.last().unwrap() - 1);
    }
    for (i, &word) in code.info().iter().enumerate() {
        if word == 0 {
            continue;
        }
        let j = i + word;
        let rho = frame.crucial[i];
        let (r, c, in_row) = frame.questionable(i, rho, j);
        h.set(r, c, true);
        if in_row && rho > frame.crucial[j] {
            frame.crucial[j] = rho;
        }
    }
    let keep_rows: Vec<usize> = (0..n).collect();
    let keep_cols: Vec<usize> = (0..k).collect();
    let out = h.select(&keep_rows, &keep_cols);
    debug_assert!(is_gamma_free(&out));
    out
}

/// Every well-formed code for `(n, k)`: column partitions with classes
/// ordered by last column, ordered row partitions with the same class count,
/// and all information words.
pub fn all_gamma_codes(n: usize, k: usize) -> Vec<GammaCode> {
    let max_m = n.min(k);
    let col_words: Vec<(usize, Vec<usize>)> = surjective_label_words(k, max_m)
        .into_iter()
        .filter(|(m, w)| {
            // class r's last element must increase with r
            let mut last = vec![0; *m + 1];
            for (idx, &l) in w.iter().enumerate() {
                last[l] = idx + 1;
            }
            last[1..].windows(2).all(|p| p[0] < p[1])
        })
        .collect();
    let row_words = surjective_label_words(n, max_m);
    let split = |w: &[usize], m: usize| {
        let mut special = Vec::new();
        let mut ordinary = vec![Vec::new(); m];
        for (idx, &l) in w.iter().enumerate() {
            if l == 0 {
                special.push(idx + 1);
            } else {
                ordinary[l - 1].push(idx + 1);
            }
        }
        special.push(w.len() + 1);
        (special, ordinary)
    };
    let mut out = Vec::new();
    for (m, cw) in &col_words {
        let (col_special, col_classes) = split(cw, *m);
        for (mr, rw) in &row_words {
            if mr != m {
                continue;
            }
            let (row_special, row_classes) = split(rw, *m);
            let classes: Vec<ClassPair> = col_classes
                .iter()
                .zip(&row_classes)
                .map(|(c, r)| ClassPair { cols: c.clone(), rows: r.clone() })
                .collect();
            let mut info = vec![0usize; *m];
            loop {
                out.push(
                    GammaCode::new(classes.clone(), col_special.clone(), row_special.clone(), info.clone())
                        .expect("generated codes are well formed"),
                );
                // mixed-radix increment, entry i ranges over 0..=m-1-i
                let mut pos = *m;
                let done = loop {
                    if pos == 0 {
                        break true;
                    }
                    pos -= 1;
                    info[pos] += 1;
                    if info[pos] <= *m - 1 - pos {
                        break false;
                    }
                    info[pos] = 0;
                };
                if done {
                    break;
                }
            }
        }
    }
    out
}

/// Which of the two exclusive situations a hiding 1 is in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HidingCase {
    /// A crucial 1 above it in its column and a top-1 to its right.
    CrucialAbove,
    /// A crucial 1 to its left in its row.
    CrucialLeft,
}

/// Structure of `M0` for a gamma-free matrix, with the initial crucial 1s.
/// Coordinates are zero-based: rows of the extended matrix, columns of `M0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaAnatomy {
    pub m0: Matrix01,
    pub important_columns: Vec<usize>,
    pub top: Vec<usize>,
    pub crucial: Vec<usize>,
    /// Each hiding 1 as (row, column) with the flags (case 1 holds, case 2 holds).
    pub hiding: Vec<((usize, usize), bool, bool)>,
    /// Questionable positions of the initial crucial 1s, as (row, column).
    pub questionable: Vec<(usize, usize)>,
}

impl GammaAnatomy {
    /// The case of each hiding 1 when exactly one applies, `None` otherwise.
    pub fn cases(&self) -> Vec<Option<HidingCase>> {
        self.hiding
            .iter()
            .map(|&(_, above, left)| match (above, left) {
                (true, false) => Some(HidingCase::CrucialAbove),
                (false, true) => Some(HidingCase::CrucialLeft),
                _ => None,
            })
            .collect()
    }
}

pub fn gamma_anatomy(m: &Matrix01) -> Result<GammaAnatomy> {
    if !is_gamma_free(m) {
        return Err(Error::NotGammaFree);
    }
    let code = gamma_encode(m)?;
    let h = m.extended();
    let important: Vec<usize> = code.classes().iter().map(|c| c.cols.last().unwrap() - 1).collect();
    let top: Vec<usize> = code.classes().iter().map(|c| c.rows[0] - 1).collect();
    let crucial: Vec<usize> = code.classes().iter().map(|c| c.rows.last().unwrap() - 1).collect();
    let all_rows: Vec<usize> = (0..h.rows()).collect();
    let m0 = h.select(&all_rows, &important);
    let width = important.len();

    let mut important_cell = vec![vec![false; width]; h.rows()];
    for (t, class) in code.classes().iter().enumerate() {
        for &r in &class.rows {
            important_cell[r - 1][t] = true;
        }
    }
    let mut hiding = Vec::new();
    for r in 0..h.rows() {
        for s in 0..width {
            if !m0.get(r, s) || important_cell[r][s] {
                continue;
            }
            let crucial_above = crucial[s] < r;
            let top_right = (s + 1..width).any(|j| top[j] == r);
            let crucial_left = (0..s).any(|j| crucial[j] == r);
            hiding.push(((r, s), crucial_above && top_right, crucial_left));
        }
    }
    let frame = Frame { important: (0..width).collect(), top: top.clone(), crucial: crucial.clone() };
    let mut questionable = Vec::new();
    for i in 0..width {
        for j in i + 1..width {
            let (r, c, _) = frame.questionable(i, crucial[i], j);
            questionable.push((r, c));
        }
    }
    Ok(GammaAnatomy { m0, important_columns: important.iter().map(|c| c + 1).collect(), top, crucial, hiding, questionable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{factorial, stirling2, BigNat};
    use crate::families::{family_matrices, EnumerationLimits, FamilyId};
    use std::collections::{BTreeSet, HashMap};

    fn six_by_eight() -> Matrix01 {
        Matrix01::from_rows(&[
            [0u8, 1, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 1],
            [1, 0, 1, 0, 0, 0, 0, 0],
            [0, 1, 0, 1, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 0],
        ])
    }

    #[test]
    fn worked_example_partitions() {
        let code = gamma_encode(&six_by_eight()).unwrap();
        assert_eq!(code.m(), 5);
        let cols: Vec<Vec<usize>> = code.classes().iter().map(|c| c.cols.clone()).collect();
        let rows: Vec<Vec<usize>> = code.classes().iter().map(|c| c.rows.clone()).collect();
        assert_eq!(cols, vec![vec![2], vec![1, 3], vec![4, 6], vec![7], vec![8]]);
        assert_eq!(rows, vec![vec![1], vec![3, 5], vec![4], vec![6], vec![2]]);
        assert_eq!(code.row_special(), &[7]);
        assert_eq!(code.col_special(), &[5, 9]);
        // heights (extended row count minus top row) 6, 4, 3, 1, 5
        let heights: Vec<usize> = rows.iter().map(|r| 7 - r[0]).collect();
        assert_eq!(heights, vec![6, 4, 3, 1, 5]);
        // the 1 below the first crucial sits in the row of the top-1 of the
        // third M0 column
        assert_eq!(code.info()[0], 2);
        // frozen from an independent prototype of the same construction
        assert_eq!(code.info(), &[2, 0, 0, 0, 0]);
        assert_eq!(gamma_decode(&code), six_by_eight());
    }

    #[test]
    fn small_examples() {
        let zero = gamma_encode(&Matrix01::zeros(3, 2)).unwrap();
        assert_eq!(zero.m(), 0);
        assert!(zero.info().is_empty());
        assert_eq!(gamma_decode(&zero), Matrix01::zeros(3, 2));

        let one = gamma_encode(&Matrix01::ones(1, 1)).unwrap();
        assert_eq!(one.m(), 1);
        assert_eq!(one.classes(), &[ClassPair { cols: vec![1], rows: vec![1] }]);
        assert_eq!(one.info(), &[0]);

        assert_eq!(gamma_encode(&Matrix01::ones(2, 2)), Err(Error::NotGammaFree));
    }

    #[test]
    fn crucial_replaced_only_when_lower() {
        // the revealed 1 at (2,2) is above the crucial (3,2) of column 2
        let m = Matrix01::from_rows(&[[0u8, 1], [1, 1], [0, 1]]);
        let code = gamma_encode(&m).unwrap();
        assert_eq!(code.info(), &[1, 0]);
        assert_eq!(gamma_decode(&code), m);
    }

    #[test]
    fn round_trip_and_code_space() {
        let lim = EnumerationLimits::default();
        for n in 0..=4 {
            for k in 0..=4 {
                let matrices = family_matrices(FamilyId::GammaFree, n, k, &lim).unwrap();
                let codes = all_gamma_codes(n, k);
                let expected: BigNat = (0..=n.min(k))
                    .map(|m| factorial(m) * factorial(m) * stirling2(n + 1, m + 1) * stirling2(k + 1, m + 1))
                    .sum();
                assert_eq!(expected, codes.len() as u64);
                assert_eq!(matrices.len(), codes.len());
                let mut images = BTreeSet::new();
                for m in &matrices {
                    let code = gamma_encode(m).unwrap();
                    assert_eq!(&gamma_decode(&code), m);
                    images.insert(code);
                }
                for code in &codes {
                    let m = gamma_decode(code);
                    assert!(is_gamma_free(&m), "{code}");
                    assert_eq!(&gamma_encode(&m).unwrap(), code);
                }
                assert_eq!(images, codes.into_iter().collect::<BTreeSet<_>>());
            }
        }
    }

    #[test]
    fn each_frame_has_factorial_completions() {
        let lim = EnumerationLimits::default();
        for (n, k) in [(3, 3), (4, 3), (4, 4)] {
            let mut per_frame: HashMap<(Vec<ClassPair>, Vec<usize>, Vec<usize>), BTreeSet<Matrix01>> = HashMap::new();
            for code in all_gamma_codes(n, k) {
                let key = (code.classes().to_vec(), code.col_special().to_vec(), code.row_special().to_vec());
                per_frame.entry(key).or_default().insert(gamma_decode(&code));
            }
            for ((classes, _, _), decoded) in per_frame {
                assert_eq!(factorial(classes.len()), decoded.len() as u64);
            }
            let _ = &lim;
        }
    }

    #[test]
    fn hiding_ones_sit_at_questionable_positions() {
        let lim = EnumerationLimits::default();
        let mut hiding_seen = 0;
        for n in 0..=4 {
            for k in 0..=4 {
                for m in family_matrices(FamilyId::GammaFree, n, k, &lim).unwrap() {
                    let a = gamma_anatomy(&m).unwrap();
                    assert!(a.cases().iter().all(|c| c.is_some()), "{m}");
                    for &((r, s), _, _) in &a.hiding {
                        assert!(a.questionable.contains(&(r, s)), "{m}: hiding 1 at ({r},{s})");
                        hiding_seen += 1;
                    }
                    let width = a.important_columns.len();
                    assert_eq!(a.questionable.len(), width * width.saturating_sub(1) / 2);
                }
            }
        }
        assert!(hiding_seen > 0);
    }

    #[test]
    fn non_important_columns_carry_no_gamma() {
        // a matrix whose non-important columns hold only their top-1 has a
        // gamma in its extension iff the important-column submatrix has one
        for n in 1..=3 {
            for k in 1..=4 {
                for w in 0..1u64 << (n * k) {
                    let m = Matrix01::from_index(n, k, w);
                    let h = m.extended();
                    let tops: Vec<Option<usize>> = (0..h.cols()).map(|c| (0..h.rows()).find(|&r| h.get(r, c))).collect();
                    let important: Vec<usize> = (0..h.cols())
                        .filter(|&c| tops[c].is_some() && !(c + 1..h.cols()).any(|d| tops[d] == tops[c]))
                        .collect();
                    let only_top = (0..h.cols()).filter(|c| !important.contains(c)).all(|c| h.col_sums()[c] <= 1);
                    if !only_top {
                        continue;
                    }
                    let all_rows: Vec<usize> = (0..h.rows()).collect();
                    assert_eq!(is_gamma_free(&h), is_gamma_free(&h.select(&all_rows, &important)), "{m}");
                }
            }
        }
    }

    #[test]
    fn text_format_round_trips() {
        let code = gamma_encode(&six_by_eight()).unwrap();
        let text = code.to_text();
        assert_eq!(text, "5\n2 | 1\n1,3 | 3,5\n4,6 | 4\n7 | 6\n8 | 2\n5,9 | 7\n2 0 0 0 0");
        assert_eq!(text.parse::<GammaCode>().unwrap().to_text(), text);
        let zero = gamma_encode(&Matrix01::zeros(1, 2)).unwrap();
        assert_eq!(zero.to_text(), "0\n1,2,3 | 1,2\n-");
        let joined = format!("{}\n\n{}\n", text, zero.to_text());
        assert_eq!(parse_gamma_codes(&joined).unwrap(), vec![code, zero]);
    }

    #[test]
    fn malformed_codes_rejected() {
        let bad_order = GammaCode::new(
            vec![ClassPair { cols: vec![2], rows: vec![1] }, ClassPair { cols: vec![1], rows: vec![2] }],
            vec![3],
            vec![3],
            vec![0, 0],
        );
        assert!(bad_order.is_err());
        let bad_info = GammaCode::new(vec![ClassPair { cols: vec![1], rows: vec![1] }], vec![2], vec![2], vec![1]);
        assert!(bad_info.is_err());
        let missing_row = GammaCode::new(vec![ClassPair { cols: vec![1], rows: vec![1] }], vec![2], vec![3], vec![0]);
        assert!(missing_row.is_err());
        assert!("1\n1 | 1\n2 | 2\n1".parse::<GammaCode>().is_err());
    }
}
