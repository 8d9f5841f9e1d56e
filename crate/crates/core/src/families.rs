//! Membership predicates and enumerators for the families counted by
//! `B_n^(-k)`.
//!
//! Enumeration orders are canonical: matrices in row-major lexicographic order
//! of their cells (0 before 1), permutations in lexicographic order of `seq`,
//! partition pairs in lexicographic order of their label words (see
//! [`crate::partition::all_pairs`]).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::BigNat;
use crate::matrix::Matrix01;
use crate::partition::{self, OrderedPartitionPair};
use crate::perm::{ExtPermutation, PlainPermutation};

// ---------------------------------------------------------------------------
// predicates

/// No 2x2 submatrix equal to `(1,0 / 0,1)` or `(0,1 / 1,0)`.
pub fn is_lonesum(m: &Matrix01) -> bool {
    let (rows, cols) = (m.rows(), m.cols());
    for i in 0..rows {
        for i2 in i + 1..rows {
            for j in 0..cols {
                for j2 in j + 1..cols {
                    let (a, b, c, d) = (m.get(i, j), m.get(i, j2), m.get(i2, j), m.get(i2, j2));
                    if a == d && b == c && a != b {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Largest `n * k` accepted by [`is_lonesum_oracle`].
pub const ORACLE_MAX_CELLS: usize = 25;

/// Decides lonesumness from the definition: `m` is the only 0-1 matrix with
/// its row-sum and column-sum vectors. The search runs over all matrices with
/// the prescribed row sums, pruned only by column-sum feasibility, and stops
/// at the second hit.
pub fn is_lonesum_oracle(m: &Matrix01) -> Result<bool> {
    let cells = m.rows() * m.cols();
    if cells > ORACLE_MAX_CELLS {
        return Err(Error::SizeGuard(format!("oracle needs n*k <= {ORACLE_MAX_CELLS}, got {cells}")));
    }
    let row_sums = m.row_sums();
    let col_sums = m.col_sums();
    let mut remaining = col_sums.clone();
    let mut found = 0usize;
    count_realizations(&row_sums, &mut remaining, m.cols(), 0, &mut found);
    Ok(found == 1)
}

fn count_realizations(row_sums: &[usize], remaining: &mut [usize], cols: usize, row: usize, found: &mut usize) {
    if *found >= 2 {
        return;
    }
    if row == row_sums.len() {
        if remaining.iter().all(|&r| r == 0) {
            *found += 1;
        }
        return;
    }
    let rows_left = row_sums.len() - row;
    // every column still needing more ones than rows left is dead
    if remaining.iter().any(|&r| r > rows_left) {
        return;
    }
    for word in 0u32..(1u32 << cols) {
        if word.count_ones() as usize != row_sums[row] {
            continue;
        }
        if (0..cols).any(|j| word >> j & 1 == 1 && remaining[j] == 0) {
            continue;
        }
        for j in 0..cols {
            if word >> j & 1 == 1 {
                remaining[j] -= 1;
            }
        }
        count_realizations(row_sums, remaining, cols, row + 1, found);
        for j in 0..cols {
            if word >> j & 1 == 1 {
                remaining[j] += 1;
            }
        }
        if *found >= 2 {
            return;
        }
    }
}

/// Sorts rows and columns by decreasing sum (stable) and checks that the
/// result is a Young diagram: every row's ones form a leading block and block
/// widths do not increase downwards.
pub fn young_normal_form(m: &Matrix01) -> Result<Matrix01> {
    let row_sums = m.row_sums();
    let col_sums = m.col_sums();
    let mut row_order: Vec<usize> = (0..m.rows()).collect();
    row_order.sort_by(|&a, &b| row_sums[b].cmp(&row_sums[a]));
    let mut col_order: Vec<usize> = (0..m.cols()).collect();
    col_order.sort_by(|&a, &b| col_sums[b].cmp(&col_sums[a]));
    let sorted = m.select(&row_order, &col_order);
    if !is_staircase(&sorted) {
        return Err(Error::NotLonesum);
    }
    Ok(sorted)
}

pub fn is_staircase(m: &Matrix01) -> bool {
    let mut prev_width = m.cols();
    for i in 0..m.rows() {
        let row = m.row(i);
        let width = row.iter().take_while(|&&b| b).count();
        if row[width..].iter().any(|&b| b) || width > prev_width {
            return false;
        }
        prev_width = width;
    }
    true
}

/// No rows `i < i'` and columns `j < j'` with ones at `(i,j)`, `(i,j')` and
/// `(i',j)`.
pub fn is_gamma_free(m: &Matrix01) -> bool {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j) {
                continue;
            }
            let right = (j + 1..m.cols()).any(|jj| m.get(i, jj));
            let below = (i + 1..m.rows()).any(|ii| m.get(ii, j));
            if right && below {
                return false;
            }
        }
    }
    true
}

/// Every maximal run of left values and of right values increases.
pub fn is_callan(p: &ExtPermutation) -> bool {
    p.seq().windows(2).all(|w| p.is_left_value(w[0]) != p.is_left_value(w[1]) || w[0] < w[1])
}

/// Position-class definition: two left positions are equivalent when every
/// value strictly between the values they hold sits at a left position
/// (likewise for right positions). Within each class, values must increase
/// with the position.
pub fn is_max_ascending(p: &ExtPermutation) -> bool {
    let seq = p.seq();
    let len = seq.len();
    let mut position_of = vec![0; len];
    for (pos, &v) in seq.iter().enumerate() {
        position_of[v] = pos;
    }
    for a in 0..len {
        for b in a + 1..len {
            if p.is_left_position(a) != p.is_left_position(b) {
                continue;
            }
            let (lo, hi) = if seq[a] < seq[b] { (seq[a], seq[b]) } else { (seq[b], seq[a]) };
            let equivalent = (lo + 1..hi).all(|v| p.is_left_position(position_of[v]) == p.is_left_position(a));
            if equivalent && seq[a] > seq[b] {
                return false;
            }
        }
    }
    true
}

/// `-k <= p(i) - i <= n` for every position `i`.
pub fn is_vesztergombi(p: &PlainPermutation, n: usize, k: usize) -> bool {
    p.size() == n + k && (1..=p.size()).all(|i| displacement_ok(p.at(i), i, n, k))
}

/// Strict variant `-k < p(i) - i < n`, kept for comparison only.
pub fn is_vesztergombi_strict(p: &PlainPermutation, n: usize, k: usize) -> bool {
    p.size() == n + k
        && (1..=p.size()).all(|i| {
            let d = p.at(i) as isize - i as isize;
            -(k as isize) < d && d < n as isize
        })
}

#[inline]
fn displacement_ok(value: usize, pos: usize, n: usize, k: usize) -> bool {
    let d = value as isize - pos as isize;
    -(k as isize) <= d && d <= n as isize
}

/// Reads `m` as an orientation of `K_{n,k}`: a 1 at `(i, j)` orients the edge
/// from row vertex `i` to column vertex `j`, a 0 from `j` to `i`. Returns true
/// iff the oriented graph has no directed cycle.
pub fn is_acyclic_orientation(m: &Matrix01) -> bool {
    let (rows, cols) = (m.rows(), m.cols());
    let vertices = rows + cols;
    let out_edges = |v: usize| -> Vec<usize> {
        if v < rows {
            (0..cols).filter(|&j| m.get(v, j)).map(|j| rows + j).collect()
        } else {
            (0..rows).filter(|&i| !m.get(i, v - rows)).collect()
        }
    };
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; vertices];
    for start in 0..vertices {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, out_edges(start), 0usize)];
        state[start] = 1;
        while let Some((v, edges, idx)) = stack.last_mut() {
            if *idx == edges.len() {
                state[*v] = 2;
                stack.pop();
                continue;
            }
            let w = edges[*idx];
            *idx += 1;
            match state[w] {
                1 => return false,
                0 => {
                    state[w] = 1;
                    let e = out_edges(w);
                    stack.push((w, e, 0));
                }
                _ => {}
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// families

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Lonesum,
    GammaFree,
    Callan,
    MaxAscending,
    Vesztergombi,
    AcyclicOrientation,
    OrderedPartitionPairs,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::Lonesum,
        FamilyId::GammaFree,
        FamilyId::Callan,
        FamilyId::MaxAscending,
        FamilyId::Vesztergombi,
        FamilyId::AcyclicOrientation,
        FamilyId::OrderedPartitionPairs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Lonesum => "lonesum",
            FamilyId::GammaFree => "gammafree",
            FamilyId::Callan => "callan",
            FamilyId::MaxAscending => "maxascending",
            FamilyId::Vesztergombi => "vesztergombi",
            FamilyId::AcyclicOrientation => "acyclic",
            FamilyId::OrderedPartitionPairs => "pairs",
        }
    }

    pub fn is_matrix_family(self) -> bool {
        matches!(self, FamilyId::Lonesum | FamilyId::GammaFree | FamilyId::AcyclicOrientation)
    }

    pub fn is_permutation_family(self) -> bool {
        matches!(self, FamilyId::Callan | FamilyId::MaxAscending | FamilyId::Vesztergombi)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        Ok(match key.as_str() {
            "lonesum" => FamilyId::Lonesum,
            "gammafree" | "gamma" => FamilyId::GammaFree,
            "callan" => FamilyId::Callan,
            "maxascending" => FamilyId::MaxAscending,
            "vesztergombi" => FamilyId::Vesztergombi,
            "acyclic" | "acyclicorientation" | "orientation" => FamilyId::AcyclicOrientation,
            "pairs" | "orderedpartitionpairs" | "partitionpairs" => FamilyId::OrderedPartitionPairs,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// Size guards for enumeration. Matrix families and partition pairs need
/// `n, k <= max_matrix_dim`; permutation families need `n + k <= max_perm_size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_matrix_dim: usize,
    pub max_perm_size: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_matrix_dim: 6, max_perm_size: 9 }
    }
}

impl EnumerationLimits {
    pub fn check(&self, family: FamilyId, n: usize, k: usize) -> Result<()> {
        if family.is_permutation_family() {
            if n + k > self.max_perm_size {
                return Err(Error::SizeGuard(format!(
                    "{family} with n+k={} exceeds the permutation guard {}",
                    n + k,
                    self.max_perm_size
                )));
            }
        } else if n > self.max_matrix_dim || k > self.max_matrix_dim {
            return Err(Error::SizeGuard(format!(
                "{family} at {n}x{k} exceeds the matrix guard {}",
                self.max_matrix_dim
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyMember {
    Matrix(Matrix01),
    Extended(ExtPermutation),
    Plain(PlainPermutation),
    Pair(OrderedPartitionPair),
}

impl fmt::Display for FamilyMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyMember::Matrix(m) => m.fmt(f),
            FamilyMember::Extended(p) => p.fmt(f),
            FamilyMember::Plain(p) => p.fmt(f),
            FamilyMember::Pair(p) => p.fmt(f),
        }
    }
}

/// A cell placement that completes a forbidden configuration. Called with the
/// cell just written; all cells before it in row-major order are set.
type CompletionCheck = fn(&Matrix01, usize, usize) -> bool;

fn completes_gamma(m: &Matrix01, r: usize, c: usize) -> bool {
    // in row-major order the lower-left corner of a gamma is written last
    m.get(r, c) && (0..r).any(|i| m.get(i, c) && (c + 1..m.cols()).any(|j| m.get(i, j)))
}

fn completes_ryser_pattern(m: &Matrix01, r: usize, c: usize) -> bool {
    let e = m.get(r, c);
    (0..r).any(|i| {
        let b = m.get(i, c);
        b != e && (0..c).any(|j| m.get(i, j) == e && m.get(r, j) == b)
    })
}

fn completes_directed_square(m: &Matrix01, r: usize, c: usize) -> bool {
    // rows i, r and columns j, c: i -> j -> r -> c -> i, or the reverse
    let row_to_col = |i: usize, j: usize| m.get(i, j);
    (0..r).any(|i| {
        (0..c).any(|j| {
            let forward = row_to_col(i, j) && !row_to_col(r, j) && row_to_col(r, c) && !row_to_col(i, c);
            let backward = !row_to_col(i, j) && row_to_col(r, j) && !row_to_col(r, c) && row_to_col(i, c);
            forward || backward
        })
    })
}

fn matrix_check(family: FamilyId) -> CompletionCheck {
    match family {
        FamilyId::Lonesum => completes_ryser_pattern,
        FamilyId::GammaFree => completes_gamma,
        FamilyId::AcyclicOrientation => completes_directed_square,
        _ => unreachable!("not a matrix family"),
    }
}

fn matrix_search(m: &mut Matrix01, cell: usize, check: CompletionCheck, visit: &mut dyn FnMut(FamilyMember)) {
    if cell == m.rows() * m.cols() {
        visit(FamilyMember::Matrix(m.clone()));
        return;
    }
    let (r, c) = (cell / m.cols(), cell % m.cols());
    for v in [false, true] {
        m.set(r, c, v);
        if !check(m, r, c) {
            matrix_search(m, cell + 1, check, visit);
        }
    }
    m.set(r, c, false);
}

#[derive(Clone, Copy)]
enum PermKind {
    Callan,
    MaxAscending,
    Vesztergombi,
}

/// Backtracking over permutations in lexicographic order. `prefix` holds the
/// already placed values; `pool` the sorted candidates.
struct PermSearch {
    kind: PermKind,
    n: usize,
    k: usize,
}

impl PermSearch {
    fn accepts_next(&self, prefix: &[usize], v: usize) -> bool {
        match self.kind {
            PermKind::Callan => match prefix.last() {
                Some(&prev) => (prev <= self.n) != (v <= self.n) || prev < v,
                None => true,
            },
            PermKind::MaxAscending => true,
            PermKind::Vesztergombi => displacement_ok(v, prefix.len() + 1, self.n, self.k),
        }
    }

    fn finish(&self, prefix: &[usize]) -> Option<FamilyMember> {
        match self.kind {
            PermKind::Vesztergombi => Some(FamilyMember::Plain(PlainPermutation::new(prefix.to_vec()).ok()?)),
            PermKind::Callan | PermKind::MaxAscending => {
                let last = self.n + self.k + 1;
                let mut seq = prefix.to_vec();
                seq.push(last);
                let p = ExtPermutation::new(self.n, self.k, seq).ok()?;
                let keep = match self.kind {
                    PermKind::Callan => is_callan(&p),
                    _ => is_max_ascending(&p),
                };
                keep.then_some(FamilyMember::Extended(p))
            }
        }
    }

    fn run(&self, prefix: &mut Vec<usize>, used: &mut [bool], remaining: usize, visit: &mut dyn FnMut(FamilyMember)) {
        if remaining == 0 {
            if let Some(member) = self.finish(prefix) {
                visit(member);
            }
            return;
        }
        for v in 1..used.len() {
            if used[v] || !self.accepts_next(prefix, v) {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            self.run(prefix, used, remaining - 1, visit);
            prefix.pop();
            used[v] = false;
        }
    }

    /// Start state: the fixed leading 0 for extended permutations.
    fn start(&self) -> (Vec<usize>, Vec<bool>) {
        let size = self.n + self.k;
        let used = vec![false; size + 1];
        match self.kind {
            PermKind::Vesztergombi => (Vec::new(), used),
            _ => (vec![0], used),
        }
    }
}

fn perm_kind(family: FamilyId) -> PermKind {
    match family {
        FamilyId::Callan => PermKind::Callan,
        FamilyId::MaxAscending => PermKind::MaxAscending,
        FamilyId::Vesztergombi => PermKind::Vesztergombi,
        _ => unreachable!("not a permutation family"),
    }
}

/// Independent subtrees of the search: the choices at the first free slot.
/// `None` stands for the whole tree (used when there is nothing to split).
fn first_choices(family: FamilyId, n: usize, k: usize) -> Vec<Option<usize>> {
    if family.is_matrix_family() {
        if n == 0 || k == 0 {
            return vec![None];
        }
        return (0..2usize.pow(k as u32)).map(Some).collect();
    }
    if family.is_permutation_family() {
        if n + k == 0 {
            return vec![None];
        }
        return (1..=n + k).map(Some).collect();
    }
    vec![None]
}

fn search_subtree(family: FamilyId, n: usize, k: usize, choice: Option<usize>, visit: &mut dyn FnMut(FamilyMember)) {
    if family.is_matrix_family() {
        let check = matrix_check(family);
        let mut m = Matrix01::zeros(n, k);
        match choice {
            None => matrix_search(&mut m, 0, check, visit),
            Some(word) => {
                // the first row alone cannot hold a forbidden configuration
                for c in 0..k {
                    m.set(0, c, word >> (k - 1 - c) & 1 == 1);
                }
                matrix_search(&mut m, k, check, visit);
            }
        }
    } else if family.is_permutation_family() {
        let search = PermSearch { kind: perm_kind(family), n, k };
        let (mut prefix, mut used) = search.start();
        let mut remaining = n + k;
        if let Some(v) = choice {
            if !search.accepts_next(&prefix, v) {
                return;
            }
            used[v] = true;
            prefix.push(v);
            remaining -= 1;
        }
        search.run(&mut prefix, &mut used, remaining, visit);
    } else {
        for pair in partition::all_pairs(n, k) {
            visit(FamilyMember::Pair(pair));
        }
    }
}

/// Visits every member of `family` at size `(n, k)` in canonical order and
/// returns the count.
pub fn enumerate_family(
    family: FamilyId,
    n: usize,
    k: usize,
    limits: &EnumerationLimits,
    mut visitor: impl FnMut(&FamilyMember),
) -> Result<BigNat> {
    limits.check(family, n, k)?;
    let mut count = 0u64;
    for choice in first_choices(family, n, k) {
        search_subtree(family, n, k, choice, &mut |m| {
            count += 1;
            visitor(&m);
        });
    }
    Ok(BigNat::from(count))
}

/// Partitioned enumeration: the search tree is split at its first level and
/// the subtrees are distributed over `threads` workers. The visitor may be
/// called concurrently and in any order; the count equals the sequential one.
pub fn enumerate_family_partitioned(
    family: FamilyId,
    n: usize,
    k: usize,
    limits: &EnumerationLimits,
    threads: usize,
    visitor: &(dyn Fn(&FamilyMember) + Sync),
) -> Result<BigNat> {
    limits.check(family, n, k)?;
    let choices = first_choices(family, n, k);
    let threads = threads.max(1).min(choices.len());
    let total: u64 = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let choices = &choices;
                s.spawn(move || {
                    let mut count = 0u64;
                    for choice in choices.iter().skip(t).step_by(threads) {
                        search_subtree(family, n, k, *choice, &mut |m| {
                            count += 1;
                            visitor(&m);
                        });
                    }
                    count
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).sum()
    });
    Ok(BigNat::from(total))
}

/// All members in canonical order. With `threads > 1` the subtrees are
/// searched concurrently and concatenated in order, so the result does not
/// depend on `threads`.
pub fn collect_family(
    family: FamilyId,
    n: usize,
    k: usize,
    limits: &EnumerationLimits,
    threads: usize,
) -> Result<Vec<FamilyMember>> {
    limits.check(family, n, k)?;
    let choices = first_choices(family, n, k);
    let threads = threads.max(1).min(choices.len());
    if threads == 1 {
        let mut out = Vec::new();
        for choice in choices {
            search_subtree(family, n, k, choice, &mut |m| out.push(m));
        }
        return Ok(out);
    }
    let mut chunks: Vec<(usize, Vec<FamilyMember>)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let choices = &choices;
                s.spawn(move || {
                    let mut local = Vec::new();
                    for (idx, choice) in choices.iter().enumerate().skip(t).step_by(threads) {
                        let mut members = Vec::new();
                        search_subtree(family, n, k, *choice, &mut |m| members.push(m));
                        local.push((idx, members));
                    }
                    local
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("enumeration worker panicked")).collect()
    });
    chunks.sort_by_key(|(idx, _)| *idx);
    Ok(chunks.into_iter().flat_map(|(_, ms)| ms).collect())
}

pub fn count_family(family: FamilyId, n: usize, k: usize, limits: &EnumerationLimits, threads: usize) -> Result<BigNat> {
    if threads > 1 {
        enumerate_family_partitioned(family, n, k, limits, threads, &|_| {})
    } else {
        enumerate_family(family, n, k, limits, |_| {})
    }
}

/// Matrices of a matrix family, unwrapped.
pub fn family_matrices(family: FamilyId, n: usize, k: usize, limits: &EnumerationLimits) -> Result<Vec<Matrix01>> {
    if !family.is_matrix_family() {
        return Err(Error::Precondition(format!("{family} is not a matrix family")));
    }
    Ok(collect_family(family, n, k, limits, 1)?
        .into_iter()
        .filter_map(|m| match m {
            FamilyMember::Matrix(m) => Some(m),
            _ => None,
        })
        .collect())
}

/// Extended permutations of a Callan or max-ascending family, unwrapped.
pub fn family_permutations(family: FamilyId, n: usize, k: usize, limits: &EnumerationLimits) -> Result<Vec<ExtPermutation>> {
    if !matches!(family, FamilyId::Callan | FamilyId::MaxAscending) {
        return Err(Error::Precondition(format!("{family} is not an extended-permutation family")));
    }
    Ok(collect_family(family, n, k, limits, 1)?
        .into_iter()
        .filter_map(|m| match m {
            FamilyMember::Extended(p) => Some(p),
            _ => None,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext(text: &str, n: usize, k: usize) -> ExtPermutation {
        ExtPermutation::parse(text, n, k).unwrap()
    }

    /// The 6x8 example matrix from the gamma-free coding construction.
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

    fn all_matrices(n: usize, k: usize) -> impl Iterator<Item = Matrix01> {
        (0..1u64 << (n * k)).map(move |w| Matrix01::from_index(n, k, w))
    }

    #[test]
    fn lonesum_examples() {
        assert!(is_lonesum(&Matrix01::ones(2, 2)));
        assert!(!is_lonesum(&Matrix01::from_rows(&[[1u8, 0], [0, 1]])));
        assert!(!is_lonesum(&Matrix01::from_rows(&[[0u8, 1], [1, 0]])));
        assert!(is_lonesum(&Matrix01::from_rows(&[[1u8, 0, 1, 1, 0]])));
    }

    #[test]
    fn oracle_examples() {
        assert!(!is_lonesum_oracle(&Matrix01::from_rows(&[[1u8, 0], [0, 1]])).unwrap());
        assert!(is_lonesum_oracle(&Matrix01::zeros(3, 3)).unwrap());
        assert!(is_lonesum_oracle(&Matrix01::from_rows(&[[1u8, 1], [1, 0]])).unwrap());
        assert!(matches!(is_lonesum_oracle(&Matrix01::zeros(2, 13)), Err(Error::SizeGuard(_))));
        assert!(is_lonesum_oracle(&Matrix01::zeros(5, 5)).unwrap());
    }

    #[test]
    fn young_examples() {
        let m = Matrix01::from_rows(&[[0u8, 1], [1, 1]]);
        assert_eq!(young_normal_form(&m).unwrap(), Matrix01::from_rows(&[[1u8, 1], [1, 0]]));
        assert_eq!(young_normal_form(&Matrix01::ones(3, 2)).unwrap(), Matrix01::ones(3, 2));
        assert_eq!(young_normal_form(&Matrix01::zeros(2, 3)).unwrap(), Matrix01::zeros(2, 3));
        assert_eq!(young_normal_form(&Matrix01::from_rows(&[[1u8, 0], [0, 1]])), Err(Error::NotLonesum));
    }

    #[test]
    fn lonesum_triple_equivalence_small() {
        for (n, k) in [(1, 4), (2, 2), (2, 3), (3, 3), (3, 2)] {
            for m in all_matrices(n, k) {
                let a = is_lonesum(&m);
                assert_eq!(a, is_lonesum_oracle(&m).unwrap(), "{m}");
                assert_eq!(a, young_normal_form(&m).is_ok(), "{m}");
            }
        }
    }

    #[test]
    fn gamma_examples() {
        assert!(is_gamma_free(&six_by_eight()));
        assert!(!is_gamma_free(&Matrix01::from_rows(&[[1u8, 1], [1, 0]])));
        assert!(!is_gamma_free(&Matrix01::ones(2, 2)));
        assert!(is_gamma_free(&Matrix01::ones(1, 6)));
    }

    #[test]
    fn callan_examples() {
        assert!(is_callan(&ext("0 3 1 4 2 5", 2, 2)));
        assert!(is_callan(&ext("0 1 2 3 4 5", 2, 2)));
        assert!(!is_callan(&ext("0 2 1 3 4 5", 2, 2)));
    }

    #[test]
    fn max_ascending_examples() {
        assert!(is_max_ascending(&ext("0 5 1 2 6 3 4 7", 4, 2)));
        assert!(!is_max_ascending(&ext("0 6 2 1 5 3 4 7", 4, 2)));
        assert!(is_max_ascending(&ext("0 1 2 3 4 5", 2, 2)));
    }

    #[test]
    fn vesztergombi_examples() {
        assert!(is_vesztergombi(&PlainPermutation::identity(4), 2, 2));
        assert!(!is_vesztergombi(&PlainPermutation::new(vec![4, 1, 2, 3]).unwrap(), 2, 2));
        let mut count = 0;
        let mut strict = 0;
        permute(&mut (1..=4).collect::<Vec<_>>(), 0, &mut |seq| {
            let p = PlainPermutation::new(seq.to_vec()).unwrap();
            count += usize::from(is_vesztergombi(&p, 2, 2));
            strict += usize::from(is_vesztergombi_strict(&p, 2, 2));
        });
        assert_eq!(count, 14);
        println!("strict variant at n=k=2: {strict} of 24");
    }

    fn permute(v: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
        if start == v.len() {
            f(v);
            return;
        }
        for i in start..v.len() {
            v.swap(start, i);
            permute(v, start + 1, f);
            v.swap(start, i);
        }
    }

    #[test]
    fn acyclic_examples() {
        assert!(is_acyclic_orientation(&Matrix01::ones(3, 2)));
        assert!(!is_acyclic_orientation(&Matrix01::from_rows(&[[1u8, 0], [0, 1]])));
        assert!(is_acyclic_orientation(&Matrix01::from_rows(&[[0u8, 1, 0]])));
    }

    #[test]
    fn orientation_equals_lonesum() {
        for n in 0..=4 {
            for k in 0..=4 {
                for m in all_matrices(n, k) {
                    assert_eq!(is_acyclic_orientation(&m), is_lonesum(&m), "{m}");
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let lim = EnumerationLimits::default();
        assert_eq!(enumerate_family(FamilyId::Callan, 2, 2, &lim, |_| {}).unwrap(), 14);
        let mut seen = Vec::new();
        enumerate_family(FamilyId::GammaFree, 1, 1, &lim, |m| seen.push(m.to_string())).unwrap();
        assert_eq!(seen, vec!["0", "1"]);
        assert_eq!(enumerate_family(FamilyId::Lonesum, 2, 2, &lim, |_| {}).unwrap(), 14);
        assert_eq!(enumerate_family(FamilyId::OrderedPartitionPairs, 2, 2, &lim, |_| {}).unwrap(), 14);
    }

    #[test]
    fn guard_is_enforced() {
        let lim = EnumerationLimits { max_matrix_dim: 3, max_perm_size: 5 };
        assert!(enumerate_family(FamilyId::GammaFree, 4, 1, &lim, |_| {}).is_err());
        assert!(enumerate_family(FamilyId::Callan, 3, 3, &lim, |_| {}).is_err());
        assert!(enumerate_family(FamilyId::Callan, 3, 2, &lim, |_| {}).is_ok());
    }

    #[test]
    fn pruned_matches_naive_filter() {
        let lim = EnumerationLimits::default();
        let preds: [(FamilyId, fn(&Matrix01) -> bool); 3] = [
            (FamilyId::Lonesum, is_lonesum),
            (FamilyId::GammaFree, is_gamma_free),
            (FamilyId::AcyclicOrientation, is_acyclic_orientation),
        ];
        for (fam, pred) in preds {
            for n in 0..=3 {
                for k in 0..=3 {
                    let naive: Vec<Matrix01> = all_matrices(n, k).filter(|m| pred(m)).collect();
                    assert_eq!(family_matrices(fam, n, k, &lim).unwrap(), naive, "{fam} {n}x{k}");
                }
            }
        }
    }

    #[test]
    fn degenerate_sizes_have_one_member() {
        let lim = EnumerationLimits::default();
        for fam in FamilyId::ALL {
            for (n, k) in [(0, 0), (0, 3), (3, 0)] {
                assert_eq!(count_family(fam, n, k, &lim, 1).unwrap(), 1, "{fam} ({n},{k})");
            }
        }
    }

    #[test]
    fn partitioned_matches_sequential() {
        let lim = EnumerationLimits::default();
        for fam in FamilyId::ALL {
            let seq = collect_family(fam, 3, 2, &lim, 1).unwrap();
            let par = collect_family(fam, 3, 2, &lim, 3).unwrap();
            assert_eq!(seq, par, "{fam}");
            let counter = std::sync::atomic::AtomicUsize::new(0);
            let total = enumerate_family_partitioned(fam, 3, 2, &lim, 4, &|_| {
                counter.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            })
            .unwrap();
            assert_eq!(total, seq.len() as u64);
            assert_eq!(counter.into_inner(), seq.len());
        }
    }

    #[test]
    fn family_names_parse() {
        for fam in FamilyId::ALL {
            assert_eq!(fam.name().parse::<FamilyId>().unwrap(), fam);
        }
        assert!("bogus".parse::<FamilyId>().is_err());
    }
}
