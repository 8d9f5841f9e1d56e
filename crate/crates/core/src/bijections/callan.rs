use crate::error::{Error, Result};
use crate::families::{is_callan, is_max_ascending};
use crate::partition::OrderedPartitionPair;
use crate::perm::ExtPermutation;

// Ground-set convention: left value v in 1..=n is row element v and the
// special left value 0 is row element n+1; right value v in n+1..=n+k is
// column element v-n and n+k+1 is column element k+1.

/// Value blocks become classes: the block of 0 and the block of `n+k+1` are
/// special, the other blocks are ordinary in order of appearance.
pub fn callan_encode(p: &ExtPermutation) -> Result<OrderedPartitionPair> {
    if !is_callan(p) {
        return Err(Error::NotCallan);
    }
    let (n, k) = (p.n(), p.k());
    let blocks = p.value_blocks();
    let row_of = |v: usize| if v == 0 { n + 1 } else { v };
    let col_of = |v: usize| v - n;
    let mut row_special = Vec::new();
    let mut col_special = Vec::new();
    let mut row_ordinary = Vec::new();
    let mut col_ordinary = Vec::new();
    let last = blocks.len() - 1;
    for (idx, block) in blocks.iter().enumerate() {
        let left = p.is_left_value(block[0]);
        match (idx, left) {
            (0, _) => row_special = block.iter().map(|&v| row_of(v)).collect(),
            (i, _) if i == last => col_special = block.iter().map(|&v| col_of(v)).collect(),
            (_, true) => row_ordinary.push(block.iter().map(|&v| row_of(v)).collect()),
            (_, false) => col_ordinary.push(block.iter().map(|&v| col_of(v)).collect()),
        }
    }
    OrderedPartitionPair::new(n, k, row_special, row_ordinary, col_special, col_ordinary)
}

/// Writes the special left block, then for each i the i-th ordinary right
/// block followed by the i-th ordinary left block, then the special right
/// block; every block ascending.
pub fn callan_decode(pair: &OrderedPartitionPair) -> ExtPermutation {
    let (n, k) = (pair.n(), pair.k());
    let left_value = |r: usize| if r == n + 1 { 0 } else { r };
    let right_value = |c: usize| c + n;
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    let mut seq = sorted(pair.row_special().iter().map(|&r| left_value(r)).collect());
    for (rows, cols) in pair.row_ordinary().iter().zip(pair.col_ordinary()) {
        seq.extend(sorted(cols.iter().map(|&c| right_value(c)).collect()));
        seq.extend(sorted(rows.iter().map(|&r| left_value(r)).collect()));
    }
    seq.extend(sorted(pair.col_special().iter().map(|&c| right_value(c)).collect()));
    ExtPermutation::new(n, k, seq).expect("a well-formed pair decodes to a permutation")
}

/// Functional inverse; carries Callan permutations onto max-ascending ones.
pub fn callan_to_maxascending(p: &ExtPermutation) -> Result<ExtPermutation> {
    if !is_callan(p) {
        return Err(Error::NotCallan);
    }
    Ok(p.inverse())
}

pub fn maxascending_to_callan(p: &ExtPermutation) -> Result<ExtPermutation> {
    if !is_max_ascending(p) {
        return Err(Error::Precondition("permutation is not max-ascending".into()));
    }
    Ok(p.inverse())
}
