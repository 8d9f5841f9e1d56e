//! Parity-reversing bijection between Callan permutations whose leading 0 is
//! followed by a left value, `C_n^(k)(l)`, and those where it is followed by
//! a right value, `C_{n-1}^(k+1)(r)`.
//!
//! The value 1 becomes the new smallest right value. If 1 did not directly
//! follow the leading 0, the right block just before it is moved to the
//! front, right after the 0. Images use the usual labels of the smaller
//! instance: left values `2..=n` shift down by one, old right values keep
//! their numbers and the new right value is `n`.

use crate::error::{Error, Result};
use crate::families::is_callan;
use crate::perm::ExtPermutation;

/// The leading 0 is followed by a left value.
pub fn starts_left(p: &ExtPermutation) -> bool {
    p.is_left_value(p.seq()[1])
}

/// The leading 0 is followed by a right value.
pub fn starts_right(p: &ExtPermutation) -> bool {
    !starts_left(p)
}

pub fn phi(p: &ExtPermutation) -> Result<ExtPermutation> {
    let (n, k) = (p.n(), p.k());
    if n == 0 {
        return Err(Error::Precondition("phi needs n >= 1".into()));
    }
    if !is_callan(p) {
        return Err(Error::NotCallan);
    }
    if !starts_left(p) {
        return Err(Error::Precondition("leading 0 must be followed by a left value".into()));
    }
    let seq = p.seq();
    let one_at = seq.iter().position(|&v| v == 1).expect("1 is a left value when n >= 1");
    let mut out: Vec<usize> = Vec::with_capacity(seq.len());
    if one_at == 1 {
        out.extend_from_slice(seq);
    } else {
        // the block containing 1 starts with it, so a right block precedes it
        let block_start = (1..one_at).rev().take_while(|&q| !p.is_left_value(seq[q])).last().unwrap_or(one_at);
        if block_start == one_at {
            return Err(Error::NotCallan);
        }
        out.push(0);
        out.extend_from_slice(&seq[block_start..one_at]);
        out.extend_from_slice(&seq[1..block_start]);
        out.extend_from_slice(&seq[one_at..]);
    }
    let relabeled = out
        .into_iter()
        .map(|v| match v {
            0 => 0,
            1 => n,
            v if v <= n => v - 1,
            v => v,
        })
        .collect();
    ExtPermutation::new(n - 1, k + 1, relabeled)
}

pub fn phi_inverse(p: &ExtPermutation) -> Result<ExtPermutation> {
    let (n, k) = (p.n() + 1, p.k());
    if k == 0 {
        return Err(Error::Precondition("phi inverse needs k >= 1".into()));
    }
    if !is_callan(p) {
        return Err(Error::NotCallan);
    }
    if !starts_right(p) {
        return Err(Error::Precondition("leading 0 must be followed by a right value".into()));
    }
    let seq = p.seq();
    // smallest right value of the input, which becomes the left value 1
    let marker = p.n() + 1;
    let marker_at = seq.iter().position(|&v| v == marker).expect("right values are present");
    let mut out: Vec<usize> = Vec::with_capacity(seq.len());
    if marker_at == 1 {
        out.extend_from_slice(seq);
    } else {
        let front_end = (1..seq.len()).find(|&q| p.is_left_value(seq[q])).expect("a left value follows the front block");
        if front_end > marker_at {
            return Err(Error::NotCallan);
        }
        out.push(0);
        out.extend_from_slice(&seq[front_end..marker_at]);
        out.extend_from_slice(&seq[1..front_end]);
        out.extend_from_slice(&seq[marker_at..]);
    }
    let relabeled = out
        .into_iter()
        .map(|v| match v {
            0 => 0,
            v if v == marker => 1,
            v if v < marker => v + 1,
            v => v,
        })
        .collect();
    ExtPermutation::new(n, k - 1, relabeled)
}
