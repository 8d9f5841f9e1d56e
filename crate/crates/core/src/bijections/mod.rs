//! Encode/decode pairs between the families, each an exact inverse of the
//! other on its domain.

mod callan;
mod gamma;
mod lonesum;
mod phi;
mod recursion;

pub use callan::{callan_decode, callan_encode, callan_to_maxascending, maxascending_to_callan};
pub use gamma::{
    all_gamma_codes, gamma_anatomy, gamma_decode, gamma_encode, parse_gamma_codes, ClassPair, GammaAnatomy, GammaCode,
    HidingCase,
};
pub use lonesum::{lonesum_decode, lonesum_encode};
pub use phi::{phi, phi_inverse, starts_left, starts_right};
pub use recursion::{recursion_join, recursion_split, RecursionSplit};

use crate::matrix::Matrix01;

/// The coding of an oriented `K_{n,k}` as a matrix is the matrix itself: a 1
/// at `(i, j)` means the edge points from row vertex `i` to column vertex `j`,
/// a 0 means it points back. Exposed so both directions have a name.
pub fn orientation_matrix_roundtrip(m: &Matrix01) -> Matrix01 {
    m.clone()
}
