//! Exact poly-Bernoulli numbers `B_n^(-k)`, the combinatorial families they
//! count, and executable bijections between those families.
//!
//! - [`exactmath`]: binomials, Stirling numbers, two independent evaluations
//!   of `B_n^(-k)` and checkers for its classical identities.
//! - [`families`]: lonesum and gamma-free matrices, acyclic orientations of
//!   `K_{n,k}`, Callan, max-ascending and Vesztergombi permutations, and
//!   ordered partition pairs, with predicates and pruned enumerators.
//! - [`bijections`]: encode/decode pairs between them, including the coding
//!   of gamma-free matrices and the first-column recursion.
//! - [`verify`]: the verification suites driven by the command line tool.

pub mod bijections;
pub mod error;
pub mod exactmath;
pub mod families;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use exactmath::{
    binomial, check_alternating_sum, check_symmetry, polybernoulli_formula, polybernoulli_recursion, stirling2, BigNat,
};
pub use families::{EnumerationLimits, FamilyId, FamilyMember};
pub use matrix::Matrix01;
pub use partition::OrderedPartitionPair;
pub use perm::{ExtPermutation, PlainPermutation};
