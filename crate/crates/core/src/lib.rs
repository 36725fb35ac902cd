//! Small Majorana fermion stabilizer codes.
//!
//! Codes are self-orthogonal subspaces of F₂^N containing the all-ones
//! (fermion parity) vector, with operators packed into `u64` words.
//!
//! - [`f2`]: bit vectors, the overlap form, rank and span, the walk's replacement map
//! - [`code`]: validation, syndromes, degeneracy, logical operator bases
//! - [`constructions`]: Hamming Majorana codes, qubit-code mapping, pair extension
//! - [`distance`]: the weight-2/4 checks used by the search and a brute-force oracle
//! - [`search`]: the seeded random walk and multi-run campaigns
//! - [`tables`]: bounds on K, published tables and generator fixtures
//! - [`mcode`]: the `.mcode` file format
//! - [`cli`]: the `mcode` command-line tool

pub mod cli;
pub mod code;
pub mod constructions;
pub mod distance;
pub mod error;
pub mod f2;
pub mod mcode;
pub mod search;
pub mod tables;

pub use code::{LogicalBasis, MajoranaCode, Syndrome, Violation};
pub use distance::DistanceResult;
pub use error::{Error, Result};
pub use f2::{MajoranaOperator, ReplacementMask};
