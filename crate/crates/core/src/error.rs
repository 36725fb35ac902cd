use thiserror::Error;

use crate::code::Violation;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operator length mismatch: {left} vs {right} modes")]
    LengthMismatch { left: usize, right: usize },

    #[error("{0} modes requested, at most {max} are supported", max = crate::f2::MAX_MODES)]
    TooManyModes(usize),

    #[error("number of modes must be a positive even integer, got {0}")]
    OddModeCount(usize),

    #[error("mode index {index} out of range for {nmaj} modes")]
    ModeOutOfRange { index: usize, nmaj: usize },

    #[error("replacement mask needs four distinct modes, got {0:?}")]
    BadMask([usize; 4]),

    #[error("invalid bit string {0:?}: only '0' and '1' are allowed")]
    BadBitString(String),

    #[error("invalid code: {}", fmt_violations(.0))]
    InvalidCode(Vec<Violation>),

    #[error("enumeration of {requested} elements exceeds the cap of {cap}")]
    CapExceeded { requested: u128, cap: u128 },

    #[error("Hamming construction needs 3 <= m <= 6, got m = {0}")]
    HammingOrder(u32),

    #[error("invalid Pauli string {0:?}")]
    BadPauli(String),

    #[error("qubit stabilizers {0} and {1} anticommute")]
    AnticommutingQubitStabilizers(usize, usize),

    #[error("invalid walk parameters: {0}")]
    WalkParams(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
