use thiserror::Error;

/// Errors shared across the crate.
///
/// `NonExactDivision` deserves a note: every division performed here is
/// backed by an algebraic identity (Bareiss pivots, `(1+t)^binom`
/// normalizers), so seeing it at runtime means an identity was falsified or
/// the implementation is wrong. It is never a user-input error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-exact division: {num} is not divisible by {den}")]
    NonExactDivision { num: String, den: String },

    #[error("enumeration cap exceeded: {what} {requested} > cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("deleted column index {index} out of range [0..{max}]")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid model: {0}")]
    InvalidModel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
