use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid arguments: {0}")]
    InvalidArgument(String),

    #[error("shift k={k} is out of range for n={n} (need 1 <= k <= n-1)")]
    ShiftOutOfRange { n: u32, k: u32 },

    #[error("not a permutation of 1..{n}: {word:?}")]
    NotAPermutation { n: usize, word: Vec<u32> },

    #[error("permutation has length {perm} but pair set is built for n={pairs}")]
    SizeMismatch { perm: usize, pairs: u32 },

    /// The closed form does not hold for this (n, k); the oracle must be used.
    #[error("formula inapplicable for n={n}, k={k}: gcd(n, k) = {gcd}, use the oracle")]
    Inapplicable { n: u32, k: u32, gcd: u32 },

    #[error("n={n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: u32, cap: u32 },

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("formula and oracle disagree on {what}: formula {formula}, oracle {oracle}")]
    Disagreement {
        what: String,
        formula: String,
        oracle: String,
    },
}
