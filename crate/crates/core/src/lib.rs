//! Exact enumeration of permutations of `[n]` that avoid k-succession
//! substrings `j(j+k)`.
//!
//! Two forbidden sets are supported: the *linear* set `{(j, j+k) : j <= n-k}`
//! and the *mod-n* set `{(j, j+k mod n) : 1 <= j <= n}`. Each can be read
//! against a permutation word linearly or circularly (the wraparound pair
//! `p(n), p(1)` also counts), and circular counts can be taken over one-line
//! words or over rotation classes. That gives six families:
//!
//! | family  | pairs  | reading  | counted objects |
//! |---------|--------|----------|-----------------|
//! | `d`     | linear | linear   | words           |
//! | `dstar` | linear | circular | words           |
//! | `cstar` | linear | circular | rotation classes|
//! | `D`     | mod-n  | linear   | words           |
//! | `Dstar` | mod-n  | circular | words           |
//! | `Cstar` | mod-n  | circular | rotation classes|
//!
//! [`formulas`] evaluates the closed forms with exact integers, [`oracle`]
//! counts by exhaustive search, and [`analysis`] cross-checks the two and
//! rebuilds the reference tables.

pub mod analysis;
mod error;
pub mod formulas;
pub mod oracle;
pub mod succession;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use succession::{
    build_pairs, count_successions, CountSpec, CountStyle, CyclicClass, Family, ForbiddenPairSet, Mode,
    Permutation, Reading,
};
