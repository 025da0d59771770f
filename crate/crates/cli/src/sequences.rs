//! OEIS b-file export for the sequences that have closed forms here.
//!
//! Indices follow each sequence's OEIS numbering. Output starts at the
//! smallest index whose defining formula is defined in this crate:
//!
//! | id      | a(i)            | first index |
//! |---------|-----------------|-------------|
//! | A000166 | Der(i)          | 0           |
//! | A000255 | d(i+1, 1)       | 1           |
//! | A000240 | dstar(i, 1)     | 2           |
//! | A000757 | Cstar(i, 1)     | 2           |
//! | A167760 | Dstar(i, 1)     | 2           |
//! | A277563 | d(i, 4)         | 5           |

use std::fmt::{self, Write};
use std::str::FromStr;

use ksucc::{formulas, BigInt, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sequence {
    A000166,
    A000255,
    A000240,
    A000757,
    A167760,
    A277563,
}

impl Sequence {
    pub const ALL: [Sequence; 6] = [
        Sequence::A000166,
        Sequence::A000255,
        Sequence::A000240,
        Sequence::A000757,
        Sequence::A167760,
        Sequence::A277563,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Sequence::A000166 => "A000166",
            Sequence::A000255 => "A000255",
            Sequence::A000240 => "A000240",
            Sequence::A000757 => "A000757",
            Sequence::A167760 => "A167760",
            Sequence::A277563 => "A277563",
        }
    }

    pub fn first_index(self) -> u32 {
        match self {
            Sequence::A000166 => 0,
            Sequence::A000255 => 1,
            Sequence::A000240 | Sequence::A000757 | Sequence::A167760 => 2,
            Sequence::A277563 => 5,
        }
    }

    pub fn term(self, i: u32) -> Result<BigInt, Error> {
        match self {
            Sequence::A000166 => Ok(formulas::derangement(i)),
            Sequence::A000255 => formulas::d_count(i + 1, 1),
            Sequence::A000240 => formulas::d_star_count(i, 1),
            Sequence::A000757 => formulas::C_star_count(i, 1),
            Sequence::A167760 => formulas::D_star_count(i, 1),
            Sequence::A277563 => formulas::d_count(i, 4),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown sequence `{s}`")))
    }
}

/// `index value` lines for `first_index..=n_max`, each newline terminated.
pub fn bfile(seq: Sequence, n_max: u32) -> Result<String, Error> {
    let mut out = String::new();
    for i in seq.first_index()..=n_max {
        writeln!(out, "{i} {}", seq.term(i)?).expect("writing to a String");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(seq: Sequence, range: std::ops::RangeInclusive<u32>) -> Vec<i64> {
        range
            .map(|i| i64::try_from(&seq.term(i).unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn derangement_bfile_is_bit_exact() {
        assert_eq!(bfile(Sequence::A000166, 4).unwrap(), "0 1\n1 0\n2 1\n3 2\n4 9\n");
    }

    #[test]
    fn known_terms() {
        assert_eq!(terms(Sequence::A277563, 5..=8), [96, 504, 3216, 24024]);
        assert_eq!(terms(Sequence::A000757, 3..=7), [1, 1, 8, 36, 229]);
        assert_eq!(terms(Sequence::A000255, 1..=7), [1, 3, 11, 53, 309, 2119, 16687]);
        assert_eq!(terms(Sequence::A000240, 2..=8), [0, 3, 8, 45, 264, 1855, 14832]);
        assert_eq!(terms(Sequence::A167760, 2..=7), [0, 3, 4, 40, 216, 1603]);
    }

    #[test]
    fn short_range_is_empty() {
        assert_eq!(bfile(Sequence::A277563, 4).unwrap(), "");
        assert_eq!(bfile(Sequence::A277563, 5).unwrap(), "5 96\n");
    }

    #[test]
    fn parse_ids() {
        assert_eq!("a000757".parse::<Sequence>().unwrap(), Sequence::A000757);
        assert!("A999999".parse::<Sequence>().is_err());
    }
}
