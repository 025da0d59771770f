//! Permutation words, forbidden pair boards and the succession predicate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        let valid = n >= 1
            && word.iter().all(|&v| {
                let v = v as usize;
                if v == 0 || v > n || seen[v] {
                    false
                } else {
                    seen[v] = true;
                    true
                }
            });
        if !valid {
            return Err(Error::NotAPermutation { n, word });
        }
        Ok(Self { word })
    }

    /// The identity word `1 2 ... n`.
    pub fn identity(n: u32) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn first(&self) -> u32 {
        self.word[0]
    }

    /// Rotates the word left by `shift` positions.
    pub fn rotated(&self, shift: usize) -> Self {
        let mut word = self.word.clone();
        word.rotate_left(shift % self.word.len());
        Self { word }
    }

    /// Adjacent pairs read left to right, plus `(p(n), p(1))` for a circular
    /// reading.
    pub fn adjacent_pairs(&self, reading: Reading) -> impl Iterator<Item = (u32, u32)> + '_ {
        let wrap = match reading {
            Reading::CircularWord if self.word.len() > 1 => {
                Some((self.word[self.word.len() - 1], self.word[0]))
            }
            _ => None,
        };
        self.word.windows(2).map(|w| (w[0], w[1])).chain(wrap)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, word: &[u32], compact: bool) -> fmt::Result {
    for (i, v) in word.iter().enumerate() {
        if i > 0 && !compact {
            f.write_str(" ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Words over `n <= 9` print as digit strings (`2134`); longer words are
/// space separated.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word, self.word.len() <= 9)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Option<Vec<u32>> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        match word {
            Some(word) => Self::new(word),
            None => Err(Error::InvalidArgument(format!("cannot parse permutation `{s}`"))),
        }
    }
}

/// Which forbidden substrings `j(j+k)` are in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// `1 <= j <= n-k`: the shifted diagonal above the main diagonal.
    Linear,
    /// All `1 <= j <= n`, with `j+k` reduced into `1..=n`.
    ModN,
}

/// How a word is scanned for forbidden adjacencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reading {
    /// Positions `1..n-1` only.
    LinearWord,
    /// Also the wraparound pair `p(n), p(1)`.
    CircularWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CountStyle {
    OneLine,
    CyclicClass,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Linear => "linear",
            Mode::ModN => "modn",
        }
    }
}

impl Reading {
    pub fn as_str(self) -> &'static str {
        match self {
            Reading::LinearWord => "linear-word",
            Reading::CircularWord => "circular-word",
        }
    }
}

impl CountStyle {
    pub fn as_str(self) -> &'static str {
        match self {
            CountStyle::OneLine => "one-line",
            CountStyle::CyclicClass => "cyclic",
        }
    }
}

/// The board of forbidden ordered pairs `(j, j+k)` for one `(n, k, mode)`.
///
/// Every value has at most one forbidden follower, so the set is stored as a
/// follower table indexed by value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForbiddenPairSet {
    n: u32,
    k: u32,
    mode: Mode,
    // follower[a] = b when (a, b) is forbidden, 0 otherwise; follower[0] unused.
    follower: Vec<u32>,
}

impl ForbiddenPairSet {
    pub fn new(n: u32, k: u32, mode: Mode) -> Result<Self> {
        if n < 2 || k < 1 || k >= n {
            return Err(Error::ShiftOutOfRange { n, k });
        }
        let mut follower = vec![0; n as usize + 1];
        for j in 1..=n {
            match mode {
                Mode::Linear if j + k <= n => follower[j as usize] = j + k,
                Mode::Linear => {}
                Mode::ModN => follower[j as usize] = (j + k - 1) % n + 1,
            }
        }
        Ok(Self {
            n,
            k,
            mode,
            follower,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    #[inline]
    pub fn contains(&self, a: u32, b: u32) -> bool {
        b != 0 && self.follower.get(a as usize) == Some(&b)
    }

    /// The forbidden follower of `a`, if any.
    #[inline]
    pub fn follower(&self, a: u32) -> Option<u32> {
        match self.follower.get(a as usize) {
            Some(&b) if b != 0 => Some(b),
            _ => None,
        }
    }

    /// Pairs in increasing order of their first element.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        (1..=self.n)
            .filter_map(|a| self.follower(a).map(|b| (a, b)))
            .collect()
    }

    pub fn len(&self) -> usize {
        match self.mode {
            Mode::Linear => (self.n - self.k) as usize,
            Mode::ModN => self.n as usize,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Builds the forbidden pair set for `(n, k, mode)`.
pub fn build_pairs(n: u32, k: u32, mode: Mode) -> Result<ForbiddenPairSet> {
    ForbiddenPairSet::new(n, k, mode)
}

/// Number of forbidden adjacencies in `p` under `reading`. Zero means `p`
/// avoids the pair set.
pub fn count_successions(
    p: &Permutation,
    pairs: &ForbiddenPairSet,
    reading: Reading,
) -> Result<usize> {
    if p.n() != pairs.n() as usize {
        return Err(Error::SizeMismatch {
            perm: p.n(),
            pairs: pairs.n(),
        });
    }
    Ok(p
        .adjacent_pairs(reading)
        .filter(|&(a, b)| pairs.contains(a, b))
        .count())
}

/// Everything needed to pin down one counting problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountSpec {
    pub n: u32,
    pub k: u32,
    pub mode: Mode,
    pub reading: Reading,
    pub style: CountStyle,
}

impl CountSpec {
    pub fn new(n: u32, k: u32, mode: Mode, reading: Reading, style: CountStyle) -> Result<Self> {
        if n < 2 || k < 1 || k >= n {
            return Err(Error::ShiftOutOfRange { n, k });
        }
        if style == CountStyle::CyclicClass && reading != Reading::CircularWord {
            return Err(Error::InvalidArgument(
                "cyclic classes only have a circular reading".into(),
            ));
        }
        Ok(Self {
            n,
            k,
            mode,
            reading,
            style,
        })
    }

    pub fn pairs(&self) -> ForbiddenPairSet {
        ForbiddenPairSet::new(self.n, self.k, self.mode).expect("validated on construction")
    }

    /// The named family this spec belongs to.
    pub fn family(&self) -> Family {
        use CountStyle::*;
        use Mode::*;
        use Reading::*;
        match (self.mode, self.reading, self.style) {
            (Linear, LinearWord, _) => Family::Shift,
            (Linear, CircularWord, OneLine) => Family::CircularShift,
            (Linear, CircularWord, CyclicClass) => Family::CyclicShift,
            (ModN, LinearWord, _) => Family::ModShift,
            (ModN, CircularWord, OneLine) => Family::CircularModShift,
            (ModN, CircularWord, CyclicClass) => Family::CyclicModShift,
        }
    }
}

/// The six counting families, labelled `d`, `dstar`, `cstar`, `D`, `Dstar`,
/// `Cstar` on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `d`: words avoiding the linear pairs.
    Shift,
    /// `dstar`: words avoiding the linear pairs, read circularly.
    CircularShift,
    /// `cstar`: rotation classes avoiding the linear pairs.
    CyclicShift,
    /// `D`: words avoiding the mod-n pairs.
    ModShift,
    /// `Dstar`: words avoiding the mod-n pairs, read circularly.
    CircularModShift,
    /// `Cstar`: rotation classes avoiding the mod-n pairs.
    CyclicModShift,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Shift,
        Family::CircularShift,
        Family::CyclicShift,
        Family::ModShift,
        Family::CircularModShift,
        Family::CyclicModShift,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Family::Shift => "d",
            Family::CircularShift => "dstar",
            Family::CyclicShift => "cstar",
            Family::ModShift => "D",
            Family::CircularModShift => "Dstar",
            Family::CyclicModShift => "Cstar",
        }
    }

    pub fn mode(self) -> Mode {
        match self {
            Family::Shift | Family::CircularShift | Family::CyclicShift => Mode::Linear,
            _ => Mode::ModN,
        }
    }

    pub fn reading(self) -> Reading {
        match self {
            Family::Shift | Family::ModShift => Reading::LinearWord,
            _ => Reading::CircularWord,
        }
    }

    pub fn style(self) -> CountStyle {
        match self {
            Family::CyclicShift | Family::CyclicModShift => CountStyle::CyclicClass,
            _ => CountStyle::OneLine,
        }
    }

    pub fn spec(self, n: u32, k: u32) -> Result<CountSpec> {
        CountSpec::new(n, k, self.mode(), self.reading(), self.style())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.label() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown family `{s}` (expected one of d, dstar, cstar, D, Dstar, Cstar)"
                ))
            })
    }
}

/// A circular permutation: the rotation class of a word, stored as the
/// rotation that starts with 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicClass {
    canonical: Permutation,
}

impl CyclicClass {
    /// Canonicalizes any member of the class.
    pub fn from_member(p: &Permutation) -> Self {
        let pos = p.word().iter().position(|&v| v == 1).unwrap_or(0);
        Self {
            canonical: p.rotated(pos),
        }
    }

    pub fn new(canonical: Permutation) -> Result<Self> {
        if canonical.first() != 1 {
            return Err(Error::InvalidArgument(format!(
                "canonical word {canonical} must start with 1"
            )));
        }
        Ok(Self { canonical })
    }

    pub fn canonical(&self) -> &Permutation {
        &self.canonical
    }

    /// All `n` one-line words in the class, starting with the canonical one.
    pub fn rotations(&self) -> Vec<Permutation> {
        (0..self.canonical.n())
            .map(|s| self.canonical.rotated(s))
            .collect()
    }
}

/// Cycle notation, e.g. `(1 4 3 2)`.
impl fmt::Display for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_word(f, self.canonical.word(), false)?;
        f.write_str(")")
    }
}
