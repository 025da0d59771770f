//! Exhaustive enumeration, used as ground truth for every `(n, k, mode)`
//! including the cases where no closed form applies.
//!
//! Words are grown one value at a time and a prefix is abandoned as soon as
//! its last adjacency is forbidden; the wraparound pair is checked only on
//! complete words. The subtrees rooted at each first value (or, for rotation
//! classes, each second value after the fixed leading 1) are independent and
//! run in parallel. Their results are merged in root order, so counts,
//! histograms and witness lists do not depend on the thread count.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::succession::{
    CountSpec, CountStyle, CyclicClass, ForbiddenPairSet, Mode, Permutation, Reading,
};

pub const DEFAULT_CAP: u32 = 11;
/// Upper bound on the configurable cap. Word masks are `u32` and leaf counts
/// `u64`, which covers `20!`.
pub const MAX_CAP: u32 = 20;

/// One avoiding object found by the enumerator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Witness {
    Word(Permutation),
    Cycle(CyclicClass),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Word(p) => p.fmt(f),
            Witness::Cycle(c) => c.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub spec: CountSpec,
    pub count: BigInt,
    /// At most the requested number of witnesses, in lexicographic order of
    /// their (canonical) words.
    pub witnesses: Vec<Witness>,
    /// Count per first value. Only populated for one-line enumeration.
    pub class_histogram: Option<BTreeMap<u32, BigInt>>,
}

impl EnumerationResult {
    /// True when every first-value class has the same size.
    pub fn is_equidistributed(&self) -> bool {
        match &self.class_histogram {
            Some(h) => h.values().all(|v| Some(v) == h.values().next()),
            None => false,
        }
    }
}

/// Brute-force counter with an enumeration cap and optional thread count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Oracle {
    cap: u32,
    threads: Option<usize>,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            threads: None,
        }
    }
}

#[derive(Default)]
struct Subtree {
    count: u64,
    witnesses: Vec<Vec<u32>>,
}

struct Search<'a> {
    board: &'a ForbiddenPairSet,
    n: usize,
    circular: bool,
    limit: usize,
    word: Vec<u32>,
    out: Subtree,
}

impl<'a> Search<'a> {
    fn run(board: &'a ForbiddenPairSet, circular: bool, limit: usize, prefix: &[u32]) -> Subtree {
        let mut used = 0u32;
        for w in prefix.windows(2) {
            if board.contains(w[0], w[1]) {
                return Subtree::default();
            }
        }
        for &v in prefix {
            used |= 1 << v;
        }
        let mut search = Search {
            board,
            n: board.n() as usize,
            circular,
            limit,
            word: prefix.to_vec(),
            out: Subtree::default(),
        };
        search.extend(used);
        search.out
    }

    fn extend(&mut self, used: u32) {
        let last = *self.word.last().expect("prefix is never empty");
        if self.word.len() == self.n {
            if self.circular && self.board.contains(last, self.word[0]) {
                return;
            }
            self.out.count += 1;
            if self.out.witnesses.len() < self.limit {
                self.out.witnesses.push(self.word.clone());
            }
            return;
        }
        let banned = self.board.follower(last).unwrap_or(0);
        for v in 1..=self.n as u32 {
            if used & (1 << v) != 0 || v == banned {
                continue;
            }
            self.word.push(v);
            self.extend(used | (1 << v));
            self.word.pop();
        }
    }
}

fn spectrum_walk(
    board: &ForbiddenPairSet,
    circular: bool,
    word: &mut Vec<u32>,
    used: u32,
    successions: usize,
    hist: &mut [u64],
) {
    let n = board.n() as usize;
    let last = *word.last().expect("prefix is never empty");
    if word.len() == n {
        let wrap = usize::from(circular && board.contains(last, word[0]));
        hist[successions + wrap] += 1;
        return;
    }
    for v in 1..=n as u32 {
        if used & (1 << v) != 0 {
            continue;
        }
        word.push(v);
        let s = successions + usize::from(board.contains(last, v));
        spectrum_walk(board, circular, word, used | (1 << v), s, hist);
        word.pop();
    }
}

fn derangement_walk(n: u32, pos: u32, used: u32) -> u64 {
    if pos > n {
        return 1;
    }
    (1..=n)
        .filter(|&v| v != pos && used & (1 << v) == 0)
        .map(|v| derangement_walk(n, pos + 1, used | (1 << v)))
        .sum()
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(mut self, cap: u32) -> Result<Self> {
        if cap == 0 || cap > MAX_CAP {
            return Err(Error::InvalidArgument(format!(
                "cap must be in 1..={MAX_CAP}, got {cap}"
            )));
        }
        self.cap = cap;
        Ok(self)
    }

    /// Runs enumeration on a dedicated pool of `threads` workers instead of
    /// the global rayon pool.
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads.max(1));
        self
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn threads(&self) -> Option<usize> {
        self.threads
    }

    fn check_cap(&self, n: u32) -> Result<()> {
        if n > self.cap {
            return Err(Error::CapExceeded { n, cap: self.cap });
        }
        Ok(())
    }

    fn install<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        let pool = self
            .threads
            .and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok());
        match pool {
            Some(pool) => pool.install(job),
            None => job(),
        }
    }

    /// Enumerates according to `spec.style`.
    pub fn enumerate(&self, spec: &CountSpec, witness_limit: usize) -> Result<EnumerationResult> {
        match spec.style {
            CountStyle::OneLine => self.enumerate_one_line(spec, witness_limit),
            CountStyle::CyclicClass => self.enumerate_cyclic(spec, witness_limit),
        }
    }

    pub fn count(&self, spec: &CountSpec) -> Result<BigInt> {
        Ok(self.enumerate(spec, 0)?.count)
    }

    /// Counts one-line words of `[n]` with no forbidden adjacency under
    /// `spec.reading`, with a histogram by first value.
    pub fn enumerate_one_line(
        &self,
        spec: &CountSpec,
        witness_limit: usize,
    ) -> Result<EnumerationResult> {
        if spec.style != CountStyle::OneLine {
            return Err(Error::InvalidArgument(
                "enumerate_one_line needs a one-line spec".into(),
            ));
        }
        self.check_cap(spec.n)?;
        let board = spec.pairs();
        let circular = spec.reading == Reading::CircularWord;
        let subtrees: Vec<Subtree> = self.install(|| {
            (1..=spec.n)
                .into_par_iter()
                .map(|first| Search::run(&board, circular, witness_limit, &[first]))
                .collect()
        });

        let histogram = (1..=spec.n)
            .zip(&subtrees)
            .map(|(first, t)| (first, BigInt::from(t.count)))
            .collect();
        Ok(merge(spec, subtrees, witness_limit, |w| {
            Witness::Word(Permutation::from_word_unchecked(w))
        })
        .with_histogram(histogram))
    }

    /// Counts rotation classes whose circular reading avoids the board. Each
    /// class is visited once through its representative starting with 1.
    pub fn enumerate_cyclic(
        &self,
        spec: &CountSpec,
        witness_limit: usize,
    ) -> Result<EnumerationResult> {
        if spec.style != CountStyle::CyclicClass {
            return Err(Error::InvalidArgument(
                "enumerate_cyclic needs a cyclic-class spec".into(),
            ));
        }
        self.check_cap(spec.n)?;
        let board = spec.pairs();
        let subtrees: Vec<Subtree> = self.install(|| {
            (2..=spec.n)
                .into_par_iter()
                .map(|second| Search::run(&board, true, witness_limit, &[1, second]))
                .collect()
        });
        Ok(merge(spec, subtrees, witness_limit, |w| {
            Witness::Cycle(
                CyclicClass::new(Permutation::from_word_unchecked(w))
                    .expect("representatives start with 1"),
            )
        }))
    }

    /// `spectrum[i]` is the number of words of `[n]` with exactly `i`
    /// forbidden adjacencies. Empty buckets are omitted.
    pub fn succession_spectrum(
        &self,
        n: u32,
        k: u32,
        mode: Mode,
        reading: Reading,
    ) -> Result<BTreeMap<usize, BigInt>> {
        let board = ForbiddenPairSet::new(n, k, mode)?;
        self.check_cap(n)?;
        let circular = reading == Reading::CircularWord;
        let buckets = n as usize + 1;
        let per_root: Vec<Vec<u64>> = self.install(|| {
            (1..=n)
                .into_par_iter()
                .map(|first| {
                    let mut hist = vec![0u64; buckets];
                    let mut word = vec![first];
                    spectrum_walk(&board, circular, &mut word, 1 << first, 0, &mut hist);
                    hist
                })
                .collect()
        });
        let mut total = vec![0u64; buckets];
        for hist in per_root {
            for (t, h) in total.iter_mut().zip(hist) {
                *t += h;
            }
        }
        Ok(total
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(i, c)| (i, BigInt::from(c)))
            .collect())
    }

    /// Brute-force count of fixed-point-free permutations of `[n]`.
    pub fn count_derangements(&self, n: u32) -> Result<BigInt> {
        self.check_cap(n)?;
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        let total: u64 = self.install(|| {
            (2..=n)
                .into_par_iter()
                .map(|first| derangement_walk(n, 2, 1 << first))
                .sum()
        });
        Ok(BigInt::from(total))
    }
}

impl EnumerationResult {
    fn with_histogram(mut self, histogram: BTreeMap<u32, BigInt>) -> Self {
        self.class_histogram = Some(histogram);
        self
    }
}

fn merge(
    spec: &CountSpec,
    subtrees: Vec<Subtree>,
    limit: usize,
    wrap: impl Fn(Vec<u32>) -> Witness,
) -> EnumerationResult {
    let count: u64 = subtrees.iter().map(|t| t.count).sum();
    let witnesses = subtrees
        .into_iter()
        .flat_map(|t| t.witnesses)
        .take(limit)
        .map(wrap)
        .collect();
    EnumerationResult {
        spec: *spec,
        count: BigInt::from(count),
        witnesses,
        class_histogram: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::succession::{count_successions, Family};

    fn strings(r: &EnumerationResult) -> Vec<String> {
        r.witnesses.iter().map(ToString::to_string).collect()
    }

    /// Filters all n! words (generated by Heap's algorithm) with the succession
    /// predicate; shares no code with the pruned search.
    fn filtered(spec: &CountSpec) -> Vec<String> {
        let board = spec.pairs();
        let mut word: Vec<u32> = (1..=spec.n).collect();
        let mut all = Vec::new();
        let mut c = vec![0usize; word.len()];
        all.push(word.clone());
        let mut i = 0;
        while i < word.len() {
            if c[i] < i {
                if i % 2 == 0 {
                    word.swap(0, i);
                } else {
                    word.swap(c[i], i);
                }
                all.push(word.clone());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        let mut out: Vec<Vec<u32>> = all
            .into_iter()
            .filter(|w| spec.style == CountStyle::OneLine || w[0] == 1)
            .filter(|w| {
                let p = Permutation::new(w.clone()).unwrap();
                count_successions(&p, &board, spec.reading).unwrap() == 0
            })
            .collect();
        out.sort();
        out.into_iter()
            .map(|w| {
                let p = Permutation::new(w).unwrap();
                match spec.style {
                    CountStyle::OneLine => p.to_string(),
                    CountStyle::CyclicClass => CyclicClass::new(p).unwrap().to_string(),
                }
            })
            .collect()
    }

    #[test]
    fn rotations_of_identity_avoid_mod_shift_three() {
        let spec = Family::CircularModShift.spec(4, 3).unwrap();
        let r = Oracle::new().enumerate_one_line(&spec, 100).unwrap();
        assert_eq!(r.count, BigInt::from(4));
        assert_eq!(strings(&r), ["1234", "2341", "3412", "4123"]);
    }

    #[test]
    fn circular_mod_shift_one_words() {
        let spec = Family::CircularModShift.spec(4, 1).unwrap();
        let r = Oracle::new().enumerate_one_line(&spec, 100).unwrap();
        assert_eq!(strings(&r), ["1432", "2143", "3214", "4321"]);
    }

    #[test]
    fn class_histogram_for_d_6_2() {
        let spec = Family::Shift.spec(6, 2).unwrap();
        let r = Oracle::new().enumerate_one_line(&spec, 0).unwrap();
        assert_eq!(r.count, BigInt::from(362));
        assert!(r.witnesses.is_empty());
        let hist: Vec<BigInt> = r.class_histogram.unwrap().into_values().collect();
        let expect: Vec<BigInt> = [53, 53, 64, 64, 64, 64].map(BigInt::from).to_vec();
        assert_eq!(hist, expect);
    }

    #[test]
    fn class_histogram_for_dstar_4_3() {
        let spec = Family::CircularShift.spec(4, 3).unwrap();
        let r = Oracle::new().enumerate_one_line(&spec, 0).unwrap();
        assert!(r.is_equidistributed());
        let spec = Family::Shift.spec(4, 3).unwrap();
        let hist: Vec<BigInt> = Oracle::new()
            .enumerate_one_line(&spec, 0)
            .unwrap()
            .class_histogram
            .unwrap()
            .into_values()
            .collect();
        assert_eq!(hist, [4, 4, 4, 6].map(BigInt::from).to_vec());
    }

    #[test]
    fn cyclic_witnesses() {
        let oracle = Oracle::new();
        let r = oracle
            .enumerate_cyclic(&Family::CyclicShift.spec(4, 2).unwrap(), 10)
            .unwrap();
        assert_eq!(strings(&r), ["(1 2 3 4)", "(1 4 2 3)", "(1 4 3 2)"]);
        let r = oracle
            .enumerate_cyclic(&Family::CyclicShift.spec(3, 1).unwrap(), 10)
            .unwrap();
        assert_eq!(strings(&r), ["(1 3 2)"]);
        let r = oracle
            .enumerate_cyclic(&Family::CyclicModShift.spec(4, 1).unwrap(), 10)
            .unwrap();
        assert_eq!(strings(&r), ["(1 4 3 2)"]);
        let r = oracle
            .enumerate_cyclic(&Family::CyclicShift.spec(4, 1).unwrap(), 10)
            .unwrap();
        assert_eq!(strings(&r), ["(1 3 2 4)", "(1 4 3 2)"]);
    }

    #[test]
    fn witness_limit_truncates_but_count_is_exact() {
        let spec = Family::Shift.spec(5, 2).unwrap();
        let r = Oracle::new().enumerate(&spec, 3).unwrap();
        assert_eq!(r.count, BigInt::from(64));
        assert_eq!(r.witnesses.len(), 3);
        assert_eq!(strings(&r), filtered(&spec)[..3]);
    }

    #[test]
    fn pruned_search_matches_filtered_permutations() {
        let oracle = Oracle::new();
        for n in 2..=7 {
            for k in 1..n {
                for family in Family::ALL {
                    let spec = family.spec(n, k).unwrap();
                    let got = strings(&oracle.enumerate(&spec, usize::MAX).unwrap());
                    assert_eq!(got, filtered(&spec), "{family} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn spectra() {
        let oracle = Oracle::new();
        let s = oracle
            .succession_spectrum(4, 2, Mode::Linear, Reading::LinearWord)
            .unwrap();
        assert_eq!(s[&0], BigInt::from(14));
        let s = oracle
            .succession_spectrum(2, 1, Mode::Linear, Reading::LinearWord)
            .unwrap();
        assert_eq!(s, BTreeMap::from([(0, BigInt::from(1)), (1, BigInt::from(1))]));
        let s = oracle
            .succession_spectrum(5, 2, Mode::ModN, Reading::CircularWord)
            .unwrap();
        assert_eq!(s[&0], BigInt::from(40));
        assert_eq!(s.values().sum::<BigInt>(), BigInt::from(120));
    }

    #[test]
    fn brute_derangements() {
        let oracle = Oracle::new();
        let got: Vec<BigInt> = (0..=8).map(|n| oracle.count_derangements(n).unwrap()).collect();
        let want = [1, 0, 1, 2, 9, 44, 265, 1854, 14833].map(BigInt::from).to_vec();
        assert_eq!(got, want);
    }

    #[test]
    fn cap_is_enforced() {
        let oracle = Oracle::new().with_cap(6).unwrap();
        let spec = Family::Shift.spec(7, 2).unwrap();
        assert_eq!(oracle.count(&spec), Err(Error::CapExceeded { n: 7, cap: 6 }));
        assert!(oracle.count_derangements(7).is_err());
        assert!(oracle
            .succession_spectrum(7, 1, Mode::Linear, Reading::LinearWord)
            .is_err());
        assert!(Oracle::new().with_cap(0).is_err());
        assert!(Oracle::new().with_cap(MAX_CAP + 1).is_err());
    }

    #[test]
    fn style_mismatch_is_rejected() {
        let oracle = Oracle::new();
        let cyclic = Family::CyclicShift.spec(4, 1).unwrap();
        let line = Family::Shift.spec(4, 1).unwrap();
        assert!(oracle.enumerate_one_line(&cyclic, 0).is_err());
        assert!(oracle.enumerate_cyclic(&line, 0).is_err());
    }
}
