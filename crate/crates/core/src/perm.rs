//! Permutations in one-line notation, their statistics, the three trivial
//! symmetries of the permutation array, and classical pattern containment.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Longest permutation the compact representation can hold.
pub const MAX_LEN: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("length {0} exceeds the supported maximum of {MAX_LEN}")]
    TooLong(usize),
    #[error("{entries:?} is not a rearrangement of 1..{n}", n = entries.len())]
    NotAPermutation { entries: Vec<usize> },
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("pattern set must not be empty")]
    EmptyPatternSet,
    #[error("pattern {0} has length {1}; patterns must have length 1..={MAX_PATTERN_LEN}")]
    BadPatternLength(String, usize),
}

/// Patterns longer than this are rejected by [`PatternSet`].
pub const MAX_PATTERN_LEN: usize = 8;

/// A permutation of `1..=n` stored as a fixed-width array of 1-based values.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    len: u8,
    entries: [u8; MAX_LEN],
}

/// The three symmetries of the permutation array used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `i -> n+1-pi_i`; flips the array along a vertical axis.
    Complement,
    /// Reflection of the array along the secondary diagonal.
    Hat,
    /// Reflection along the main diagonal.
    Inverse,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::Complement, Symmetry::Hat, Symmetry::Inverse];
}

impl FromStr for Symmetry {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "complement" => Ok(Symmetry::Complement),
            "hat" => Ok(Symmetry::Hat),
            "inverse" => Ok(Symmetry::Inverse),
            other => Err(PermError::Parse(other.to_string())),
        }
    }
}

/// Fixed points, excedances, descents and whether the permutation is an involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct StatRecord {
    pub fp: u32,
    pub exc: u32,
    pub des: u32,
    #[serde(rename = "involution")]
    pub is_involution: bool,
}

impl Permutation {
    /// Builds a permutation from 1-based one-line notation.
    pub fn new(entries: &[usize]) -> Result<Self, PermError> {
        let n = entries.len();
        if n > MAX_LEN {
            return Err(PermError::TooLong(n));
        }
        let mut seen = [false; MAX_LEN + 1];
        let mut out = [0u8; MAX_LEN];
        for (i, &v) in entries.iter().enumerate() {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation {
                    entries: entries.to_vec(),
                });
            }
            seen[v] = true;
            out[i] = v as u8;
        }
        Ok(Permutation {
            len: n as u8,
            entries: out,
        })
    }

    /// Trusted constructor for internal callers that already hold a valid arrangement.
    pub(crate) fn from_values_unchecked(values: &[u8]) -> Self {
        debug_assert!(values.len() <= MAX_LEN);
        let mut entries = [0u8; MAX_LEN];
        entries[..values.len()].copy_from_slice(values);
        Permutation {
            len: values.len() as u8,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN, "identity of length {n} exceeds {MAX_LEN}");
        let values: Vec<u8> = (1..=n as u8).collect();
        Self::from_values_unchecked(&values)
    }

    /// `n, n-1, ..., 1`.
    pub fn decreasing(n: usize) -> Self {
        assert!(n <= MAX_LEN, "length {n} exceeds {MAX_LEN}");
        let values: Vec<u8> = (1..=n as u8).rev().collect();
        Self::from_values_unchecked(&values)
    }

    pub fn empty() -> Self {
        Self::from_values_unchecked(&[])
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// One-line notation as 1-based values.
    pub fn values(&self) -> &[u8] {
        &self.entries[..self.len()]
    }

    /// `pi_i` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1] as usize
    }

    pub fn statistics(&self) -> StatRecord {
        let v = self.values();
        let mut rec = StatRecord {
            fp: 0,
            exc: 0,
            des: 0,
            is_involution: true,
        };
        for (i, &pi) in v.iter().enumerate() {
            let pos = i + 1;
            let pi = pi as usize;
            if pi == pos {
                rec.fp += 1;
            } else if pi > pos {
                rec.exc += 1;
            }
            if v[pi - 1] as usize != pos {
                rec.is_involution = false;
            }
        }
        rec.des = v.windows(2).filter(|w| w[0] > w[1]).count() as u32;
        rec
    }

    pub fn fixed_points(&self) -> u32 {
        self.statistics().fp
    }

    pub fn is_involution(&self) -> bool {
        self.values()
            .iter()
            .enumerate()
            .all(|(i, &pi)| self.entries[pi as usize - 1] as usize == i + 1)
    }

    pub fn complement(&self) -> Self {
        let n = self.len;
        let values: Vec<u8> = self.values().iter().map(|&v| n + 1 - v).collect();
        Self::from_values_unchecked(&values)
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0u8; self.len()];
        for (i, &v) in self.values().iter().enumerate() {
            values[v as usize - 1] = (i + 1) as u8;
        }
        Self::from_values_unchecked(&values)
    }

    /// Reflection along the secondary diagonal: `hat(pi)_i = n+1 - pos(n+1-i)`.
    pub fn hat(&self) -> Self {
        let n = self.len();
        let inv = self.inverse();
        let values: Vec<u8> = (1..=n)
            .map(|i| (n + 1 - inv.at(n + 1 - i)) as u8)
            .collect();
        Self::from_values_unchecked(&values)
    }

    pub fn transform(&self, kind: Symmetry) -> Self {
        match kind {
            Symmetry::Complement => self.complement(),
            Symmetry::Hat => self.hat(),
            Symmetry::Inverse => self.inverse(),
        }
    }

    /// Whether some subsequence is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains_pattern(self.values(), pattern.values(), false)
    }

    pub fn avoids_all(&self, patterns: &PatternSet) -> bool {
        patterns.iter().all(|p| !self.contains(p))
    }

    /// Length of the longest increasing subsequence (quadratic DP).
    pub fn longest_increasing(&self) -> usize {
        longest_monotone(self.values(), |a, b| a < b)
    }

    pub fn longest_decreasing(&self) -> usize {
        longest_monotone(self.values(), |a, b| a > b)
    }
}

fn longest_monotone(v: &[u8], lt: impl Fn(u8, u8) -> bool) -> usize {
    let mut best = vec![1usize; v.len()];
    for j in 0..v.len() {
        for i in 0..j {
            if lt(v[i], v[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Backtracking search for an occurrence of `pattern` in `host`.
///
/// When `anchored` is set only occurrences whose last entry sits at the last
/// position of `host` are considered; prefix-pruned enumeration relies on this.
pub(crate) fn contains_pattern(host: &[u8], pattern: &[u8], anchored: bool) -> bool {
    let m = pattern.len();
    let n = host.len();
    if m == 0 {
        return true;
    }
    if m > n {
        return false;
    }
    let mut chosen = [0u8; MAX_PATTERN_LEN];
    if anchored {
        chosen[m - 1] = host[n - 1];
        // Fill pattern positions 0..m-1 from host[0..n-1], checked against the anchor too.
        extend(host, pattern, &mut chosen, 0, 0, n - 1, Some(m - 1))
    } else {
        extend(host, pattern, &mut chosen, 0, 0, n, None)
    }
}

fn extend(
    host: &[u8],
    pattern: &[u8],
    chosen: &mut [u8; MAX_PATTERN_LEN],
    depth: usize,
    start: usize,
    limit: usize,
    anchor: Option<usize>,
) -> bool {
    let target = anchor.unwrap_or(pattern.len());
    if depth == target {
        return true;
    }
    let remaining = target - depth;
    if limit < start + remaining {
        return false;
    }
    for idx in start..=(limit - remaining) {
        let v = host[idx];
        let consistent = (0..depth)
            .all(|t| (chosen[t] < v) == (pattern[t] < pattern[depth]))
            && anchor.is_none_or(|a| (v < chosen[a]) == (pattern[depth] < pattern[a]));
        if consistent {
            chosen[depth] = v;
            if extend(host, pattern, chosen, depth + 1, idx + 1, limit, anchor) {
                return true;
            }
        }
    }
    false
}

impl fmt::Display for Permutation {
    /// Comma-separated 1-based values, e.g. `6,7,4,3,5,2,8,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.values() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl Permutation {
    /// Compact digit word (`"132"`); only unambiguous for n <= 9.
    pub fn word(&self) -> String {
        if self.len() <= 9 {
            self.values().iter().map(|v| char::from(b'0' + v)).collect()
        } else {
            self.to_string()
        }
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts comma-separated values, or a bare digit word for n <= 9.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let values: Result<Vec<usize>, _> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>()).collect()
        } else if s.chars().all(|c| c.is_ascii_digit()) && s.len() <= 9 {
            Ok(s.bytes().map(|b| (b - b'0') as usize).collect())
        } else {
            s.parse::<usize>().map(|v| vec![v])
        };
        let values = values.map_err(|_| PermError::Parse(s.to_string()))?;
        Permutation::new(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A nonempty set of distinct patterns, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Result<Self, PermError> {
        let mut patterns: Vec<Permutation> = patterns.into_iter().collect();
        if patterns.is_empty() {
            return Err(PermError::EmptyPatternSet);
        }
        for p in &patterns {
            if p.is_empty() || p.len() > MAX_PATTERN_LEN {
                return Err(PermError::BadPatternLength(p.to_string(), p.len()));
            }
        }
        patterns.sort();
        patterns.dedup();
        Ok(PatternSet { patterns })
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn transform(&self, kind: Symmetry) -> Self {
        PatternSet::new(self.patterns.iter().map(|p| p.transform(kind)))
            .expect("symmetries preserve pattern lengths")
    }

    /// Whether the last entry of `prefix` completes an occurrence of some pattern.
    pub(crate) fn completed_by_last(&self, prefix: &[u8]) -> bool {
        self.patterns
            .iter()
            .any(|p| contains_pattern(prefix, p.values(), true))
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.patterns.iter().map(Permutation::word).collect();
        f.write_str(&words.join("/"))
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet({self})")
    }
}

impl FromStr for PatternSet {
    type Err = PermError;

    /// Slash-separated words, e.g. `123/132`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Result<Vec<Permutation>, _> = s
            .split('/')
            .filter(|w| !w.trim().is_empty())
            .map(str::parse)
            .collect();
        PatternSet::new(parts?)
    }
}

impl Serialize for PatternSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
