//! Dyck paths, tunnels and the shape statistics read off them.
//!
//! A path is stored bit-packed, one bit per step (set = up-step), step `i`
//! at bit `i`. Midpoint comparisons are made in doubled coordinates, so a
//! tunnel spanning `x = a .. b` has doubled midpoint `a + b`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{EnumError, Limits};

/// Largest semilength that fits the packed representation.
pub const MAX_SEMILENGTH: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("path dips below the x-axis at step {index}")]
    BelowAxis { index: usize },
    #[error("path does not return to the x-axis (ends at height {height})")]
    Unbalanced { index: usize, height: usize },
    #[error("invalid step {ch:?} at index {index}; expected U or D")]
    InvalidStep { index: usize, ch: char },
    #[error("semilength {0} exceeds {MAX_SEMILENGTH}")]
    TooLong(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    bits: u64,
    semilength: u8,
}

/// The segment under a path joining an up-step to its matching down-step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Tunnel {
    pub up_index: usize,
    pub down_index: usize,
    pub height: usize,
    pub length: usize,
    pub depth: i64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TunnelStats {
    /// centered tunnels
    pub ct: u32,
    /// right tunnels
    pub rt: u32,
    /// tunnels of depth 0
    pub td0: u32,
    /// tunnels of negative depth
    pub tdneg: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShapeStats {
    pub height: u32,
    pub peaks: u32,
    pub hills: u32,
    pub valleys: u32,
    pub height_at_middle: u32,
    pub is_symmetric: bool,
    pub is_pyramid_sequence: bool,
    pub ascents_only_at_start: bool,
}

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath {
            bits: 0,
            semilength: 0,
        }
    }

    /// Validates a sequence of steps (`true` = up).
    pub fn from_steps(steps: impl IntoIterator<Item = bool>) -> Result<Self, DyckError> {
        let mut bits = 0u64;
        let mut len = 0usize;
        let mut height = 0usize;
        for (i, up) in steps.into_iter().enumerate() {
            if i >= 2 * MAX_SEMILENGTH {
                return Err(DyckError::TooLong(i / 2 + 1));
            }
            if up {
                bits |= 1 << i;
                height += 1;
            } else if height == 0 {
                return Err(DyckError::BelowAxis { index: i });
            } else {
                height -= 1;
            }
            len = i + 1;
        }
        if height != 0 {
            return Err(DyckError::Unbalanced { index: len, height });
        }
        Ok(DyckPath {
            bits,
            semilength: (len / 2) as u8,
        })
    }

    pub(crate) fn from_steps_unchecked(bits: u64, semilength: usize) -> Self {
        DyckPath {
            bits,
            semilength: semilength as u8,
        }
    }

    /// `(UD)^n`.
    pub fn staircase(n: usize) -> Self {
        Self::from_steps((0..2 * n).map(|i| i % 2 == 0)).expect("staircase is a Dyck path")
    }

    /// `U^n D^n`.
    pub fn pyramid(n: usize) -> Self {
        Self::from_steps((0..2 * n).map(|i| i < n)).expect("pyramid is a Dyck path")
    }

    pub fn semilength(&self) -> usize {
        self.semilength as usize
    }

    pub fn len(&self) -> usize {
        2 * self.semilength()
    }

    pub fn is_empty(&self) -> bool {
        self.semilength == 0
    }

    pub fn is_up(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn steps(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.is_up(i))
    }

    pub fn word(&self) -> String {
        self.steps().map(|u| if u { 'U' } else { 'D' }).collect()
    }

    /// Heights at `x = 0 ..= 2n`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.len() + 1);
        let mut y = 0usize;
        h.push(0);
        for up in self.steps() {
            if up {
                y += 1;
            } else {
                y -= 1;
            }
            h.push(y);
        }
        h
    }

    /// Reflection in the vertical line `x = n`: reverse the word and swap U/D.
    pub fn reflect(&self) -> Self {
        let len = self.len();
        let mut bits = 0u64;
        for i in 0..len {
            if !self.is_up(len - 1 - i) {
                bits |= 1 << i;
            }
        }
        DyckPath {
            bits,
            semilength: self.semilength,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.reflect() == *self
    }

    /// One tunnel per up-step, in order of the up-steps.
    pub fn tunnels(&self) -> Vec<Tunnel> {
        let len = self.len();
        let heights = self.heights();
        let mut out = Vec::with_capacity(self.semilength());
        for up in 0..len {
            if !self.is_up(up) {
                continue;
            }
            let base = heights[up];
            // matching down-step: first return to the starting height
            let down = (up + 1..len)
                .find(|&j| heights[j + 1] == base)
                .expect("every up-step of a Dyck path is matched");
            let length = down - up + 1;
            out.push(Tunnel {
                up_index: up,
                down_index: down,
                height: base,
                length,
                depth: (length / 2) as i64 - base as i64 - 1,
            });
        }
        out
    }

    pub fn tunnel_stats(&self) -> TunnelStats {
        let middle = self.len();
        let mut stats = TunnelStats::default();
        for t in self.tunnels() {
            // doubled midpoint of the segment x = up_index .. down_index + 1
            let mid2 = t.up_index + t.down_index + 1;
            match mid2.cmp(&middle) {
                std::cmp::Ordering::Equal => stats.ct += 1,
                std::cmp::Ordering::Greater => stats.rt += 1,
                std::cmp::Ordering::Less => {}
            }
            match t.depth.cmp(&0) {
                std::cmp::Ordering::Equal => stats.td0 += 1,
                std::cmp::Ordering::Less => stats.tdneg += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
        stats
    }

    pub fn height_at_middle(&self) -> usize {
        self.heights()[self.semilength()]
    }

    pub fn shape_stats(&self) -> ShapeStats {
        let heights = self.heights();
        let len = self.len();
        let mut s = ShapeStats {
            height: heights.iter().copied().max().unwrap_or(0) as u32,
            peaks: 0,
            hills: 0,
            valleys: 0,
            height_at_middle: heights[self.semilength()] as u32,
            is_symmetric: self.is_symmetric(),
            is_pyramid_sequence: true,
            ascents_only_at_start: true,
        };
        let mut seen_down = false;
        for i in 0..len.saturating_sub(1) {
            let (a, b) = (self.is_up(i), self.is_up(i + 1));
            if !a {
                seen_down = true;
            }
            match (a, b) {
                (true, false) => {
                    s.peaks += 1;
                    if heights[i + 1] == 1 {
                        s.hills += 1;
                    }
                }
                (false, true) => {
                    s.valleys += 1;
                    if heights[i + 1] != 0 {
                        s.is_pyramid_sequence = false;
                    }
                }
                (true, true) if seen_down => s.ascents_only_at_start = false,
                _ => {}
            }
        }
        s
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({})", self.word())
    }
}

impl FromStr for DyckPath {
    type Err = DyckError;

    /// Parses a `U`/`D` word (case-insensitive).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut steps = Vec::with_capacity(s.len());
        for (index, ch) in s.trim().chars().enumerate() {
            match ch {
                'U' | 'u' => steps.push(true),
                'D' | 'd' => steps.push(false),
                ch => return Err(DyckError::InvalidStep { index, ch }),
            }
        }
        DyckPath::from_steps(steps)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Structural restrictions understood by [`enumerate_dyck`]; all set fields must hold.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DyckFilter {
    pub max_height: Option<usize>,
    pub max_peaks: Option<usize>,
    pub symmetric: bool,
    pub pyramid_sequence: bool,
    pub ascents_only_at_start: bool,
}

impl DyckFilter {
    pub fn any() -> Self {
        Self::default()
    }

    pub fn max_height(mut self, h: usize) -> Self {
        self.max_height = Some(h);
        self
    }

    pub fn max_peaks(mut self, k: usize) -> Self {
        self.max_peaks = Some(k);
        self
    }

    pub fn symmetric(mut self) -> Self {
        self.symmetric = true;
        self
    }

    pub fn pyramid_sequence(mut self) -> Self {
        self.pyramid_sequence = true;
        self
    }

    pub fn ascents_only_at_start(mut self) -> Self {
        self.ascents_only_at_start = true;
        self
    }

    pub fn accepts(&self, d: &DyckPath) -> bool {
        let s = d.shape_stats();
        self.max_height.is_none_or(|h| s.height as usize <= h)
            && self.max_peaks.is_none_or(|k| s.peaks as usize <= k)
            && (!self.symmetric || s.is_symmetric)
            && (!self.pyramid_sequence || s.is_pyramid_sequence)
            && (!self.ascents_only_at_start || s.ascents_only_at_start)
    }
}

#[derive(Clone, Copy)]
struct Frame {
    bits: u64,
    pos: usize,
    height: usize,
    peaks: usize,
    seen_down: bool,
    last_up: bool,
}

/// Depth-first stream of paths of semilength `n` satisfying `filter`.
///
/// Height, peak, valley and ascent restrictions are enforced step by step, so
/// a violating prefix is never extended. Symmetric paths are generated as a
/// first half and completed by reflection.
pub struct DyckPaths {
    n: usize,
    filter: DyckFilter,
    stack: Vec<Frame>,
}

pub fn enumerate_dyck(n: usize, filter: DyckFilter, limits: &Limits) -> Result<DyckPaths, EnumError> {
    limits.check_dyck(n)?;
    Ok(DyckPaths::new(n, filter))
}

impl DyckPaths {
    fn new(n: usize, filter: DyckFilter) -> Self {
        assert!(n <= MAX_SEMILENGTH);
        DyckPaths {
            n,
            filter,
            stack: vec![Frame {
                bits: 0,
                pos: 0,
                height: 0,
                peaks: 0,
                seen_down: false,
                last_up: false,
            }],
        }
    }

    fn target_len(&self) -> usize {
        if self.filter.symmetric {
            self.n
        } else {
            2 * self.n
        }
    }

    fn try_step(&self, f: &Frame, up: bool) -> Option<Frame> {
        let total = 2 * self.n;
        let filter = &self.filter;
        let mut g = *f;
        if up {
            if filter.max_height.is_some_and(|h| f.height + 1 > h) {
                return None;
            }
            // must still be able to come back down
            if f.height + 1 > total - f.pos - 1 {
                return None;
            }
            if f.pos > 0 && !f.last_up && filter.pyramid_sequence && f.height != 0 {
                return None;
            }
            if f.last_up && f.seen_down && filter.ascents_only_at_start {
                return None;
            }
            g.bits |= 1 << f.pos;
            g.height += 1;
            g.last_up = true;
        } else {
            if f.height == 0 {
                return None;
            }
            if f.last_up {
                g.peaks += 1;
                if filter.max_peaks.is_some_and(|k| g.peaks > k) {
                    return None;
                }
            }
            g.height -= 1;
            g.seen_down = true;
            g.last_up = false;
        }
        g.pos += 1;
        Some(g)
    }

    fn complete(&self, f: &Frame) -> Option<DyckPath> {
        if !self.filter.symmetric {
            return Some(DyckPath::from_steps_unchecked(f.bits, self.n));
        }
        let n = self.n;
        let mut bits = f.bits;
        for i in 0..n {
            // step 2n-1-i mirrors step i with U/D swapped
            if f.bits >> i & 1 == 0 {
                bits |= 1 << (2 * n - 1 - i);
            }
        }
        let d = DyckPath::from_steps_unchecked(bits, n);
        self.filter.accepts(&d).then_some(d)
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let target = self.target_len();
        while let Some(f) = self.stack.pop() {
            if f.pos == target {
                if self.filter.symmetric || f.height == 0 {
                    if let Some(d) = self.complete(&f) {
                        return Some(d);
                    }
                }
                continue;
            }
            // push down first so that up-steps are explored first (lexicographic U < D)
            if let Some(g) = self.try_step(&f, false) {
                self.stack.push(g);
            }
            if let Some(g) = self.try_step(&f, true) {
                self.stack.push(g);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{catalan, fibonacci};
    use num_bigint::BigInt;

    fn d(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn all(n: usize, filter: DyckFilter) -> Vec<DyckPath> {
        DyckPaths::new(n, filter).collect()
    }

    /// Every U/D word of length 2n that is a Dyck path; unpruned reference.
    fn brute(n: usize) -> Vec<DyckPath> {
        (0u64..1 << (2 * n))
            .filter_map(|bits| DyckPath::from_steps((0..2 * n).map(|i| bits >> i & 1 == 1)).ok())
            .collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(d("UUDD").semilength(), 2);
        assert_eq!("UDDU".parse::<DyckPath>(), Err(DyckError::BelowAxis { index: 2 }));
        assert_eq!(d("").semilength(), 0);
        assert!(matches!("UUD".parse::<DyckPath>(), Err(DyckError::Unbalanced { .. })));
        assert!(matches!("UXD".parse::<DyckPath>(), Err(DyckError::InvalidStep { index: 1, .. })));
    }

    #[test]
    fn tunnels_of_small_paths() {
        let t = d("UDUD").tunnels();
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|t| t.height == 0 && t.length == 2 && t.depth == 0));
        let t = d("UUUDDD").tunnels();
        assert_eq!(t.iter().map(|t| t.height).collect::<Vec<_>>(), [0, 1, 2]);
        assert_eq!(t.iter().map(|t| t.depth).collect::<Vec<_>>(), [2, 0, -2]);
        let s = d("UUUDDD").tunnel_stats();
        assert_eq!((s.ct, s.rt, s.td0, s.tdneg), (3, 0, 1, 1));
    }

    #[test]
    fn pyramid_depth_zero_iff_odd() {
        for m in 1..=12 {
            let s = DyckPath::pyramid(m).tunnel_stats();
            assert_eq!(s.td0, (m % 2) as u32, "m={m}");
            assert_eq!(s.tdneg, (m / 2) as u32, "m={m}");
        }
    }

    #[test]
    fn shape_examples() {
        let s = d("UDUD").shape_stats();
        assert_eq!((s.height, s.peaks, s.hills, s.valleys), (1, 2, 2, 1));
        assert!(s.is_symmetric && s.is_pyramid_sequence);
        let s = d("UUDUDD").shape_stats();
        assert_eq!((s.height, s.peaks, s.hills), (2, 2, 0));
        assert!(!s.is_pyramid_sequence);
        let s = DyckPath::pyramid(4).shape_stats();
        assert_eq!((s.height, s.peaks), (4, 1));
        assert!(s.is_pyramid_sequence);
        assert_eq!(DyckPath::empty().height_at_middle(), 0);
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(d("UUDDUD").reflect(), d("UDUUDD"));
        for n in 0..=8 {
            for p in brute(n) {
                assert_eq!(p.reflect().reflect(), p);
                assert_eq!(p.reflect() == p, p.shape_stats().is_symmetric);
            }
        }
    }

    #[test]
    fn tunnel_invariants_exhaustive() {
        for n in 0..=8 {
            for p in brute(n) {
                let tunnels = p.tunnels();
                assert_eq!(tunnels.len(), n);
                for t in &tunnels {
                    assert!(p.is_up(t.up_index) && !p.is_up(t.down_index));
                    assert_eq!(t.depth, t.length as i64 / 2 - t.height as i64 - 1);
                }
                // depth-0 tunnels have pairwise disjoint projections
                let zero: Vec<_> = tunnels.iter().filter(|t| t.depth == 0).collect();
                for (i, a) in zero.iter().enumerate() {
                    for b in &zero[i + 1..] {
                        assert!(a.down_index < b.up_index || b.down_index < a.up_index, "{p}");
                    }
                }
                let s = p.tunnel_stats();
                let sh = p.shape_stats();
                assert_eq!(s.ct + s.rt + p.reflect().tunnel_stats().rt, n as u32);
                if sh.is_symmetric {
                    assert_eq!(s.ct, sh.height_at_middle);
                }
                if n % 2 == 0 {
                    assert_eq!(sh.height_at_middle % 2, 0);
                }
                assert_eq!(sh.height_at_middle as usize % 2, n % 2);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        for n in 0..=10 {
            assert_eq!(BigInt::from(all(n, DyckFilter::any()).len()), catalan(n));
        }
        for n in 1..=10 {
            assert_eq!(all(n, DyckFilter::any().max_height(2)).len(), 1 << (n - 1));
            assert_eq!(
                BigInt::from(all(n, DyckFilter::any().pyramid_sequence().max_height(2)).len()),
                fibonacci(n + 1)
            );
        }
    }

    #[test]
    fn pruned_filters_match_post_filtering() {
        let filters = [
            DyckFilter::any().max_height(3),
            DyckFilter::any().max_peaks(2),
            DyckFilter::any().symmetric(),
            DyckFilter::any().pyramid_sequence(),
            DyckFilter::any().ascents_only_at_start(),
            DyckFilter::any().symmetric().max_height(2),
            DyckFilter::any().symmetric().max_peaks(2),
            DyckFilter::any().ascents_only_at_start().max_height(2),
        ];
        for n in 0..=8 {
            let everything = brute(n);
            for f in filters {
                let mut got = all(n, f);
                got.sort();
                let mut want: Vec<_> = everything.iter().copied().filter(|p| f.accepts(p)).collect();
                want.sort();
                assert_eq!(got, want, "{f:?} n={n}");
            }
        }
    }

    #[test]
    fn ceiling() {
        let limits = Limits::default();
        assert!(enumerate_dyck(15, DyckFilter::any(), &limits).is_err());
        assert!(enumerate_dyck(14, DyckFilter::any(), &limits).is_ok());
    }
}
