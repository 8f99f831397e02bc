//! Prefix-pruned generation of pattern-avoiding permutations and involutions.

use thiserror::Error;

use crate::perm::{PatternSet, Permutation, MAX_LEN};

/// Environment variable overriding the brute-force ceiling.
pub const CEILING_ENV: &str = "AVOIDSTAT_MAX_N";

pub const DEFAULT_PERM_CEILING: usize = 12;
pub const DEFAULT_DYCK_CEILING: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("n = {n} exceeds the brute-force ceiling of {ceiling} (set {CEILING_ENV} to raise it)")]
    CeilingExceeded { n: usize, ceiling: usize },
}

/// Runtime bounds on exhaustive generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub perm_ceiling: usize,
    pub dyck_ceiling: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            perm_ceiling: DEFAULT_PERM_CEILING,
            dyck_ceiling: DEFAULT_DYCK_CEILING,
        }
    }
}

impl Limits {
    /// Defaults, with the permutation ceiling taken from the environment when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(CEILING_ENV).ok().and_then(|v| v.parse().ok()) {
            limits.perm_ceiling = usize::min(n, MAX_LEN);
        }
        limits
    }

    pub fn check_perm(&self, n: usize) -> Result<(), EnumError> {
        if n > self.perm_ceiling {
            Err(EnumError::CeilingExceeded {
                n,
                ceiling: self.perm_ceiling,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_dyck(&self, n: usize) -> Result<(), EnumError> {
        if n > self.dyck_ceiling {
            Err(EnumError::CeilingExceeded {
                n,
                ceiling: self.dyck_ceiling,
            })
        } else {
            Ok(())
        }
    }
}

/// Depth-first stream over `S_n(sigma)` (or `I_n(sigma)`).
///
/// A prefix is extended only if its newest entry completes no occurrence of
/// any pattern, so no subtree rooted at a containing prefix is ever visited.
pub struct Avoiders {
    n: usize,
    sigma: PatternSet,
    involutions_only: bool,
    prefix: Vec<u8>,
    used: u32,
    // next candidate value to try at each depth
    next: Vec<u8>,
    done: bool,
}

/// Streams the avoiders of length `n`, refusing lengths above the ceiling.
pub fn enumerate_avoiders(
    n: usize,
    sigma: &PatternSet,
    involutions_only: bool,
    limits: &Limits,
) -> Result<Avoiders, EnumError> {
    limits.check_perm(n)?;
    Ok(Avoiders::new(n, sigma.clone(), involutions_only))
}

impl Avoiders {
    fn new(n: usize, sigma: PatternSet, involutions_only: bool) -> Self {
        assert!(n <= MAX_LEN);
        Avoiders {
            n,
            sigma,
            involutions_only,
            prefix: Vec::with_capacity(n),
            used: 0,
            next: vec![1; n + 1],
            done: false,
        }
    }

    fn admissible(&self, v: u8) -> bool {
        if self.used >> v & 1 == 1 {
            return false;
        }
        if !self.involutions_only {
            return true;
        }
        let pos = self.prefix.len() as u8 + 1;
        // An earlier position j with pi_j = pos forces pi_pos = j.
        if let Some(j) = self.prefix.iter().position(|&w| w == pos) {
            return v == j as u8 + 1;
        }
        v >= pos
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Permutation::empty());
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = Permutation::from_values_unchecked(&self.prefix);
                let last = self.prefix.pop().unwrap();
                self.used &= !(1 << last);
                return Some(out);
            }
            let mut placed = false;
            while self.next[depth] as usize <= self.n {
                let v = self.next[depth];
                self.next[depth] += 1;
                if !self.admissible(v) {
                    continue;
                }
                self.prefix.push(v);
                if self.sigma.completed_by_last(&self.prefix) {
                    self.prefix.pop();
                    continue;
                }
                self.used |= 1 << v;
                self.next[depth + 1] = 1;
                placed = true;
                break;
            }
            if !placed {
                // exhausted this depth: backtrack
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                let last = self.prefix.pop().unwrap();
                self.used &= !(1 << last);
            }
        }
    }
}

/// Every permutation of length `n` in lexicographic order (used as the unpruned reference).
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, cur: &mut Vec<u8>, used: u32, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::from_values_unchecked(cur));
            return;
        }
        for v in 1..=n as u8 {
            if used >> v & 1 == 0 {
                cur.push(v);
                rec(n, cur, used | 1 << v, out);
                cur.pop();
            }
        }
    }
    assert!(n <= 10, "all_permutations is meant for small n");
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::catalan;
    use std::collections::BTreeSet;

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    fn count(n: usize, sigma: &str, inv: bool) -> usize {
        enumerate_avoiders(n, &set(sigma), inv, &Limits::default())
            .unwrap()
            .count()
    }

    #[test]
    fn pair_example() {
        assert_eq!(count(4, "123/132", false), 8);
    }

    #[test]
    fn singles_are_catalan() {
        for sigma in ["123", "132", "213", "231", "312", "321"] {
            for n in 0..=9 {
                assert_eq!(count(n, sigma, false), catalan(n).try_into().unwrap(), "{sigma} n={n}");
            }
        }
    }

    #[test]
    fn empty_length() {
        let all: Vec<_> = enumerate_avoiders(0, &set("12"), false, &Limits::default())
            .unwrap()
            .collect();
        assert_eq!(all, vec![Permutation::empty()]);
    }

    #[test]
    fn pruned_equals_filtered() {
        let sets = ["123", "231", "132/213", "123/231/312", "1234", "2143/312", "4321"];
        for sigma in sets {
            let sigma = set(sigma);
            for n in 0..=7 {
                for inv in [false, true] {
                    let pruned: Vec<_> = Avoiders::new(n, sigma.clone(), inv).collect();
                    let unique: BTreeSet<_> = pruned.iter().copied().collect();
                    assert_eq!(unique.len(), pruned.len(), "duplicates for {sigma} n={n}");
                    let filtered: BTreeSet<_> = all_permutations(n)
                        .into_iter()
                        .filter(|p| p.avoids_all(&sigma) && (!inv || p.is_involution()))
                        .collect();
                    assert_eq!(unique, filtered, "{sigma} n={n} inv={inv}");
                }
            }
        }
    }

    #[test]
    fn ceiling_refusal() {
        let limits = Limits {
            perm_ceiling: 5,
            dyck_ceiling: 5,
        };
        assert_eq!(
            enumerate_avoiders(6, &set("123"), false, &limits).err(),
            Some(EnumError::CeilingExceeded { n: 6, ceiling: 5 })
        );
    }

    #[test]
    fn involution_counts_small() {
        // |I_n(231)| = 2^{n-1}, |I_n(123)| = binom(n, floor(n/2))
        for n in 1..=9 {
            assert_eq!(count(n, "231", true), 1 << (n - 1));
        }
        assert_eq!(count(6, "123", true), 20);
        assert_eq!(count(7, "123", true), 35);
    }
}
