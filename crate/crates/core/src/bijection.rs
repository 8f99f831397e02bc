//! Bijections between pattern-avoiding permutations and Dyck paths.
//!
//! [`kra`] sends `S_n(132)` onto `D_n` by tracing the border of the region of
//! the permutation array that has no cross weakly to its north-west, from the
//! lower-left corner to the upper-right one (up-step per row, down-step per
//! column). [`brs`] sends `S_n(123)` onto `D_n` by tracing, from the upper-right
//! corner down to the lower-left one, the border of the region with no cross
//! weakly to its south-east (up-step per row, down-step per column).
//!
//! Both work directly on the array in `O(n^2)`.

use thiserror::Error;

use crate::dyck::DyckPath;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{perm} contains {pattern}; the map is only defined on {pattern}-avoiders")]
    ContainsPattern { perm: String, pattern: &'static str },
}

fn check_avoids(perm: &Permutation, pattern: &'static str) -> Result<(), BijectionError> {
    let pat: Permutation = pattern.parse().expect("static pattern");
    if perm.contains(&pat) {
        Err(BijectionError::ContainsPattern {
            perm: perm.to_string(),
            pattern,
        })
    } else {
        Ok(())
    }
}

/// The 132-avoiding bijection. Errors if `perm` contains 132.
pub fn kra(perm: &Permutation) -> Result<DyckPath, BijectionError> {
    check_avoids(perm, "132")?;
    Ok(kra_trusted(perm))
}

/// [`kra`] without the containment check; callers guarantee 132-avoidance.
pub fn kra_trusted(perm: &Permutation) -> DyckPath {
    let n = perm.len();
    // lambda_r = (min of the first r entries) - 1: unshaded cells in row r.
    let mut lambda = vec![0usize; n + 1];
    let mut m = usize::MAX;
    for r in 1..=n {
        m = m.min(perm.at(r));
        lambda[r] = m - 1;
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut x = 0;
    for r in (1..=n).rev() {
        while x < lambda[r] {
            steps.push(false);
            x += 1;
        }
        steps.push(true);
    }
    steps.extend(std::iter::repeat_n(false, n - x));
    DyckPath::from_steps(steps).expect("diagram border stays above the diagonal")
}

/// Inverse of [`kra`]: rebuild the diagram, then fill rows top to bottom with
/// a cross in the leftmost shaded cell of a free column.
pub fn kra_inv(path: &DyckPath) -> Permutation {
    let n = path.semilength();
    // Walk the path; an up-step while at horizontal position x closes row r with lambda_r = x.
    let mut lambda = vec![0usize; n + 1];
    let mut row = n;
    let mut x = 0;
    for up in path.steps() {
        if up {
            lambda[row] = x;
            row = row.saturating_sub(1);
        } else {
            x += 1;
        }
    }
    let mut used = vec![false; n + 2];
    let mut values = Vec::with_capacity(n);
    for r in 1..=n {
        let c = (lambda[r] + 1..=n)
            .find(|&c| !used[c])
            .expect("a Dyck path always leaves a free shaded column");
        used[c] = true;
        values.push(c);
    }
    Permutation::new(&values).expect("one cross per row and column")
}

/// The 123-avoiding bijection. Errors if `perm` contains 123.
pub fn brs(perm: &Permutation) -> Result<DyckPath, BijectionError> {
    check_avoids(perm, "123")?;
    Ok(brs_trusted(perm))
}

/// [`brs`] without the containment check; callers guarantee 123-avoidance.
pub fn brs_trusted(perm: &Permutation) -> DyckPath {
    let n = perm.len();
    // suffix[r] = max(pi_r..pi_n); the border sits at x = suffix[r] while crossing row r.
    let mut suffix = vec![0usize; n + 2];
    for r in (1..=n).rev() {
        suffix[r] = suffix[r + 1].max(perm.at(r));
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut x = n;
    for r in 1..=n {
        while x > suffix[r] {
            steps.push(false);
            x -= 1;
        }
        steps.push(true);
    }
    steps.extend(std::iter::repeat_n(false, x));
    DyckPath::from_steps(steps).expect("border stays below the secondary diagonal")
}

/// Inverse of [`brs`]. Rows where the border jumps left carry the
/// right-to-left maxima; the remaining values fill the other rows in
/// decreasing order, which is forced for a 123-avoider.
pub fn brs_inv(path: &DyckPath) -> Permutation {
    let n = path.semilength();
    let mut border = vec![0usize; n + 2];
    let mut row = 0;
    let mut x = n;
    for up in path.steps() {
        if up {
            row += 1;
            border[row] = x;
        } else {
            x -= 1;
        }
    }
    let mut values = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    for r in 1..=n {
        if border[r] > border[r + 1] {
            values[r] = border[r];
            used[border[r]] = true;
        }
    }
    let mut rest = (1..=n).rev().filter(|&v| !used[v]);
    for r in 1..=n {
        if values[r] == 0 {
            values[r] = rest.next().expect("counts agree");
        }
    }
    Permutation::new(&values[1..]).expect("valid arrangement")
}

/// Whether `path` has a peak whose apex is at `x = n`.
pub fn has_middle_peak(path: &DyckPath) -> bool {
    let n = path.semilength();
    n > 0 && path.is_up(n - 1) && !path.is_up(n)
}

/// The condition characterising small fixed points under [`brs`]: for some `i`,
/// the `i`-th and `(i+1)`-st up-steps are adjacent, the `i`-th and `(i+1)`-st
/// down-steps counted from the end are adjacent, and exactly `n + 1 - 2i` peaks
/// lie strictly between the two pairs.
pub fn satisfies_small_fixed_point_condition(path: &DyckPath) -> bool {
    let n = path.semilength();
    let ups: Vec<usize> = (0..path.len()).filter(|&j| path.is_up(j)).collect();
    let downs_rev: Vec<usize> = (0..path.len()).rev().filter(|&j| !path.is_up(j)).collect();
    (1..n).any(|i| {
        if 2 * i > n + 1 {
            return false;
        }
        let (u1, u2) = (ups[i - 1], ups[i]);
        let (d1, d2) = (downs_rev[i - 1], downs_rev[i]);
        if u2 != u1 + 1 || d2 + 1 != d1 || u2 >= d2 {
            return false;
        }
        let peaks = (u2..d2).filter(|&j| path.is_up(j) && !path.is_up(j + 1)).count();
        peaks == n + 1 - 2 * i
    })
}
