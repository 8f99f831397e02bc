//! Integer sequences used by the generating functions: Catalan, bounded-height
//! Catalan, Fibonacci, Fine and ballot numbers, and strip-confined path counts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `binom(a, b)`, zero when `a < 0`, `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

pub fn catalan(n: usize) -> BigInt {
    let n = n as i64;
    binomial(2 * n, n) / (n + 1)
}

/// Number of lattice paths of `steps` up/down steps from height 0 to height
/// `end`, confined to `0..=top`.
pub fn strip_paths(steps: usize, end: usize, top: usize) -> BigInt {
    if end > top {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::zero(); top + 1];
    row[0] = BigInt::one();
    for _ in 0..steps {
        let mut next = vec![BigInt::zero(); top + 1];
        for h in 0..=top {
            if row[h].is_zero() {
                continue;
            }
            if h < top {
                next[h + 1] += &row[h];
            }
            if h > 0 {
                next[h - 1] += &row[h];
            }
        }
        row = next;
    }
    row.swap_remove(end)
}

/// `C_i^{<=h}`: Dyck paths of semilength `i` and height at most `h`.
pub fn catalan_bounded(i: usize, h: usize) -> BigInt {
    strip_paths(2 * i, 0, h)
}

/// `g_{k,l}(n)`: paths of `n` steps from height 0 to height `k - l` inside the strip `0..=k`.
pub fn g_chebyshev(k: usize, l: usize, n: usize) -> BigInt {
    if l > k {
        return BigInt::zero();
    }
    strip_paths(n, k - l, k)
}

/// Fibonacci with `F_0 = 0, F_1 = 1`.
pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

/// Fine numbers `1, 0, 1, 2, 6, 18, 57, ...`, from
/// `F_n = 1/2 * sum_{i=0}^{n-2} (-1/2)^i C_{n-i}` for `n >= 2`.
pub fn fine(n: usize) -> BigInt {
    match n {
        0 => return BigInt::one(),
        1 => return BigInt::zero(),
        _ => {}
    }
    // 2^{n-1} F_n = sum_i (-1)^i 2^{n-2-i} C_{n-i}
    let mut acc = BigInt::zero();
    for i in 0..=n - 2 {
        let term = catalan(n - i) << (n - 2 - i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let scale = BigInt::one() << (n - 1);
    debug_assert!((&acc % &scale).is_zero());
    acc / scale
}

/// Ballot number `(k+1)/(n+1) binom(n+1, (n-k)/2)`: paths of length `n` from
/// height 0 ending at height `k`. Zero when `n - k` is odd or negative.
pub fn ballot(n: usize, k: usize) -> BigInt {
    if k > n || (n - k) % 2 == 1 {
        return BigInt::zero();
    }
    binomial(n as i64 + 1, ((n - k) / 2) as i64) * (k + 1) / (n + 1)
}

/// Named sequence lookup backing the `sequence` entry point.
pub fn sequence(name: &str, args: &[usize]) -> Option<BigInt> {
    let arg = |i: usize| args.get(i).copied();
    Some(match name {
        "catalan" => catalan(arg(0)?),
        "catalan_bounded" => catalan_bounded(arg(0)?, arg(1)?),
        "fibonacci" => fibonacci(arg(0)?),
        "fine" => fine(arg(0)?),
        "ballot" => ballot(arg(0)?, arg(1)?),
        "g_chebyshev" => g_chebyshev(arg(0)?, arg(1)?, arg(2)?),
        _ => return None,
    })
}

/// Precomputed Catalan, Fine and Fibonacci values up to a fixed index.
#[derive(Debug, Clone)]
pub struct SequenceTable {
    pub catalan: Vec<BigInt>,
    pub fine: Vec<BigInt>,
    pub fibonacci: Vec<BigInt>,
}

impl SequenceTable {
    pub fn new(max_n: usize) -> Self {
        SequenceTable {
            catalan: (0..=max_n).map(catalan).collect(),
            fine: (0..=max_n).map(fine).collect(),
            fibonacci: (0..=max_n + 1).map(fibonacci).collect(),
        }
    }
}
