//! Exhaustive property checks shared by the acceptance run and the property tests.
#![allow(dead_code)]

use avoidstat::dyck::DyckPath;
use avoidstat::enumerate::{all_permutations, Limits};
use avoidstat::dyck::{enumerate_dyck, DyckFilter};
use avoidstat::poly::StatPoly;
use avoidstat::series::Series;

/// Outcome of one exhaustive sweep.
pub struct Sweep {
    pub cases: u64,
    pub failures: Vec<String>,
}

impl Sweep {
    fn new() -> Self {
        Sweep { cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn coefficient_choices() -> Vec<StatPoly> {
    let x = StatPoly::x();
    let q = StatPoly::q();
    vec![
        StatPoly::zero(),
        StatPoly::one(),
        -&StatPoly::one(),
        x.clone(),
        &q - &x,
    ]
}

/// Every series of the given order whose coefficients come from a small fixed set.
pub fn small_series(order: usize) -> Vec<Series> {
    let choices = coefficient_choices();
    let mut out: Vec<Vec<StatPoly>> = vec![Vec::new()];
    for _ in 0..=order {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c.clone());
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|c| Series::from_coeffs(c, order)).collect()
}

pub fn ring_laws() -> Sweep {
    let mut s = Sweep::new();
    let dom = small_series(1);
    let zero = Series::zero(1);
    let one = Series::one(1);
    for a in &dom {
        s.check(&(a + &zero) == a && &(a * &one) == a, || format!("identity {a}"));
        s.check((a + &(-a)).is_zero(), || format!("inverse {a}"));
        for b in &dom {
            s.check(a + b == b + a && a * b == b * a, || format!("commute {a}, {b}"));
            for c in &dom {
                let assoc = &(a + b) + c == a + &(b + c) && &(a * b) * c == a * &(b * c);
                let dist = a * &(b + c) == &(a * b) + &(a * c);
                s.check(assoc && dist, || format!("{a}, {b}, {c}"));
            }
        }
    }
    s
}

pub fn sqrt_square() -> Sweep {
    let mut s = Sweep::new();
    let four = StatPoly::constant(4);
    for w in small_series(3) {
        let unit = &Series::one(3) + &w.shift(1);
        let back = (&unit * &unit).sqrt();
        s.check(back.as_ref() == Ok(&unit), || format!("sqrt(s^2) for s = {unit}"));
        let a = &Series::one(3) + &w.shift(1).scale(&four);
        let ok = a.sqrt().map(|r| &r * &r == a).unwrap_or(false);
        s.check(ok, || format!("sqrt(a)^2 for a = {a}"));
    }
    s
}

fn all_paths(n_max: usize) -> Vec<DyckPath> {
    let limits = Limits::default();
    (0..=n_max)
        .flat_map(|n| enumerate_dyck(n, DyckFilter::any(), &limits).unwrap())
        .collect()
}

pub fn tunnel_count(n_max: usize) -> Sweep {
    let mut s = Sweep::new();
    for d in all_paths(n_max) {
        s.check(d.tunnels().len() == d.semilength(), || d.word());
    }
    s
}

pub fn depth_zero_disjoint(n_max: usize) -> Sweep {
    let mut s = Sweep::new();
    for d in all_paths(n_max) {
        let mut spans: Vec<(usize, usize)> = d
            .tunnels()
            .iter()
            .filter(|t| t.depth == 0)
            .map(|t| (t.up_index, t.down_index))
            .collect();
        spans.sort();
        s.check(spans.windows(2).all(|w| w[0].1 < w[1].0), || d.word());
    }
    s
}

pub fn fp_exc_inverse(n_max: usize) -> Sweep {
    let mut s = Sweep::new();
    for n in 0..=n_max {
        for pi in all_permutations(n) {
            let a = pi.statistics();
            let b = pi.inverse().statistics();
            s.check((a.fp + a.exc + b.exc) as usize == n, || pi.to_string());
        }
    }
    s
}
