//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use avoidstat::catalog::{self, cf231, cf312, family_a, family_m};
use avoidstat::enumerate::{enumerate_avoiders, Limits};
use avoidstat::exec::Execution;
use avoidstat::expr::expand_expr;
use avoidstat::oracle::{self, Job};
use avoidstat::perm::PatternSet;
use avoidstat::sequences::{binomial, catalan, fibonacci};
use num_bigint::BigInt;

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn class_size(sigma: &str, n: usize, limits: &Limits) -> BigInt {
    let sigma: PatternSet = sigma.parse().unwrap();
    BigInt::from(enumerate_avoiders(n, &sigma, false, limits).unwrap().count())
}

fn class_sizes(limits: &Limits) -> Verdict {
    let mut checked = 0;
    let mut expect = |sigma: &str, n: usize, want: BigInt| -> Result<(), String> {
        checked += 1;
        let got = class_size(sigma, n, limits);
        if got == want {
            Ok(())
        } else {
            Err(format!("|S_{n}({sigma})| = {got}, expected {want}"))
        }
    };
    for n in 0..=10 {
        for sigma in ["123", "132", "213", "231", "312", "321"] {
            expect(sigma, n, catalan(n))?;
        }
        let pow = if n == 0 { BigInt::from(1) } else { BigInt::from(1) << (n - 1) };
        for sigma in ["123/132", "231/321", "312/321", "132/213", "231/312", "132/231", "132/312"] {
            expect(sigma, n, pow.clone())?;
        }
        let quad: BigInt = binomial(n as i64, 2) + 1;
        for sigma in ["132/321", "123/231", "123/312"] {
            expect(sigma, n, quad.clone())?;
        }
        for sigma in ["123/132/213", "231/312/321"] {
            expect(sigma, n, fibonacci(n + 1))?;
        }
        if n >= 1 {
            for sigma in [
                "123/132/231",
                "123/132/312",
                "132/231/321",
                "132/312/321",
                "132/213/231",
                "132/213/312",
                "132/231/312",
                "123/231/312",
                "132/213/321",
            ] {
                expect(sigma, n, BigInt::from(n))?;
            }
        }
        if (5..=9).contains(&n) {
            expect("123/321", n, BigInt::from(0))?;
        }
    }
    Ok(format!("{checked} class sizes, n <= 10"))
}

fn catalog_vs_oracle(limits: &Limits) -> Verdict {
    let jobs: Vec<Job> = catalog::entries()
        .iter()
        .filter(|e| !e.is_family())
        .map(|entry| Job { entry, k: None, n_max: 9 })
        .collect();
    let suite = oracle::run_jobs(jobs, Execution::Parallel, limits);
    match suite.reports.iter().find(|r| !r.all_match()) {
        None => Ok(format!("{} entries agree with brute force, n <= 9", suite.reports.len())),
        Some(r) => Err(format!("{}: {:?} {:?}", r.label(), r.first_mismatch, r.error)),
    }
}

fn fixed_points_123(limits: &Limits) -> Verdict {
    for n in 1..=11 {
        let brute = oracle::s123_brute(n, limits).map_err(|e| e.to_string())?;
        let (s0, s1, s2) = catalog::s123_distribution(n);
        if [s0.clone(), s1.clone(), s2.clone()] != brute {
            return Err(format!("n={n}: formula ({s0}, {s1}, {s2}) vs brute {brute:?}"));
        }
        let sigma: PatternSet = "123".parse().unwrap();
        let (mut big, mut small) = (0u64, 0u64);
        for pi in enumerate_avoiders(n, &sigma, false, limits).unwrap() {
            let fixed: Vec<usize> = (1..=n).filter(|&i| pi.at(i) == i).collect();
            big += fixed.iter().any(|&i| 2 * i > n) as u64;
            small += fixed.iter().any(|&i| 2 * i < n + 1) as u64;
        }
        let (fb, fs) = catalog::bigsmall_counts(n);
        if (fb.clone(), fs.clone()) != (BigInt::from(big), BigInt::from(small)) {
            return Err(format!("n={n}: big/small ({fb}, {fs}) vs brute ({big}, {small})"));
        }
    }
    Ok("s_n^k(123) and big/small counts agree, 1 <= n <= 11".into())
}

fn bijections(limits: &Limits) -> Verdict {
    let report = oracle::verify_structures(9, Execution::Parallel, limits);
    let wanted = [
        "kra round trip",
        "brs round trip",
        "fp=ct, exc=rt on 132-avoiders",
        "fp=td0, exc=tdneg on 312-avoiders",
        "involution <=> symmetric path",
    ];
    let mut cases = 0;
    for name in wanted {
        let c = report
            .checks
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| format!("missing check {name}"))?;
        if !c.passed() {
            return Err(format!("{name}: {} failures, e.g. {:?}", c.failures, c.example));
        }
        cases += c.cases;
    }
    if let Some(c) = report.checks.iter().find(|c| !c.passed()) {
        return Err(format!("{}: {:?}", c.name, c.example));
    }
    Ok(format!("{cases} exhaustive cases, n <= 9"))
}

fn families(limits: &Limits) -> Verdict {
    let order = 14;
    let printed_m = [
        (1, "(1+xz)/(1-z^2)"),
        (2, "(1+xz+(x^2-4)z^2+(2-3x)z^3+(3+2x-3x^2)z^4)/((1-z^2)(1-4z^2))"),
        (
            3,
            "(1+xz+(x^2-12)z^2+(x^3-11x+2)z^3+(-10x^2+4x+45)z^4+(-10x^3+4x^2+37x-10)z^5\
             +(25x^2-22x-52)z^6+(25x^3-22x^2-41x+16)z^7+(-12x^2+16x+16)z^8\
             +(-12x^3+16x^2+12x-8)z^9)/((1-z^2)^2(1-4z^2)(1-7z^2+z^4))",
        ),
    ];
    for (k, src) in printed_m {
        let printed = expand_expr(src, order).map_err(|e| e.to_string())?;
        let ours = family_m(k, order).map_err(|e| e.to_string())?;
        if printed != ours {
            return Err(format!("M_{k} differs from the printed form"));
        }
    }
    let cf = "1/(1-z(x-1+1/(1-z((x-1)qz+q-1+1/(1-qz)))))";
    let rational = "(1-2qz+(q^2-xq)z^2+(xq^2-q^2)z^3)\
                    /(1-(x+2q)z+(xq+q^2-q)z^2+(x^2q-xq)z^3+(-x^2q^2+2xq^2-q^2)z^4)";
    let a3 = family_a(3, order).map_err(|e| e.to_string())?;
    for src in [cf, rational] {
        if expand_expr(src, order).map_err(|e| e.to_string())? != a3 {
            return Err(format!("F(312,4321) differs from {src}"));
        }
    }
    let mut jobs = Vec::new();
    for id in ["family.M_k", "family.A_k", "family.A231_k"] {
        let entry = catalog::lookup(id).unwrap();
        jobs.extend((0..=4).map(|k| Job { entry, k: Some(k), n_max: 9 }));
    }
    let entry = catalog::lookup("family.descent_p").unwrap();
    jobs.extend((0..=3).map(|k| Job { entry, k: Some(k), n_max: 8 }));
    let suite = oracle::run_jobs(jobs, Execution::Parallel, limits);
    match suite.reports.iter().find(|r| !r.all_match()) {
        None => Ok(format!("printed M_1..M_3 and F(312,4321) reproduced; {} family checks", suite.reports.len())),
        Some(r) => Err(format!("{}: {:?} {:?}", r.label(), r.first_mismatch, r.error)),
    }
}

fn continued_fractions(limits: &Limits) -> Verdict {
    for id in ["single.312.cf", "single.231.cf"] {
        let r = oracle::verify_entry(catalog::lookup(id).unwrap(), None, 9, limits);
        if !r.all_match() {
            return Err(format!("{id}: {:?}", r.first_mismatch));
        }
    }
    for (name, cf) in [("312", cf312()), ("231", cf231())] {
        for n in 1..=12 {
            let shallow = cf.evaluate(n, n + 1).map_err(|e| e.to_string())?;
            let deep = cf.evaluate(n, n + 3).map_err(|e| e.to_string())?;
            if shallow != deep {
                return Err(format!("{name}: depth {} and {} differ at order {n}", n + 1, n + 3));
            }
        }
    }
    Ok("both fractions match brute force to n = 9 and are stable in depth".into())
}

fn transform_coherence() -> Verdict {
    let pairs = [
        ("pair.b", "pair.b'"),
        ("pair.c", "pair.c"),
        ("pair.d", "pair.d"),
        ("pair.e", "pair.e'"),
        ("pair.g", "pair.g'"),
        ("triple.c", "triple.c'"),
        ("triple.d", "triple.d'"),
        ("triple.e", "triple.e'"),
        ("triple.j", "triple.j'"),
    ];
    for (a, b) in pairs {
        let sa = catalog::expand(a, 9, None).map_err(|e| e.to_string())?;
        let sb = catalog::expand(b, 9, None).map_err(|e| e.to_string())?;
        let ta = sa.invert_transform().map_err(|e| e.to_string())?;
        let tb = sb.invert_transform().map_err(|e| e.to_string())?;
        if ta != sb || tb != sa {
            return Err(format!("{a} <-> {b}"));
        }
    }
    Ok(format!("{} pairs exchanged exactly at order 9", pairs.len()))
}

fn inequalities(limits: &Limits) -> Verdict {
    let report = oracle::check_inequalities(1, 30, limits);
    match report.checks.iter().find(|c| !c.passed()) {
        None => Ok(report
            .checks
            .iter()
            .map(|c| format!("{} ({} cases)", c.name, c.cases))
            .collect::<Vec<_>>()
            .join("; ")),
        Some(c) => Err(format!("{}: {:?}", c.name, c.example)),
    }
}

fn property_suites() -> Verdict {
    let sweeps = [
        ("ring laws", common::ring_laws()),
        ("sqrt squared", common::sqrt_square()),
        ("tunnel count", common::tunnel_count(8)),
        ("depth-0 disjointness", common::depth_zero_disjoint(8)),
        ("fp+exc+exc(inverse)", common::fp_exc_inverse(8)),
    ];
    let mut total = 0;
    for (name, s) in &sweeps {
        if !s.passed() {
            return Err(format!("{name}: {:?}", s.failures));
        }
        total += s.cases;
    }
    Ok(format!("{total} exhaustive cases across {} suites", sweeps.len()))
}

fn main() -> ExitCode {
    let limits = Limits::default();
    let started = Instant::now();
    let criteria: Vec<Criterion> = vec![
        ("class sizes", Box::new(|| class_sizes(&limits))),
        ("catalog vs oracle", Box::new(|| catalog_vs_oracle(&limits))),
        ("fixed points of 123-avoiders", Box::new(|| fixed_points_123(&limits))),
        ("bijections", Box::new(|| bijections(&limits))),
        ("families", Box::new(|| families(&limits))),
        ("continued fractions", Box::new(|| continued_fractions(&limits))),
        ("transform coherence", Box::new(transform_coherence)),
        ("inequalities", Box::new(|| inequalities(&limits))),
        ("property suites", Box::new(property_suites)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = run();
        let ms = t.elapsed().as_millis();
        match verdict {
            Ok(detail) => println!("PASS {} {name}: {detail} [{ms} ms]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
