//! `avoidstat`: batch front end for the fixed-point and excedance toolkit.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification mismatch.

use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use avoidstat::bijection::{brs, brs_inv, kra, kra_inv};
use avoidstat::catalog::{self, CatalogEntry};
use avoidstat::dyck::{DyckPath, ShapeStats, TunnelStats};
use avoidstat::enumerate::{enumerate_avoiders, Limits};
use avoidstat::exec::Execution;
use avoidstat::oracle::{self, CheckReport, SuiteReport};
use avoidstat::perm::{PatternSet, Permutation, StatRecord};
use avoidstat::series::{Series, DEFAULT_ORDER};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "avoidstat", version, about = "Fixed points and excedances in pattern-avoiding permutations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Fixed points, excedances, descents and involution flag of a permutation.
    Stats {
        /// One-line notation, e.g. 6,7,4,3,5,2,8,1 or 3142.
        perm: Permutation,
    },
    /// Apply a bijection to a permutation, or its inverse to a Dyck path.
    Map(MapArgs),
    /// List the permutations of a class.
    Enumerate(ClassArgs),
    /// Joint (fp, exc) counts over a class.
    Distribution(ClassArgs),
    /// Expand a catalog entry as a power series.
    Expand {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Family parameter k.
        #[arg(long)]
        param: Option<usize>,
    },
    /// Check catalog entries and the bijections against brute force.
    Verify {
        /// Entries to check (all when omitted). Repeatable.
        #[arg(long)]
        id: Vec<String>,
        #[arg(long, default_value_t = oracle::DEFAULT_NMAX)]
        nmax: usize,
        /// Family parameter k (families default to their full checked range).
        #[arg(long)]
        param: Option<usize>,
        /// Run jobs one at a time.
        #[arg(long)]
        sequential: bool,
    },
    /// List catalog entries.
    Catalog,
    /// The derangement inequality and the Fine/Catalan bounds.
    Inequalities {
        #[arg(long, default_value_t = 1)]
        lo: usize,
        #[arg(long, default_value_t = 30)]
        hi: usize,
    },
}

#[derive(Args)]
#[group(skip)]
#[command(group = ArgGroup::new("bijection").required(true).args(["kra", "brs"]))]
struct MapArgs {
    /// The 132-avoider bijection.
    #[arg(long)]
    kra: bool,
    /// The 123-avoider bijection.
    #[arg(long)]
    brs: bool,
    /// Input is a Dyck path (U/D word); output is the permutation.
    #[arg(long)]
    inverse: bool,
    input: String,
}

#[derive(Args)]
struct ClassArgs {
    #[arg(long)]
    n: usize,
    /// Patterns separated by '/', e.g. 123/132.
    #[arg(long)]
    avoid: PatternSet,
    #[arg(long)]
    involutions: bool,
}

enum Failure {
    Domain(String),
    Mismatch(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

#[derive(Serialize)]
struct PathReport {
    path: DyckPath,
    semilength: usize,
    tunnels: TunnelStats,
    shape: ShapeStats,
}

impl PathReport {
    fn new(path: DyckPath) -> Self {
        PathReport {
            semilength: path.semilength(),
            tunnels: path.tunnel_stats(),
            shape: path.shape_stats(),
            path,
        }
    }
}

#[derive(Serialize)]
struct MapReport {
    bijection: &'static str,
    permutation: Permutation,
    statistics: StatRecord,
    image: PathReport,
}

fn run_stats(perm: &Permutation, format: Format) -> Outcome {
    let s = perm.statistics();
    Ok(match format {
        Format::Json => serde_json::to_string(&s)?,
        Format::Text => format!(
            "fp         {}\nexc        {}\ndes        {}\ninvolution {}",
            s.fp, s.exc, s.des, s.is_involution
        ),
    })
}

fn run_map(args: &MapArgs, format: Format) -> Outcome {
    let name = if args.kra { "kra" } else { "brs" };
    let (perm, path) = if args.inverse {
        let path: DyckPath = args.input.parse()?;
        let perm = if args.kra { kra_inv(&path) } else { brs_inv(&path) };
        (perm, path)
    } else {
        let perm: Permutation = args.input.parse()?;
        let path = if args.kra { kra(&perm)? } else { brs(&perm)? };
        (perm, path)
    };
    let report = MapReport {
        bijection: name,
        statistics: perm.statistics(),
        permutation: perm,
        image: PathReport::new(path),
    };
    Ok(match format {
        Format::Json => json(&report),
        Format::Text => {
            let (t, sh, st) = (report.image.tunnels, report.image.shape, report.statistics);
            let mut out = String::new();
            writeln!(out, "{name}: {} <-> {}", report.permutation, report.image.path)?;
            writeln!(out, "permutation  fp {} exc {} des {} involution {}", st.fp, st.exc, st.des, st.is_involution)?;
            writeln!(out, "tunnels      ct {} rt {} depth0 {} depth<0 {}", t.ct, t.rt, t.td0, t.tdneg)?;
            write!(
                out,
                "shape        height {} peaks {} hills {} valleys {} middle {} symmetric {}",
                sh.height, sh.peaks, sh.hills, sh.valleys, sh.height_at_middle, sh.is_symmetric
            )?;
            out
        }
    })
}

#[derive(Serialize)]
struct EnumeratedPerm {
    perm: Permutation,
    #[serde(flatten)]
    stats: StatRecord,
}

fn run_enumerate(args: &ClassArgs, format: Format, limits: &Limits) -> Result<(), Failure> {
    let perms = enumerate_avoiders(args.n, &args.avoid, args.involutions, limits)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for perm in perms {
        let line = match format {
            Format::Json => serde_json::to_string(&EnumeratedPerm {
                perm,
                stats: perm.statistics(),
            })?,
            Format::Text => perm.to_string(),
        };
        if writeln!(out, "{line}").is_err() {
            return Ok(());
        }
    }
    let _ = out.flush();
    Ok(())
}

fn run_distribution(args: &ClassArgs, format: Format, limits: &Limits) -> Outcome {
    let d = oracle::distribution(args.n, &args.avoid, args.involutions, limits)?;
    Ok(match format {
        Format::Json => json(&d),
        Format::Text => {
            let mut out = format!("{}{} n={}\n", if d.involutions_only { "I " } else { "S " }, d.sigma, d.n);
            writeln!(out, "{:>3} {:>3} {:>10}", "fp", "exc", "count")?;
            for (&(fp, exc), count) in &d.counts {
                writeln!(out, "{fp:>3} {exc:>3} {count:>10}")?;
            }
            write!(out, "total {}", d.total())?;
            out
        }
    })
}

#[derive(Serialize)]
struct Expansion<'a> {
    id: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    param: Option<usize>,
    order: usize,
    vars: catalog::Vars,
    series: &'a Series,
}

fn run_expand(id: &str, order: usize, param: Option<usize>, format: Format) -> Outcome {
    let entry = catalog::lookup(id)?;
    let series = catalog::expand_entry(entry, order, param)?;
    Ok(match format {
        Format::Json => json(&Expansion {
            id: entry.id,
            param,
            order,
            vars: entry.vars,
            series: &series,
        }),
        Format::Text => format!("{series}\n{}", series.to_table().trim_end()),
    })
}

#[derive(Serialize)]
struct VerifyOutput {
    catalog: SuiteReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    structures: Option<CheckReport>,
    all_match: bool,
}

fn run_verify(ids: &[String], nmax: usize, param: Option<usize>, sequential: bool, format: Format, limits: &Limits) -> Outcome {
    limits.check_perm(nmax)?;
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let jobs = oracle::plan(ids, param, nmax)?;
    let catalog = oracle::run_jobs(jobs, exec, limits);
    let structures = ids.is_empty().then(|| oracle::verify_structures(nmax, exec, limits));
    let all_match = catalog.all_match && structures.as_ref().is_none_or(|s| s.all_passed);
    let out = VerifyOutput {
        catalog,
        structures,
        all_match,
    };
    let text = match format {
        Format::Json => json(&out),
        Format::Text => match &out.structures {
            Some(s) => format!("{}\n\n{s}", out.catalog),
            None => out.catalog.to_string(),
        },
    };
    if all_match {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

#[derive(Serialize)]
struct CatalogListing {
    entries: &'static [CatalogEntry],
}

fn run_catalog(format: Format) -> Outcome {
    let entries = catalog::entries();
    Ok(match format {
        Format::Json => json(&CatalogListing { entries }),
        Format::Text => {
            let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(2);
            let mut out = String::new();
            for e in entries {
                let classes = if e.classes.is_empty() {
                    let (lo, hi) = e.param_range.unwrap_or((0, 0));
                    format!("k = {lo}..{hi}")
                } else {
                    e.classes.join(" ")
                };
                let vars = serde_json::to_value(e.vars)?;
                writeln!(out, "{:<width$}  {:<6}  {classes}", e.id, vars.as_str().unwrap_or(""))?;
            }
            out.trim_end().to_string()
        }
    })
}

fn run_inequalities(lo: usize, hi: usize, format: Format, limits: &Limits) -> Outcome {
    if lo > hi || lo == 0 {
        return Err(Failure::Domain(format!("need 1 <= lo <= hi, got lo={lo} hi={hi}")));
    }
    let report = oracle::check_inequalities(lo, hi, limits);
    let text = match format {
        Format::Json => json(&report),
        Format::Text => report.to_string(),
    };
    if report.all_passed {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = Limits::from_env();
    let f = cli.format;
    let text = match cli.command {
        Command::Stats { perm } => run_stats(&perm, f)?,
        Command::Map(args) => run_map(&args, f)?,
        Command::Enumerate(args) => return run_enumerate(&args, f, &limits),
        Command::Distribution(args) => run_distribution(&args, f, &limits)?,
        Command::Expand { id, order, param } => run_expand(&id, order, param, f)?,
        Command::Verify {
            id,
            nmax,
            param,
            sequential,
        } => run_verify(&id, nmax, param, sequential, f, &limits)?,
        Command::Catalog => run_catalog(f)?,
        Command::Inequalities { lo, hi } => run_inequalities(lo, hi, f, &limits)?,
    };
    emit(&text);
    Ok(())
}

/// Prints to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(report)) => {
            emit(&report);
            ExitCode::from(3)
        }
    }
}
