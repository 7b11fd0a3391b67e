//! `stiefel`: command-line front end for solving, scanning and verifying
//! invariant Einstein metrics on `V_{2p} R^n`.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use stiefel_einstein::arith::{parse_rational, BigRational};
use stiefel_einstein::curvature::{ricci_general, structure_constants_closed, MetricVector};
use stiefel_einstein::groebner::{eliminate, EliminationOrder, GroebnerConfig};
use stiefel_einstein::solver::{classify, scan_with, solve_with, verify, ScanConfig, SolutionRecord, SolveConfig};
use stiefel_einstein::Error;

#[derive(Parser)]
#[command(name = "stiefel", version, about = "Certified invariant Einstein metrics on V_{2p} R^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Certified Einstein metrics at one (n, p).
    Solve {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        /// Width of the root isolating intervals.
        #[arg(long, default_value = "1e-40")]
        width: String,
        /// Residual bound every record must beat.
        #[arg(long, default_value = "1e-30")]
        threshold: String,
        /// Pair eliminant roots instead of using the basis relations.
        #[arg(long)]
        fallback: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Solve every cell with n in a range and report counts and sign checks.
    Scan {
        /// Inclusive range such as 6..40.
        #[arg(long)]
        n_range: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Re-check records written by `solve --format json`.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "1e-30")]
        threshold: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact Ricci components at a rational metric.
    Ricci {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        /// u0,u1,u2,u3 as rationals, e.g. 1,1,3/2,1.
        #[arg(long)]
        metric: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reduced Groebner basis of the saturated ideal under a lex order.
    Groebner {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        /// z,u0,u1,u2 | z,u0,u2,u1 | z,u1,u2,u0
        #[arg(long)]
        order: String,
        #[arg(long)]
        dump_basis: bool,
        #[arg(long, default_value_t = GroebnerConfig::default().term_ceiling)]
        term_ceiling: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Exit statuses beyond 0 and the generic 1.
const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_RESOURCE: u8 = 4;

struct VerificationFailed(usize);

fn rational(flag: &str, s: &str) -> anyhow::Result<BigRational> {
    parse_rational(s).map_err(|_| Error::Invalid(format!("--{flag}: cannot parse {s:?} as a rational")).into())
}

fn positive(flag: &str, s: &str) -> anyhow::Result<BigRational> {
    let q = rational(flag, s)?;
    if q <= BigRational::from_integer(0.into()) {
        return Err(Error::Invalid(format!("--{flag} must be positive")).into());
    }
    Ok(q)
}

fn n_range(s: &str) -> anyhow::Result<(u32, u32)> {
    let bad = || Error::Invalid(format!("--n-range: expected a..b, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Solve { n, p, width, threshold, fallback, format } => {
            let cfg = SolveConfig {
                width: positive("width", &width)?,
                threshold: positive("threshold", &threshold)?,
                force_fallback: fallback,
                ..SolveConfig::default()
            };
            let rep = solve_with(n, p, &cfg)?;
            for note in &rep.notes {
                eprintln!("note: {note}");
            }
            output::records(&rep.records, format)
        }
        Command::Scan { n_range: range, format, threads } => {
            let (a, b) = n_range(&range)?;
            if threads == Some(0) {
                bail!(Error::Invalid("--threads must be at least 1".into()));
            }
            let report = scan_with(a, b, &ScanConfig { threads, ..ScanConfig::default() })?;
            output::scan(&report, format)
        }
        Command::Verify { input, threshold, format } => {
            let threshold = positive("threshold", &threshold)?;
            let text = std::fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let records = parse_records(&text)?;
            let mut failures = 0;
            let mut rows = Vec::new();
            for (i, rec) in records.iter().enumerate() {
                let outcome = verify(rec, &threshold).and_then(|rep| {
                    if classify(rec) == rec.class {
                        Ok(rep)
                    } else {
                        Err(Error::Verification(format!("class {} does not match the branch", rec.class)))
                    }
                });
                if outcome.is_err() {
                    failures += 1;
                }
                rows.push((i, rec, outcome));
            }
            output::verification(&rows, format)?;
            if failures > 0 {
                return Err(VerificationFailed(failures).into());
            }
            Ok(())
        }
        Command::Ricci { n, p, metric, format } => {
            let parts: Vec<&str> = metric.split(',').collect();
            if parts.len() != 4 {
                bail!(Error::Invalid(format!("--metric needs four entries u0,u1,u2,u3, got {}", parts.len())));
            }
            let values: Vec<BigRational> = parts.iter().map(|s| rational("metric", s)).collect::<anyhow::Result<_>>()?;
            let values: [BigRational; 4] = values.try_into().expect("four entries");
            let table = structure_constants_closed(n, p)?;
            let ric = ricci_general(&table, &table.dims, &MetricVector::numeric(values.clone())?)?;
            output::ricci(n, p, &values, &ric.values(), format)
        }
        Command::Groebner { n, p, order, dump_basis, term_ceiling, format } => {
            let order: EliminationOrder = order.parse()?;
            let cfg = GroebnerConfig { term_ceiling };
            let (gb, res) = eliminate(n, p, order, &cfg)?;
            output::groebner(&gb, &res, order, dump_basis, format)
        }
    }
}

fn parse_records(text: &str) -> anyhow::Result<Vec<SolutionRecord>> {
    if let Ok(v) = serde_json::from_str::<Vec<SolutionRecord>>(text) {
        return Ok(v);
    }
    if let Ok(r) = serde_json::from_str::<SolutionRecord>(text) {
        return Ok(vec![r]);
    }
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Invalid(format!("input is not solution records: {e}")).into()))
        .collect()
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(VerificationFailed(_)) = e.downcast_ref::<VerificationFailed>() {
        return EXIT_VERIFY;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::OutOfRange { .. } | Error::Invalid(_) | Error::Arith(_)) => EXIT_USAGE,
        Some(Error::Verification(_)) => EXIT_VERIFY,
        Some(Error::ResourceLimit { .. }) => EXIT_RESOURCE,
        _ => 1,
    }
}

impl std::fmt::Debug for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} record(s) failed verification", self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
