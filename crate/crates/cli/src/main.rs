use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use greedy_mis::chordal::{clique_tree, is_chordal, leafage_small, DEFAULT_LEAFAGE_LIMIT};
use greedy_mis::families::{generate, Family};
use greedy_mis::greedy::DEFAULT_EXHAUSTIVE_LIMIT;
use greedy_mis::mis::{mis_exact, MisResult, DEFAULT_EXACT_LIMIT};
use greedy_mis_cli::instance::Instance;
use greedy_mis_cli::report::{run, PolicyTag, RunOptions};
use greedy_mis_cli::sweep::{sweep, write_csv, SweepOptions};
use greedy_mis_cli::verify::{verify, Suite, VerifyOptions};
use greedy_mis_cli::{to_json, CliError, ExitKind, SCHEMA_VERSION};
use serde::Serialize;

/// Minimum-degree greedy for maximum independent set: instance
/// generation, exact solving, adversarial runs and verification suites.
///
/// Exit status: 0 success, 1 a check failed, 2 usage or input error,
/// 3 an instance exceeds a size limit.
#[derive(Parser)]
#[command(name = "greedy-mis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family instance to a directory.
    Generate {
        /// interval-tight, chordal-tight, permutation, two-track,
        /// random-interval or random-chordal.
        family: String,
        /// `k` for structured families, the vertex count for random ones.
        #[arg(required_unless_present = "n")]
        parameter: Option<usize>,
        /// Vertex count for random families, in place of the parameter.
        #[arg(long, conflicts_with = "parameter")]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output directory; defaults to `<family>-<parameter>`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run greedy on an instance and report the ledger and checks.
    Run {
        /// Instance directory or edge-list file.
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "first_label")]
        policy: PolicyTag,
        /// Seed for the seeded_random policy.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest vertex count for exhaustive search.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        limit: usize,
        /// Largest vertex count for the exact solver on non-chordal graphs.
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        exact_limit: usize,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve maximum independent set exactly.
    Solve {
        /// Instance directory or edge-list file.
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        /// Largest random graph size.
        #[arg(long, default_value_t = 14)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        limit: usize,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        exact_limit: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate greedy against the optimum over a parameter range as CSV.
    Sweep {
        family: String,
        #[arg(long)]
        kmin: Option<usize>,
        #[arg(long)]
        kmax: usize,
        /// scripted or adversarial.
        #[arg(long, value_enum, default_value = "scripted")]
        policy: PolicyTag,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Seeds per size for random families; the worst ratio is kept.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        limit: usize,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        exact_limit: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct SolveReport {
    schema_version: u32,
    n: usize,
    m: usize,
    chordal: bool,
    optimum: MisResult,
    clique_tree: Option<greedy_mis::chordal::TreeDecomposition>,
    leafage: Option<usize>,
}

fn parse_family(tag: &str) -> Result<Family, CliError> {
    tag.parse().map_err(|e: greedy_mis::Error| CliError::usage(e.to_string()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn warn_limit(limit: usize, default: usize) {
    if limit > default {
        eprintln!("warning: limit {limit} exceeds the default {default}; search may take very long");
    }
}

fn execute(cli: Cli) -> Result<ExitKind, CliError> {
    match cli.command {
        Command::Generate { family, parameter, n, seed, out } => {
            let family = parse_family(&family)?;
            let parameter = parameter.or(n).expect("clap requires one of them");
            let inst = generate(family, parameter, seed)?;
            let dir = out.unwrap_or_else(|| PathBuf::from(format!("{family}-{parameter}")));
            for path in Instance::from_family(&inst).write(&dir)? {
                println!("{}", path.display());
            }
            Ok(ExitKind::Success)
        }
        Command::Run { instance, policy, seed, limit, exact_limit, out } => {
            warn_limit(limit, DEFAULT_EXHAUSTIVE_LIMIT);
            let inst = Instance::load(&instance)?;
            let report = run(&inst, RunOptions { policy, seed, limit, exact_limit })?;
            emit(out.as_deref(), &to_json(&report))?;
            for c in report.checks.iter().filter(|c| !c.passed) {
                eprintln!("check failed: {}: {}", c.name, c.detail);
            }
            Ok(if report.passed { ExitKind::Success } else { ExitKind::CheckFailed })
        }
        Command::Solve { instance, limit, out } => {
            warn_limit(limit, DEFAULT_EXACT_LIMIT);
            let inst = Instance::load(&instance)?;
            let g = &inst.graph;
            let chordal = is_chordal(g);
            let leafage = if chordal && !g.is_empty() && g.is_connected() {
                leafage_small(g, DEFAULT_LEAFAGE_LIMIT).ok()
            } else {
                None
            };
            let report = SolveReport {
                schema_version: SCHEMA_VERSION,
                n: g.n_labels(),
                m: g.edge_count(),
                chordal,
                optimum: mis_exact(g, limit)?,
                clique_tree: if chordal { Some(clique_tree(g)?) } else { None },
                leafage,
            };
            emit(out.as_deref(), &to_json(&report))?;
            Ok(ExitKind::Success)
        }
        Command::Verify { suite, kmax, n, trials, seed, limit, exact_limit, out } => {
            warn_limit(limit, DEFAULT_EXHAUSTIVE_LIMIT);
            let report = verify(suite, VerifyOptions { kmax, n, trials, seed, limit, exact_limit });
            for c in &report.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                eprintln!("{status} {}/{}: {} cases, {} failed", c.suite, c.name, c.cases, c.failed);
                for f in &c.failures {
                    eprintln!("    {f}");
                }
            }
            emit(out.as_deref(), &to_json(&report))?;
            Ok(if report.passed { ExitKind::Success } else { ExitKind::CheckFailed })
        }
        Command::Sweep { family, kmin, kmax, policy, seed, trials, limit, exact_limit, out } => {
            warn_limit(limit, DEFAULT_EXHAUSTIVE_LIMIT);
            let family = parse_family(&family)?;
            let opts = SweepOptions {
                family,
                kmin: kmin.unwrap_or(family.min_parameter()),
                kmax,
                policy,
                seed,
                trials,
                limit,
                exact_limit,
            };
            let rows = sweep(&opts)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            emit(out.as_deref(), std::str::from_utf8(&buf).expect("csv output is utf-8"))?;
            Ok(ExitKind::Success)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(kind) => ExitCode::from(kind as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.kind as u8)
        }
    }
}
