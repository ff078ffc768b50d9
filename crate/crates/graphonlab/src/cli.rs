//! Command-line interface.
//!
//! Four subcommands front the library: `density` (homomorphism
//! density, exact or Monte Carlo), `edgedist` (surviving-edge
//! distribution, exact or empirical), `verify` (the constancy decision
//! procedure plus the density-identity chain, printed as JSON), and
//! `sample` (one random graph in the text format).
//!
//! Exit codes: 0 success; 1 unparseable input or usage error; 2
//! enumeration budget exceeded; 3 well-formed input violating an
//! invariant; and for `verify`, 4 when the edge counts are not
//! binomial, 5 when the template has no 4-cycle, 6 when the report
//! raises the (supposedly impossible) contradiction flag.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::catalog;
use crate::edgedist::edge_count_pmf_exact_with_limit;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::graphon::StepGraphon;
use crate::homomorphism::{t_exact_with_limit, t_monte_carlo};
use crate::pmf::EdgeCountPMF;
use crate::sampler::{empirical_edge_pmf, sample_graph};
use crate::scalar::Scalar;
use crate::verifier::{
    lemma_chain_replay_with_limit, theorem_probe_with_limit, Verdict, VerifierReport,
};
use crate::{DEFAULT_EVAL_LIMIT, DEFAULT_FLOAT_TOL};

#[derive(Parser)]
#[command(
    name = "graphonlab",
    version,
    about = "Exact and Monte Carlo computations on step graphons"
)]
struct Cli {
    /// Worker threads for parallel enumeration and sampling (default:
    /// all cores).
    #[arg(long, global = true, env = "GRAPHONLAB_THREADS", value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homomorphism density of a template in a graphon.
    Density(DensityArgs),
    /// Distribution of the surviving-edge count of random subgraphs.
    Edgedist(EdgedistArgs),
    /// Probe whether the sampling behaviour forces a constant graphon.
    Verify(VerifyArgs),
    /// Draw one random graph from the graphon.
    Sample(SampleArgs),
}

/// Template-plus-graphon input shared by most subcommands: either a
/// template file and a graphon file, or `--builtin NAME` and just the
/// graphon file.
#[derive(Args)]
struct CommonInputs {
    /// Named template instead of a template file: P1..P5, S2..S5,
    /// C3..C6, K2..K6, or mxP1:<k> for a k-edge matching.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// Template file (omitted under --builtin), then the graphon file.
    #[arg(value_name = "FILE", required = true)]
    files: Vec<PathBuf>,
}

impl CommonInputs {
    fn resolve(&self) -> Result<(SimpleGraph, StepGraphon)> {
        match (&self.builtin, self.files.as_slice()) {
            (Some(name), [graphon]) => Ok((catalog::builtin(name)?, load_graphon(graphon)?)),
            (Some(_), _) => Err(Error::Parse(
                "with --builtin, give exactly one file: the graphon".into(),
            )),
            (None, [graph, graphon]) => Ok((load_graph(graph)?, load_graphon(graphon)?)),
            (None, _) => Err(Error::Parse(
                "expected two files: the template, then the graphon".into(),
            )),
        }
    }
}

/// Guardrail controls for the exact enumerations.
#[derive(Args)]
struct BudgetFlags {
    /// Cap on assignment evaluations for exact computations.
    #[arg(long, value_name = "N")]
    limit: Option<u128>,
    /// Remove the assignment-evaluation cap entirely.
    #[arg(long)]
    force: bool,
}

impl BudgetFlags {
    fn effective(&self) -> Option<u128> {
        if self.force {
            None
        } else {
            Some(self.limit.unwrap_or(DEFAULT_EVAL_LIMIT))
        }
    }
}

#[derive(Args)]
struct DensityArgs {
    #[command(flatten)]
    inputs: CommonInputs,
    /// Estimate by Monte Carlo with this many samples instead of exact
    /// enumeration.
    #[arg(long, value_name = "SAMPLES", value_parser = clap::value_parser!(u64).range(1..))]
    mc: Option<u64>,
    /// RNG seed for --mc.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print decimals (17 significant digits) instead of exact
    /// fractions.
    #[arg(long)]
    float: bool,
    #[command(flatten)]
    budget: BudgetFlags,
}

#[derive(Args)]
struct EdgedistArgs {
    #[command(flatten)]
    inputs: CommonInputs,
    /// Estimate the distribution empirically with this many sampling
    /// trials instead of exact enumeration.
    #[arg(long, value_name = "TRIALS", value_parser = clap::value_parser!(u64).range(1..))]
    empirical: Option<u64>,
    /// RNG seed for --empirical.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print decimals (17 significant digits) instead of exact
    /// fractions.
    #[arg(long)]
    float: bool,
    #[command(flatten)]
    budget: BudgetFlags,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    inputs: CommonInputs,
    /// Reference success probability (integer, a/b, or decimal);
    /// defaults to the graphon's edge density.
    #[arg(long, value_name = "P", value_parser = parse_scalar)]
    p: Option<Scalar>,
    /// Comparison tolerance on the floating-point path.
    #[arg(long, default_value_t = DEFAULT_FLOAT_TOL)]
    tol: f64,
    #[command(flatten)]
    budget: BudgetFlags,
}

#[derive(Args)]
struct SampleArgs {
    /// Number of vertices.
    #[arg(value_name = "N")]
    n: usize,
    /// Graphon file.
    #[arg(value_name = "GRAPHON")]
    graphon: PathBuf,
    /// RNG seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_scalar(text: &str) -> std::result::Result<Scalar, String> {
    text.parse::<Scalar>().map_err(|e| e.to_string())
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_graphon(path: &Path) -> Result<StepGraphon> {
    StepGraphon::from_json(&read_file(path)?)
}

fn load_graph(path: &Path) -> Result<SimpleGraph> {
    read_file(path)?.parse()
}

/// Exact values print as fractions unless decimals are forced; any
/// floating value prints with 17 significant digits, which round-trips
/// `f64` exactly.
fn fmt_scalar(value: &Scalar, force_float: bool) -> String {
    if force_float || !value.is_exact() {
        format!("{:.16e}", value.to_f64())
    } else {
        value.to_string()
    }
}

fn fmt_pmf(pmf: &EdgeCountPMF, force_float: bool) -> String {
    let entries: Vec<String> = pmf
        .mass()
        .iter()
        .map(|p| fmt_scalar(p, force_float))
        .collect();
    format!("[{}]", entries.join(", "))
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::TooLarge { .. } => 2,
        Error::Parse(_) | Error::Io { .. } => 1,
        _ => 3,
    }
}

fn verdict_exit(report: &VerifierReport) -> u8 {
    if report.contradiction {
        return 6;
    }
    match report.verdict {
        Verdict::ConstantGraphon | Verdict::ConsistentWithTheorem => 0,
        Verdict::NonbinomialEdgeCounts => 4,
        Verdict::NoC4Precondition => 5,
    }
}

/// Parses arguments from the environment, runs one command, and
/// returns the process exit code.
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    if let Some(threads) = cli.threads {
        // Fails only if a pool was already installed, in which case the
        // existing pool is as good as any.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_for(&err)
        }
    }
}

fn dispatch(command: Command) -> Result<u8> {
    match command {
        Command::Density(args) => {
            let (graph, graphon) = args.inputs.resolve()?;
            match args.mc {
                Some(samples) => {
                    let est = t_monte_carlo(&graph, &graphon, samples, args.seed);
                    println!(
                        "{:.16e} ± {:.16e} ({} samples)",
                        est.mean, est.stderr, est.samples
                    );
                }
                None => {
                    let t = t_exact_with_limit(&graph, &graphon, args.budget.effective())?;
                    println!("{}", fmt_scalar(&t, args.float));
                }
            }
            Ok(0)
        }
        Command::Edgedist(args) => {
            let (graph, graphon) = args.inputs.resolve()?;
            let pmf = match args.empirical {
                Some(trials) => empirical_edge_pmf(&graph, &graphon, trials, args.seed).empirical,
                None => edge_count_pmf_exact_with_limit(&graph, &graphon, args.budget.effective())?,
            };
            println!("{}", fmt_pmf(&pmf, args.float));
            Ok(0)
        }
        Command::Verify(args) => {
            let (graph, graphon) = args.inputs.resolve()?;
            let limit = args.budget.effective();
            let mut report =
                theorem_probe_with_limit(&graph, &graphon, args.p.as_ref(), args.tol, limit)?;
            let hypothesis_held = report
                .checks
                .iter()
                .any(|c| c.name == "edge_count_tv" && c.pass);
            if hypothesis_held {
                let chain = lemma_chain_replay_with_limit(
                    &graph,
                    &graphon,
                    args.p.as_ref(),
                    args.tol,
                    limit,
                )?;
                report.contradiction = report.contradiction || chain.contradiction;
                report.checks.extend(chain.checks);
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            Ok(verdict_exit(&report))
        }
        Command::Sample(args) => {
            let graphon = load_graphon(&args.graphon)?;
            print!("{}", sample_graph(args.n, &graphon, args.seed));
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument_configuration_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn input_resolution_checks_file_counts() {
        let builtin_two_files = CommonInputs {
            builtin: Some("C4".into()),
            files: vec!["a".into(), "b".into()],
        };
        assert!(matches!(builtin_two_files.resolve(), Err(Error::Parse(_))));
        let one_file = CommonInputs { builtin: None, files: vec!["a".into()] };
        assert!(matches!(one_file.resolve(), Err(Error::Parse(_))));
        let missing = CommonInputs {
            builtin: Some("C4".into()),
            files: vec!["/nonexistent/w.json".into()],
        };
        assert!(matches!(missing.resolve(), Err(Error::Io { .. })));
    }

    #[test]
    fn budget_resolution() {
        let default = BudgetFlags { limit: None, force: false };
        assert_eq!(default.effective(), Some(DEFAULT_EVAL_LIMIT));
        let capped = BudgetFlags { limit: Some(10), force: false };
        assert_eq!(capped.effective(), Some(10));
        let forced = BudgetFlags { limit: Some(10), force: true };
        assert_eq!(forced.effective(), None);
    }

    #[test]
    fn scalar_formatting_policy() {
        assert_eq!(fmt_scalar(&Scalar::ratio(1, 8), false), "1/8");
        assert_eq!(fmt_scalar(&Scalar::ratio(1, 8), true), "1.2500000000000000e-1");
        assert_eq!(fmt_scalar(&Scalar::float(0.125), false), "1.2500000000000000e-1");
    }

    #[test]
    fn exit_codes_by_error_class() {
        assert_eq!(exit_for(&Error::Parse("x".into())), 1);
        assert_eq!(
            exit_for(&Error::Io { path: "p".into(), message: "m".into() }),
            1
        );
        assert_eq!(exit_for(&Error::TooLarge { cost: 2, limit: 1 }), 2);
        assert_eq!(exit_for(&Error::NotASubset), 3);
        assert_eq!(
            exit_for(&Error::HypothesisViolated("irregular".into())),
            3
        );
    }
}
