//! Command-line front end. Exit codes: 0 success, 1 I/O or parse failure,
//! 2 usage or precondition failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use crate::approx::{approx_two_mst, approx_two_tsp, fptas_dichotomy_star, fptas_two_star, TourBackbone};
use crate::axis::{solve_axis_l1, solve_axis_l2, solve_line};
use crate::bench::{run_campaign, summarize, write_csv, write_summary, Algorithm, CampaignConfig};
use crate::geometry::Metric;
use crate::hardness::{build_gadget, parse_multiset, verify_gadget};
use crate::instance::{
    instance_to_json, parse_instance_document, parse_solution, random_instance, random_pairing, solution_to_json,
    InstanceKind, Objective, Solution,
};
use crate::oracle::{exact_dichotomy_star, exact_two_mst_with, exact_two_star, exact_two_tsp, Budget};
use crate::render::render_svg;

#[derive(Debug, Parser)]
#[command(name = "twosquirrel", version, about = "Balanced two-center covering: stars, trees and tours")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance and write a solution document.
    Solve(SolveArgs),
    /// Generate a seeded random instance.
    Gen(GenArgs),
    /// Build the set-partition gadget for a multiset of rationals.
    Gadget(GadgetArgs),
    /// Measure approximation ratios against exact optima.
    Bench(BenchArgs),
    /// Draw an instance, and optionally a solution, as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub problem: Objective,
    #[arg(long)]
    pub algo: String,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long, default_value = "exact")]
    pub backbone: TourBackbone,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Let the 2-MST oracle enumerate up to 24 points.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value = "uniform-square")]
    pub kind: InstanceKind,
    /// Half the number of points.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "l2")]
    pub metric: Metric,
    /// Also emit a random pairing of the points.
    #[arg(long)]
    pub pairs: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GadgetArgs {
    /// Comma-separated positive rationals, e.g. "1,3/2,0.5".
    #[arg(long)]
    pub set: String,
    /// Solve the gadget exactly and add the verdict to the meta block.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "uniform-square")]
    pub families: Vec<InstanceKind>,
    /// Values of n (instances have 2n points).
    #[arg(long, value_delimiter = ',', default_value = "4")]
    pub sizes: Vec<usize>,
    /// Number of seeds per cell.
    #[arg(long, default_value_t = 10)]
    pub seeds: u64,
    #[arg(long, default_value_t = 0)]
    pub seed_start: u64,
    #[arg(long, value_delimiter = ',', default_value = "l2")]
    pub metrics: Vec<Metric>,
    #[arg(long, value_delimiter = ',', default_value = "approx-mst")]
    pub algorithms: Vec<Algorithm>,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    /// Fill the seconds column.
    #[arg(long)]
    pub timing: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Write the per-algorithm summary here instead of standard error.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub solution: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Precondition(_) => 2,
            CliError::Io { .. } | CliError::Parse { .. } => 1,
        }
    }
}

fn precondition(e: impl ToString) -> CliError {
    CliError::Precondition(e.to_string())
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn emit(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        }),
        None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io {
            path: "<stdout>".into(),
            message: e.to_string(),
        }),
    }
}

fn solve(args: &SolveArgs) -> Result<Solution, CliError> {
    let bytes = read(&args.input)?;
    let (instance, _) = parse_instance_document(&bytes).map_err(|e| CliError::Parse {
        path: args.input.display().to_string(),
        message: e.to_string(),
    })?;
    let paired = instance.pairs().is_some();
    let bad = || {
        CliError::Usage(format!(
            "algorithm '{}' is not available for problem '{}'",
            args.algo, args.problem
        ))
    };
    let solution = match (args.problem, args.algo.as_str()) {
        (Objective::Star, "exact") if paired => exact_dichotomy_star(&instance).map_err(precondition)?.best,
        (Objective::Star, "exact") => exact_two_star(&instance).map_err(precondition)?.best,
        (Objective::Star, "fptas") => {
            let eps = args
                .epsilon
                .ok_or_else(|| CliError::Usage("--algo fptas needs --epsilon".into()))?;
            let report = if paired {
                fptas_dichotomy_star(&instance, eps)
            } else {
                fptas_two_star(&instance, eps)
            };
            report.map_err(precondition)?.solution
        }
        (Objective::Mst, "exact") => {
            let budget = if args.allow_large { Budget::Extended } else { Budget::Default };
            exact_two_mst_with(&instance, budget).map_err(precondition)?.best
        }
        (Objective::Mst, "approx") => approx_two_mst(&instance).solution,
        (Objective::Mst, "line") => solve_line(&instance).map_err(precondition)?,
        (Objective::Mst, "axis-l1") => solve_axis_l1(&instance).map_err(precondition)?,
        (Objective::Mst, "axis-l2") => solve_axis_l2(&instance).map_err(precondition)?,
        (Objective::Tsp, "exact") => exact_two_tsp(&instance).map_err(precondition)?.best,
        (Objective::Tsp, "approx") => approx_two_tsp(&instance, args.backbone).map_err(precondition)?.solution,
        _ => return Err(bad()),
    };
    Ok(solution)
}

fn gen(args: &GenArgs) -> Result<String, CliError> {
    if args.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let mut instance = random_instance(args.n, args.kind, args.seed, args.metric);
    if args.pairs {
        instance = random_pairing(&instance, args.seed);
    }
    let meta = json!({"kind": args.kind.as_str(), "n": args.n, "seed": args.seed});
    Ok(instance_to_json(&instance, Some(meta)))
}

fn gadget(args: &GadgetArgs) -> Result<String, CliError> {
    let values = parse_multiset(&args.set).map_err(precondition)?;
    let spec = build_gadget(&values).map_err(precondition)?;
    let mut meta = spec.meta();
    if args.verify {
        let report = verify_gadget(&spec, Budget::Extended).map_err(precondition)?;
        let names = |v: &[num_rational::BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        meta["verification"] = json!({
            "opt": report.opt,
            "gap": report.gap,
            "is_yes": report.is_yes,
            "meets_canonical": report.meets_canonical,
            "witness": [names(&report.witness.0), names(&report.witness.1)],
            "witness_balanced": report.witness_balanced,
            "splits_tail": report.splits_tail,
        });
    }
    Ok(instance_to_json(&spec.instance(), Some(meta)))
}

fn bench(args: &BenchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    if !(args.epsilon.is_finite() && args.epsilon > 0.0) {
        return Err(CliError::Usage(format!("--epsilon must be positive, got {}", args.epsilon)));
    }
    if args.sizes.contains(&0) {
        return Err(CliError::Usage("--sizes entries must be at least 1".into()));
    }
    let config = CampaignConfig {
        families: args.families.clone(),
        sizes: args.sizes.clone(),
        seeds: (args.seed_start..args.seed_start + args.seeds).collect(),
        metrics: args.metrics.clone(),
        algorithms: args.algorithms.clone(),
        epsilon: args.epsilon,
        record_timing: args.timing,
    };
    let campaign = run_campaign(&config).map_err(|e| CliError::Usage(e.to_string()))?;
    for f in &campaign.failures {
        let _ = writeln!(stderr, "instance {} {}: {}", f.id, f.algorithm, f.message);
    }
    let mut csv = Vec::new();
    write_csv(&campaign.records, &mut csv).expect("writing to memory");
    emit(args.output.as_deref(), &String::from_utf8(csv).expect("ascii"), stdout)?;
    if let Ok(summary) = summarize(&campaign.records) {
        let mut text = Vec::new();
        write_summary(&summary, &mut text).expect("writing to memory");
        let text = String::from_utf8(text).expect("ascii");
        match &args.summary {
            Some(p) => emit(Some(p), &text, stdout)?,
            None => {
                let _ = stderr.write_all(text.as_bytes());
            }
        }
    }
    Ok(())
}

fn render(args: &RenderArgs) -> Result<String, CliError> {
    let bytes = read(&args.input)?;
    let parse_err = |path: &Path, e: &dyn ToString| CliError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let (instance, _) = parse_instance_document(&bytes).map_err(|e| parse_err(&args.input, &e))?;
    let solution = match &args.solution {
        Some(path) => {
            let doc = parse_solution(&read(path)?).map_err(|e| parse_err(path, &e))?;
            Some(doc.to_solution().map_err(|e| parse_err(path, &e))?)
        }
        None => None,
    };
    render_svg(&instance, solution.as_ref()).map_err(precondition)
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve(a) => {
            let solution = solve(a)?;
            emit(a.output.as_deref(), &solution_to_json(&solution), stdout)
        }
        Command::Gen(a) => emit(a.output.as_deref(), &gen(a)?, stdout),
        Command::Gadget(a) => emit(a.output.as_deref(), &gadget(a)?, stdout),
        Command::Bench(a) => bench(a, stdout, stderr),
        Command::Render(a) => emit(a.output.as_deref(), &render(a)?, stdout),
    }
}

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("twosquirrel").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn unknown_flag_is_a_usage_error() {
        assert_eq!(run_args(&["gen", "--n", "2", "--bogus"]).0, 2);
        assert_eq!(run_args(&[]).0, 2);
    }

    #[test]
    fn gadget_odd_set() {
        let (code, _, err) = run_args(&["gadget", "--set", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("even"));
    }

    #[test]
    fn gadget_meta_target() {
        let (code, out, _) = run_args(&["gadget", "--set", "1,1"]);
        assert_eq!(code, 0);
        let doc: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["points"].as_array().unwrap().len(), 14);
        assert_eq!(doc["meta"]["target"], 14.0);
    }

    #[test]
    fn missing_input_is_io() {
        let (code, _, err) = run_args(&["solve", "--problem", "mst", "--algo", "approx", "--input", "/nonexistent/x.json"]);
        assert_eq!(code, 1);
        assert!(err.contains("/nonexistent/x.json"));
    }
}
