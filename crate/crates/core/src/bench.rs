//! Ratio campaigns: approximation objective over oracle optimum on seeded
//! instance families, with CSV output and per-algorithm summaries.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::approx::{
    approx_two_mst, approx_two_tsp, fptas_dichotomy_star, fptas_two_star, ApproxReport, TourBackbone,
};
use crate::geometry::Metric;
use crate::instance::{random_instance, random_pairing, Instance, InstanceKind, Objective};
use crate::oracle::{exact_dichotomy_star, exact_two_mst, exact_two_star, exact_two_tsp, OracleResult};

pub const CSV_HEADER: &str = "id,family,n,metric,algorithm,approx,opt,ratio,backbone,seconds";

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("no records to summarize")]
    Empty,
    #[error("campaign needs at least one family, size, seed, metric and algorithm")]
    EmptyConfig,
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    ApproxMst,
    ApproxTsp,
    ApproxTspHeuristic,
    FptasStar,
    FptasDichotomy,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::ApproxMst,
        Algorithm::ApproxTsp,
        Algorithm::ApproxTspHeuristic,
        Algorithm::FptasStar,
        Algorithm::FptasDichotomy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::ApproxMst => "approx-mst",
            Algorithm::ApproxTsp => "approx-tsp",
            Algorithm::ApproxTspHeuristic => "approx-tsp-heuristic",
            Algorithm::FptasStar => "fptas-star",
            Algorithm::FptasDichotomy => "fptas-dichotomy",
        }
    }

    pub fn objective(self) -> Objective {
        match self {
            Algorithm::ApproxMst => Objective::Mst,
            Algorithm::ApproxTsp | Algorithm::ApproxTspHeuristic => Objective::Tsp,
            Algorithm::FptasStar | Algorithm::FptasDichotomy => Objective::Star,
        }
    }

    fn run(self, instance: &Instance, epsilon: f64) -> Result<ApproxReport, String> {
        let r = match self {
            Algorithm::ApproxMst => Ok(approx_two_mst(instance)),
            Algorithm::ApproxTsp => approx_two_tsp(instance, TourBackbone::Exact),
            Algorithm::ApproxTspHeuristic => approx_two_tsp(instance, TourBackbone::Heuristic),
            Algorithm::FptasStar => fptas_two_star(instance, epsilon),
            Algorithm::FptasDichotomy => fptas_dichotomy_star(instance, epsilon),
        };
        r.map_err(|e| e.to_string())
    }

    fn oracle(self, instance: &Instance) -> Result<OracleResult, String> {
        let r = match self {
            Algorithm::ApproxMst => exact_two_mst(instance),
            Algorithm::ApproxTsp | Algorithm::ApproxTspHeuristic => exact_two_tsp(instance),
            Algorithm::FptasStar => exact_two_star(instance),
            Algorithm::FptasDichotomy => exact_dichotomy_star(instance),
        };
        r.map_err(|e| e.to_string())
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| format!("unknown algorithm '{s}'"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CampaignConfig {
    pub families: Vec<InstanceKind>,
    /// Values of n; instances have 2n points.
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub metrics: Vec<Metric>,
    pub algorithms: Vec<Algorithm>,
    pub epsilon: f64,
    /// Fill the `seconds` column; off keeps the CSV byte-reproducible.
    pub record_timing: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            families: vec![InstanceKind::UniformSquare],
            sizes: vec![4],
            seeds: (0..10).collect(),
            metrics: vec![Metric::L2],
            algorithms: vec![Algorithm::ApproxMst],
            epsilon: 0.1,
            record_timing: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioRecord {
    pub id: usize,
    pub family: InstanceKind,
    pub n: usize,
    pub seed: u64,
    pub metric: Metric,
    pub algorithm: Algorithm,
    pub approx: f64,
    pub opt: f64,
    pub ratio: f64,
    pub certified_ratio: f64,
    pub backbone: String,
    pub seconds: f64,
}

/// A cell that could not be measured, e.g. over an oracle budget.
#[derive(Clone, Debug, PartialEq)]
pub struct CellFailure {
    pub id: usize,
    pub algorithm: Algorithm,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Campaign {
    pub records: Vec<RatioRecord>,
    pub failures: Vec<CellFailure>,
}

struct Cell {
    id: usize,
    family: InstanceKind,
    n: usize,
    seed: u64,
    metric: Metric,
}

fn ratio_of(approx: f64, opt: f64) -> f64 {
    if opt > 0.0 {
        approx / opt
    } else if approx <= 0.0 {
        1.0
    } else {
        f64::INFINITY
    }
}

fn measure(cell: &Cell, config: &CampaignConfig) -> Vec<Result<RatioRecord, CellFailure>> {
    let base = random_instance(cell.n, cell.family, cell.seed, cell.metric);
    let paired = random_pairing(&base, cell.seed);
    config
        .algorithms
        .iter()
        .map(|&algorithm| {
            let fail = |message: String| CellFailure {
                id: cell.id,
                algorithm,
                message,
            };
            let instance = if algorithm == Algorithm::FptasDichotomy { &paired } else { &base };
            let opt = algorithm.oracle(instance).map_err(fail)?.optimum;
            let start = Instant::now();
            let report = algorithm.run(instance, config.epsilon).map_err(fail)?;
            let seconds = if config.record_timing { start.elapsed().as_secs_f64() } else { 0.0 };
            Ok(RatioRecord {
                id: cell.id,
                family: cell.family,
                n: cell.n,
                seed: cell.seed,
                metric: cell.metric,
                algorithm,
                approx: report.objective(),
                opt,
                ratio: ratio_of(report.objective(), opt),
                certified_ratio: report.certified_ratio,
                backbone: report.backbone.to_string(),
                seconds,
            })
        })
        .collect()
}

/// Runs every algorithm on every (family, n, metric, seed) instance.
/// Instance ids follow that nesting order; records come back sorted by
/// (id, algorithm order in the config).
pub fn run_campaign(config: &CampaignConfig) -> Result<Campaign, BenchError> {
    if config.families.is_empty()
        || config.sizes.is_empty()
        || config.seeds.is_empty()
        || config.metrics.is_empty()
        || config.algorithms.is_empty()
    {
        return Err(BenchError::EmptyConfig);
    }
    let mut cells = Vec::new();
    for &family in &config.families {
        for &n in &config.sizes {
            for &metric in &config.metrics {
                for &seed in &config.seeds {
                    cells.push(Cell {
                        id: cells.len(),
                        family,
                        n,
                        seed,
                        metric,
                    });
                }
            }
        }
    }
    let results: Vec<Vec<_>> = cells.par_iter().map(|c| measure(c, config)).collect();
    let mut campaign = Campaign::default();
    for r in results.into_iter().flatten() {
        match r {
            Ok(rec) => campaign.records.push(rec),
            Err(f) => campaign.failures.push(f),
        }
    }
    Ok(campaign)
}

/// `%.12g`-style rendering: 12 significant digits, trailing zeros dropped.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: String| {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    if (-5..12).contains(&exp) {
        trim(format!("{:.*}", (11 - exp).max(0) as usize, x))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim(mantissa.to_string()), sign, exp.abs())
    }
}

pub fn write_csv<W: Write>(records: &[RatioRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.id,
            r.family,
            r.n,
            r.metric,
            r.algorithm,
            format_sig(r.approx),
            format_sig(r.opt),
            format_sig(r.ratio),
            r.backbone,
            format_sig(r.seconds)
        )?;
    }
    Ok(())
}

pub fn csv_string(records: &[RatioRecord]) -> String {
    let mut buf = Vec::new();
    write_csv(records, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub algorithm: String,
    pub max: f64,
    pub mean: f64,
    /// Nearest-rank 95th percentile.
    pub p95: f64,
    pub count: usize,
}

/// Per-algorithm ratio statistics, ordered by algorithm name.
pub fn summarize(records: &[RatioRecord]) -> Result<Vec<Summary>, BenchError> {
    if records.is_empty() {
        return Err(BenchError::Empty);
    }
    let mut groups: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
    for r in records {
        groups.entry(r.algorithm.as_str()).or_default().push(r.ratio);
    }
    Ok(groups
        .into_iter()
        .map(|(name, mut ratios)| {
            ratios.sort_by(f64::total_cmp);
            let count = ratios.len();
            let rank = (0.95 * count as f64).ceil() as usize;
            Summary {
                algorithm: name.to_string(),
                max: ratios[count - 1],
                mean: ratios.iter().sum::<f64>() / count as f64,
                p95: ratios[rank.clamp(1, count) - 1],
                count,
            }
        })
        .collect())
}

pub fn write_summary<W: Write>(summaries: &[Summary], mut out: W) -> io::Result<()> {
    writeln!(out, "algorithm,max,mean,p95,count")?;
    for s in summaries {
        writeln!(
            out,
            "{},{},{},{},{}",
            s.algorithm,
            format_sig(s.max),
            format_sig(s.mean),
            format_sig(s.p95),
            s.count
        )?;
    }
    Ok(())
}
