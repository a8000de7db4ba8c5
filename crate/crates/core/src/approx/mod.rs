//! Approximation algorithms with ratio certificates.
//!
//! * [`approx_two_mst`]: Kruskal last-edge split, else a deterministic balanced
//!   split; within [`MST_RATIO`] of optimal.
//! * [`approx_two_tsp`]: doubled trees on a balanced split, else one backbone
//!   tour over every node cut into two at the n-th point.
//! * [`fptas_two_star`] / [`fptas_dichotomy_star`]: scaled dynamic programs,
//!   within `1 + epsilon`.

mod fptas;
mod mst;
mod tsp;

pub use fptas::{fptas_dichotomy_star, fptas_two_star};
pub use mst::approx_two_mst;
pub use tsp::{approx_two_tsp, TourBackbone};

use std::fmt;

use thiserror::Error;

use crate::instance::{Instance, Solution};

/// Chung-Graham Steiner-ratio inflation, 1/0.82416874.
pub const STEINER_BOUND: f64 = 1.0 / 0.824_168_74;

/// Certified factor of [`approx_two_mst`]: 3 x 1.2134.
pub const MST_RATIO: f64 = 3.6402;

/// Certified factor of [`approx_two_tsp`] with an exact backbone tour.
pub const TSP_EXACT_RATIO: f64 = 4.0;

/// Factor carried by the doubled-MST backbone: twice the exact-backbone chain.
pub const TSP_HEURISTIC_RATIO: f64 = 8.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ApproxError {
    #[error("epsilon must be a positive finite number, got {0}")]
    InvalidEpsilon(f64),
    #[error("dichotomy variant needs an instance with pairs")]
    PairsMissing,
    #[error("exact backbone tour limited to {limit} nodes, instance has {nodes}")]
    BackboneTooLarge { limit: usize, nodes: usize },
}

/// Which branch of an algorithm produced the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backbone {
    /// Kruskal's last edge separated the sites into two trees of n+1 nodes.
    BalancedKruskalSplit,
    /// Deterministic balanced split followed by per-side MSTs.
    FallbackSplit,
    /// Backbone tour walked clockwise (reverse of stored order) from c1.
    TourCutCw,
    /// Backbone tour walked counterclockwise (stored order) from c1.
    TourCutCcw,
    /// Scaled-and-rounded dynamic program.
    ScaledDp,
}

impl Backbone {
    pub fn as_str(self) -> &'static str {
        match self {
            Backbone::BalancedKruskalSplit => "balanced-Kruskal-split",
            Backbone::FallbackSplit => "fallback-split",
            Backbone::TourCutCw => "tour-cut-CW",
            Backbone::TourCutCcw => "tour-cut-CCW",
            Backbone::ScaledDp => "scaled-dp",
        }
    }
}

impl fmt::Display for Backbone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxReport {
    pub solution: Solution,
    pub certified_ratio: f64,
    pub backbone: Backbone,
    pub epsilon: Option<f64>,
}

impl ApproxReport {
    fn new(solution: Solution, certified_ratio: f64, backbone: Backbone, epsilon: Option<f64>) -> Self {
        let mut solution = solution
            .with_meta("certified_ratio", certified_ratio)
            .with_meta("backbone", backbone.as_str());
        if let Some(e) = epsilon {
            solution = solution.with_meta("epsilon", e);
        }
        ApproxReport {
            solution,
            certified_ratio,
            backbone,
            epsilon,
        }
    }

    pub fn objective(&self) -> f64 {
        self.solution.objective
    }
}

/// Sorts point indices by `d(c1,p) - d(c2,p)`, then index, and returns the
/// first half: the points relatively closest to c1.
pub(crate) fn closer_to_c1_half(instance: &Instance) -> Vec<usize> {
    let key = |i: usize| {
        let p = instance.point(i);
        instance.distance(instance.c1(), p) - instance.distance(instance.c2(), p)
    };
    let mut idx: Vec<usize> = (0..instance.len()).collect();
    idx.sort_by(|&a, &b| key(a).total_cmp(&key(b)).then(a.cmp(&b)));
    idx.truncate(instance.n());
    idx.sort_unstable();
    idx
}

/// The components of Kruskal's last edge over `P ∪ {c1, c2}`, when they put
/// the sites apart with n+1 nodes each. Returns side-1 point indices.
pub(crate) fn balanced_kruskal_split(
    instance: &Instance,
    trace: &crate::spanning::KruskalTrace,
) -> Option<Vec<usize>> {
    let (c1, c2) = (instance.len(), instance.len() + 1);
    let (a, b) = &trace.components;
    let (with_c1, with_c2) = if a.contains(&c1) { (a, b) } else { (b, a) };
    if with_c1.contains(&c2) || !with_c2.contains(&c2) {
        return None;
    }
    if with_c1.len() != instance.n() + 1 || with_c2.len() != instance.n() + 1 {
        return None;
    }
    Some(with_c1.iter().copied().filter(|&v| v < instance.len()).collect())
}

/// Maps a node of `P ∪ {c1, c2}` to a structure index; either site becomes `-1`.
pub(crate) fn node_ref(instance: &Instance, v: usize) -> i64 {
    if v >= instance.len() {
        crate::instance::SITE
    } else {
        v as i64
    }
}
