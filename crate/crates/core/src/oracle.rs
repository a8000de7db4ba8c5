//! Exact optima by enumerating every balanced assignment.
//!
//! Enumeration visits side-1 index subsets in lexicographic order and keeps
//! the first minimizer. Work is split into rank ranges and reduced on
//! `(objective, rank)`, so the answer does not depend on the thread count.
//! Every oracle refuses inputs above its budget instead of truncating.

use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::Point;
use crate::instance::{evaluate, Assignment, Instance, Objective, Side, Solution};
use crate::spanning::{held_karp_tsp, MstScratch};

pub const STAR_MAX_POINTS: usize = 24;
pub const DICHOTOMY_MAX_PAIRS: usize = 20;
pub const MST_DEFAULT_MAX_POINTS: usize = 16;
pub const MST_EXTENDED_MAX_POINTS: usize = 24;
pub const TSP_MAX_POINTS: usize = 14;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("{oracle} oracle budget exceeded: {size} points (limit {limit})")]
    BudgetExceeded {
        oracle: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("dichotomy oracle needs an instance with pairs")]
    PairsMissing,
}

/// Enumeration budget for [`exact_two_mst_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Budget {
    /// Up to 16 points.
    #[default]
    Default,
    /// Up to 24 points; C(24,12) MST pairs, seconds of work.
    Extended,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleResult {
    pub best: Solution,
    pub optimum: f64,
    pub enumerated: u64,
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// The `rank`-th k-subset of `0..n` in lexicographic order.
pub fn unrank_combination(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let remaining = k - slot - 1;
        loop {
            let count = binomial(n - next - 1, remaining);
            if rank < count {
                break;
            }
            rank -= count;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// Advances to the lexicographic successor; false after the last subset.
pub fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn complement(n: usize, subset: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let mut it = subset.iter().peekable();
    for i in 0..n {
        if it.peek() == Some(&&i) {
            it.next();
        } else {
            out.push(i);
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Best {
    objective: f64,
    rank: u64,
}

impl Best {
    const NONE: Best = Best {
        objective: f64::INFINITY,
        rank: u64::MAX,
    };

    fn better(self, other: Best) -> Best {
        match self.objective.total_cmp(&other.objective) {
            std::cmp::Ordering::Less => self,
            std::cmp::Ordering::Greater => other,
            std::cmp::Ordering::Equal => {
                if self.rank <= other.rank {
                    self
                } else {
                    other
                }
            }
        }
    }
}

/// Scores every n-subset of `0..2n` as side 1 (complement as side 2).
/// Returns the winning side-1 subset and the number scored.
fn enumerate_balanced<S, F>(len: usize, init: impl Fn() -> S + Sync + Send, score: F) -> (Vec<usize>, u64)
where
    F: Fn(&mut S, &[usize], &[usize]) -> f64 + Sync + Send,
{
    let k = len / 2;
    let total = binomial(len, k);
    let chunks = total.min(512);
    let best = (0..chunks)
        .into_par_iter()
        .map_init(
            || (init(), Vec::with_capacity(k)),
            |(state, rest), c| {
                let lo = total * c / chunks;
                let hi = total * (c + 1) / chunks;
                let mut comb = unrank_combination(len, k, lo);
                let mut best = Best::NONE;
                for rank in lo..hi {
                    complement(len, &comb, rest);
                    let objective = score(state, &comb, rest);
                    best = best.better(Best { objective, rank });
                    next_combination(&mut comb, len);
                }
                best
            },
        )
        .reduce(|| Best::NONE, Best::better);
    (unrank_combination(len, k, best.rank), total)
}

fn check_budget(oracle: &'static str, size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::BudgetExceeded { oracle, size, limit })
    } else {
        Ok(())
    }
}

fn finish(instance: &Instance, side1: &[usize], objective: Objective, enumerated: u64, label: &str) -> OracleResult {
    let assignment = Assignment::from_side1(instance.len(), side1);
    let best = evaluate(instance, &assignment, objective)
        .expect("enumerated assignments are balanced")
        .with_meta("enumerated", enumerated);
    let best = Solution {
        algorithm: label.to_string(),
        ..best
    };
    OracleResult {
        optimum: best.objective,
        best,
        enumerated,
    }
}

fn site_distances(instance: &Instance) -> (Vec<f64>, Vec<f64>) {
    let d1 = instance.points().iter().map(|&p| instance.distance(instance.c1(), p)).collect();
    let d2 = instance.points().iter().map(|&p| instance.distance(instance.c2(), p)).collect();
    (d1, d2)
}

/// Optimal Two-Squirrel: min over balanced assignments of the larger star.
/// Any pairing on the instance is ignored.
pub fn exact_two_star(instance: &Instance) -> Result<OracleResult, OracleError> {
    check_budget("two-star", instance.len(), STAR_MAX_POINTS)?;
    let free = instance.clone().without_pairs();
    let (d1, d2) = site_distances(&free);
    let (side1, count) = enumerate_balanced(
        free.len(),
        || (),
        |_, s1, s2| {
            let w1: f64 = s1.iter().map(|&i| d1[i]).sum();
            let w2: f64 = s2.iter().map(|&i| d2[i]).sum();
            w1.max(w2)
        },
    );
    Ok(finish(&free, &side1, Objective::Star, count, "exact-star"))
}

/// Optimal Dichotomy Two-Squirrel over the 2^n pair orientations.
///
/// Orientation mask bit k set means the second point of pair k goes to side 1.
pub fn exact_dichotomy_star(instance: &Instance) -> Result<OracleResult, OracleError> {
    let pairs = instance.pairs().ok_or(OracleError::PairsMissing)?;
    check_budget("dichotomy-star", pairs.len(), DICHOTOMY_MAX_PAIRS)?;
    let (d1, d2) = site_distances(instance);
    let m = pairs.len();
    let total = 1u64 << m;
    let best = (0..total)
        .into_par_iter()
        .map(|mask| {
            let (mut w1, mut w2) = (0.0, 0.0);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                let (a, b) = if mask >> k & 1 == 0 { (i, j) } else { (j, i) };
                w1 += d1[a];
                w2 += d2[b];
            }
            Best {
                objective: f64::max(w1, w2),
                rank: mask,
            }
        })
        .reduce(|| Best::NONE, Best::better);
    let mut side1: Vec<usize> = pairs
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| if best.rank >> k & 1 == 0 { i } else { j })
        .collect();
    side1.sort_unstable();
    Ok(finish(instance, &side1, Objective::Star, total, "exact-dichotomy-star"))
}

struct MstState {
    nodes1: Vec<Point>,
    nodes2: Vec<Point>,
    mst: MstScratch,
}

fn mst_state() -> MstState {
    MstState {
        nodes1: Vec::new(),
        nodes2: Vec::new(),
        mst: MstScratch::default(),
    }
}

fn fill(nodes: &mut Vec<Point>, site: Point, points: &[Point], idx: &[usize]) {
    nodes.clear();
    nodes.push(site);
    nodes.extend(idx.iter().map(|&i| points[i]));
}

/// Optimal Two-MST within the default budget (16 points).
pub fn exact_two_mst(instance: &Instance) -> Result<OracleResult, OracleError> {
    exact_two_mst_with(instance, Budget::Default)
}

pub fn exact_two_mst_with(instance: &Instance, budget: Budget) -> Result<OracleResult, OracleError> {
    let limit = match budget {
        Budget::Default => MST_DEFAULT_MAX_POINTS,
        Budget::Extended => MST_EXTENDED_MAX_POINTS,
    };
    check_budget("two-mst", instance.len(), limit)?;
    let free = instance.clone().without_pairs();
    let (c1, c2, metric) = (free.c1(), free.c2(), free.metric());
    let points = free.points();
    let (side1, count) = enumerate_balanced(free.len(), mst_state, |st, s1, s2| {
        fill(&mut st.nodes1, c1, points, s1);
        let w1 = st.mst.weight(&st.nodes1, metric);
        fill(&mut st.nodes2, c2, points, s2);
        let w2 = st.mst.weight(&st.nodes2, metric);
        w1.max(w2)
    });
    Ok(finish(&free, &side1, Objective::Mst, count, "exact-mst"))
}

/// Optimal Two-TSP, each side scored by an exact tour through its site.
pub fn exact_two_tsp(instance: &Instance) -> Result<OracleResult, OracleError> {
    check_budget("two-tsp", instance.len(), TSP_MAX_POINTS)?;
    let free = instance.clone().without_pairs();
    let (c1, c2, metric) = (free.c1(), free.c2(), free.metric());
    let points = free.points();
    let (side1, count) = enumerate_balanced(free.len(), mst_state, |st, s1, s2| {
        fill(&mut st.nodes1, c1, points, s1);
        fill(&mut st.nodes2, c2, points, s2);
        let (_, w1) = held_karp_tsp(&st.nodes1, metric).expect("side within exact tour limit");
        let (_, w2) = held_karp_tsp(&st.nodes2, metric).expect("side within exact tour limit");
        w1.max(w2)
    });
    Ok(finish(&free, &side1, Objective::Tsp, count, "exact-tsp"))
}

/// Side-1 index set of a solution, ascending.
pub fn side1_indices(solution: &Solution) -> Vec<usize> {
    solution.assignment.indices(Side::One)
}
