use rayon::prelude::*;

use super::{require_metric, AxisError, HalfAxis, HalfAxisView};
use crate::geometry::{Metric, Point};
use crate::instance::{evaluate, Assignment, Instance, Objective, Side, Solution};
use crate::spanning::MstScratch;

/// Cuts on one half-axis list: a cut at `k` separates list positions `k-1`
/// and `k`. Runs alternate labels starting from `start` at the origin end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxisCuts {
    pub cuts: Vec<usize>,
    pub start: Side,
}

impl AxisCuts {
    pub fn labels(&self, len: usize) -> Vec<Side> {
        let mut side = self.start;
        let mut next = self.cuts.iter().peekable();
        (0..len)
            .map(|k| {
                if next.peek() == Some(&&k) {
                    next.next();
                    side = side.other();
                }
                side
            })
            .collect()
    }

    /// Label string with one letter per run, A for side 1.
    pub fn runs(&self, len: usize) -> String {
        if len == 0 {
            return String::new();
        }
        let mut side = self.start;
        let mut s = String::new();
        for _ in 0..=self.cuts.len() {
            s.push(if side == Side::One { 'A' } else { 'B' });
            side = side.other();
        }
        s
    }
}

/// One [`AxisCuts`] per half-axis, in [`HalfAxis::ALL`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutPattern {
    pub axes: [AxisCuts; 4],
}

impl CutPattern {
    pub fn assignment(&self, view: &HalfAxisView) -> Assignment {
        let mut sides = vec![Side::One; view.radius.len()];
        for (cuts, list) in self.axes.iter().zip(&view.lists) {
            for (&i, s) in list.iter().zip(cuts.labels(list.len())) {
                sides[i] = s;
            }
        }
        Assignment::new(sides)
    }

    /// E.g. `+X:AB -X: +Y:A -Y:B`.
    pub fn describe(&self, view: &HalfAxisView) -> String {
        HalfAxis::ALL
            .iter()
            .map(|&a| format!("{}:{}", a, self.axes[a.index()].runs(view.list(a).len())))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

struct AxisOption {
    cuts: AxisCuts,
    labels: Vec<Side>,
    ones: usize,
}

/// Every cut set of at most `max_cuts` cuts over `len` positions with both
/// starting labels, ordered by cut count, then cuts, then start.
fn axis_options(len: usize, max_cuts: usize) -> Vec<AxisOption> {
    let mut out = Vec::new();
    let mut push = |cuts: Vec<usize>| {
        for start in [Side::One, Side::Two] {
            let cuts = AxisCuts { cuts: cuts.clone(), start };
            let labels = cuts.labels(len);
            let ones = labels.iter().filter(|&&s| s == Side::One).count();
            out.push(AxisOption { cuts, labels, ones });
        }
    };
    if len == 0 {
        push(Vec::new());
        out.truncate(1);
        return out;
    }
    for c in 0..=max_cuts.min(len - 1) {
        let mut cuts: Vec<usize> = (1..=c).collect();
        loop {
            push(cuts.clone());
            // Next c-subset of 1..len in lexicographic order.
            let Some(k) = (0..c).rev().find(|&k| cuts[k] < len - c + k) else { break };
            cuts[k] += 1;
            for j in k + 1..c {
                cuts[j] = cuts[j - 1] + 1;
            }
        }
    }
    out
}

struct Search<'a> {
    instance: &'a Instance,
    view: &'a HalfAxisView,
    options: [Vec<AxisOption>; 4],
}

#[derive(Clone, Copy)]
struct Best {
    objective: f64,
    pick: [usize; 4],
}

struct Scratch {
    mst: MstScratch,
    nodes1: Vec<Point>,
    nodes2: Vec<Point>,
}

impl Search<'_> {
    fn score(&self, pick: [usize; 4], scratch: &mut Scratch) -> f64 {
        scratch.nodes1.clear();
        scratch.nodes2.clear();
        scratch.nodes1.push(self.instance.c1());
        scratch.nodes2.push(self.instance.c2());
        for (a, &o) in pick.iter().enumerate() {
            for (&i, &s) in self.view.lists[a].iter().zip(&self.options[a][o].labels) {
                let p = self.instance.point(i);
                match s {
                    Side::One => scratch.nodes1.push(p),
                    Side::Two => scratch.nodes2.push(p),
                }
            }
        }
        let metric = self.instance.metric();
        let w1 = scratch.mst.weight(&scratch.nodes1, metric);
        let w2 = scratch.mst.weight(&scratch.nodes2, metric);
        w1.max(w2)
    }

    /// First minimizer in lexicographic option order plus the number of
    /// balanced candidates scored.
    fn run(&self) -> (Option<Best>, u64) {
        let n = self.instance.n();
        let [o0, o1, o2, o3] = &self.options;
        let (lo3, hi3) = o3.iter().fold((usize::MAX, 0), |(lo, hi), o| (lo.min(o.ones), hi.max(o.ones)));
        let outer: Vec<(usize, usize)> = (0..o0.len()).flat_map(|a| (0..o1.len()).map(move |b| (a, b))).collect();
        let fresh = || Scratch {
            mst: MstScratch::default(),
            nodes1: Vec::new(),
            nodes2: Vec::new(),
        };
        outer
            .par_iter()
            .map_init(fresh, |scratch, &(a, b)| {
                let mut best: Option<Best> = None;
                let mut count = 0u64;
                let head = o0[a].ones + o1[b].ones;
                for (c, oc) in o2.iter().enumerate() {
                    let partial = head + oc.ones;
                    if partial + lo3 > n || partial + hi3 < n {
                        continue;
                    }
                    for (d, od) in o3.iter().enumerate() {
                        if partial + od.ones != n {
                            continue;
                        }
                        count += 1;
                        let pick = [a, b, c, d];
                        let objective = self.score(pick, scratch);
                        if best.is_none_or(|b| objective < b.objective) {
                            best = Some(Best { objective, pick });
                        }
                    }
                }
                (best, count)
            })
            .reduce(
                || (None, 0),
                |(x, cx), (y, cy)| {
                    let best = match (x, y) {
                        (Some(x), Some(y)) => {
                            let keep_x = x.objective < y.objective || (x.objective == y.objective && x.pick < y.pick);
                            Some(if keep_x { x } else { y })
                        }
                        (x, None) => x,
                        (None, y) => y,
                    };
                    (best, cx + cy)
                },
            )
    }
}

fn solve(instance: &Instance, max_cuts: [usize; 4], name: &str) -> Result<Solution, AxisError> {
    let instance = instance.clone().without_pairs();
    let view = HalfAxisView::new(&instance)?;
    let options = HalfAxis::ALL.map(|a| axis_options(view.list(a).len(), max_cuts[a.index()]));
    let patterns = options.iter().fold(1u64, |acc, o| acc.saturating_mul(o.len() as u64));
    let search = Search {
        instance: &instance,
        view: &view,
        options,
    };
    let (best, candidates) = search.run();
    let best = best.expect("some pattern is balanced");
    let pattern = CutPattern {
        axes: HalfAxis::ALL.map(|a| search.options[a.index()][best.pick[a.index()]].cuts.clone()),
    };
    let assignment = pattern.assignment(&view);
    let solution = evaluate(&instance, &assignment, Objective::Mst).expect("candidates are balanced");
    Ok(Solution {
        algorithm: name.into(),
        ..solution
    }
    .with_meta("candidates", candidates)
    .with_meta("patterns", patterns)
    .with_meta("pattern", pattern.describe(&view)))
}

/// Exact 2-MST under L1 with every node on an axis: at most one cut per
/// half-axis, both labellings.
pub fn solve_axis_l1(instance: &Instance) -> Result<Solution, AxisError> {
    require_metric(instance, Metric::L1)?;
    solve(instance, [1; 4], "axis-l1")
}

/// Exact 2-MST under L2 with every node on an axis: at most three cuts per
/// half-axis, plus one more on a half-axis holding both sites.
pub fn solve_axis_l2(instance: &Instance) -> Result<Solution, AxisError> {
    require_metric(instance, Metric::L2)?;
    let view = HalfAxisView::new(instance)?;
    let max_cuts = HalfAxis::ALL.map(|a| if view.sites[a.index()].len() == 2 { 4 } else { 3 });
    solve(instance, max_cuts, "axis-l2")
}
