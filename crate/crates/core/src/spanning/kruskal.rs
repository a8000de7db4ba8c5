use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::union_find::DisjointSet;
use super::SpanningError;
use crate::geometry::{distance, Metric, Point};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

impl WeightedEdge {
    /// Sort key: weight, then smaller endpoint, then larger endpoint.
    fn order(&self, other: &Self) -> Ordering {
        self.w
            .total_cmp(&other.w)
            .then_with(|| self.u.min(self.v).cmp(&other.u.min(other.v)))
            .then_with(|| self.u.max(self.v).cmp(&other.u.max(other.v)))
    }
}

/// Everything Kruskal's algorithm produced, including the final insertion.
#[derive(Clone, Debug, PartialEq)]
pub struct KruskalTrace {
    /// Tree edges in insertion order.
    pub edges: Vec<WeightedEdge>,
    /// The last edge inserted; it joins `components.0` and `components.1`.
    pub last_edge: WeightedEdge,
    /// Node sets of the two trees joined by `last_edge`, each sorted ascending.
    /// `components.0` holds `last_edge.u`.
    pub components: (Vec<usize>, Vec<usize>),
}

impl KruskalTrace {
    pub fn weight(&self) -> f64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    /// Tree edges whose endpoints both lie in `component`.
    pub fn edges_within(&self, component: &[usize]) -> Vec<WeightedEdge> {
        self.edges
            .iter()
            .filter(|e| component.binary_search(&e.u).is_ok() && component.binary_search(&e.v).is_ok())
            .copied()
            .collect()
    }
}

/// All pairwise edges sorted by the deterministic tie-breaking order.
pub fn sorted_edges(nodes: &[Point], metric: Metric) -> Vec<WeightedEdge> {
    let m = nodes.len();
    let mut edges = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for u in 0..m {
        for v in (u + 1)..m {
            edges.push(WeightedEdge {
                u,
                v,
                w: distance(nodes[u], nodes[v], metric),
            });
        }
    }
    edges.sort_by(|a, b| a.order(b));
    edges
}

pub fn kruskal_mst(nodes: &[Point], metric: Metric) -> Result<KruskalTrace, SpanningError> {
    let m = nodes.len();
    if m < 2 {
        return Err(SpanningError::TooFewNodes { required: 2, got: m });
    }
    let mut ds = DisjointSet::new(m);
    let mut tree = Vec::with_capacity(m - 1);
    for e in sorted_edges(nodes, metric) {
        if ds.union(e.u, e.v) {
            tree.push(e);
            if tree.len() == m - 1 {
                break;
            }
        }
    }
    let last_edge = *tree.last().expect("at least one edge for two or more nodes");
    let components = split_at_last(m, &tree);
    Ok(KruskalTrace {
        edges: tree,
        last_edge,
        components,
    })
}

/// Components left after deleting the final edge from the tree.
fn split_at_last(m: usize, tree: &[WeightedEdge]) -> (Vec<usize>, Vec<usize>) {
    let (body, last) = tree.split_at(tree.len() - 1);
    let mut ds = DisjointSet::new(m);
    for e in body {
        ds.union(e.u, e.v);
    }
    let root = ds.find(last[0].u);
    let (mut first, mut second) = (Vec::new(), Vec::new());
    for x in 0..m {
        if ds.find(x) == root {
            first.push(x);
        } else {
            second.push(x);
        }
    }
    (first, second)
}

/// Reusable buffers for repeated dense Prim runs.
#[derive(Default, Debug)]
pub struct MstScratch {
    best: Vec<f64>,
    done: Vec<bool>,
}

impl MstScratch {
    /// Weight of a minimum spanning tree, O(m^2). Zero for a single node.
    pub fn weight(&mut self, nodes: &[Point], metric: Metric) -> f64 {
        let m = nodes.len();
        if m <= 1 {
            return 0.0;
        }
        self.best.clear();
        self.best.resize(m, f64::INFINITY);
        self.done.clear();
        self.done.resize(m, false);
        self.done[0] = true;
        for v in 1..m {
            self.best[v] = distance(nodes[0], nodes[v], metric);
        }
        let mut total = 0.0;
        for _ in 1..m {
            let mut pick = usize::MAX;
            let mut pick_w = f64::INFINITY;
            for v in 1..m {
                if !self.done[v] && self.best[v] < pick_w {
                    pick = v;
                    pick_w = self.best[v];
                }
            }
            self.done[pick] = true;
            total += pick_w;
            let p = nodes[pick];
            for (v, &q) in nodes.iter().enumerate().skip(1) {
                if !self.done[v] {
                    let d = distance(p, q, metric);
                    if d < self.best[v] {
                        self.best[v] = d;
                    }
                }
            }
        }
        total
    }
}

/// MST weight via dense Prim; equals `kruskal_mst(..).weight()`.
pub fn mst_weight(nodes: &[Point], metric: Metric) -> Result<f64, SpanningError> {
    if nodes.is_empty() {
        return Err(SpanningError::TooFewNodes { required: 1, got: 0 });
    }
    Ok(MstScratch::default().weight(nodes, metric))
}

/// Edges of an MST as index pairs; empty for a single node.
pub fn mst_edges(nodes: &[Point], metric: Metric) -> Vec<WeightedEdge> {
    match kruskal_mst(nodes, metric) {
        Ok(trace) => trace.edges,
        Err(_) => Vec::new(),
    }
}
