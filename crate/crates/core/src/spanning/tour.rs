//! Tours: weight of a closed walk, tree doubling with shortcutting, and a
//! nearest-neighbour + 2-opt heuristic for sides too large for Held-Karp.

use super::SpanningError;
use crate::geometry::{distance, Metric, Point};

/// Weight of the closed tour visiting `order` and returning to its start.
///
/// A two-node tour traverses its single edge twice; a one-node tour weighs 0.
pub fn tour_weight(nodes: &[Point], order: &[usize], metric: Metric) -> f64 {
    match order.len() {
        0 | 1 => 0.0,
        len => (0..len)
            .map(|i| distance(nodes[order[i]], nodes[order[(i + 1) % len]], metric))
            .sum(),
    }
}

/// Preorder walk of the doubled tree from `start`, visiting children in
/// ascending index, keeping the first occurrence of each node.
pub fn double_and_shortcut(
    nodes: &[Point],
    edges: &[(usize, usize)],
    start: usize,
) -> Result<Vec<usize>, SpanningError> {
    let m = nodes.len();
    if start >= m {
        return Err(SpanningError::NodeOutOfRange { index: start, len: m });
    }
    let mut adj = vec![Vec::new(); m];
    for &(u, v) in edges {
        if u >= m || v >= m {
            return Err(SpanningError::NodeOutOfRange { index: u.max(v), len: m });
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut seen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        if seen[u] {
            continue;
        }
        seen[u] = true;
        order.push(u);
        for &v in adj[u].iter().rev() {
            if !seen[v] {
                stack.push(v);
            }
        }
    }
    if order.len() != m {
        return Err(SpanningError::Disconnected {
            reached: order.len(),
            total: m,
        });
    }
    Ok(order)
}

/// Nearest-neighbour tour from `start`, then 2-opt until no improving move.
pub fn nearest_neighbor_two_opt(nodes: &[Point], start: usize, metric: Metric) -> Vec<usize> {
    let m = nodes.len();
    if m == 0 {
        return Vec::new();
    }
    let mut used = vec![false; m];
    let mut order = Vec::with_capacity(m);
    let mut cur = start;
    used[cur] = true;
    order.push(cur);
    for _ in 1..m {
        let mut next = usize::MAX;
        let mut best = f64::INFINITY;
        for v in 0..m {
            if !used[v] {
                let d = distance(nodes[cur], nodes[v], metric);
                if d < best {
                    best = d;
                    next = v;
                }
            }
        }
        used[next] = true;
        order.push(next);
        cur = next;
    }
    two_opt(nodes, &mut order, metric);
    order
}

/// First-improvement 2-opt; position 0 stays fixed.
fn two_opt(nodes: &[Point], order: &mut [usize], metric: Metric) {
    let m = order.len();
    if m < 4 {
        return;
    }
    let d = |a: usize, b: usize| distance(nodes[a], nodes[b], metric);
    let mut improved = true;
    while improved {
        improved = false;
        for i in 0..m - 2 {
            for j in (i + 2)..m {
                if i == 0 && j == m - 1 {
                    continue;
                }
                let (a, b) = (order[i], order[i + 1]);
                let (c, e) = (order[j], order[(j + 1) % m]);
                let delta = d(a, c) + d(b, e) - d(a, b) - d(c, e);
                if delta < -1e-12 {
                    order[i + 1..=j].reverse();
                    improved = true;
                }
            }
        }
    }
}
