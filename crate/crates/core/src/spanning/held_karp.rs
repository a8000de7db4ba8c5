use super::SpanningError;
use crate::geometry::{distance, Metric, Point};

/// Largest node count accepted by [`held_karp_tsp`].
pub const MAX_HELD_KARP_NODES: usize = 18;

/// Exact minimum-weight Hamiltonian cycle by subset dynamic programming.
///
/// The tour starts at node 0. Two nodes give the out-and-back cycle.
pub fn held_karp_tsp(nodes: &[Point], metric: Metric) -> Result<(Vec<usize>, f64), SpanningError> {
    let m = nodes.len();
    if m < 2 {
        return Err(SpanningError::TooFewNodes { required: 2, got: m });
    }
    if m > MAX_HELD_KARP_NODES {
        return Err(SpanningError::TooManyNodes {
            limit: MAX_HELD_KARP_NODES,
            got: m,
        });
    }
    if m == 2 {
        return Ok((vec![0, 1], 2.0 * distance(nodes[0], nodes[1], metric)));
    }

    // Node k (1..m) is bit k-1; dp[mask * k + j] is the cheapest path from 0
    // through exactly `mask`, ending at node j+1.
    let k = m - 1;
    let full = (1usize << k) - 1;
    let dist: Vec<f64> = (0..m * m)
        .map(|i| distance(nodes[i / m], nodes[i % m], metric))
        .collect();
    let d = |a: usize, b: usize| dist[a * m + b];

    let mut dp = vec![f64::INFINITY; (full + 1) * k];
    let mut parent = vec![u8::MAX; (full + 1) * k];
    for j in 0..k {
        dp[(1 << j) * k + j] = d(0, j + 1);
    }
    for mask in 1..=full {
        for j in 0..k {
            if mask & (1 << j) == 0 {
                continue;
            }
            let cur = dp[mask * k + j];
            if !cur.is_finite() {
                continue;
            }
            let rest = full & !mask;
            let mut bits = rest;
            while bits != 0 {
                let nxt = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let nmask = mask | (1 << nxt);
                let cand = cur + d(j + 1, nxt + 1);
                let slot = nmask * k + nxt;
                if cand < dp[slot] {
                    dp[slot] = cand;
                    parent[slot] = j as u8;
                }
            }
        }
    }

    let mut best = f64::INFINITY;
    let mut end = 0;
    for j in 0..k {
        let cand = dp[full * k + j] + d(j + 1, 0);
        if cand < best {
            best = cand;
            end = j;
        }
    }

    let mut order = Vec::with_capacity(m);
    let mut mask = full;
    let mut j = end;
    loop {
        order.push(j + 1);
        let p = parent[mask * k + j];
        mask &= !(1 << j);
        if p == u8::MAX {
            break;
        }
        j = p as usize;
    }
    order.push(0);
    order.reverse();
    Ok((order, best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spanning::tour::tour_weight;

    fn pts(raw: &[(f64, f64)]) -> Vec<Point> {
        raw.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn triangle_is_its_perimeter() {
        let nodes = pts(&[(0.0, 0.0), (3.0, 0.0), (0.0, 4.0)]);
        let (order, w) = held_karp_tsp(&nodes, Metric::L2).unwrap();
        assert_eq!(w, 12.0);
        assert_eq!(order.len(), 3);
    }

    #[test]
    fn square_follows_hull() {
        let nodes = pts(&[(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)]);
        let (order, w) = held_karp_tsp(&nodes, Metric::L2).unwrap();
        assert!((w - 4.0).abs() < 1e-12);
        assert_eq!(order[0], 0);
        assert!((tour_weight(&nodes, &order, Metric::L2) - w).abs() < 1e-12);
    }

    #[test]
    fn size_limits() {
        let many: Vec<Point> = (0..19).map(|i| Point::new(i as f64, 0.0)).collect();
        assert!(matches!(
            held_karp_tsp(&many, Metric::L2),
            Err(SpanningError::TooManyNodes { limit: 18, got: 19 })
        ));
        assert!(held_karp_tsp(&many[..1], Metric::L2).is_err());
        let (order, w) = held_karp_tsp(&many[..2], Metric::L1).unwrap();
        assert_eq!((order, w), (vec![0, 1], 2.0));
    }
}
