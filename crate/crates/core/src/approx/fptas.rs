//! Scaled dynamic programs for the star objectives.
//!
//! Side-1 leg lengths `a_j = d(c1, p_j)` are rounded down to multiples of
//! `delta = epsilon * LB / (2n)`, where `LB <= OPT`. For every reachable
//! (count, scaled side-1 sum) state the program keeps the assignment that is
//! best for side 2, with exact reals carried alongside. The state matching
//! the optimum's rounded sum loses at most `n * delta <= epsilon * OPT / 2`.
//!
//! `LB` is the larger of the per-point bounds
//! `max_j min(a_j, b_j)`, `sum_j min(a_j, b_j) / 2` and half the minimum total
//! cost over feasible assignments (which is computable exactly by sorting).
//! The last term keeps `OPT / LB <= 2`, so the sum axis of the table never
//! exceeds `4n / epsilon` cells.

use super::{ApproxError, ApproxReport, Backbone};
use crate::instance::{evaluate, Assignment, Instance, Objective, Solution};

struct Legs {
    a: Vec<f64>,
    b: Vec<f64>,
}

fn legs(instance: &Instance) -> Legs {
    let a = instance.points().iter().map(|&p| instance.distance(instance.c1(), p)).collect();
    let b = instance.points().iter().map(|&p| instance.distance(instance.c2(), p)).collect();
    Legs { a, b }
}

fn check_epsilon(epsilon: f64) -> Result<(), ApproxError> {
    if epsilon.is_finite() && epsilon > 0.0 {
        Ok(())
    } else {
        Err(ApproxError::InvalidEpsilon(epsilon))
    }
}

fn point_bound(legs: &Legs) -> f64 {
    let mins = legs.a.iter().zip(&legs.b).map(|(&a, &b)| a.min(b));
    let (max, sum) = mins.fold((0.0f64, 0.0f64), |(mx, s), m| (mx.max(m), s + m));
    max.max(sum / 2.0)
}

/// One DP cell: best side-2 figure for this state plus the real side-1 sum.
#[derive(Clone, Copy)]
struct Cell {
    /// Two-star: largest side-1 total of `b`; dichotomy: smallest side-2 total.
    value: f64,
    a_real: f64,
}

fn label(instance: &Instance, assignment: Assignment, name: &str, epsilon: f64) -> ApproxReport {
    let solution = Solution {
        algorithm: name.into(),
        ..evaluate(instance, &assignment, Objective::Star).expect("DP assignments are feasible")
    };
    ApproxReport::new(solution, 1.0 + epsilon, Backbone::ScaledDp, Some(epsilon))
}

/// (1 + epsilon)-approximation for Two-Squirrel. Any pairing is ignored.
pub fn fptas_two_star(instance: &Instance, epsilon: f64) -> Result<ApproxReport, ApproxError> {
    check_epsilon(epsilon)?;
    let instance = instance.clone().without_pairs();
    let len = instance.len();
    let n = instance.n();
    let legs = legs(&instance);
    let b_total: f64 = legs.b.iter().sum();

    // Cheapest total: the n points with smallest a - b go to side 1.
    let mut order: Vec<usize> = (0..len).collect();
    order.sort_by(|&i, &j| (legs.a[i] - legs.b[i]).total_cmp(&(legs.a[j] - legs.b[j])).then(i.cmp(&j)));
    let min_sum: f64 = order[..n].iter().map(|&i| legs.a[i]).sum::<f64>() + order[n..].iter().map(|&i| legs.b[i]).sum::<f64>();
    let lb = point_bound(&legs).max(min_sum / 2.0);
    if lb <= 0.0 {
        let assignment = Assignment::from_side1(len, &order[..n]);
        return Ok(label(&instance, assignment, "fptas-star", epsilon));
    }

    let delta = epsilon * lb / (2 * n) as f64;
    let cap = (min_sum / delta).floor() as usize;
    let scaled: Vec<usize> = legs.a.iter().map(|&a| (a / delta).floor().min((cap + 1) as f64) as usize).collect();
    let width = cap + 1;
    let states = (n + 1) * width;
    let idx = |k: usize, s: usize| k * width + s;

    // layers[j] holds states after deciding items 0..j; take[j] records the choice into layer j+1.
    let mut layer: Vec<Option<Cell>> = vec![None; states];
    layer[idx(0, 0)] = Some(Cell { value: 0.0, a_real: 0.0 });
    let mut take: Vec<Vec<bool>> = Vec::with_capacity(len);
    for j in 0..len {
        let mut next: Vec<Option<Cell>> = vec![None; states];
        let mut took = vec![false; states];
        for k in 0..=n.min(j) {
            for s in 0..width {
                let Some(cell) = layer[idx(k, s)] else { continue };
                // Skip: p_j goes to side 2.
                let slot = idx(k, s);
                if better_max(cell, next[slot]) {
                    next[slot] = Some(cell);
                    took[slot] = false;
                }
                // Take: p_j goes to side 1.
                let s2 = s + scaled[j];
                if k < n && s2 < width {
                    let cand = Cell {
                        value: cell.value + legs.b[j],
                        a_real: cell.a_real + legs.a[j],
                    };
                    let slot = idx(k + 1, s2);
                    if better_max(cand, next[slot]) {
                        next[slot] = Some(cand);
                        took[slot] = true;
                    }
                }
            }
        }
        take.push(took);
        layer = next;
    }

    let mut best: Option<(f64, usize)> = None;
    for s in 0..width {
        if let Some(cell) = layer[idx(n, s)] {
            let obj = cell.a_real.max(b_total - cell.value);
            if best.is_none_or(|(b, _)| obj < b) {
                best = Some((obj, s));
            }
        }
    }
    let (_, mut s) = best.expect("the all-skip-then-take path always fits the cap");
    let mut k = n;
    let mut side1 = Vec::with_capacity(n);
    for j in (0..len).rev() {
        if take[j][idx(k, s)] {
            side1.push(j);
            k -= 1;
            s -= scaled[j];
        }
    }
    Ok(label(&instance, Assignment::from_side1(len, &side1), "fptas-star", epsilon))
}

fn better_max(cand: Cell, cur: Option<Cell>) -> bool {
    match cur {
        None => true,
        Some(c) => cand.value > c.value || (cand.value == c.value && cand.a_real < c.a_real),
    }
}

fn better_min(cand: Cell, cur: Option<Cell>) -> bool {
    match cur {
        None => true,
        Some(c) => cand.value < c.value || (cand.value == c.value && cand.a_real < c.a_real),
    }
}

/// (1 + epsilon)-approximation for Dichotomy Two-Squirrel: one orientation
/// per pair, so balance holds automatically.
pub fn fptas_dichotomy_star(instance: &Instance, epsilon: f64) -> Result<ApproxReport, ApproxError> {
    check_epsilon(epsilon)?;
    let pairs = instance.pairs().ok_or(ApproxError::PairsMissing)?.to_vec();
    let len = instance.len();
    let m = pairs.len();
    let legs = legs(instance);

    // Orientation 0 sends the first point of the pair to side 1.
    let cost = |k: usize, o: usize| {
        let (i, j) = pairs[k];
        let (one, two) = if o == 0 { (i, j) } else { (j, i) };
        (one, legs.a[one], legs.b[two])
    };
    let cheapest: Vec<usize> = (0..m)
        .map(|k| {
            let (_, a0, b0) = cost(k, 0);
            let (_, a1, b1) = cost(k, 1);
            usize::from(a1 + b1 < a0 + b0)
        })
        .collect();
    let min_sum: f64 = (0..m)
        .map(|k| {
            let (_, a, b) = cost(k, cheapest[k]);
            a + b
        })
        .sum();
    let lb = point_bound(&legs).max(min_sum / 2.0);
    if lb <= 0.0 {
        let side1: Vec<usize> = (0..m).map(|k| cost(k, cheapest[k]).0).collect();
        return Ok(label(instance, Assignment::from_side1(len, &side1), "fptas-dichotomy-star", epsilon));
    }

    let delta = epsilon * lb / (2 * m) as f64;
    let cap = (min_sum / delta).floor() as usize;
    let width = cap + 1;
    let scaled = |a: f64| (a / delta).floor().min((cap + 1) as f64) as usize;

    let mut layer: Vec<Option<Cell>> = vec![None; width];
    layer[0] = Some(Cell { value: 0.0, a_real: 0.0 });
    let mut choice: Vec<Vec<u8>> = Vec::with_capacity(m);
    for k in 0..m {
        let mut next: Vec<Option<Cell>> = vec![None; width];
        let mut chose = vec![0u8; width];
        for (s, &cell) in layer.iter().enumerate() {
            let Some(cell) = cell else { continue };
            for o in 0..2 {
                let (_, a, b) = cost(k, o);
                let s2 = s + scaled(a);
                if s2 >= width {
                    continue;
                }
                let cand = Cell {
                    value: cell.value + b,
                    a_real: cell.a_real + a,
                };
                if better_min(cand, next[s2]) {
                    next[s2] = Some(cand);
                    chose[s2] = o as u8;
                }
            }
        }
        choice.push(chose);
        layer = next;
    }

    let mut best: Option<(f64, usize)> = None;
    for (s, cell) in layer.iter().enumerate() {
        if let Some(cell) = cell {
            let obj = cell.a_real.max(cell.value);
            if best.is_none_or(|(b, _)| obj < b) {
                best = Some((obj, s));
            }
        }
    }
    let (_, mut s) = best.expect("the cheapest orientation fits the cap");
    let mut side1 = Vec::with_capacity(m);
    for k in (0..m).rev() {
        let o = choice[k][s] as usize;
        let (one, a, _) = cost(k, o);
        side1.push(one);
        s -= scaled(a);
    }
    Ok(label(instance, Assignment::from_side1(len, &side1), "fptas-dichotomy-star", epsilon))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Metric, Point};

    fn inst(points: &[(f64, f64)], c1: (f64, f64), c2: (f64, f64)) -> Instance {
        Instance::new(points.iter().map(|&p| p.into()).collect(), c1.into(), c2.into(), Metric::L2).unwrap()
    }

    #[test]
    fn symmetric_instance_within_ten_percent() {
        let i = inst(&[(-1.0, 1.0), (-1.0, -1.0), (1.0, 1.0), (1.0, -1.0)], (-1.0, 0.0), (1.0, 0.0));
        let r = fptas_two_star(&i, 0.1).unwrap();
        assert!(r.objective() <= 2.2);
        assert_eq!(r.certified_ratio, 1.1);
        assert_eq!(r.epsilon, Some(0.1));
    }

    #[test]
    fn coincident_points_are_exact() {
        let p = (3.0, 3.0);
        let i = inst(&[p, p, p, p], p, p);
        assert_eq!(fptas_two_star(&i, 0.5).unwrap().objective(), 0.0);
        let i = inst(&[(1.0, 0.0); 4], (0.0, 0.0), (0.0, 0.0));
        assert_eq!(fptas_two_star(&i, 0.5).unwrap().objective(), 2.0);
    }

    #[test]
    fn bad_epsilon() {
        let i = inst(&[(0.0, 1.0), (1.0, 0.0)], (0.0, 0.0), (1.0, 1.0));
        assert_eq!(fptas_two_star(&i, 0.0).unwrap_err(), ApproxError::InvalidEpsilon(0.0));
        assert!(fptas_two_star(&i, -1.0).is_err());
        assert!(fptas_two_star(&i, f64::NAN).is_err());
        assert_eq!(fptas_dichotomy_star(&i, 0.1).unwrap_err(), ApproxError::PairsMissing);
    }

    #[test]
    fn one_pair_is_exact() {
        let i = inst(&[(0.0, 1.0), (5.0, 0.0)], (0.0, 0.0), (4.0, 0.0))
            .with_pairs(vec![(0, 1)])
            .unwrap();
        let r = fptas_dichotomy_star(&i, 1.0).unwrap();
        assert_eq!(r.objective(), 1.0);
        assert_eq!(r.solution.assignment.labels(), vec![1, 2]);
    }

    #[test]
    fn coincident_pairs_ignore_orientation() {
        let i = inst(&[(2.0, 2.0), (2.0, 2.0), (7.0, 1.0), (7.0, 1.0)], (0.0, 0.0), (9.0, 0.0))
            .with_pairs(vec![(0, 1), (2, 3)])
            .unwrap();
        let r = fptas_dichotomy_star(&i, 0.25).unwrap();
        let d = |a: Point, b: Point| Metric::L2.distance(a, b);
        let (p, q) = (Point::new(2.0, 2.0), Point::new(7.0, 1.0));
        let (c1, c2) = (Point::new(0.0, 0.0), Point::new(9.0, 0.0));
        let expect = (d(c1, p) + d(c1, q)).max(d(c2, p) + d(c2, q));
        assert!((r.objective() - expect).abs() < 1e-12);
    }
}
