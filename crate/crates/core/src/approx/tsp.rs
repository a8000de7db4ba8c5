use std::str::FromStr;

use super::{
    balanced_kruskal_split, node_ref, ApproxError, ApproxReport, Backbone, TSP_EXACT_RATIO, TSP_HEURISTIC_RATIO,
};
use crate::geometry::Point;
use crate::instance::{Assignment, Instance, Solution, Structure, SITE};
use crate::spanning::{double_and_shortcut, held_karp_tsp, kruskal_mst, KruskalTrace, MAX_HELD_KARP_NODES};

/// How the single tour over every node is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TourBackbone {
    /// Held-Karp; at most 18 nodes including both sites.
    Exact,
    /// Doubled and shortcut MST; any size, no 4x certificate.
    Heuristic,
}

impl TourBackbone {
    pub fn as_str(self) -> &'static str {
        match self {
            TourBackbone::Exact => "exact",
            TourBackbone::Heuristic => "heuristic",
        }
    }

    fn ratio(self) -> f64 {
        match self {
            TourBackbone::Exact => TSP_EXACT_RATIO,
            TourBackbone::Heuristic => TSP_HEURISTIC_RATIO,
        }
    }
}

impl FromStr for TourBackbone {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(TourBackbone::Exact),
            "heuristic" => Ok(TourBackbone::Heuristic),
            other => Err(format!("unknown backbone '{other}' (expected exact or heuristic)")),
        }
    }
}

/// Doubled-and-shortcut tour of one Kruskal component, starting at its site.
fn component_tour(instance: &Instance, nodes: &[Point], trace: &KruskalTrace, comp: &[usize], site: usize) -> Vec<i64> {
    let local_of = |v: usize| comp.binary_search(&v).expect("edge endpoint inside component");
    let local_nodes: Vec<Point> = comp.iter().map(|&v| nodes[v]).collect();
    let edges: Vec<(usize, usize)> = trace
        .edges_within(comp)
        .iter()
        .map(|e| (local_of(e.u), local_of(e.v)))
        .collect();
    let order = double_and_shortcut(&local_nodes, &edges, local_of(site)).expect("component is a tree");
    order.into_iter().map(|l| node_ref(instance, comp[l])).collect()
}

/// Rotates a cyclic order so that `first` leads.
fn rotate_to(order: &mut [i64], first: i64) {
    if let Some(pos) = order.iter().position(|&v| v == first) {
        order.rotate_left(pos);
    }
}

/// Two-TSP approximation.
///
/// With a balanced Kruskal split, each tree is doubled into a tour. Otherwise
/// a backbone tour over `P ∪ {c1, c2}` is walked from c1 until the n-th point
/// `q` is reached without passing c2 (stored orientation first, then the
/// reverse). Side 1 is the walked arc closed by `(q, c1)`; side 2 is the
/// complementary arc, which holds c2 and the other n points.
pub fn approx_two_tsp(instance: &Instance, backbone: TourBackbone) -> Result<ApproxReport, ApproxError> {
    let instance = instance.clone().without_pairs();
    let len = instance.len();
    let nodes = instance.all_nodes();
    if backbone == TourBackbone::Exact && nodes.len() > MAX_HELD_KARP_NODES {
        return Err(ApproxError::BackboneTooLarge {
            limit: MAX_HELD_KARP_NODES,
            nodes: nodes.len(),
        });
    }
    let (c1, c2) = (len, len + 1);
    let trace = kruskal_mst(&nodes, instance.metric()).expect("at least four nodes");
    let label = format!("approx-tsp-{}", backbone.as_str());

    if let Some(side1) = balanced_kruskal_split(&instance, &trace) {
        let (comp1, comp2) = if trace.components.0.contains(&c1) {
            (&trace.components.0, &trace.components.1)
        } else {
            (&trace.components.1, &trace.components.0)
        };
        let t1 = component_tour(&instance, &nodes, &trace, comp1, c1);
        let t2 = component_tour(&instance, &nodes, &trace, comp2, c2);
        let solution = Solution::from_structures(
            &instance,
            Assignment::from_side1(len, &side1),
            Structure::Tour(t1),
            Structure::Tour(t2),
            label,
        )
        .with_meta("tour_backbone", backbone.as_str());
        return Ok(ApproxReport::new(
            solution,
            backbone.ratio(),
            Backbone::BalancedKruskalSplit,
            None,
        ));
    }

    let mut order = match backbone {
        TourBackbone::Exact => held_karp_tsp(&nodes, instance.metric()).expect("size checked").0,
        TourBackbone::Heuristic => {
            let edges: Vec<(usize, usize)> = trace.edges.iter().map(|e| (e.u, e.v)).collect();
            double_and_shortcut(&nodes, &edges, c1).expect("MST is connected")
        }
    };
    let pos = order.iter().position(|&v| v == c1).expect("c1 on tour");
    order.rotate_left(pos);

    let ccw: Vec<usize> = order[1..].to_vec();
    let cw: Vec<usize> = order[1..].iter().rev().copied().collect();
    let n = instance.n();
    let (walk, tag) = [(ccw, Backbone::TourCutCcw), (cw, Backbone::TourCutCw)]
        .into_iter()
        .find(|(walk, _)| {
            let c2_at = walk.iter().position(|&v| v == c2).expect("c2 on tour");
            walk[..c2_at].len() >= n
        })
        .expect("one direction reaches n points before c2");

    // walk = [q_1 .. q_n, rest...]; c2 is not among the first n entries.
    let side1: Vec<usize> = walk[..n].to_vec();
    let mut t1: Vec<i64> = vec![SITE];
    t1.extend(side1.iter().map(|&v| v as i64));
    let mut t2: Vec<i64> = walk[n..].iter().map(|&v| node_ref(&instance, v)).collect();
    rotate_to(&mut t2, SITE);

    let solution = Solution::from_structures(
        &instance,
        Assignment::from_side1(len, &side1),
        Structure::Tour(t1),
        Structure::Tour(t2),
        label,
    )
    .with_meta("tour_backbone", backbone.as_str());
    Ok(ApproxReport::new(solution, backbone.ratio(), tag, None))
}
