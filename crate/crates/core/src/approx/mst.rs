use super::{balanced_kruskal_split, closer_to_c1_half, node_ref, ApproxReport, Backbone, MST_RATIO};
use crate::instance::{evaluate, Assignment, Instance, Objective, Solution, Structure};
use crate::spanning::kruskal_mst;

/// Two-MST approximation.
///
/// Runs Kruskal on all points plus both sites. If the last inserted edge
/// separates c1 from c2 into two trees of n+1 nodes, those trees are
/// returned as-is: the cheapest balanced pair in total weight, though not
/// always in the larger of the two. Otherwise the points are split by
/// `d(c1,p) - d(c2,p)` and each half gets an MST with its site.
pub fn approx_two_mst(instance: &Instance) -> ApproxReport {
    let instance = instance.clone().without_pairs();
    let nodes = instance.all_nodes();
    let trace = kruskal_mst(&nodes, instance.metric()).expect("at least four nodes");

    if let Some(side1) = balanced_kruskal_split(&instance, &trace) {
        let assignment = Assignment::from_side1(instance.len(), &side1);
        let (comp1, comp2) = if trace.components.0.contains(&instance.len()) {
            (&trace.components.0, &trace.components.1)
        } else {
            (&trace.components.1, &trace.components.0)
        };
        let structure = |comp: &[usize]| {
            Structure::Edges(
                trace
                    .edges_within(comp)
                    .iter()
                    .map(|e| (node_ref(&instance, e.u), node_ref(&instance, e.v)))
                    .collect(),
            )
        };
        let solution = Solution::from_structures(
            &instance,
            assignment,
            structure(comp1),
            structure(comp2),
            "approx-mst",
        );
        return ApproxReport::new(solution, MST_RATIO, Backbone::BalancedKruskalSplit, None);
    }

    let assignment = Assignment::from_side1(instance.len(), &closer_to_c1_half(&instance));
    let solution = Solution {
        algorithm: "approx-mst".into(),
        ..evaluate(&instance, &assignment, Objective::Mst).expect("balanced split")
    };
    ApproxReport::new(solution, MST_RATIO, Backbone::FallbackSplit, None)
}
