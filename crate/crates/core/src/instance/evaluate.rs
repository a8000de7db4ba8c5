use super::{Assignment, Instance, InstanceError, Objective, Side, Solution, Structure, SITE};
use crate::geometry::Point;
use crate::spanning::{held_karp_tsp, mst_edges, nearest_neighbor_two_opt, tour_weight};

/// Sides with at most this many nodes (site included) get an exact tour.
pub const EXACT_TOUR_MAX_NODES: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TourMethod {
    HeldKarp,
    TwoOpt,
}

impl TourMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            TourMethod::HeldKarp => "held-karp",
            TourMethod::TwoOpt => "nn-2opt",
        }
    }
}

fn to_global(idx: &[usize], local: usize) -> i64 {
    if local == 0 {
        SITE
    } else {
        idx[local - 1] as i64
    }
}

fn node(instance: &Instance, side: Side, v: i64) -> Point {
    if v == SITE {
        instance.site(side)
    } else {
        instance.point(v as usize)
    }
}

/// Sum of the structure's edge lengths (a tour includes its closing edge).
pub fn structure_weight(instance: &Instance, side: Side, structure: &Structure) -> f64 {
    match structure {
        Structure::Edges(edges) => edges
            .iter()
            .map(|&(u, v)| instance.distance(node(instance, side, u), node(instance, side, v)))
            .sum(),
        Structure::Tour(order) => {
            let nodes: Vec<Point> = order.iter().map(|&v| node(instance, side, v)).collect();
            let local: Vec<usize> = (0..nodes.len()).collect();
            tour_weight(&nodes, &local, instance.metric())
        }
    }
}

pub(crate) fn mst_structure(instance: &Instance, assignment: &Assignment, side: Side) -> Structure {
    let (nodes, idx) = instance.side_nodes(assignment, side);
    let edges = mst_edges(&nodes, instance.metric())
        .into_iter()
        .map(|e| (to_global(&idx, e.u), to_global(&idx, e.v)))
        .collect();
    Structure::Edges(edges)
}

pub(crate) fn tour_structure(instance: &Instance, assignment: &Assignment, side: Side) -> (Structure, TourMethod) {
    let (nodes, idx) = instance.side_nodes(assignment, side);
    let (order, method) = if nodes.len() <= EXACT_TOUR_MAX_NODES {
        let (order, _) = held_karp_tsp(&nodes, instance.metric()).expect("side has 2..=15 nodes");
        (order, TourMethod::HeldKarp)
    } else {
        (nearest_neighbor_two_opt(&nodes, 0, instance.metric()), TourMethod::TwoOpt)
    };
    let tour = order.into_iter().map(|l| to_global(&idx, l)).collect();
    (Structure::Tour(tour), method)
}

fn star_structure(assignment: &Assignment, side: Side) -> Structure {
    Structure::Edges(assignment.indices(side).into_iter().map(|i| (SITE, i as i64)).collect())
}

/// Scores a balanced assignment under the chosen objective.
pub fn evaluate(instance: &Instance, assignment: &Assignment, objective: Objective) -> Result<Solution, InstanceError> {
    assignment.validate(instance)?;
    let algorithm = format!("evaluate-{objective}");
    let solution = match objective {
        Objective::Star => Solution::from_structures(
            instance,
            assignment.clone(),
            star_structure(assignment, Side::One),
            star_structure(assignment, Side::Two),
            algorithm,
        ),
        Objective::Mst => Solution::from_structures(
            instance,
            assignment.clone(),
            mst_structure(instance, assignment, Side::One),
            mst_structure(instance, assignment, Side::Two),
            algorithm,
        ),
        Objective::Tsp => {
            let (s1, m1) = tour_structure(instance, assignment, Side::One);
            let (s2, m2) = tour_structure(instance, assignment, Side::Two);
            Solution::from_structures(instance, assignment.clone(), s1, s2, algorithm)
                .with_meta("tour_method1", m1.as_str())
                .with_meta("tour_method2", m2.as_str())
        }
    };
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Metric;

    fn line_instance() -> Instance {
        Instance::new(
            vec![Point::new(1.0, 0.0), Point::new(9.0, 0.0)],
            Point::new(0.0, 0.0),
            Point::new(10.0, 0.0),
            Metric::L2,
        )
        .unwrap()
    }

    #[test]
    fn star_weights() {
        let inst = line_instance();
        let good = evaluate(&inst, &Assignment::from_labels(&[1, 2]).unwrap(), Objective::Star).unwrap();
        assert_eq!((good.weight1, good.weight2, good.objective), (1.0, 1.0, 1.0));
        let bad = evaluate(&inst, &Assignment::from_labels(&[2, 1]).unwrap(), Objective::Star).unwrap();
        assert_eq!(bad.objective, 9.0);
    }

    #[test]
    fn unbalanced_is_an_error() {
        let inst = line_instance();
        let a = Assignment::from_labels(&[1, 1]).unwrap();
        assert!(matches!(evaluate(&inst, &a, Objective::Mst), Err(InstanceError::Unbalanced { .. })));
    }

    #[test]
    fn one_point_tour_is_out_and_back() {
        let inst = line_instance();
        let s = evaluate(&inst, &Assignment::from_labels(&[1, 2]).unwrap(), Objective::Tsp).unwrap();
        assert_eq!((s.weight1, s.weight2), (2.0, 2.0));
        assert_eq!(s.structure1, Structure::Tour(vec![SITE, 0]));
        assert_eq!(s.meta["tour_method1"], "held-karp");
    }

    #[test]
    fn mst_structure_uses_site_sentinel() {
        let inst = line_instance();
        let s = evaluate(&inst, &Assignment::from_labels(&[1, 2]).unwrap(), Objective::Mst).unwrap();
        assert_eq!(s.structure1, Structure::Edges(vec![(SITE, 0)]));
        assert_eq!(s.structure2, Structure::Edges(vec![(SITE, 1)]));
    }
}
