//! Every solver checked against exhaustive enumeration on small instances.

use twosquirrel::approx::{approx_two_mst, approx_two_tsp, fptas_dichotomy_star, fptas_two_star, Backbone, TourBackbone, MST_RATIO};
use twosquirrel::axis::{solve_axis_l1, solve_axis_l2, solve_line, HalfAxisView};
use twosquirrel::instance::{random_instance, random_pairing, InstanceKind};
use twosquirrel::oracle::{exact_dichotomy_star, exact_two_mst, exact_two_star, exact_two_tsp};
use twosquirrel::Metric;

const TOL: f64 = 1e-9;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL * (1.0 + b.abs())
}

#[test]
fn axis_l1_matches_oracle() {
    for seed in 0..60 {
        let n = 2 + seed as usize % 5;
        let i = random_instance(n, InstanceKind::AxisOnly, seed, Metric::L1);
        let s = solve_axis_l1(&i).unwrap();
        let opt = exact_two_mst(&i).unwrap().optimum;
        assert!(close(s.objective, opt), "seed {seed}: axis {} oracle {opt}", s.objective);
    }
}

#[test]
fn axis_l1_has_no_aba_without_a_site() {
    for seed in 0..40 {
        let i = random_instance(3 + seed as usize % 3, InstanceKind::AxisOnly, seed, Metric::L1);
        let s = solve_axis_l1(&i).unwrap();
        let view = HalfAxisView::new(&i).unwrap();
        for (k, runs) in view.run_pattern(&s.assignment).iter().enumerate() {
            if view.sites[k].is_empty() {
                assert!(runs.len() <= 2, "seed {seed}: pattern {runs} on half-axis {k}");
            }
        }
    }
}

#[test]
fn axis_l2_matches_oracle() {
    for seed in 0..60 {
        let n = 2 + seed as usize % 5;
        let i = random_instance(n, InstanceKind::AxisOnly, seed, Metric::L2);
        let s = solve_axis_l2(&i).unwrap();
        let opt = exact_two_mst(&i).unwrap().optimum;
        assert!(close(s.objective, opt), "seed {seed}: axis {} oracle {opt}", s.objective);
    }
}

#[test]
fn line_matches_oracle() {
    for seed in 0..60 {
        for metric in [Metric::L1, Metric::L2] {
            let i = random_instance(1 + seed as usize % 6, InstanceKind::LineOnly, seed, metric);
            let s = solve_line(&i).unwrap();
            let opt = exact_two_mst(&i).unwrap().optimum;
            assert!(close(s.objective, opt), "seed {seed}: line {} oracle {opt}", s.objective);
        }
    }
}

#[test]
fn approx_mst_within_certificate() {
    for seed in 0..80 {
        let kind = InstanceKind::ALL[seed as usize % 4];
        let metric = if seed % 2 == 0 { Metric::L2 } else { Metric::L1 };
        let i = random_instance(1 + seed as usize % 6, kind, seed, metric);
        let r = approx_two_mst(&i);
        let opt = exact_two_mst(&i).unwrap().optimum;
        assert!(r.objective() >= opt - TOL, "seed {seed}");
        assert!(r.objective() <= MST_RATIO * opt + TOL, "seed {seed}");
        if r.backbone == Backbone::BalancedKruskalSplit {
            let sum = r.solution.weight1 + r.solution.weight2;
            let best = exact_two_mst(&i).unwrap().best;
            assert!(sum <= best.weight1 + best.weight2 + TOL, "seed {seed}");
        }
    }
}

#[test]
fn approx_tsp_within_certificate() {
    for seed in 0..60 {
        let kind = InstanceKind::ALL[seed as usize % 4];
        let i = random_instance(1 + seed as usize % 4, kind, seed, Metric::L2);
        let opt = exact_two_tsp(&i).unwrap().optimum;
        let r = approx_two_tsp(&i, TourBackbone::Exact).unwrap();
        assert!(r.objective() >= opt - TOL, "seed {seed}");
        assert!(r.objective() <= 4.0 * opt + TOL, "seed {seed}: {} vs {opt}", r.objective());
        let h = approx_two_tsp(&i, TourBackbone::Heuristic).unwrap();
        assert!(h.objective() >= opt - TOL, "seed {seed}");
    }
}

#[test]
fn fptas_within_envelope() {
    for seed in 0..60 {
        let kind = InstanceKind::ALL[seed as usize % 4];
        let i = random_instance(1 + seed as usize % 6, kind, seed, Metric::L2);
        let opt = exact_two_star(&i).unwrap().optimum;
        for eps in [1.0, 0.5, 0.1, 0.01] {
            let r = fptas_two_star(&i, eps).unwrap();
            assert!(r.objective() >= opt - TOL, "seed {seed}");
            assert!(r.objective() <= (1.0 + eps) * opt + TOL, "seed {seed} eps {eps}: {} vs {opt}", r.objective());
        }
    }
}

#[test]
fn dichotomy_fptas_within_envelope() {
    for seed in 0..60 {
        let i = random_instance(1 + seed as usize % 6, InstanceKind::UniformSquare, seed, Metric::L1);
        let i = random_pairing(&i, seed);
        let opt = exact_dichotomy_star(&i).unwrap().optimum;
        for eps in [0.5, 0.1] {
            let r = fptas_dichotomy_star(&i, eps).unwrap();
            assert!(r.objective() >= opt - TOL, "seed {seed}");
            assert!(r.objective() <= (1.0 + eps) * opt + TOL, "seed {seed} eps {eps}");
        }
    }
}

/// The Kruskal split minimizes the total of the two trees, not the larger
/// one: here the optimum shifts points to even out the sides.
#[test]
fn balanced_split_can_miss_the_minmax_optimum() {
    let i = random_instance(6, InstanceKind::UniformSquare, 43, Metric::L2);
    let r = approx_two_mst(&i);
    assert_eq!(r.backbone, Backbone::BalancedKruskalSplit);
    let o = exact_two_mst(&i).unwrap();
    assert!((r.objective() - 137.328_819_460_482).abs() < 1e-6);
    assert!((o.optimum - 136.932_040_617_575).abs() < 1e-6);
    assert!(r.solution.weight1 + r.solution.weight2 < o.best.weight1 + o.best.weight2);
}
