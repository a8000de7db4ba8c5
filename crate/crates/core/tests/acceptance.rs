//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. The 24-point gadget check is opt-in:
//! pass `--include-ignored` (or `--ignored`) or set TWOSQUIRREL_LONG=1.

use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use twosquirrel::approx::{
    approx_two_mst, approx_two_tsp, fptas_dichotomy_star, fptas_two_star, Backbone, TourBackbone, MST_RATIO,
};
use twosquirrel::axis::{solve_axis_l1, solve_axis_l2, solve_line};
use twosquirrel::bench::{csv_string, run_campaign, Algorithm, CampaignConfig};
use twosquirrel::hardness::{build_gadget, parse_multiset, ratio, verify_gadget, GadgetSpec};
use twosquirrel::instance::{random_instance, random_pairing, solution_to_json, Instance, InstanceKind};
use twosquirrel::oracle::{exact_dichotomy_star, exact_two_mst, exact_two_star, exact_two_tsp, Budget};
use twosquirrel::render::render_svg;
use twosquirrel::{distance, Metric, Point, EPS};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn kind(seed: u64) -> InstanceKind {
    InstanceKind::ALL[seed as usize % InstanceKind::ALL.len()]
}

fn within(elapsed: Duration, limit: Duration, detail: String) -> Outcome {
    if elapsed <= limit {
        Ok(format!("{detail}; {:.1}s", elapsed.as_secs_f64()))
    } else {
        Err(format!("{detail}; took {:.1}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()))
    }
}

fn oracle_chain() -> Outcome {
    let start = Instant::now();
    for seed in 0..200u64 {
        let metric = if seed % 2 == 0 { Metric::L1 } else { Metric::L2 };
        let i = random_instance(4, kind(seed), seed, metric);
        let mst = exact_two_mst(&i).map_err(|e| e.to_string())?.optimum;
        let star = exact_two_star(&i).map_err(|e| e.to_string())?.optimum;
        let pairs = exact_dichotomy_star(&random_pairing(&i, seed)).map_err(|e| e.to_string())?.optimum;
        let tsp = exact_two_tsp(&i).map_err(|e| e.to_string())?.optimum;
        if mst > star + EPS || star > pairs + EPS || mst > tsp + EPS {
            return Err(format!("seed {seed}: mst {mst} star {star} pairs {pairs} tsp {tsp}"));
        }
    }
    within(start.elapsed(), Duration::from_secs(60), "200 instances, mst <= star <= paired star, mst <= tsp".into())
}

fn two_mst_certificate() -> Outcome {
    let start = Instant::now();
    let (mut worst, mut splits) = (1.0f64, 0);
    let mut inexact = Vec::new();
    for family in [InstanceKind::UniformSquare, InstanceKind::TwoClusters] {
        for seed in 0..200u64 {
            let i = random_instance(6, family, seed, Metric::L2);
            let opt = exact_two_mst(&i).map_err(|e| e.to_string())?.optimum;
            let r = approx_two_mst(&i);
            let ratio = r.objective() / opt;
            worst = worst.max(ratio);
            if ratio > MST_RATIO {
                return Err(format!("{family} seed {seed}: ratio {ratio}"));
            }
            if r.backbone == Backbone::BalancedKruskalSplit {
                splits += 1;
                if (ratio - 1.0).abs() > 1e-9 {
                    inexact.push(format!("{family} seed {seed} ({ratio:.6})"));
                }
            }
        }
    }
    let detail = format!("400 instances, worst ratio {worst:.4} <= {MST_RATIO}, {splits} balanced splits");
    if !inexact.is_empty() {
        return Err(format!("{detail}, {} not optimal: {}", inexact.len(), inexact.join(", ")));
    }
    within(start.elapsed(), Duration::from_secs(600), format!("{detail}, all exact"))
}

fn two_tsp_certificate() -> Outcome {
    let start = Instant::now();
    let (mut worst, mut splits) = (1.0f64, 0);
    for seed in 0..200u64 {
        let i = random_instance(5, kind(seed), seed, Metric::L2);
        let opt = exact_two_tsp(&i).map_err(|e| e.to_string())?.optimum;
        let ratio = approx_two_tsp(&i, TourBackbone::Exact).map_err(|e| e.to_string())?.objective() / opt;
        worst = worst.max(ratio);
        if ratio > 4.0 + 1e-9 {
            return Err(format!("seed {seed}: ratio {ratio}"));
        }
        if approx_two_mst(&i).backbone == Backbone::BalancedKruskalSplit {
            splits += 1;
            if ratio > 2.0 + 1e-9 {
                return Err(format!("seed {seed}: balanced split ratio {ratio}"));
            }
        }
    }
    within(
        start.elapsed(),
        Duration::from_secs(600),
        format!("200 instances, worst ratio {worst:.4} <= 4, {splits} balanced splits <= 2"),
    )
}

fn fptas_certificate() -> Outcome {
    let start = Instant::now();
    let mut worst = [0.0f64; 2];
    for seed in 0..100u64 {
        let metric = if seed % 2 == 0 { Metric::L2 } else { Metric::L1 };
        let i = random_instance(6, kind(seed), seed, metric);
        let paired = random_pairing(&i, seed);
        let opt = exact_two_star(&i).map_err(|e| e.to_string())?.optimum;
        let opt_pairs = exact_dichotomy_star(&paired).map_err(|e| e.to_string())?.optimum;
        for eps in [0.5, 0.1, 0.01] {
            let free = fptas_two_star(&i, eps).map_err(|e| e.to_string())?.objective() / opt;
            let split = fptas_dichotomy_star(&paired, eps).map_err(|e| e.to_string())?.objective() / opt_pairs;
            worst = [worst[0].max(free - 1.0), worst[1].max(split - 1.0)];
            if free > 1.0 + eps + 1e-12 || split > 1.0 + eps + 1e-12 {
                return Err(format!("seed {seed} eps {eps}: star {free} pairs {split}"));
            }
        }
    }
    within(
        start.elapsed(),
        Duration::from_secs(300),
        format!("100 instances x 3 eps, worst excess {:.2e} (star) {:.2e} (pairs)", worst[0], worst[1]),
    )
}

fn structural(g: &GadgetSpec) -> Result<(), String> {
    let d = |i: usize, j: usize| distance(g.points[i], g.points[j], Metric::L2);
    let t = g.t.to_f64().unwrap();
    let m = g.values.len();
    let check = |what: &str, got: f64, want: f64| {
        if (got - want).abs() <= 1e-9 * want.max(1.0) {
            Ok(())
        } else {
            Err(format!("E={:?}: {what} is {got}, want {want}", g.meta()["E"]))
        }
    };
    for (i, a) in g.values.iter().enumerate() {
        let a = a.to_f64().unwrap();
        for k in 1..=4 {
            check("corner distance", d(g.center(i), g.corner(i, k)), 13.0 * a)?;
        }
    }
    for i in 0..m - 1 {
        check("upper leg", d(g.corner(i, 2), g.corner(i + 1, 1)), 2.0 * t)?;
        check("lower leg", d(g.corner(i, 4), g.corner(i + 1, 3)), 2.0 * t)?;
    }
    let side = 4.0 * g.n() as f64 * t;
    let [b1, b2, q, r] = g.tail();
    check("tail overlap", d(b1, b2), 0.0)?;
    for (x, y) in [(b1, q), (b1, r), (q, r), (g.corner(m - 1, 2), b1), (g.corner(m - 1, 4), b2)] {
        check("tail side", d(x, y), side)?;
    }
    Ok(())
}

fn gadget_round_trip(long: bool) -> Outcome {
    let mut failures = Vec::new();
    let mut notes = Vec::new();

    let g = build_gadget(&parse_multiset("1,1").unwrap()).map_err(|e| e.to_string())?;
    let r = verify_gadget(&g, Budget::Default).map_err(|e| e.to_string())?;
    let sums = (
        r.witness.0.iter().cloned().sum::<num_rational::BigRational>(),
        r.witness.1.iter().cloned().sum::<num_rational::BigRational>(),
    );
    if (r.opt - 14.0).abs() > 1e-6 || sums.0 != sums.1 {
        failures.push(format!("{{1,1}} opt {:.6} (want 14), witness sums {} vs {}", r.opt, sums.0, sums.1));
    } else {
        notes.push("{1,1} opt 14".to_string());
    }

    let g = build_gadget(&parse_multiset("1,3").unwrap()).map_err(|e| e.to_string())?;
    let r = verify_gadget(&g, Budget::Default).map_err(|e| e.to_string())?;
    if r.opt > 28.0 + 1e-6 && !r.is_yes {
        notes.push(format!("{{1,3}} opt {:.4} > 28, not yes", r.opt));
    } else {
        failures.push(format!("{{1,3}} opt {:.6}, is_yes {}", r.opt, r.is_yes));
    }

    if long {
        let g = build_gadget(&parse_multiset("1,2,2,3").unwrap()).map_err(|e| e.to_string())?;
        let r = verify_gadget(&g, Budget::Extended).map_err(|e| e.to_string())?;
        if (r.opt - 28.0).abs() <= 1e-6 && r.is_yes && r.witness_balanced {
            notes.push("{1,2,2,3} opt 28, yes".to_string());
        } else {
            failures.push(format!(
                "{{1,2,2,3}} opt {:.4} (want 28), is_yes {}, witness balanced {}",
                r.opt, r.is_yes, r.witness_balanced
            ));
        }
    } else {
        notes.push("{1,2,2,3} skipped (opt-in)".to_string());
    }

    let (mut checked, mut skipped, mut state) = (0, 0, 0x9e37_79b9_7f4a_7c15u64);
    let mut next = |bound: u64| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state % bound
    };
    while checked < 50 {
        let len = 4 + 2 * next(3) as usize;
        let values: Vec<_> = (0..len).map(|_| ratio(1 + next(12) as i64, 1 + next(2) as i64)).collect();
        let g = build_gadget(&values).map_err(|e| e.to_string())?;
        if !g.well_posed {
            skipped += 1;
            continue;
        }
        if let Err(e) = structural(&g) {
            failures.push(e);
            break;
        }
        checked += 1;
    }
    notes.push(format!("structure holds on {checked} well-posed multisets ({skipped} ill-posed skipped)"));

    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(format!("{}; passing parts: {}", failures.join("; "), notes.join("; ")))
    }
}

fn on_x(xs: &[f64], c1: Point, c2: Point) -> Instance {
    Instance::new(xs.iter().map(|&x| Point::new(x, 0.0)).collect(), c1, c2, Metric::L1).unwrap()
}

fn special_cases() -> Outcome {
    let start = Instant::now();
    type Solver = fn(&Instance) -> Result<twosquirrel::Solution, twosquirrel::axis::AxisError>;
    let cases: [(&str, InstanceKind, Solver); 3] = [
        ("line", InstanceKind::LineOnly, solve_line),
        ("axis-l1", InstanceKind::AxisOnly, solve_axis_l1),
        ("axis-l2", InstanceKind::AxisOnly, solve_axis_l2),
    ];
    for (k, (name, family, solve)) in cases.iter().enumerate() {
        for seed in 0..100u64 {
            let metric = match *name {
                "axis-l1" => Metric::L1,
                "axis-l2" => Metric::L2,
                _ if seed % 2 == 0 => Metric::L1,
                _ => Metric::L2,
            };
            let i = random_instance(1 + (seed + k as u64) as usize % 6, *family, seed, metric);
            let got = solve(&i).map_err(|e| format!("{name} seed {seed}: {e}"))?.objective;
            let opt = exact_two_mst(&i).map_err(|e| e.to_string())?.optimum;
            if (got - opt).abs() > EPS * (1.0 + opt) {
                return Err(format!("{name} seed {seed}: {got} vs oracle {opt}"));
            }
        }
    }
    let e = 0.01;
    let fig = on_x(
        &[2.0 - e, 2.0 - e / 3.0, 2.0 + e / 3.0, 2.0 + e, 1.0 - e, 1.0 + e, 4.0 - e, 4.0 + e],
        Point::new(0.0, 3.0),
        Point::new(0.0, -1.0),
    );
    let got = solve_axis_l1(&fig).map_err(|e| e.to_string())?.objective;
    if (got - 5.01).abs() > EPS {
        return Err(format!("three-cluster figure gives {got}, want 5.01"));
    }
    within(
        start.elapsed(),
        Duration::from_secs(900),
        "line, axis-l1, axis-l2 exact on 100 instances each; figure instance 5.01".into(),
    )
}

fn all_outputs() -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let err = |e: &dyn std::fmt::Display| e.to_string();
    for seed in 0..6u64 {
        let i = random_instance(4, kind(seed), seed, Metric::L2);
        let p = random_pairing(&i, seed);
        out.push(solution_to_json(&approx_two_mst(&i).solution));
        for b in [TourBackbone::Exact, TourBackbone::Heuristic] {
            out.push(solution_to_json(&approx_two_tsp(&i, b).map_err(|e| err(&e))?.solution));
        }
        out.push(solution_to_json(&fptas_two_star(&i, 0.1).map_err(|e| err(&e))?.solution));
        out.push(solution_to_json(&fptas_dichotomy_star(&p, 0.1).map_err(|e| err(&e))?.solution));
        out.push(solution_to_json(&exact_two_mst(&i).map_err(|e| err(&e))?.best));
        out.push(solution_to_json(&exact_two_tsp(&i).map_err(|e| err(&e))?.best));
        out.push(solution_to_json(&exact_two_star(&i).map_err(|e| err(&e))?.best));
        out.push(solution_to_json(&exact_dichotomy_star(&p).map_err(|e| err(&e))?.best));
        let line = random_instance(4, InstanceKind::LineOnly, seed, Metric::L2);
        out.push(solution_to_json(&solve_line(&line).map_err(|e| err(&e))?));
        for metric in [Metric::L1, Metric::L2] {
            let a = random_instance(4, InstanceKind::AxisOnly, seed, metric);
            let s = match metric {
                Metric::L1 => solve_axis_l1(&a),
                Metric::L2 => solve_axis_l2(&a),
            };
            out.push(solution_to_json(&s.map_err(|e| err(&e))?));
        }
        out.push(render_svg(&i, Some(&approx_two_mst(&i).solution)).map_err(|e| err(&e))?);
    }
    let g = build_gadget(&parse_multiset("1,3").unwrap()).map_err(|e| err(&e))?;
    out.push(solution_to_json(&verify_gadget(&g, Budget::Default).map_err(|e| err(&e))?.solution));
    let config = CampaignConfig {
        sizes: vec![3, 4],
        seeds: (0..3).collect(),
        algorithms: vec![
            Algorithm::ApproxMst,
            Algorithm::ApproxTsp,
            Algorithm::ApproxTspHeuristic,
            Algorithm::FptasStar,
            Algorithm::FptasDichotomy,
        ],
        ..CampaignConfig::default()
    };
    out.push(csv_string(&run_campaign(&config).map_err(|e| err(&e))?.records));
    Ok(out)
}

fn determinism() -> Outcome {
    let first = all_outputs()?;
    let second = all_outputs()?;
    match first.iter().zip(&second).position(|(a, b)| a != b) {
        None => Ok(format!("{} solver and campaign outputs byte-identical across runs", first.len())),
        Some(k) => Err(format!("output {k} differs between runs")),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let long = args.iter().any(|a| a == "--include-ignored" || a == "--ignored")
        || std::env::var("TWOSQUIRREL_LONG").is_ok_and(|v| v == "1");

    let criteria: [Criterion; 7] = [
        ("oracle cross-consistency", Box::new(oracle_chain)),
        ("two-MST ratio certificate", Box::new(two_mst_certificate)),
        ("two-TSP ratio certificate", Box::new(two_tsp_certificate)),
        ("FPTAS certificate", Box::new(fptas_certificate)),
        ("hardness gadget round trip", Box::new(move || gadget_round_trip(long))),
        ("special-case exactness", Box::new(special_cases)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
