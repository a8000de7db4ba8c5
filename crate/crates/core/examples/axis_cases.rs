// Exact 2-MST on a line and on the coordinate axes, including an L2
// optimum that interleaves the two trees along one half-axis.

use twosquirrel::axis::{solve_axis_l1, solve_axis_l2, solve_line, HalfAxisView};
use twosquirrel::instance::{random_instance, Instance, InstanceKind};
use twosquirrel::oracle::exact_two_mst;
use twosquirrel::{Metric, Point};

fn on_x(xs: &[f64], c1: Point, c2: Point, metric: Metric) -> Instance {
    Instance::new(xs.iter().map(|&x| Point::new(x, 0.0)).collect(), c1, c2, metric).expect("valid")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let line = on_x(&[1.0, 2.0, 3.0, 4.0], Point::ORIGIN, Point::new(10.0, 0.0), Metric::L2);
    println!("line: objective {}", solve_line(&line)?.objective);

    let e = 0.01;
    let clusters = [2.0 - e, 2.0 - e / 3.0, 2.0 + e / 3.0, 2.0 + e, 1.0 - e, 1.0 + e, 4.0 - e, 4.0 + e];
    let l1 = on_x(&clusters, Point::new(0.0, 3.0), Point::new(0.0, -1.0), Metric::L1);
    let s = solve_axis_l1(&l1)?;
    println!("three clusters, L1: objective {:.4} pattern {}", s.objective, s.meta["pattern"]);

    let far = 4.0 * 2f64.sqrt() + 1.0;
    let nested = on_x(
        &[1.0, far - e, far + e, 5.0 - e, 5.0, 5.0 + e],
        Point::new(0.0, -1.0),
        Point::new(0.0, 5.0),
        Metric::L2,
    );
    let s = solve_axis_l2(&nested)?;
    let runs = HalfAxisView::new(&nested)?.run_pattern(&s.assignment);
    println!(
        "nested blocks, L2: objective {:.4} (oracle {:.4}) +X runs {}",
        s.objective,
        exact_two_mst(&nested)?.optimum,
        runs[0]
    );

    for metric in [Metric::L1, Metric::L2] {
        let inst = random_instance(5, InstanceKind::AxisOnly, 21, metric);
        let s = if metric == Metric::L1 { solve_axis_l1(&inst)? } else { solve_axis_l2(&inst)? };
        println!(
            "random axis {metric}: {:.4} after {} candidates (oracle {:.4})",
            s.objective,
            s.meta["candidates"],
            exact_two_mst(&inst)?.optimum
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
