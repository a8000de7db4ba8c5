// Two-TSP by cutting one tour over every node, with both backbones.

use twosquirrel::approx::{approx_two_tsp, TourBackbone};
use twosquirrel::instance::{random_instance, InstanceKind, Structure};
use twosquirrel::oracle::exact_two_tsp;
use twosquirrel::Metric;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let instance = random_instance(4, InstanceKind::UniformSquare, 11, Metric::L2);
    let opt = exact_two_tsp(&instance)?.optimum;
    println!("exact optimum {opt:.4}");
    for backbone in [TourBackbone::Exact, TourBackbone::Heuristic] {
        let report = approx_two_tsp(&instance, backbone)?;
        let tours: Vec<_> = [&report.solution.structure1, &report.solution.structure2]
            .into_iter()
            .map(|s| match s {
                Structure::Tour(t) => format!("{t:?}"),
                Structure::Edges(e) => format!("{e:?}"),
            })
            .collect();
        println!(
            "{:<9} {:>9.4} (x{:.3}, certified {}) {} tours {}",
            backbone.as_str(),
            report.objective(),
            report.objective() / opt,
            report.certified_ratio,
            report.backbone,
            tours.join(" | ")
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
