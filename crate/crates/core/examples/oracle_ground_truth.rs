// Exhaustive optima for all three objectives on one instance, showing the
// ordering tree <= star and tree <= tour.

use twosquirrel::instance::{random_instance, random_pairing, InstanceKind};
use twosquirrel::oracle::{exact_dichotomy_star, exact_two_mst, exact_two_star, exact_two_tsp};
use twosquirrel::Metric;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for metric in [Metric::L1, Metric::L2] {
        let instance = random_instance(4, InstanceKind::UniformSquare, 42, metric);
        let mst = exact_two_mst(&instance)?;
        let star = exact_two_star(&instance)?;
        let pairs = exact_dichotomy_star(&random_pairing(&instance, 42))?;
        let tsp = exact_two_tsp(&instance)?;
        println!(
            "{metric}: mst {:.3} <= star {:.3} <= paired star {:.3}; tour {:.3} ({} splits)",
            mst.optimum, star.optimum, pairs.optimum, tsp.optimum, mst.enumerated
        );
        println!("  best tree split {:?}", mst.best.assignment.labels());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
