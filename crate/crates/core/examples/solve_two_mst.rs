// Two-MST on a random instance: exact optimum, the Kruskal-split
// approximation and its certified ratio.

use twosquirrel::approx::{approx_two_mst, MST_RATIO};
use twosquirrel::instance::{random_instance, InstanceKind};
use twosquirrel::oracle::exact_two_mst;
use twosquirrel::Metric;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (kind, seed) in [(InstanceKind::TwoClusters, 3), (InstanceKind::UniformSquare, 7)] {
        let instance = random_instance(5, kind, seed, Metric::L2);
        let exact = exact_two_mst(&instance)?;
        let approx = approx_two_mst(&instance);
        let ratio = approx.objective() / exact.optimum;
        println!(
            "{kind:<15} opt {:>9.4}  approx {:>9.4}  ratio {ratio:.4}  via {}",
            exact.optimum,
            approx.objective(),
            approx.backbone
        );
        assert!(ratio <= MST_RATIO + 1e-9);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
