// Two-Squirrel stars: the scaled dynamic program at several precisions,
// with and without a pairing.

use twosquirrel::approx::{fptas_dichotomy_star, fptas_two_star};
use twosquirrel::instance::{random_instance, random_pairing, InstanceKind};
use twosquirrel::oracle::{exact_dichotomy_star, exact_two_star};
use twosquirrel::Metric;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let instance = random_instance(6, InstanceKind::UniformSquare, 5, Metric::L2);
    let paired = random_pairing(&instance, 5);
    let opt = exact_two_star(&instance)?.optimum;
    let opt_pairs = exact_dichotomy_star(&paired)?.optimum;
    println!("optimum {opt:.4}, with pairs {opt_pairs:.4}");
    for eps in [1.0, 0.5, 0.1, 0.01] {
        let free = fptas_two_star(&instance, eps)?;
        let split = fptas_dichotomy_star(&paired, eps)?;
        println!(
            "eps {eps:<5} star {:.4} (x{:.5})  pairs {:.4} (x{:.5})",
            free.objective(),
            free.objective() / opt,
            split.objective(),
            split.objective() / opt_pairs
        );
        assert!(free.objective() <= (1.0 + eps) * opt + 1e-9);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
