// Builds set-partition gadgets and solves the small ones exactly.

use twosquirrel::hardness::{build_gadget, has_equal_partition, parse_multiset, verify_gadget};
use twosquirrel::oracle::Budget;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for set in ["1,1", "1,3"] {
        let spec = build_gadget(&parse_multiset(set)?)?;
        let report = verify_gadget(&spec, Budget::Default)?;
        println!(
            "{{{set}}}: {} points, t = {}, target {} (construction weight {}), well posed {}",
            spec.points.len(),
            spec.t,
            spec.target,
            spec.canonical_target,
            spec.well_posed
        );
        println!(
            "  opt {:.4}, yes {}, partition exists {}, centers on side 1: {:?}",
            report.opt,
            report.is_yes,
            has_equal_partition(&spec.values),
            report.witness.0.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        );
    }
    let spec = build_gadget(&parse_multiset("1,2,2,3")?)?;
    println!("{{1,2,2,3}}: {} points, well posed {}", spec.points.len(), spec.well_posed);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
