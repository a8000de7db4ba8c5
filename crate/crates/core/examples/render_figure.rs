// Writes an SVG of an approximate Two-MST solution to the temp directory.

use twosquirrel::approx::approx_two_mst;
use twosquirrel::instance::{random_instance, InstanceKind};
use twosquirrel::render::render_svg;
use twosquirrel::Metric;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let instance = random_instance(6, InstanceKind::TwoClusters, 2, Metric::L2);
    let report = approx_two_mst(&instance);
    let svg = render_svg(&instance, Some(&report.solution))?;
    let path = std::env::temp_dir().join("twosquirrel-two-mst.svg");
    std::fs::write(&path, &svg)?;
    println!("{} edges drawn, wrote {}", svg.matches(r#"class="edge""#).count(), path.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
