// A small ratio campaign over two families, printed as CSV plus a summary.

use twosquirrel::bench::{csv_string, run_campaign, summarize, Algorithm, CampaignConfig};
use twosquirrel::instance::InstanceKind;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = CampaignConfig {
        families: vec![InstanceKind::UniformSquare, InstanceKind::TwoClusters],
        sizes: vec![4],
        seeds: (0..5).collect(),
        algorithms: vec![Algorithm::ApproxMst, Algorithm::ApproxTsp, Algorithm::FptasStar],
        ..CampaignConfig::default()
    };
    let campaign = run_campaign(&config)?;
    print!("{}", csv_string(&campaign.records));
    for s in summarize(&campaign.records)? {
        println!("{:<12} max {:.4} mean {:.4} p95 {:.4} over {}", s.algorithm, s.max, s.mean, s.p95, s.count);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
