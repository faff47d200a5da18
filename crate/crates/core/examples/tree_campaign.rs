//! Every free tree of a given order, checked against the tree statements
//! through a campaign.

use midtdc::campaign::{run_campaign, CampaignSpec, Check, SizeRange};
use midtdc::families::{enumerate_trees, leaves, Family};

pub fn run_example() -> midtdc::Result<()> {
    for n in 2..=8 {
        let trees = enumerate_trees(n)?;
        let max_leaves = trees.iter().map(|t| leaves(t).len()).max().unwrap_or(0);
        println!("n = {n}: {} trees, up to {max_leaves} leaves", trees.len());
    }
    let spec = CampaignSpec::new(Family::TreeExhaustive, SizeRange::new(2, 8))
        .with_checks(vec![Check::TreeTheorems, Check::CertificateLemmas]);
    let result = run_campaign(&spec)?;
    let at_order = result
        .instances
        .iter()
        .filter(|i| i.solved.value() == Some(i.n))
        .count();
    println!(
        "{} trees, {} with χ_d^t(M(T)) = n; {}",
        result.instances.len(),
        at_order,
        result.summary().line()
    );
    assert!(result.summary().all_passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> midtdc::Result<()> {
    run_example()
}
