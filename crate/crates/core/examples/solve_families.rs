//! Exact `χ_d^t(M(G))` for each named family against its closed form.

use midtdc::families::{generate, predict_tdc_of_middle, Family, FamilySpec};
use midtdc::middle_graph;
use midtdc::solve::{tdc_number_of_middle, Budget};

pub fn run_example() -> midtdc::Result<()> {
    let cases = [
        (Family::Path, 3..=12),
        (Family::Cycle, 3..=10),
        (Family::Star, 3..=8),
        (Family::DoubleStar, 1..=4),
        (Family::Wheel, 4..=7),
        (Family::Friendship, 2..=3),
        (Family::Complete, 2..=6),
    ];
    println!(
        "{:<12} {:>3} {:>9} {:>6} {:>8}",
        "family", "n", "predicted", "solved", "nodes"
    );
    for (family, sizes) in cases {
        for n in sizes {
            let spec = FamilySpec::new(family, n);
            let mg = middle_graph(&generate(&spec)?)?;
            let report = tdc_number_of_middle(&mg, Budget::nodes(10_000_000))?;
            let solved = report.require_optimum()?;
            let predicted =
                predict_tdc_of_middle(&spec)?.expect("named families have closed forms");
            assert!(predicted.value.contains(solved), "{} disagrees", spec.tag());
            println!(
                "{:<12} {n:>3} {:>9} {solved:>6} {:>8}",
                family.name(),
                predicted.value.to_string(),
                report.nodes
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> midtdc::Result<()> {
    run_example()
}
