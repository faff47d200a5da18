//! General, middle-graph and disjoint-union bound checks, written as a
//! CSV ledger.

use midtdc::bounds::{
    check_disjoint_union, check_general_bounds, check_middle_bounds, Facts, Ledger,
};
use midtdc::families::{complete, cycle, path, wheel};
use midtdc::middle_graph;
use midtdc::solve::Budget;

pub fn run_example() -> midtdc::Result<()> {
    let budget = Budget::nodes(10_000_000);
    let mut ledger = Ledger::new();
    for (name, g) in [
        ("P_6", path(6)),
        ("C_5", cycle(5)),
        ("W_6", wheel(6)),
        ("K_4", complete(4)),
    ] {
        let base = Facts::plain(name, g.clone(), budget);
        ledger.extend(check_general_bounds(&base)?);
        let mid = Facts::middle(format!("M({name})"), middle_graph(&g)?, budget);
        ledger.extend(check_middle_bounds(&mid)?);
    }
    // P_6 needs the minimum over all minimum TDSs: one of them leaves an
    // independent remainder.
    let p6 = Facts::plain("P_6", path(6), budget);
    println!(
        "min χ(P_6 - S) over min-TDS S = {}",
        p6.min_residual_chromatic()?
    );

    let p3 = path(3);
    ledger.extend(check_disjoint_union(
        &p3.disjoint_union(&p3),
        "P_3+P_3",
        budget,
    )?);
    print!("{}", ledger.to_csv()?);
    let summary = ledger.summary();
    println!("{}", summary.line());
    assert!(summary.all_passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> midtdc::Result<()> {
    run_example()
}
