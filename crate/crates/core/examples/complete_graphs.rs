//! Structure of `M(K_n)`: the explicit minimum total dominating sets,
//! `χ`, `χ'` and the two-sided TDC bound.

use midtdc::bounds::{
    check_edge_chromatic_complete, check_kn_structure, complete_middle_tds_edges,
};
use midtdc::solve::Budget;

pub fn run_example() -> midtdc::Result<()> {
    let budget = Budget::nodes(10_000_000);
    for n in 2..=6 {
        match complete_middle_tds_edges(n) {
            Some(s) => {
                let named: Vec<String> = s
                    .iter()
                    .map(|&(i, j)| format!("m{}{}", i + 1, j + 1))
                    .collect();
                println!("K_{n}: S = {{{}}}", named.join(", "));
            }
            None => println!("K_{n}: no set construction below n = 3"),
        }
        for row in check_kn_structure(n, budget)? {
            println!("  {row}");
        }
    }
    let row = check_edge_chromatic_complete(7, budget)?;
    println!("{row}");
    assert!(row.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> midtdc::Result<()> {
    run_example()
}
