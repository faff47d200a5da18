//! The supporting exact solvers: `χ`, `χ'`, `γ_t`, `α` and the full list
//! of minimum total dominating sets.

use midtdc::families::{complete, cycle, path, wheel};
use midtdc::middle_graph;
use midtdc::solve::{min_tds_enumeration, solve, Budget, Problem};

pub fn run_example() -> midtdc::Result<()> {
    let budget = Budget::nodes(10_000_000);
    let graphs = [("C_7", cycle(7)), ("W_6", wheel(6)), ("K_5", complete(5))];
    for (name, g) in &graphs {
        let mg = middle_graph(g)?;
        for problem in [
            Problem::Chromatic,
            Problem::EdgeChromatic,
            Problem::TotalDomination,
            Problem::Independence,
        ] {
            let on_base = solve(problem, g, budget)?.require_optimum()?;
            let on_middle = solve(problem, mg.graph(), budget)?.require_optimum()?;
            println!("{problem:<16} {name}: {on_base:>2}   M({name}): {on_middle:>2}");
        }
    }
    for s in min_tds_enumeration(&path(6), budget)? {
        println!("min TDS of P_6: {:?}", s.set);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> midtdc::Result<()> {
    run_example()
}
