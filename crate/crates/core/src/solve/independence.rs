use crate::error::Result;
use crate::graph::Graph;

use super::cliques::{complement, max_clique};
use super::mask::{adjacency, count, full, to_vec};
use super::{Budget, Certificate, Problem, ReportBuilder, SolveReport};

/// `α(G)` as a maximum clique of the complement.
pub fn independence_number(g: &Graph, budget: Budget) -> Result<SolveReport> {
    let adj = adjacency(g)?;
    let mut report = ReportBuilder::new(Problem::Independence);
    let co = complement(&adj);
    let limit = budget.max_nodes.unwrap_or(u64::MAX);
    let (set, proven, nodes) = max_clique(&co, full(adj.len()), limit);
    report.bound(
        "greedy",
        count(super::cliques::greedy_clique(&co, full(adj.len()))),
    );
    let certificate = Certificate::IndependentSet { set: to_vec(set) };
    Ok(report.finish(proven, count(set), Some(certificate), nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};
    use crate::middle::middle_graph;

    fn alpha(g: &Graph) -> usize {
        let r = independence_number(g, Budget::UNLIMITED).unwrap();
        assert!(r.certificate.as_ref().unwrap().validates(g));
        r.optimum.unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(alpha(middle_graph(&path(4)).unwrap().graph()), 4);
        assert_eq!(alpha(middle_graph(&cycle(6)).unwrap().graph()), 6);
        assert_eq!(alpha(&complete(5)), 1);
        assert_eq!(alpha(&cycle(7)), 3);
        assert_eq!(alpha(&Graph::empty(0)), 0);
    }
}
