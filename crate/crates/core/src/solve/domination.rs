//! Total domination: exact `γ_t` and enumeration of all minimum total
//! dominating sets.
//!
//! Both run the same include/exclude tree. At each node the undominated
//! vertex with the fewest remaining candidate neighbours is chosen and the
//! search branches on which candidate dominates it; branch `i` excludes the
//! candidates tried before it, so every set is reached at most once.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

use super::mask::{adjacency, bit, bits, count, full, to_vec, Mask};
use super::{Budget, Certificate, Meter, Problem, ReportBuilder, SolveReport, TotalDominatingSet};

pub fn is_total_dominating(g: &Graph, set: &[VertexId]) -> bool {
    set.iter().all(|&v| v < g.order())
        && g.vertices().all(|v| set.iter().any(|&s| g.has_edge(v, s)))
}

struct TdsSearch<'a> {
    adj: &'a [Mask],
    all: Mask,
    meter: Meter,
    /// Largest set size still worth exploring.
    limit: usize,
    collect: bool,
    best: Option<Mask>,
    found: Vec<Mask>,
}

impl TdsSearch<'_> {
    fn lower_bound(&self, undominated: Mask, allowed: Mask) -> usize {
        // Undominated vertices with pairwise disjoint candidate sets each
        // need their own new member.
        let mut used = 0;
        let mut packing = 0;
        for v in bits(undominated) {
            let cand = self.adj[v] & allowed;
            if cand & used == 0 {
                used |= cand;
                packing += 1;
            }
        }
        let max_cover = bits(allowed)
            .map(|u| count(self.adj[u] & undominated))
            .max()
            .unwrap_or(0);
        let by_cover = if max_cover == 0 {
            usize::MAX
        } else {
            count(undominated).div_ceil(max_cover)
        };
        packing.max(by_cover)
    }

    fn search(&mut self, included: Mask, excluded: Mask, dominated: Mask) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let size = count(included);
        let undominated = self.all & !dominated;
        if undominated == 0 {
            if self.collect {
                self.found.push(included);
            } else if size <= self.limit {
                self.best = Some(included);
                self.limit = size.saturating_sub(1);
            }
            return true;
        }
        let allowed = self.all & !excluded & !included;
        let Some(v) = bits(undominated).min_by_key(|&v| (count(self.adj[v] & allowed), v)) else {
            return true;
        };
        let cand = self.adj[v] & allowed;
        if cand == 0 {
            return true;
        }
        let lb = self.lower_bound(undominated, allowed);
        if lb == usize::MAX || size + lb > self.limit {
            return true;
        }
        let mut order: Vec<VertexId> = bits(cand).collect();
        order.sort_by_key(|&u| (std::cmp::Reverse(count(self.adj[u] & undominated)), u));
        let mut tried = 0;
        for u in order {
            if !self.search(included | bit(u), excluded | tried, dominated | self.adj[u]) {
                return false;
            }
            tried |= bit(u);
            if !self.collect && size + 1 > self.limit {
                break;
            }
        }
        true
    }
}

fn greedy_tds(adj: &[Mask]) -> Mask {
    let all = full(adj.len());
    let mut set = 0;
    let mut dominated = 0;
    while dominated != all {
        let u = (0..adj.len())
            .filter(|&u| set & bit(u) == 0)
            .max_by_key(|&u| (count(adj[u] & !dominated), std::cmp::Reverse(u)))
            .expect("positive minimum degree");
        set |= bit(u);
        dominated |= adj[u];
    }
    set
}

fn undominated_bound(adj: &[Mask]) -> usize {
    let all = full(adj.len());
    let search = TdsSearch {
        adj,
        all,
        meter: Meter::new(Budget::UNLIMITED),
        limit: usize::MAX,
        collect: false,
        best: None,
        found: Vec::new(),
    };
    search.lower_bound(all, all)
}

pub fn total_domination_number(g: &Graph, budget: Budget) -> Result<SolveReport> {
    g.require_positive_min_degree()?;
    let adj = adjacency(g)?;
    let mut report = ReportBuilder::new(Problem::TotalDomination);
    let lower = undominated_bound(&adj);
    report.bound("packing", lower);
    let greedy = greedy_tds(&adj);
    let mut search = TdsSearch {
        adj: &adj,
        all: full(adj.len()),
        meter: Meter::new(budget),
        limit: count(greedy) - 1,
        collect: false,
        best: Some(greedy),
        found: Vec::new(),
    };
    let finished = count(greedy) <= lower || search.search(0, 0, 0);
    let best = search.best.expect("greedy seed");
    let certificate = Certificate::TotalDominatingSet(TotalDominatingSet { set: to_vec(best) });
    Ok(report.finish(finished, lower, Some(certificate), search.meter.nodes))
}

/// All total dominating sets of minimum size, each sorted, in the order the
/// search reaches them.
pub fn min_tds_enumeration(g: &Graph, budget: Budget) -> Result<Vec<TotalDominatingSet>> {
    let report = total_domination_number(g, budget)?;
    let Some(gamma) = report.optimum else {
        return Err(Error::BudgetExhausted {
            nodes: report.nodes,
        });
    };
    let adj = adjacency(g)?;
    let mut search = TdsSearch {
        adj: &adj,
        all: full(adj.len()),
        meter: Meter::new(budget),
        limit: gamma,
        collect: true,
        best: None,
        found: Vec::new(),
    };
    if !search.search(0, 0, 0) {
        return Err(Error::BudgetExhausted {
            nodes: search.meter.nodes,
        });
    }
    let mut sets: Vec<Mask> = search
        .found
        .into_iter()
        .filter(|&s| count(s) == gamma)
        .collect();
    sets.sort_unstable_by_key(|&s| to_vec(s));
    sets.dedup();
    Ok(sets
        .into_iter()
        .map(|s| TotalDominatingSet { set: to_vec(s) })
        .collect())
}
