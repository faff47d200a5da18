//! Exact vertex colouring by DSATUR branch and bound.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::middle::line_graph;

use super::cliques::{complement, max_clique};
use super::mask::{adjacency, bit, bits, count, full, Mask};
use super::{Budget, Certificate, Coloring, EdgeColor, Meter, Problem, ReportBuilder, SolveReport};

/// Node limit for the clique and independence searches feeding the lower
/// bound; they never consume the caller's budget.
const BOUND_SEARCH_NODES: u64 = 200_000;

const NONE: u8 = u8::MAX;

struct Dsatur<'a> {
    adj: &'a [Mask],
    color: Vec<u8>,
    sat: Vec<Mask>,
    best: Vec<u8>,
    best_k: usize,
    lower: usize,
    meter: Meter,
}

impl Dsatur<'_> {
    fn pick(&self, uncolored: Mask) -> usize {
        bits(uncolored)
            .max_by_key(|&v| {
                (
                    count(self.sat[v]),
                    count(self.adj[v] & uncolored),
                    std::cmp::Reverse(v),
                )
            })
            .expect("non-empty")
    }

    fn assign(&mut self, v: usize, c: usize, uncolored: Mask) -> Mask {
        self.color[v] = c as u8;
        let mut newly = 0;
        for w in bits(self.adj[v] & uncolored) {
            if self.sat[w] & bit(c) == 0 {
                self.sat[w] |= bit(c);
                newly |= bit(w);
            }
        }
        newly
    }

    fn unassign(&mut self, v: usize, c: usize, newly: Mask) {
        self.color[v] = NONE;
        for w in bits(newly) {
            self.sat[w] &= !bit(c);
        }
    }

    /// Returns false when the budget ran out.
    fn search(&mut self, uncolored: Mask, used: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        if uncolored == 0 {
            if used < self.best_k {
                self.best_k = used;
                self.best.clone_from(&self.color);
            }
            return true;
        }
        let v = self.pick(uncolored);
        let rest = uncolored & !bit(v);
        for c in 0..=used {
            if self.best_k <= self.lower {
                return true;
            }
            let opens = c == used;
            if opens && used + 1 >= self.best_k {
                break;
            }
            if !opens && self.sat[v] & bit(c) != 0 {
                continue;
            }
            let newly = self.assign(v, c, rest);
            let ok = self.search(rest, used + usize::from(opens));
            self.unassign(v, c, newly);
            if !ok {
                return false;
            }
        }
        true
    }
}

fn greedy_dsatur(adj: &[Mask]) -> Vec<u8> {
    let n = adj.len();
    let mut color = vec![NONE; n];
    let mut sat = vec![0 as Mask; n];
    let mut uncolored = full(n);
    while uncolored != 0 {
        let v = bits(uncolored)
            .max_by_key(|&v| {
                (
                    count(sat[v]),
                    count(adj[v] & uncolored),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        let c = (!sat[v]).trailing_zeros() as usize;
        color[v] = c as u8;
        uncolored &= !bit(v);
        for w in bits(adj[v]) {
            sat[w] |= bit(c);
        }
    }
    color
}

pub(crate) struct ColoringOutcome {
    pub colors: Vec<usize>,
    pub proven: bool,
    pub lower: usize,
    pub nodes: u64,
}

/// Exact colouring of the mask graph with bounds recorded in `report`.
pub(crate) fn color_exactly(
    adj: &[Mask],
    budget: Budget,
    report: &mut ReportBuilder,
) -> ColoringOutcome {
    let n = adj.len();
    let all = full(n);
    let (clique, _, _) = max_clique(adj, all, BOUND_SEARCH_NODES);
    report.bound("clique", count(clique));
    let (independent, alpha_exact, _) = max_clique(&complement(adj), all, BOUND_SEARCH_NODES);
    if alpha_exact && independent != 0 {
        report.bound("order-over-independence", n.div_ceil(count(independent)));
    }
    let lower = report.best_bound();

    let greedy = greedy_dsatur(adj);
    let greedy_k = greedy.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    let mut search = Dsatur {
        adj,
        color: vec![NONE; n],
        sat: vec![0; n],
        best: greedy,
        best_k: greedy_k,
        lower,
        meter: Meter::new(budget),
    };
    // Clique members take distinct colours; fixing them removes symmetry.
    let mut uncolored = all;
    let mut used = 0;
    for v in bits(clique) {
        uncolored &= !bit(v);
        search.assign(v, used, uncolored);
        used += 1;
    }
    let finished = search.best_k <= lower || search.search(uncolored, used);
    ColoringOutcome {
        colors: search.best.iter().map(|&c| c as usize).collect(),
        proven: finished,
        lower,
        nodes: search.meter.nodes,
    }
}

pub fn chromatic_number(g: &Graph, budget: Budget) -> Result<SolveReport> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let adj = adjacency(g)?;
    let mut report = ReportBuilder::new(Problem::Chromatic);
    let out = color_exactly(&adj, budget, &mut report);
    let coloring = Coloring::from_assignment(&out.colors);
    Ok(report.finish(
        out.proven,
        out.lower,
        Some(Certificate::Coloring { coloring }),
        out.nodes,
    ))
}

/// `χ'(G) = χ(L(G))`; the certificate colours the base edges.
pub fn edge_chromatic_number(g: &Graph, budget: Budget) -> Result<SolveReport> {
    let line = line_graph(g)?;
    let adj = adjacency(line.graph())?;
    let mut report = ReportBuilder::new(Problem::EdgeChromatic);
    let (_, max_degree) = g.degree_extremes()?;
    report.bound("max-degree", max_degree);
    let out = color_exactly(&adj, budget, &mut report);
    let coloring = Coloring::from_assignment(&out.colors);
    let colors = (0..line.graph().order())
        .map(|e| EdgeColor {
            edge: line.edge_of(e),
            color: coloring.class_of(e),
        })
        .collect();
    Ok(report.finish(
        out.proven,
        out.lower.max(max_degree),
        Some(Certificate::EdgeColoring { colors }),
        out.nodes,
    ))
}
