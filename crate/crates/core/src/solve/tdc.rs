//! Exact total dominator chromatic number.
//!
//! Branch and bound over partial colourings. Each search node carries, per
//! colour class, its members, the union of their neighbourhoods (vertices
//! barred from joining), their common neighbourhood (vertices the class
//! currently totally dominates) and a lock mask of vertices still allowed
//! to join. Propagation runs to a fixpoint before branching:
//!
//! * a vertex with no class left that could totally dominate it, and no
//!   room to open one inside its neighbourhood, kills the node;
//! * a vertex with exactly one possible dominating class locks that class
//!   to its neighbourhood;
//! * an unassigned vertex with a single admissible class is assigned.
//!
//! New classes are always numbered in order of first use, which removes
//! colour permutation symmetry. All tie-breaks go to the lowest vertex
//! index, so node counts are reproducible.

use crate::error::Result;
use crate::families::ceil_two_thirds;
use crate::graph::Graph;
use crate::middle::MiddleGraph;

use super::check::{is_tdc, TdcCheck};
use super::cliques::max_clique;
use super::mask::{adjacency, bit, bits, count, full, Mask};
use super::{Budget, Certificate, Coloring, Meter, Problem, ReportBuilder, SolveReport};

const CLIQUE_BOUND_NODES: u64 = 200_000;
const NO_CLASS: u8 = u8::MAX;

#[derive(Clone, Debug, Default)]
struct Node {
    assign: Vec<u8>,
    members: Vec<Mask>,
    forbid: Vec<Mask>,
    cn: Vec<Mask>,
    allowed: Vec<Mask>,
    count: usize,
    unassigned: Mask,
    /// Vertices whose dominating class can no longer be spoiled.
    settled: Mask,
}

impl Node {
    fn root(n: usize) -> Self {
        Node {
            assign: vec![NO_CLASS; n],
            members: vec![0; n],
            forbid: vec![0; n],
            cn: vec![0; n],
            allowed: vec![0; n],
            count: 0,
            unassigned: full(n),
            settled: 0,
        }
    }

    fn can_join(&self, u: usize, c: usize) -> bool {
        self.allowed[c] & bit(u) != 0 && self.forbid[c] & bit(u) == 0
    }

    fn assign(&mut self, adj: &[Mask], u: usize, c: usize) {
        if c == self.count {
            self.count += 1;
            self.members[c] = 0;
            self.forbid[c] = 0;
            self.cn[c] = Mask::MAX;
            self.allowed[c] = Mask::MAX;
        }
        self.assign[u] = c as u8;
        self.members[c] |= bit(u);
        self.forbid[c] |= adj[u];
        self.cn[c] &= adj[u];
        self.unassigned &= !bit(u);
    }
}

struct TdcSearch<'a> {
    adj: &'a [Mask],
    all: Mask,
    /// Most classes a solution may still use to count as an improvement.
    limit: usize,
    lower: usize,
    best: Option<Vec<u8>>,
    meter: Meter,
    stack: Vec<Node>,
}

impl TdcSearch<'_> {
    /// Runs propagation on `node`; false if the node is infeasible.
    fn propagate(&self, node: &mut Node) -> bool {
        let adj = self.adj;
        loop {
            if node.count > self.limit {
                return false;
            }
            let mut changed = false;
            let can_open = node.count < self.limit;

            // Domination requirements.
            let mut needs_new: Mask = 0;
            for v in bits(self.all & !node.settled) {
                let mut options = 0;
                let mut only = 0;
                let mut safe = false;
                for c in 0..node.count {
                    if node.cn[c] & bit(v) != 0 {
                        options += 1;
                        only = c;
                        if node.allowed[c] & node.unassigned & !adj[v] == 0 {
                            safe = true;
                            break;
                        }
                    }
                }
                if safe {
                    node.settled |= bit(v);
                    continue;
                }
                let can_seed = can_open && adj[v] & node.unassigned != 0;
                match (options, can_seed) {
                    (0, false) => return false,
                    (0, true) => needs_new |= bit(v),
                    (1, false) => {
                        node.allowed[only] &= adj[v];
                        node.settled |= bit(v);
                        changed = true;
                    }
                    _ => {}
                }
            }

            // Vertices that need a fresh dominating class, with pairwise
            // disjoint room for it, each need a distinct new class.
            let mut room_used = 0;
            let mut fresh = 0;
            for v in bits(needs_new) {
                let room = adj[v] & node.unassigned;
                if room & room_used == 0 {
                    room_used |= room;
                    fresh += 1;
                }
            }
            if node.count + fresh > self.limit {
                return false;
            }

            // Colour domains.
            for u in bits(node.unassigned) {
                let can_open = node.count < self.limit;
                let mut options = 0;
                let mut only = 0;
                for c in 0..node.count {
                    if node.can_join(u, c) {
                        options += 1;
                        only = c;
                        if options > 1 {
                            break;
                        }
                    }
                }
                match (options, can_open) {
                    (0, false) => return false,
                    (0, true) => {
                        let c = node.count;
                        node.assign(adj, u, c);
                        changed = true;
                    }
                    (1, false) => {
                        node.assign(adj, u, only);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn pick(&self, node: &Node) -> usize {
        let can_open = usize::from(node.count < self.limit);
        bits(node.unassigned)
            .min_by_key(|&u| {
                let options = (0..node.count).filter(|&c| node.can_join(u, c)).count() + can_open;
                (
                    options,
                    std::cmp::Reverse(count(self.adj[u] & node.unassigned)),
                    u,
                )
            })
            .expect("non-empty")
    }

    /// Explores the node at `depth`; false when the budget ran out.
    fn search(&mut self, depth: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let mut node = std::mem::take(&mut self.stack[depth]);
        let alive = self.propagate(&mut node);
        let result = if !alive {
            true
        } else if node.unassigned == 0 {
            self.limit = node.count - 1;
            self.best = Some(node.assign.clone());
            true
        } else {
            self.branch(depth, &node)
        };
        self.stack[depth] = node;
        result
    }

    fn branch(&mut self, depth: usize, node: &Node) -> bool {
        let u = self.pick(node);
        if self.stack.len() <= depth + 1 {
            self.stack.push(Node::default());
        }
        for c in 0..=node.count {
            if self.limit < self.lower {
                return true;
            }
            let opens = c == node.count;
            if opens {
                if node.count >= self.limit {
                    break;
                }
            } else if !node.can_join(u, c) {
                continue;
            }
            let child = &mut self.stack[depth + 1];
            child.clone_from(node);
            child.assign(self.adj, u, c);
            if !self.search(depth + 1) {
                return false;
            }
        }
        true
    }
}

/// Colouring with one class per edge-vertex and one class holding every
/// original vertex. A TDC whenever every base component has two or more
/// edges or is a single edge on its own.
fn middle_seed(mg: &MiddleGraph) -> Option<Coloring> {
    let n = mg.base().order();
    let colors: Vec<usize> = mg
        .graph()
        .vertices()
        .map(|v| if v < n { 0 } else { v - n + 1 })
        .collect();
    let coloring = Coloring::from_assignment(&colors);
    matches!(is_tdc(mg.graph(), &coloring), Ok(TdcCheck::Valid(_))).then_some(coloring)
}

fn certificate_for(g: &Graph, assign: &[u8]) -> Certificate {
    let colors: Vec<usize> = assign.iter().map(|&c| c as usize).collect();
    let coloring = Coloring::from_assignment(&colors);
    match is_tdc(g, &coloring) {
        Ok(TdcCheck::Valid(cert)) => Certificate::Tdc(cert),
        other => panic!("search produced an invalid total dominator colouring: {other:?}"),
    }
}

fn solve(g: &Graph, middle: Option<&MiddleGraph>, budget: Budget) -> Result<SolveReport> {
    g.require_positive_min_degree()?;
    let adj = adjacency(g)?;
    let n = g.order();
    let all = full(n);
    let mut report = ReportBuilder::new(Problem::Tdc);

    report.bound("two", 2);
    let (clique, _, _) = max_clique(&adj, all, CLIQUE_BOUND_NODES);
    report.bound("clique", count(clique));
    if let Some(mg) = middle {
        if mg.admits_two_thirds_bound() {
            report.bound("two-thirds-middle", ceil_two_thirds(mg.base().order()));
        }
        // Each original needs a singleton edge-vertex class, each such class
        // serves at most two originals, and the originals need a class too.
        report.bound("middle-singletons", mg.base().order().div_ceil(2) + 1);
    }
    let lower = report.best_bound();

    let seed: Vec<u8> = middle
        .and_then(middle_seed)
        .map(|c| g.vertices().map(|v| c.class_of(v) as u8).collect())
        .filter(|s: &Vec<u8>| s.iter().map(|&c| c as usize + 1).max().unwrap_or(0) <= n)
        .unwrap_or_else(|| (0..n).map(|v| v as u8).collect());
    let seed_k = seed.iter().map(|&c| c as usize + 1).max().unwrap_or(0);

    let mut search = TdcSearch {
        adj: &adj,
        all,
        limit: seed_k - 1,
        lower,
        best: Some(seed),
        meter: Meter::new(budget),
        stack: vec![Node::root(n)],
    };
    let finished = seed_k <= lower || search.search(0);
    let best = search.best.take().expect("seeded incumbent");
    let certificate = certificate_for(g, &best);
    Ok(report.finish(finished, lower, Some(certificate), search.meter.nodes))
}

/// `χ_d^t(g)` for an arbitrary graph with positive minimum degree.
pub fn tdc_number(g: &Graph, budget: Budget) -> Result<SolveReport> {
    solve(g, None, budget)
}

/// `χ_d^t(M(G))`, using the extra lower bounds and the constructive seed
/// that middle-graph provenance makes available.
pub fn tdc_number_of_middle(mg: &MiddleGraph, budget: Budget) -> Result<SolveReport> {
    solve(mg.graph(), Some(mg), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::families::{complete, cycle, friendship, path, star};
    use crate::middle::middle_graph;

    fn tdc(g: &Graph) -> usize {
        let r = tdc_number(g, Budget::UNLIMITED).unwrap();
        assert!(r.certificate.as_ref().unwrap().validates(g));
        r.optimum.unwrap()
    }

    fn tdc_middle(base: &Graph) -> usize {
        let mg = middle_graph(base).unwrap();
        let r = tdc_number_of_middle(&mg, Budget::UNLIMITED).unwrap();
        assert!(r.certificate.as_ref().unwrap().validates(mg.graph()));
        let plain = tdc(mg.graph());
        assert_eq!(plain, r.optimum.unwrap());
        plain
    }

    #[test]
    fn plain_graphs() {
        assert_eq!(tdc(&path(4)), 3);
        assert_eq!(tdc(&complete(4)), 4);
        assert_eq!(tdc(&cycle(4)), 2);
        assert_eq!(tdc(&star(4)), 2);
        assert_eq!(tdc(&complete(2)), 2);
    }

    #[test]
    fn middle_graphs() {
        assert_eq!(tdc_middle(&path(4)), 4);
        assert_eq!(tdc_middle(&star(4)), 5);
        assert_eq!(tdc_middle(&friendship(2)), 6);
        assert_eq!(tdc_middle(&complete(2)), 2);
        let k4 = tdc_middle(&complete(4));
        assert!((5..=6).contains(&k4));
    }

    #[test]
    fn rejects_isolated_vertices() {
        assert!(matches!(
            tdc_number(&Graph::empty(1), Budget::UNLIMITED),
            Err(Error::IsolatedVertex(0))
        ));
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            tdc_number(&g, Budget::UNLIMITED),
            Err(Error::IsolatedVertex(2))
        ));
    }

    #[test]
    fn budget_exhaustion_keeps_bounds() {
        let mg = middle_graph(&path(10)).unwrap();
        let r = tdc_number_of_middle(&mg, Budget::nodes(5)).unwrap();
        assert!(!r.is_optimal());
        assert_eq!(r.optimum, None);
        assert!(r.lower_bound >= 7);
        assert!(r.upper_bound.unwrap() >= 9);
        assert!(r.certificate.as_ref().unwrap().validates(mg.graph()));
    }

    #[test]
    fn node_counts_are_reproducible() {
        let mg = middle_graph(&cycle(7)).unwrap();
        let a = tdc_number_of_middle(&mg, Budget::UNLIMITED).unwrap();
        let b = tdc_number_of_middle(&mg, Budget::UNLIMITED).unwrap();
        assert_eq!(a.nodes, b.nodes);
        assert_eq!(a.certificate, b.certificate);
    }
}
