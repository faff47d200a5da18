//! Immutable simple undirected graphs.
//!
//! A [`Graph`] is built once through a [`GraphBuilder`] and never mutated
//! afterwards. Adjacency is stored as one bit row per vertex so that
//! neighbourhood containment tests are word-parallel.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Dense vertex index in `0..order`.
pub type VertexId = usize;

#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    order: usize,
    edges: Vec<(VertexId, VertexId)>,
    labels: Option<Vec<String>>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            ..Self::default()
        }
    }

    /// Adds the edge `uv`, growing the vertex range if needed.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<&mut Self> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.order = self.order.max(u.max(v) + 1);
        self.edges.push((u.min(v), u.max(v)));
        Ok(self)
    }

    pub fn with_edges(
        mut self,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        for (u, v) in edges {
            self.add_edge(u, v)?;
        }
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn build(self) -> Result<Graph> {
        let GraphBuilder {
            order,
            mut edges,
            labels,
        } = self;
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelEdge(w[0].0, w[0].1));
        }
        if let Some(labels) = &labels {
            if labels.len() != order {
                return Err(Error::InvalidParameter(format!(
                    "{} labels supplied for {} vertices",
                    labels.len(),
                    order
                )));
            }
        }
        let mut adj = vec![FixedBitSet::with_capacity(order); order];
        for &(u, v) in &edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, edges, labels })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    edges: Vec<(VertexId, VertexId)>,
    labels: Option<Vec<String>>,
}

/// Result of [`Graph::induced_subgraph`]: the subgraph plus the map from
/// its vertices back to the parent's.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub parent_of: Vec<VertexId>,
}

impl InducedSubgraph {
    pub fn to_parent(&self, v: VertexId) -> VertexId {
        self.parent_of[v]
    }
}

impl Graph {
    pub fn from_edges(order: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        GraphBuilder::new(order)
            .with_edges(edges.iter().copied())?
            .build()
    }

    pub fn empty(order: usize) -> Self {
        GraphBuilder::new(order)
            .build()
            .expect("edgeless graph is always valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order()
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && v < self.order() && self.adj[u].contains(v)
    }

    /// Neighbour row of `v` as a bit set. Panics if `v` is out of range.
    pub fn neighbor_bits(&self, v: VertexId) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].ones()
    }

    /// `N(v)`, sorted ascending.
    pub fn open_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check(v)?;
        Ok(self.neighbors(v).collect())
    }

    /// `N[v]`, sorted ascending.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check(v)?;
        let mut row = self.adj[v].clone();
        row.insert(v);
        Ok(row.ones().collect())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones(..)
    }

    /// `(δ, Δ)`.
    pub fn degree_extremes(&self) -> Result<(usize, usize)> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        let degrees = self.vertices().map(|v| self.degree(v));
        let (lo, hi) = degrees.fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        Ok((lo, hi))
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.degree_extremes().map(|(lo, _)| lo)
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<VertexId> {
        self.vertices().find(|&v| self.adj[v].is_clear())
    }

    /// Fails with [`Error::IsolatedVertex`] unless `δ ≥ 1`.
    pub fn require_positive_min_degree(&self) -> Result<()> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        match self.isolated_vertex() {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// `G[S]`. Vertices of the result follow the order of `s` after sorting
    /// and deduplication.
    pub fn induced_subgraph(&self, s: &[VertexId]) -> Result<InducedSubgraph> {
        let mut kept = s.to_vec();
        kept.sort_unstable();
        kept.dedup();
        for &v in &kept {
            self.check(v)?;
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let mut builder = GraphBuilder::new(kept.len()).with_edges(edges)?;
        if let Some(labels) = &self.labels {
            builder = builder.with_labels(kept.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(InducedSubgraph {
            graph: builder.build()?,
            parent_of: kept,
        })
    }

    /// Components ordered by their smallest member; members sorted.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.connected_components().len() == 1
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest shortest-path distance; `None` means infinite (disconnected).
    pub fn diameter(&self) -> Result<Option<usize>> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for v in self.vertices() {
            for d in self.distances_from(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(None),
                }
            }
        }
        Ok(Some(best))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        n > 0 && self.size() == n * (n - 1) / 2
    }

    /// Complete bipartite `K_{p,q}` with `p, q ≥ 1`.
    pub fn is_complete_bipartite(&self) -> bool {
        if self.order() < 2 || !self.is_connected() {
            return false;
        }
        // In K_{p,q} the side of vertex 0 is exactly its non-neighbours.
        let mut side = self.adj[0].clone();
        side.toggle_range(..);
        let p = side.count_ones(..);
        let q = self.order() - p;
        if q == 0 || self.size() != p * q {
            return false;
        }
        self.edges
            .iter()
            .all(|&(u, v)| side.contains(u) != side.contains(v))
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        GraphBuilder::new(shift + other.order())
            .with_edges(edges)
            .and_then(GraphBuilder::build)
            .expect("union of simple graphs is simple")
    }

    /// Exact isomorphism test by degree-refined backtracking. Intended for
    /// small graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        let n = self.order();
        if n != other.order() || self.size() != other.size() {
            return false;
        }
        let mut da: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = other.vertices().map(|v| other.degree(v)).collect();
        let (deg_a, deg_b) = (da.clone(), db.clone());
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            a: &Graph,
            b: &Graph,
            deg_a: &[usize],
            deg_b: &[usize],
            next: usize,
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if next == a.order() {
                return true;
            }
            for cand in b.vertices() {
                if used[cand] || deg_a[next] != deg_b[cand] {
                    continue;
                }
                let consistent = (0..next).all(|u| a.has_edge(u, next) == b.has_edge(map[u], cand));
                if !consistent {
                    continue;
                }
                map[next] = cand;
                used[cand] = true;
                if extend(a, b, deg_a, deg_b, next + 1, map, used) {
                    return true;
                }
                used[cand] = false;
            }
            false
        }
        extend(self, other, &deg_a, &deg_b, 0, &mut map, &mut used)
    }

    /// Edge-list text: an `order N` header followed by one `u v` line per edge.
    pub fn to_edge_list(&self, one_indexed: bool) -> String {
        let shift = usize::from(one_indexed);
        let mut out = format!("order {}\n", self.order());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + shift, v + shift);
        }
        out
    }

    /// Parses the edge-list format: one `u v` pair per line, `#` starts a
    /// comment, blank lines are ignored, and an optional `order N` line
    /// declares isolated trailing vertices.
    pub fn parse_edge_list(text: &str, one_indexed: bool) -> Result<Graph> {
        let mut builder = GraphBuilder::new(0);
        let mut declared = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] == "order" {
                let [_, n] = fields[..] else {
                    return Err(err("expected `order N`".into()));
                };
                let n: usize = n.parse().map_err(|_| err(format!("bad order `{n}`")))?;
                declared = Some(n);
                continue;
            }
            let [a, b] = fields[..] else {
                return Err(err(format!("expected two vertex ids, got `{line}`")));
            };
            let parse = |tok: &str| -> Result<usize> {
                let x: usize = tok
                    .parse()
                    .map_err(|_| err(format!("bad vertex id `{tok}`")))?;
                if one_indexed {
                    x.checked_sub(1)
                        .ok_or_else(|| err("vertex 0 in 1-indexed input".into()))
                } else {
                    Ok(x)
                }
            };
            let (u, v) = (parse(a)?, parse(b)?);
            builder.add_edge(u, v).map_err(|e| err(e.to_string()))?;
        }
        if let Some(n) = declared {
            if n < builder.order {
                return Err(Error::Parse {
                    line: 0,
                    message: format!(
                        "declared order {n} but edges reference vertex {}",
                        builder.order - 1
                    ),
                });
            }
            builder.order = n;
        }
        builder.build()
    }
}
