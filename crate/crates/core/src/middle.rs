//! Middle graphs and line graphs with provenance.
//!
//! `M(G)` has one vertex per vertex of `G` followed by one vertex per edge
//! of `G`. Originals keep their base index; the edge-vertex for the `k`-th
//! base edge (lexicographic order) is `n + k`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MiddleVertexLabel {
    #[serde(rename = "orig")]
    Original { i: VertexId },
    #[serde(rename = "edge")]
    EdgeVertex { i: VertexId, j: VertexId },
}

impl MiddleVertexLabel {
    pub fn is_original(self) -> bool {
        matches!(self, Self::Original { .. })
    }

    pub fn display(self) -> String {
        match self {
            Self::Original { i } => format!("v{i}"),
            Self::EdgeVertex { i, j } => format!("m{i}_{j}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MiddleGraph {
    graph: Graph,
    base: Graph,
    labels: Vec<MiddleVertexLabel>,
}

#[derive(Clone, Debug)]
pub struct LineGraph {
    graph: Graph,
    base: Graph,
    edge_of: Vec<(VertexId, VertexId)>,
}

/// Pairs of base edges sharing an endpoint, as indices into `base.edges()`.
fn incident_edge_pairs(base: &Graph) -> Vec<(usize, usize)> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); base.order()];
    for (k, &(u, v)) in base.edges().iter().enumerate() {
        incident[u].push(k);
        incident[v].push(k);
    }
    let mut pairs: Vec<(usize, usize)> = incident
        .iter()
        .flat_map(|ks| {
            ks.iter()
                .enumerate()
                .flat_map(move |(a, &x)| ks[a + 1..].iter().map(move |&y| (x.min(y), x.max(y))))
        })
        .collect();
    // Two distinct simple edges share at most one endpoint.
    pairs.sort_unstable();
    pairs
}

pub fn middle_graph(base: &Graph) -> Result<MiddleGraph> {
    let n = base.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut labels: Vec<MiddleVertexLabel> =
        (0..n).map(|i| MiddleVertexLabel::Original { i }).collect();
    let mut builder = GraphBuilder::new(n + base.size());
    for (k, &(i, j)) in base.edges().iter().enumerate() {
        labels.push(MiddleVertexLabel::EdgeVertex { i, j });
        builder.add_edge(i, n + k)?;
        builder.add_edge(j, n + k)?;
    }
    for (a, b) in incident_edge_pairs(base) {
        builder.add_edge(n + a, n + b)?;
    }
    let graph = builder
        .with_labels(labels.iter().map(|l| l.display()).collect())
        .build()?;
    Ok(MiddleGraph {
        graph,
        base: base.clone(),
        labels,
    })
}

pub fn line_graph(base: &Graph) -> Result<LineGraph> {
    if base.size() == 0 {
        return Err(Error::Edgeless);
    }
    let edge_of = base.edges().to_vec();
    let labels = edge_of.iter().map(|&(i, j)| format!("e{i}_{j}")).collect();
    let graph = GraphBuilder::new(edge_of.len())
        .with_edges(incident_edge_pairs(base))?
        .with_labels(labels)
        .build()?;
    Ok(LineGraph {
        graph,
        base: base.clone(),
        edge_of,
    })
}

impl MiddleGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn labels(&self) -> &[MiddleVertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> MiddleVertexLabel {
        self.labels[v]
    }

    pub fn original(&self, i: VertexId) -> VertexId {
        assert!(i < self.base.order());
        i
    }

    /// The edge-vertex for base edge `ij`, if that edge exists.
    pub fn edge_vertex(&self, i: VertexId, j: VertexId) -> Option<VertexId> {
        let key = (i.min(j), i.max(j));
        self.base
            .edges()
            .binary_search(&key)
            .ok()
            .map(|k| self.base.order() + k)
    }

    pub fn originals(&self) -> std::ops::Range<VertexId> {
        0..self.base.order()
    }

    pub fn edge_vertices(&self) -> std::ops::Range<VertexId> {
        self.base.order()..self.graph.order()
    }

    /// The vertex subset inducing `L(base)` inside `M(base)`.
    pub fn embed_line(&self) -> Vec<VertexId> {
        self.edge_vertices().collect()
    }

    /// True when the base is connected with at least three vertices, the
    /// hypothesis under which `⌈2n/3⌉` bounds `γ_t` and `χ_d^t` from below.
    pub fn admits_two_thirds_bound(&self) -> bool {
        self.base.order() >= 3 && self.base.is_connected()
    }

    pub fn to_json(&self) -> MiddleGraphJson {
        MiddleGraphJson {
            order: self.graph.order(),
            edges: self.graph.edges().to_vec(),
            labels: self.labels.clone(),
        }
    }
}

impl LineGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn edge_of(&self, v: VertexId) -> (VertexId, VertexId) {
        self.edge_of[v]
    }
}

pub fn embed_line_in_middle(mg: &MiddleGraph) -> Vec<VertexId> {
    mg.embed_line()
}

/// Serialized form: `{order, edges, labels:[{kind:"orig",i}|{kind:"edge",i,j}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiddleGraphJson {
    pub order: usize,
    pub edges: Vec<(VertexId, VertexId)>,
    pub labels: Vec<MiddleVertexLabel>,
}

impl MiddleGraphJson {
    /// Rebuilds the base graph from labels and adjacency alone, checking
    /// that the adjacency really is the middle graph of that base.
    pub fn recover(&self) -> Result<MiddleGraph> {
        if self.labels.len() != self.order {
            return Err(Error::InvalidParameter(
                "label count differs from order".into(),
            ));
        }
        let n = self.labels.iter().filter(|l| l.is_original()).count();
        let base_edges: Vec<(VertexId, VertexId)> = self
            .labels
            .iter()
            .filter_map(|l| match *l {
                MiddleVertexLabel::EdgeVertex { i, j } => Some((i, j)),
                MiddleVertexLabel::Original { .. } => None,
            })
            .collect();
        let base = Graph::from_edges(n, &base_edges)?;
        let rebuilt = middle_graph(&base)?;
        let edges = Graph::from_edges(self.order, &self.edges)?;
        if rebuilt.labels != self.labels || rebuilt.graph.edges() != edges.edges() {
            return Err(Error::InvalidParameter(
                "adjacency is not the middle graph of the labelled base".into(),
            ));
        }
        Ok(rebuilt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(
            leaves + 1,
            &(1..=leaves).map(|i| (0, i)).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((0, n - 1));
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn middle_of_p3() {
        let mg = middle_graph(&path(3)).unwrap();
        assert_eq!(mg.graph().order(), 5);
        assert_eq!(mg.graph().size(), 5);
        let m01 = mg.edge_vertex(0, 1).unwrap();
        let m12 = mg.edge_vertex(2, 1).unwrap();
        let tri = mg.graph().induced_subgraph(&[m01, 1, m12]).unwrap();
        assert!(tri.graph.is_complete() && tri.graph.order() == 3);
        assert_eq!(mg.label(4), MiddleVertexLabel::EdgeVertex { i: 1, j: 2 });
    }

    #[test]
    fn middle_of_k2_is_p3() {
        let mg = middle_graph(&path(2)).unwrap();
        assert!(mg.graph().is_isomorphic(&path(3)));
    }

    #[test]
    fn star_hub_and_edge_vertices_form_clique() {
        let mg = middle_graph(&star(3)).unwrap();
        let mut s = vec![0];
        s.extend(mg.edge_vertices());
        let k = mg.graph().induced_subgraph(&s).unwrap().graph;
        assert!(k.is_complete() && k.order() == 4);
    }

    #[test]
    fn line_graphs() {
        let l = line_graph(&star(3)).unwrap();
        assert!(l.graph().is_complete() && l.graph().order() == 3);
        assert!(line_graph(&path(4))
            .unwrap()
            .graph()
            .is_isomorphic(&path(3)));
        assert!(line_graph(&cycle(5))
            .unwrap()
            .graph()
            .is_isomorphic(&cycle(5)));
        assert!(matches!(line_graph(&Graph::empty(3)), Err(Error::Edgeless)));
        assert_eq!(l.edge_of(2), (0, 3));
    }

    #[test]
    fn line_embedding() {
        let mg = middle_graph(&path(3)).unwrap();
        assert_eq!(embed_line_in_middle(&mg), vec![3, 4]);
        let mg = middle_graph(&cycle(4)).unwrap();
        let sub = mg
            .graph()
            .induced_subgraph(&embed_line_in_middle(&mg))
            .unwrap();
        assert_eq!(
            sub.graph.edges(),
            line_graph(&cycle(4)).unwrap().graph().edges()
        );
        assert!(sub.graph.is_isomorphic(&cycle(4)));
    }

    #[test]
    fn json_round_trip() {
        let mg = middle_graph(&cycle(4)).unwrap();
        let text = serde_json::to_string(&mg.to_json()).unwrap();
        assert!(text.contains(r#"{"kind":"orig","i":0}"#));
        assert!(text.contains(r#"{"kind":"edge","i":0,"j":1}"#));
        let back: MiddleGraphJson = serde_json::from_str(&text).unwrap();
        let rebuilt = back.recover().unwrap();
        assert_eq!(rebuilt.base(), mg.base());
        let mut tampered = back.clone();
        tampered.edges.pop();
        assert!(tampered.recover().is_err());
    }
}
