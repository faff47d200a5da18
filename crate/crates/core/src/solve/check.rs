//! Definition-level checkers. These never call into the searches.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

use super::{Coloring, TdcCertificate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdcViolation {
    /// Vertices adjacent to no whole colour class, ascending.
    pub undominated: Vec<VertexId>,
    pub monochromatic_edges: Vec<(VertexId, VertexId)>,
}

impl TdcViolation {
    pub fn first_undominated(&self) -> Option<VertexId> {
        self.undominated.first().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdcCheck {
    Valid(TdcCertificate),
    Violation(TdcViolation),
}

impl TdcCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, TdcCheck::Valid(_))
    }
}

fn class_inside_neighborhood(g: &Graph, class: &[VertexId], v: VertexId) -> bool {
    class.iter().all(|&u| g.has_edge(u, v))
}

/// Checks whether `c` is a total dominator colouring of `g`. The witness
/// for each vertex is the lowest-index class it totally dominates.
pub fn is_tdc(g: &Graph, c: &Coloring) -> Result<TdcCheck> {
    g.require_positive_min_degree()?;
    if c.order() != g.order() {
        return Err(Error::InvalidColoring(format!(
            "colouring covers {} vertices, graph has {}",
            c.order(),
            g.order()
        )));
    }
    let mut witness = Vec::with_capacity(g.order());
    let mut undominated = Vec::new();
    for v in g.vertices() {
        match c
            .classes()
            .iter()
            .position(|class| class_inside_neighborhood(g, class, v))
        {
            Some(k) => witness.push(k),
            None => undominated.push(v),
        }
    }
    let monochromatic_edges = c.monochromatic_edges(g);
    if undominated.is_empty() && monochromatic_edges.is_empty() {
        Ok(TdcCheck::Valid(TdcCertificate {
            coloring: c.clone(),
            witness,
        }))
    } else {
        Ok(TdcCheck::Violation(TdcViolation {
            undominated,
            monochromatic_edges,
        }))
    }
}

/// `CN(class) = { v : class ⊆ N(v) }`.
pub fn common_neighborhood(g: &Graph, class: &[VertexId]) -> Result<Vec<VertexId>> {
    if class.is_empty() {
        return Err(Error::InvalidParameter(
            "common neighbourhood of an empty class".into(),
        ));
    }
    for &u in class {
        if u >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                order: g.order(),
            });
        }
    }
    Ok(g.vertices()
        .filter(|&v| class_inside_neighborhood(g, class, v))
        .collect())
}

/// Vertices that totally dominate class `class_index` and no other class.
pub fn private_neighbors(g: &Graph, c: &Coloring, class_index: usize) -> Result<Vec<VertexId>> {
    if class_index >= c.num_classes() {
        return Err(Error::InvalidParameter(format!(
            "class index {class_index} out of range for {} classes",
            c.num_classes()
        )));
    }
    if !c.is_proper(g) {
        return Err(Error::InvalidColoring("colouring is not proper".into()));
    }
    let dominated_by = |v: VertexId, k: usize| class_inside_neighborhood(g, &c.classes()[k], v);
    Ok(g.vertices()
        .filter(|&v| {
            dominated_by(v, class_index)
                && (0..c.num_classes()).all(|k| k == class_index || !dominated_by(v, k))
        })
        .collect())
}
