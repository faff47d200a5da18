//! Exact solvers for `χ_d^t`, `χ`, `χ'`, `γ_t` and `α`.
//!
//! Every solver returns a [`SolveReport`] whose certificate re-validates
//! through the independent checkers in [`check`].

pub mod check;
pub mod chromatic;
pub mod cliques;
pub mod domination;
pub mod independence;
pub mod mask;
pub mod tdc;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub use check::{common_neighborhood, is_tdc, private_neighbors, TdcCheck, TdcViolation};
pub use chromatic::{chromatic_number, edge_chromatic_number};
pub use domination::{is_total_dominating, min_tds_enumeration, total_domination_number};
pub use independence::independence_number;
pub use tdc::{tdc_number, tdc_number_of_middle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    Tdc,
    Chromatic,
    EdgeChromatic,
    TotalDomination,
    Independence,
}

impl Problem {
    pub const ALL: [Problem; 5] = [
        Problem::Tdc,
        Problem::Chromatic,
        Problem::EdgeChromatic,
        Problem::TotalDomination,
        Problem::Independence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Tdc => "tdc",
            Problem::Chromatic => "chromatic",
            Problem::EdgeChromatic => "edge-chromatic",
            Problem::TotalDomination => "total-domination",
            Problem::Independence => "independence",
        }
    }
}

impl std::str::FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.replace('_', "-");
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == wanted)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown problem `{s}`")))
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// Solves `problem` on `g`. For edge colouring the certificate colours the
/// edges of `g`.
pub fn solve(problem: Problem, g: &Graph, budget: Budget) -> Result<SolveReport> {
    match problem {
        Problem::Tdc => tdc_number(g, budget),
        Problem::Chromatic => chromatic_number(g, budget),
        Problem::EdgeChromatic => edge_chromatic_number(g, budget),
        Problem::TotalDomination => total_domination_number(g, budget),
        Problem::Independence => independence_number(g, budget),
    }
}

/// As [`solve`] on `M(base)`; the TDC solve also uses the bounds that
/// follow from the middle-graph structure.
pub fn solve_middle(
    problem: Problem,
    mg: &crate::middle::MiddleGraph,
    budget: Budget,
) -> Result<SolveReport> {
    match problem {
        Problem::Tdc => tdc_number_of_middle(mg, budget),
        other => solve(other, mg.graph(), budget),
    }
}

/// Search limits. Node limits keep results reproducible; a time limit
/// does not.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_time: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

/// Tracks node counts and the deadline during one search.
#[derive(Debug)]
pub(crate) struct Meter {
    pub nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Self {
            nodes: 0,
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.max_time.map(|d| Instant::now() + d),
            exhausted: false,
        }
    }

    /// Counts one node; false once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                self.exhausted = Instant::now() >= deadline;
            }
        }
        !self.exhausted
    }
}

/// A proper colouring as an ordered list of disjoint non-empty classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    classes: Vec<Vec<VertexId>>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

impl Coloring {
    /// Validates that `classes` partition `0..order` into non-empty sets.
    pub fn from_classes(order: usize, classes: Vec<Vec<VertexId>>) -> Result<Self> {
        let mut class_of = vec![usize::MAX; order];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidColoring(format!("class {c} is empty")));
            }
            for &v in class {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::InvalidColoring(format!(
                        "vertex {v} is in two classes"
                    )));
                }
                class_of[v] = c;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidColoring(format!("vertex {v} is uncoloured")));
        }
        let classes = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(Self { classes, class_of })
    }

    /// Builds classes from a colour per vertex; colours are renumbered in
    /// order of first use.
    pub fn from_assignment(colors: &[usize]) -> Self {
        let mut renumber = std::collections::HashMap::new();
        let mut classes: Vec<Vec<VertexId>> = Vec::new();
        let mut class_of = Vec::with_capacity(colors.len());
        for (v, &c) in colors.iter().enumerate() {
            let next = classes.len();
            let idx = *renumber.entry(c).or_insert(next);
            if idx == classes.len() {
                classes.push(Vec::new());
            }
            classes[idx].push(v);
            class_of.push(idx);
        }
        Self { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, v: VertexId) -> usize {
        self.class_of[v]
    }

    /// Restores `class_of` after deserialization.
    pub fn reindex(self, order: usize) -> Result<Self> {
        Self::from_classes(order, self.classes)
    }

    pub fn monochromatic_edges(&self, g: &Graph) -> Vec<(VertexId, VertexId)> {
        g.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| self.class_of[u] == self.class_of[v])
            .collect()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.order() == g.order() && self.monochromatic_edges(g).is_empty()
    }
}

/// A colouring together with, for every vertex, a class it totally
/// dominates (`classes[witness[v]] ⊆ N(v)`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdcCertificate {
    pub coloring: Coloring,
    pub witness: Vec<usize>,
}

impl TdcCertificate {
    pub fn num_classes(&self) -> usize {
        self.coloring.num_classes()
    }

    /// Independent re-check of properness and every witness.
    pub fn validates(&self, g: &Graph) -> bool {
        self.coloring.is_proper(g)
            && self.witness.len() == g.order()
            && self.witness.iter().enumerate().all(|(v, &k)| {
                self.coloring
                    .classes()
                    .get(k)
                    .is_some_and(|class| class.iter().all(|&u| g.has_edge(u, v)))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalDominatingSet {
    pub set: Vec<VertexId>,
}

impl TotalDominatingSet {
    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn validates(&self, g: &Graph) -> bool {
        is_total_dominating(g, &self.set)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColor {
    pub edge: (VertexId, VertexId),
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Tdc(TdcCertificate),
    Coloring { coloring: Coloring },
    EdgeColoring { colors: Vec<EdgeColor> },
    TotalDominatingSet(TotalDominatingSet),
    IndependentSet { set: Vec<VertexId> },
}

impl Certificate {
    /// Objective value the certificate witnesses.
    pub fn value(&self) -> usize {
        match self {
            Certificate::Tdc(c) => c.num_classes(),
            Certificate::Coloring { coloring } => coloring.num_classes(),
            Certificate::EdgeColoring { colors } => {
                let mut seen: Vec<usize> = colors.iter().map(|c| c.color).collect();
                seen.sort_unstable();
                seen.dedup();
                seen.len()
            }
            Certificate::TotalDominatingSet(s) => s.len(),
            Certificate::IndependentSet { set } => set.len(),
        }
    }

    /// Re-validates against `g` (for edge colourings, `g` is the base graph).
    pub fn validates(&self, g: &Graph) -> bool {
        match self {
            Certificate::Tdc(c) => c.validates(g),
            Certificate::Coloring { coloring } => coloring.is_proper(g),
            Certificate::EdgeColoring { colors } => {
                let mut listed: Vec<_> = colors.iter().map(|c| c.edge).collect();
                listed.sort_unstable();
                if listed != g.edges() {
                    return false;
                }
                colors.iter().enumerate().all(|(a, x)| {
                    colors[a + 1..].iter().all(|y| {
                        let share = x.edge.0 == y.edge.0
                            || x.edge.0 == y.edge.1
                            || x.edge.1 == y.edge.0
                            || x.edge.1 == y.edge.1;
                        !share || x.color != y.color
                    })
                })
            }
            Certificate::TotalDominatingSet(s) => s.validates(g),
            Certificate::IndependentSet { set } => {
                set.iter().all(|&v| v < g.order())
                    && set
                        .iter()
                        .enumerate()
                        .all(|(a, &u)| set[a + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
            }
        }
    }

    /// Restores derived indices after JSON decoding.
    pub fn reindex(self, order: usize) -> Result<Self> {
        Ok(match self {
            Certificate::Tdc(TdcCertificate { coloring, witness }) => {
                Certificate::Tdc(TdcCertificate {
                    coloring: coloring.reindex(order)?,
                    witness,
                })
            }
            Certificate::Coloring { coloring } => Certificate::Coloring {
                coloring: coloring.reindex(order)?,
            },
            other => other,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Optimal,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: usize,
}

/// Outcome of one exact solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub problem: Problem,
    pub status: SolveStatus,
    /// Proven optimum; `None` when the budget ran out first.
    pub optimum: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: Option<usize>,
    /// Best solution found; optimal when `status` is `Optimal`.
    pub certificate: Option<Certificate>,
    pub nodes: u64,
    pub bounds: Vec<BoundEntry>,
    /// Wall time; not serialized, so reports stay byte-stable.
    #[serde(skip)]
    pub time_ms: u64,
}

impl SolveReport {
    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }

    pub fn tdc_certificate(&self) -> Option<&TdcCertificate> {
        match &self.certificate {
            Some(Certificate::Tdc(c)) => Some(c),
            _ => None,
        }
    }

    /// Proven optimum, or an error naming the open interval.
    pub fn require_optimum(&self) -> Result<usize> {
        self.optimum.ok_or_else(|| {
            Error::InvalidParameter(format!(
                "{} solve exhausted its budget with bounds [{}, {}]",
                self.problem,
                self.lower_bound,
                self.upper_bound.map_or("?".to_string(), |u| u.to_string())
            ))
        })
    }
}

pub(crate) struct ReportBuilder {
    problem: Problem,
    started: Instant,
    bounds: Vec<BoundEntry>,
}

impl ReportBuilder {
    pub fn new(problem: Problem) -> Self {
        Self {
            problem,
            started: Instant::now(),
            bounds: Vec::new(),
        }
    }

    pub fn bound(&mut self, name: &str, value: usize) {
        self.bounds.push(BoundEntry {
            name: name.to_string(),
            value,
        });
    }

    pub fn best_bound(&self) -> usize {
        self.bounds.iter().map(|b| b.value).max().unwrap_or(0)
    }

    pub fn finish(
        self,
        proven: bool,
        lower_bound: usize,
        certificate: Option<Certificate>,
        nodes: u64,
    ) -> SolveReport {
        let upper_bound = certificate.as_ref().map(Certificate::value);
        let optimum = if proven { upper_bound } else { None };
        SolveReport {
            problem: self.problem,
            status: if optimum.is_some() {
                SolveStatus::Optimal
            } else {
                SolveStatus::BudgetExhausted
            },
            optimum,
            lower_bound: optimum.unwrap_or(lower_bound),
            upper_bound,
            certificate,
            nodes,
            bounds: self.bounds,
            time_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}
