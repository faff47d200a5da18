//! Graph families with known middle-graph answers, plus tree enumeration.
//!
//! Vertex numbering follows the conventions used by the closed forms:
//! the wheel hub, star centre, double-star centre and friendship centre
//! are all vertex 0.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Star,
    DoubleStar,
    Wheel,
    Complete,
    Friendship,
    TreeExhaustive,
    TreeRandom,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::DoubleStar,
        Family::Wheel,
        Family::Complete,
        Family::Friendship,
        Family::TreeExhaustive,
        Family::TreeRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::DoubleStar => "double_star",
            Family::Wheel => "wheel",
            Family::Complete => "complete",
            Family::Friendship => "friendship",
            Family::TreeExhaustive => "tree_exhaustive",
            Family::TreeRandom => "tree_random",
        }
    }

    /// Smallest admissible size parameter.
    pub fn min_n(self) -> usize {
        match self {
            Family::Path | Family::Cycle | Family::Star => 3,
            Family::DoubleStar => 1,
            Family::Wheel => 4,
            Family::Complete | Family::Friendship => 2,
            Family::TreeExhaustive | Family::TreeRandom => 2,
        }
    }

    pub fn max_n(self) -> Option<usize> {
        match self {
            Family::TreeExhaustive => Some(MAX_ENUMERATED_TREE_ORDER),
            _ => None,
        }
    }

    pub fn is_tree_family(self) -> bool {
        matches!(self, Family::TreeExhaustive | Family::TreeRandom)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == wanted)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        Self {
            family,
            n,
            seed: None,
        }
    }

    pub fn random_tree(n: usize, seed: u64) -> Self {
        Self {
            family: Family::TreeRandom,
            n,
            seed: Some(seed),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let f = self.family;
        if self.n < f.min_n() || f.max_n().is_some_and(|hi| self.n > hi) {
            let range = match f.max_n() {
                Some(hi) => format!("{}..={hi}", f.min_n()),
                None => format!("n >= {}", f.min_n()),
            };
            return Err(Error::InvalidParameter(format!(
                "{} requires {range}, got n = {}",
                f.name(),
                self.n
            )));
        }
        Ok(())
    }

    /// Short instance tag such as `path(5)` or `tree_random(7,seed=3)`.
    pub fn tag(&self) -> String {
        match self.seed {
            Some(seed) => format!("{}({},seed={seed})", self.family, self.n),
            None => format!("{}({})", self.family, self.n),
        }
    }

    /// Every graph this spec denotes: a single graph for the fixed
    /// families, all free trees for `tree_exhaustive`.
    pub fn instances(&self) -> Result<Vec<Graph>> {
        match self.family {
            Family::TreeExhaustive => {
                self.validate()?;
                enumerate_trees(self.n)
            }
            _ => Ok(vec![generate(self)?]),
        }
    }
}

fn edges_to_graph(order: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Graph {
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(order, &edges).expect("family constructions are simple graphs")
}

pub fn path(n: usize) -> Graph {
    edges_to_graph(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Graph {
    edges_to_graph(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
}

/// `K_{1,n}`: centre 0, leaves `1..=n`.
pub fn star(n: usize) -> Graph {
    edges_to_graph(n + 1, (1..=n).map(|i| (0, i)))
}

/// `S_{1,n,n}`: centre 0 joined to `1..=n`, each `i` joined to leaf `n + i`.
pub fn double_star(n: usize) -> Graph {
    edges_to_graph(2 * n + 1, (1..=n).flat_map(|i| [(0, i), (i, n + i)]))
}

/// Wheel of order `n`: hub 0 and a rim cycle on `1..n`.
pub fn wheel(n: usize) -> Graph {
    let rim = n - 1;
    let spokes = (1..n).map(|i| (0, i));
    let rim_edges = (1..rim).map(|i| (i, i + 1)).chain([(1, rim)]);
    edges_to_graph(n, spokes.chain(rim_edges))
}

pub fn complete(n: usize) -> Graph {
    edges_to_graph(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `F_n`: `n` triangles `0, 2i-1, 2i` sharing vertex 0.
pub fn friendship(n: usize) -> Graph {
    let spokes = (1..=2 * n).map(|i| (0, i));
    let blades = (1..=n).map(|i| (2 * i - 1, 2 * i));
    edges_to_graph(2 * n + 1, spokes.chain(blades))
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a tree.
pub fn tree_from_prufer(n: usize, code: &[VertexId]) -> Result<Graph> {
    if n < 2 || code.len() != n - 2 || code.iter().any(|&x| x >= n) {
        return Err(Error::InvalidParameter(format!(
            "Prüfer code of length {} does not describe a tree on {n} vertices",
            code.len()
        )));
    }
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<VertexId> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges)
}

/// Uniform random labelled tree from a seeded Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<VertexId> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    tree_from_prufer(n, &code)
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    Ok(match spec.family {
        Family::Path => path(n),
        Family::Cycle => cycle(n),
        Family::Star => star(n),
        Family::DoubleStar => double_star(n),
        Family::Wheel => wheel(n),
        Family::Complete => complete(n),
        Family::Friendship => friendship(n),
        Family::TreeRandom => random_tree(n, spec.seed.unwrap_or(0))?,
        Family::TreeExhaustive => {
            return Err(Error::InvalidParameter(
                "tree_exhaustive denotes many graphs; use enumerate_trees".into(),
            ))
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PredictedValue {
    Exact { value: usize },
    Interval { lo: usize, hi: usize },
}

impl PredictedValue {
    pub fn contains(&self, x: usize) -> bool {
        match *self {
            PredictedValue::Exact { value } => x == value,
            PredictedValue::Interval { lo, hi } => lo <= x && x <= hi,
        }
    }

    /// Whether the interval `[lo, hi]` can contain the predicted value(s).
    pub fn overlaps(&self, lo: usize, hi: usize) -> bool {
        match *self {
            PredictedValue::Exact { value } => lo <= value && value <= hi,
            PredictedValue::Interval { lo: a, hi: b } => a <= hi && lo <= b,
        }
    }
}

impl fmt::Display for PredictedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredictedValue::Exact { value } => write!(f, "{value}"),
            PredictedValue::Interval { lo, hi } => write!(f, "{lo}..{hi}"),
        }
    }
}

/// Closed-form value of `χ_d^t(M(G))` for a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormPrediction {
    pub value: PredictedValue,
    pub source: &'static str,
}

pub fn ceil_two_thirds(n: usize) -> usize {
    (2 * n).div_ceil(3)
}

/// `χ_d^t` of the middle graph predicted by the family's closed form, or
/// `None` for families without one (trees).
pub fn predict_tdc_of_middle(spec: &FamilySpec) -> Result<Option<ClosedFormPrediction>> {
    spec.validate()?;
    let n = spec.n;
    let exact = |value, source| {
        Some(ClosedFormPrediction {
            value: PredictedValue::Exact { value },
            source,
        })
    };
    Ok(match spec.family {
        Family::Star => exact(n + 1, "star-formula"),
        Family::DoubleStar => exact(2 * n + 1, "double-star-formula"),
        Family::Path => {
            let v = match n {
                3..=7 => n,
                8 => 7,
                _ => ceil_two_thirds(n) + 2,
            };
            exact(v, "path-formula")
        }
        Family::Cycle => {
            let v = match n {
                3 => 4,
                4 | 5 => n,
                _ => ceil_two_thirds(n) + 2,
            };
            exact(v, "cycle-formula")
        }
        Family::Wheel => exact(if n == 4 { 5 } else { n + 2 }, "wheel-formula"),
        // K_2 is the one-edge tree and M(K_2) is P_3; the two-sided bound
        // only holds from n = 3 on.
        Family::Complete if n == 2 => exact(2, "one-edge-tree"),
        Family::Complete => Some(ClosedFormPrediction {
            value: PredictedValue::Interval {
                lo: n + 1,
                hi: n + ceil_two_thirds(n) - 1,
            },
            source: "complete-two-sided",
        }),
        Family::Friendship => exact(2 * n + 2, "friendship-formula"),
        Family::TreeExhaustive | Family::TreeRandom => None,
    })
}

pub fn leaves(g: &Graph) -> Vec<VertexId> {
    g.vertices().filter(|&v| g.degree(v) == 1).collect()
}

pub const MAX_ENUMERATED_TREE_ORDER: usize = 10;

/// Canonical level sequences of all rooted trees on `n` vertices, in
/// reverse lexicographic order (root at level 1).
pub fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![current.clone()];
    while let Some(p) = (1..n).rev().find(|&i| current[i] != 2) {
        let q = (0..p)
            .rev()
            .find(|&i| current[i] == current[p] - 1)
            .expect("a vertex one level up precedes p");
        let shift = p - q;
        for i in p..n {
            current[i] = current[i - shift];
        }
        out.push(current.clone());
    }
    out
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut last_at_level = vec![0usize; levels.len() + 2];
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (v, &lvl) in levels.iter().enumerate() {
        if v > 0 {
            edges.push((last_at_level[lvl - 1], v));
        }
        last_at_level[lvl] = v;
    }
    edges_to_graph(levels.len(), edges)
}

/// Centre vertices (one or two) of a tree, by repeated leaf stripping.
fn tree_centers(t: &Graph) -> Vec<VertexId> {
    let n = t.order();
    if n <= 2 {
        return t.vertices().collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<VertexId> = t.vertices().filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for w in t.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut c = layer;
    c.sort_unstable();
    c
}

fn rooted_code(t: &Graph, v: VertexId, parent: Option<VertexId>) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(t, w, Some(v)))
        .collect();
    children.sort_unstable();
    format!("({})", children.concat())
}

/// Canonical string of a free tree: the smallest centre-rooted AHU code.
pub fn tree_canonical_form(t: &Graph) -> Result<String> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(tree_centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .expect("a tree has a centre"))
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(2..=MAX_ENUMERATED_TREE_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "tree enumeration supports 2 <= n <= {MAX_ENUMERATED_TREE_ORDER}, got {n}"
        )));
    }
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut out: Vec<Graph> = Vec::new();
    for levels in rooted_level_sequences(n) {
        let tree = tree_from_levels(&levels);
        let mut hasher = DefaultHasher::new();
        tree_canonical_form(&tree)?.hash(&mut hasher);
        let bucket = buckets.entry(hasher.finish()).or_default();
        if bucket.iter().any(|&i| out[i].is_isomorphic(&tree)) {
            continue;
        }
        bucket.push(out.len());
        out.push(tree);
    }
    Ok(out)
}
