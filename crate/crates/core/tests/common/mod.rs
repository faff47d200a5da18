//! Naive oracles shared by the integration tests. None of them call the
//! library's solvers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use midtdc::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Calls `visit` with every set partition of `0..n` as a class-per-vertex
/// vector (restricted growth strings).
pub fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize], usize)) {
    fn rec(v: usize, used: usize, colors: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize], usize)) {
        if v == colors.len() {
            visit(colors, used);
            return;
        }
        for c in 0..=used {
            colors[v] = c;
            rec(v + 1, used.max(c + 1), colors, visit);
        }
    }
    let mut colors = vec![0; n];
    if n == 0 {
        visit(&colors, 0);
    } else {
        rec(0, 0, &mut colors, &mut visit);
    }
}

/// Whether a class-per-vertex colouring is a total dominator colouring.
pub fn is_tdc_naive(a: &[Vec<bool>], colors: &[usize], k: usize) -> bool {
    let n = colors.len();
    for u in 0..n {
        for v in 0..n {
            if a[u][v] && colors[u] == colors[v] {
                return false;
            }
        }
    }
    (0..n).all(|v| (0..k).any(|c| (0..n).filter(|&u| colors[u] == c).all(|u| a[v][u])))
}

/// `χ_d^t` by enumerating every set partition.
pub fn brute_tdc(g: &Graph) -> Option<usize> {
    let a = adjacency(g);
    let mut best: Option<usize> = None;
    for_each_partition(g.order(), |colors, k| {
        if best.is_some_and(|b| k >= b) {
            return;
        }
        if is_tdc_naive(&a, colors, k) {
            best = Some(k);
        }
    });
    best
}

pub fn brute_chromatic(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for_each_partition(g.order(), |colors, k| {
        if k < best && g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
            best = k;
        }
    });
    best
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

pub fn brute_total_domination(g: &Graph) -> Option<usize> {
    let a = adjacency(g);
    let n = g.order();
    subsets(n)
        .filter(|s| (0..n).all(|v| s.iter().any(|&u| a[v][u])))
        .map(|s| s.len())
        .min()
}

pub fn brute_independence(g: &Graph) -> usize {
    let a = adjacency(g);
    subsets(g.order())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| !a[u][v])))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Seeded random connected graph: a random recursive tree plus each
/// remaining pair with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically smallest relabelled edge list over all permutations.
pub fn canonical_by_permutation(
    edges: &[(usize, usize)],
    perms: &[Vec<usize>],
) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<_> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap()
}

/// Canonical edge lists of all free trees on `n` vertices, grown leaf by
/// leaf and deduplicated by the permutation canonical form.
pub fn trees_by_leaf_extension(n: usize) -> BTreeSet<Vec<(usize, usize)>> {
    let mut level: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    level.insert(Vec::new());
    for k in 2..=n {
        let perms = permutations(k);
        let mut next = BTreeSet::new();
        for t in &level {
            for attach in 0..k - 1 {
                let mut e = t.clone();
                e.push((attach, k - 1));
                next.insert(canonical_by_permutation(&e, &perms));
            }
        }
        level = next;
    }
    level
}

pub fn canonical_of(g: &Graph) -> Vec<(usize, usize)> {
    canonical_by_permutation(g.edges(), &permutations(g.order()))
}

/// Diameter by Floyd–Warshall, independent of the library's BFS.
pub fn diameter_naive(g: &Graph) -> usize {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d.iter().flatten().copied().max().unwrap_or(0)
}
