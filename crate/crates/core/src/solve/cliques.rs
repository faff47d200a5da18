//! Maximum clique search on mask adjacency, used for clique lower bounds
//! and for independence numbers via the complement.

use super::mask::{bit, bits, count, lowest, Mask};

/// Greedy clique: repeatedly take the candidate with most candidate
/// neighbours.
pub fn greedy_clique(adj: &[Mask], within: Mask) -> Mask {
    let mut clique = 0;
    let mut cand = within;
    while cand != 0 {
        let v = bits(cand)
            .max_by_key(|&v| (count(adj[v] & cand), std::cmp::Reverse(v)))
            .expect("non-empty");
        clique |= bit(v);
        cand &= adj[v];
    }
    clique
}

/// Exact maximum clique inside `within`, with a greedy-colouring bound.
/// Returns `(clique, proven, nodes)`; `proven` is false if `node_limit`
/// ran out.
pub fn max_clique(adj: &[Mask], within: Mask, node_limit: u64) -> (Mask, bool, u64) {
    let mut search = CliqueSearch {
        adj,
        best: greedy_clique(adj, within),
        nodes: 0,
        limit: node_limit,
    };
    let complete = search.expand(0, within);
    (search.best, complete, search.nodes)
}

struct CliqueSearch<'a> {
    adj: &'a [Mask],
    best: Mask,
    nodes: u64,
    limit: u64,
}

impl CliqueSearch<'_> {
    /// Greedy colouring of `cand`; returns vertices in colour order with
    /// their colour number (1-based).
    fn color_order(&self, cand: Mask) -> Vec<(usize, u32)> {
        let mut order = Vec::with_capacity(count(cand));
        let mut left = cand;
        let mut color = 0;
        while left != 0 {
            color += 1;
            let mut avail = left;
            while avail != 0 {
                let v = lowest(avail);
                avail &= !bit(v) & !self.adj[v];
                left &= !bit(v);
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, clique: Mask, mut cand: Mask) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            return false;
        }
        if cand == 0 {
            if count(clique) > count(self.best) {
                self.best = clique;
            }
            return true;
        }
        let order = self.color_order(cand);
        for &(v, color) in order.iter().rev() {
            if count(clique) + color as usize <= count(self.best) {
                return true;
            }
            if !self.expand(clique | bit(v), cand & self.adj[v]) {
                return false;
            }
            cand &= !bit(v);
        }
        true
    }
}

/// Complement adjacency restricted to `0..n`.
pub fn complement(adj: &[Mask]) -> Vec<Mask> {
    let all = super::mask::full(adj.len());
    adj.iter()
        .enumerate()
        .map(|(v, &row)| !row & all & !bit(v))
        .collect()
}
