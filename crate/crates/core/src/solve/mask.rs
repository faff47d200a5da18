//! Fixed-width vertex masks used inside the exact searches.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub type Mask = u128;

/// Largest graph the exact solvers accept.
pub const MAX_SOLVER_ORDER: usize = Mask::BITS as usize;

#[inline]
pub fn bit(v: VertexId) -> Mask {
    1 << v
}

#[inline]
pub fn full(n: usize) -> Mask {
    if n == MAX_SOLVER_ORDER {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

#[inline]
pub fn count(m: Mask) -> usize {
    m.count_ones() as usize
}

#[inline]
pub fn lowest(m: Mask) -> VertexId {
    m.trailing_zeros() as VertexId
}

pub struct Bits(Mask);

impl Iterator for Bits {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = lowest(self.0);
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub fn bits(m: Mask) -> Bits {
    Bits(m)
}

pub fn from_vertices(vs: impl IntoIterator<Item = VertexId>) -> Mask {
    vs.into_iter().fold(0, |m, v| m | bit(v))
}

pub fn to_vec(m: Mask) -> Vec<VertexId> {
    bits(m).collect()
}

pub fn adjacency(g: &Graph) -> Result<Vec<Mask>> {
    if g.order() > MAX_SOLVER_ORDER {
        return Err(Error::TooLarge {
            order: g.order(),
            limit: MAX_SOLVER_ORDER,
        });
    }
    Ok(g.vertices()
        .map(|v| from_vertices(g.neighbors(v)))
        .collect())
}
