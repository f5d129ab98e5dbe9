use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

/// A simple graph on the labeled vertex set `{0, .., n-1}`, stored as one
/// neighbor bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl LabeledGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self { n, words, rows: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidInput(format!("duplicate edge ({u}, {v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.rows[u * self.words + v / 64];
        if on {
            *w |= 1 << (v % 64);
        } else {
            *w &= !(1 << (v % 64));
        }
    }

    /// Inserts `uv`. Panics on a loop; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loops are not allowed");
        self.set(u, v, true);
        self.set(v, u, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.set(u, v, false);
        self.set(v, u, false);
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degrees in label order.
    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n).map(|u| self.degree(u) as u32).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees()).expect("graph has at least one vertex")
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, sorted. This is also the canonical
    /// encoding of a labeled graph.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// True when `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &u)| vertices[a + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True when no two of `vertices` are adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &u)| vertices[a + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Disjoint union, with `other` relabeled to follow `self`.
    pub fn disjoint_union(&self, other: &LabeledGraph) -> LabeledGraph {
        let off = self.n;
        let mut g = LabeledGraph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }

    /// Relabels vertex `u` to `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> LabeledGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = LabeledGraph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabeledGraph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for LabeledGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr { n: self.n, edges: self.edges() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabeledGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        LabeledGraph::from_edges(r.n, r.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_follow_adjacency() {
        let g = LabeledGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 3, 2, 2]);
        assert_eq!(g.degree_sequence().degrees(), &[3, 2, 2, 1]);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(3, 1));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(LabeledGraph::from_edges(3, [(0, 0)]).is_err());
        assert!(LabeledGraph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(LabeledGraph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn wide_graphs_use_several_words() {
        let mut g = LabeledGraph::empty(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges(), vec![(0, 129), (64, 65)]);
        g.remove_edge(129, 0);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn clique_and_independent_checks() {
        let k4 = LabeledGraph::complete(4);
        assert!(k4.is_clique(&[0, 1, 2, 3]));
        assert!(!k4.is_independent(&[0, 1]));
        assert!(k4.is_independent(&[2]));
        assert_eq!(k4.degree_sequence().degrees(), &[3, 3, 3, 3]);
    }

    #[test]
    fn union_and_permutation() {
        let e = LabeledGraph::from_edges(2, [(0, 1)]).unwrap();
        let u = e.disjoint_union(&e);
        assert_eq!(u.edges(), vec![(0, 1), (2, 3)]);
        let p = u.permuted(&[0, 2, 1, 3]);
        assert_eq!(p.edges(), vec![(0, 2), (1, 3)]);
    }
}
