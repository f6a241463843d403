//! Simple undirected graphs stored as adjacency bit rows.
//!
//! Both the patterns `H` and the hosts `G` use [`Graph`]. Vertices are
//! `0..n`; row `v` is a bitset of the neighbours of `v`. Graphs are immutable
//! once built: every transformation returns a new graph.

pub mod builders;
pub mod canon;
pub mod io;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Iterates the set bits of a word slice in increasing order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD + b)
        })
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Vec<Option<String>>,
}

/// Minimum degree, maximum degree and edge count of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub delta_min: usize,
    pub delta_max: usize,
    pub edge_count: usize,
}

/// A proper 2-colouring. `color[v]` is 0 or 1; each component is coloured
/// starting with 0 at its lowest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub color: Vec<u8>,
}

impl Bipartition {
    pub fn side(&self, c: u8) -> Vec<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v] == c)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Component index of every vertex, numbered by lowest member.
    pub of_vertex: Vec<usize>,
    pub parts: Vec<Vec<usize>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.parts.len()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            labels: vec![None; n],
        }
    }

    /// Builds a graph from an edge list. Rejects loops, out-of-range endpoints
    /// and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge ({u}, {v})"
                )));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub(crate) fn set_label(&mut self, v: usize, label: impl Into<String>) {
        let label: String = label.into();
        debug_assert!(!label.contains('\n'));
        self.labels[v] = Some(label);
    }

    /// Returns a copy with vertex `v` labelled.
    pub fn with_label(mut self, v: usize, label: impl Into<String>) -> Graph {
        let label: String = label.into();
        self.labels[v] = Some(label.replace(['\n', '\r'], " "));
        self
    }

    pub fn without_labels(mut self) -> Graph {
        self.labels.iter_mut().for_each(|l| *l = None);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeStats {
            delta_min: degrees.iter().copied().min().unwrap_or(0),
            delta_max: degrees.iter().copied().max().unwrap_or(0),
            edge_count: degrees.iter().sum::<usize>() / 2,
        }
    }

    /// Triangle test: for every edge `uv`, the rows of `u` and `v` must not
    /// intersect.
    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            let ru = self.row(u);
            for v in self.neighbors(u).filter(|&v| v > u) {
                let rv = self.row(v);
                if ru.iter().zip(rv).any(|(a, b)| a & b != 0) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition { color })
    }

    /// Part sizes `(a, b)` with `a <= b` if the graph is complete bipartite.
    /// The edgeless graph counts as `K_{0,n}`.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        let e = self.edge_count();
        if e == 0 {
            return Some((0, self.n));
        }
        if self.connected_components().count() != 1 {
            return None;
        }
        let bip = self.is_bipartite()?;
        let a = bip.color.iter().filter(|&&c| c == 0).count();
        let b = self.n - a;
        (a * b == e).then_some((a.min(b), a.max(b)))
    }

    pub fn connected_components(&self) -> Components {
        let mut of_vertex = vec![usize::MAX; self.n];
        let mut parts = Vec::new();
        for s in 0..self.n {
            if of_vertex[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![s];
            of_vertex[s] = id;
            let mut i = 0;
            while i < part.len() {
                let u = part[i];
                i += 1;
                for v in self.neighbors(u) {
                    if of_vertex[v] == usize::MAX {
                        of_vertex[v] = id;
                        part.push(v);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        Components { of_vertex, parts }
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Subgraph induced on `keep`, renumbered in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
            g.labels[i] = self.labels[u].clone();
        }
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        for (v, &p) in perm.iter().enumerate() {
            g.labels[p] = self.labels[v].clone();
        }
        g
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v);
        }
        g.labels[..self.n].clone_from_slice(&self.labels);
        g.labels[self.n..].clone_from_slice(&other.labels);
        g
    }

    /// Copy of `self` with `u` replaced by a new vertex `v'` whose
    /// neighbourhood is `N(v) \ {u}`. The clone keeps index `u`, so the
    /// vertex count is unchanged; `v'` is never adjacent to `v`.
    pub fn clone_vertex_over(&self, u: usize, v: usize) -> Graph {
        let mut g = Graph::empty(self.n);
        for (a, b) in self.edges() {
            if a != u && b != u {
                g.set_edge(a, b);
            }
        }
        for w in self.neighbors(v) {
            if w != u {
                g.set_edge(u, w);
            }
        }
        g.labels.clone_from(&self.labels);
        g.labels[u] = Some(format!("clone of {v}"));
        g
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if u != v {
            g.set_edge(u, v);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
