//! Canonical forms for small graphs.
//!
//! The code of a graph under a vertex ordering `o_0, ..., o_{n-1}` is the
//! bit string listing the upper triangle column by column:
//! `adj(o_0,o_1), adj(o_0,o_2), adj(o_1,o_2), adj(o_0,o_3), ...`.
//! The canonical code is the lexicographically smallest string over all
//! orderings, packed into a `u64` with the first bit most significant.
//!
//! The search fixes the ordering one position at a time. When position `k`
//! is filled, the next `k` bits of the string are exactly the column of the
//! chosen vertex against the `k` already placed, so only vertices with the
//! smallest column can lead to the minimum; everything else is cut. A branch
//! is also cut once its prefix exceeds the best complete code seen so far.

use super::Graph;
use crate::error::{Error, Result};

/// Largest `n` whose code fits in 64 bits.
pub const MAX_CANON_N: usize = 11;

pub type CanonicalCode = u64;

#[inline]
pub(crate) fn code_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Canonical code and the vertex ordering realising it, for a graph given as
/// adjacency masks (`rows[v]` bit `u` set iff `uv` is an edge).
pub(crate) fn canonical_code_rows(rows: &[u16]) -> (CanonicalCode, Vec<usize>) {
    let n = rows.len();
    assert!(n <= MAX_CANON_N);
    let mut search = Search {
        rows,
        n,
        total_bits: code_bits(n),
        order: Vec::with_capacity(n),
        best: None,
        best_order: Vec::new(),
    };
    search.descend(0, 0, (1u32 << n) - 1);
    (search.best.unwrap_or(0), search.best_order)
}

struct Search<'a> {
    rows: &'a [u16],
    n: usize,
    total_bits: usize,
    order: Vec<usize>,
    best: Option<u64>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> u64 {
        let mut col = 0u64;
        for &o in &self.order {
            col = (col << 1) | u64::from(self.rows[o] >> v & 1);
        }
        col
    }

    fn descend(&mut self, k: usize, prefix: u64, remaining: u32) {
        if k == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let mut min_col = u64::MAX;
        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            min_col = min_col.min(self.column(v));
        }
        let next = (prefix << k) | min_col;
        if let Some(best) = self.best {
            let bits = code_bits(k + 1);
            let best_prefix = best >> (self.total_bits - bits);
            if next > best_prefix {
                return;
            }
        }
        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.column(v) == min_col {
                self.order.push(v);
                self.descend(k + 1, next, remaining & !(1 << v));
                self.order.pop();
            }
        }
    }
}

/// Rebuilds the graph whose code under the identity ordering is `code`.
pub fn graph_from_code(n: usize, code: CanonicalCode) -> Graph {
    let total = code_bits(n);
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - bit) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    g
}

pub(crate) fn small_rows(g: &Graph) -> Vec<u16> {
    (0..g.n()).map(|v| g.row(v)[0] as u16).collect()
}

impl Graph {
    /// Canonical code; two graphs on the same vertex count are isomorphic
    /// iff their codes agree. Limited to `n <= 11`.
    pub fn canonical_code(&self) -> Result<CanonicalCode> {
        if self.n() > MAX_CANON_N {
            return Err(Error::InvalidParameter(format!(
                "canonical form supports n <= {MAX_CANON_N}, got {}",
                self.n()
            )));
        }
        Ok(canonical_code_rows(&small_rows(self)).0)
    }

    /// The canonical representative (unlabelled).
    pub fn canonical_form(&self) -> Result<Graph> {
        Ok(graph_from_code(self.n(), self.canonical_code()?))
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.n() == other.n()
            && self.edge_count() == other.edge_count()
            && self.canonical_code()? == other.canonical_code()?)
    }
}
