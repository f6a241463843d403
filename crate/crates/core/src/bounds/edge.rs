use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeBoundReport {
    pub n: usize,
    pub delta_max: usize,
    /// `|E(G)|`.
    pub lhs: usize,
    /// `Delta * (n - Delta)`.
    pub rhs: usize,
    pub holds: bool,
    pub equality: bool,
    /// `G` is complete bipartite (isolated vertices count as one empty side
    /// only when there are no edges).
    pub complete_bipartite: bool,
    /// Equality holds and `G` is `K_{Delta, n - Delta}`.
    pub equality_is_complete_bipartite: bool,
}

/// `|E(G)| <= Delta(G) * (n - Delta(G))` for a triangle-free `G`, with
/// equality exactly for `K_{Delta, n - Delta}`.
pub fn edge_bound_check(g: &Graph) -> Result<EdgeBoundReport> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let n = g.n();
    let stats = g.degree_stats();
    let delta = stats.delta_max;
    let lhs = stats.edge_count;
    let rhs = delta * (n - delta);
    let parts = g.complete_bipartite_parts();
    let equality = lhs == rhs;
    let matches_delta = parts.is_some_and(|(a, b)| {
        let (lo, hi) = (delta.min(n - delta), delta.max(n - delta));
        (a.min(b), a.max(b)) == (lo, hi)
    });
    Ok(EdgeBoundReport {
        n,
        delta_max: delta,
        lhs,
        rhs,
        holds: lhs <= rhs,
        equality,
        complete_bipartite: parts.is_some(),
        equality_is_complete_bipartite: equality && matches_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_is_tight() {
        let r = edge_bound_check(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!((r.lhs, r.rhs), (6, 6));
        assert!(r.holds && r.equality && r.equality_is_complete_bipartite);
    }

    #[test]
    fn five_cycle_and_petersen_are_strict() {
        let r = edge_bound_check(&Graph::cycle(5)).unwrap();
        assert_eq!((r.lhs, r.rhs), (5, 6));
        assert!(r.holds && !r.equality && !r.equality_is_complete_bipartite);
        let r = edge_bound_check(&Graph::petersen()).unwrap();
        assert_eq!((r.lhs, r.rhs), (15, 21));
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn isolated_vertex_breaks_equality() {
        let g = Graph::complete_bipartite(2, 2).disjoint_union(&Graph::empty(1));
        let r = edge_bound_check(&g).unwrap();
        assert_eq!((r.lhs, r.rhs), (4, 6));
        assert!(!r.complete_bipartite);
    }

    #[test]
    fn edgeless_graph_is_tight() {
        let r = edge_bound_check(&Graph::empty(4)).unwrap();
        assert!(r.equality && r.complete_bipartite && r.equality_is_complete_bipartite);
    }

    #[test]
    fn rejects_triangles() {
        assert!(matches!(
            edge_bound_check(&Graph::complete(3)),
            Err(Error::NotTriangleFree)
        ));
    }
}
