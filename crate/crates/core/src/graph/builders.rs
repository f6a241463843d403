//! Standard families and the named constructions: `T_2(n)`, blow-ups, the
//! double-star pattern with a 3-edge spine, and the pattern `H(d, x)` whose
//! blob assignment into a weighted five-cycle beats every bipartite host.

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.set_edge(0, n - 1);
        g
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.set_edge(0, v);
        }
        g
    }

    /// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.set_edge(i, (i + 1) % 5);
            g.set_edge(i, i + 5);
            g.set_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }
}

/// Balanced complete bipartite graph `K_{ceil(n/2), floor(n/2)}`.
pub fn build_turan2(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("T_2(n) needs n >= 1".into()));
    }
    let a = n.div_ceil(2);
    let mut g = Graph::complete_bipartite(a, n - a);
    for v in 0..n {
        g.set_label(v, if v < a { "part 0" } else { "part 1" });
    }
    Ok(g)
}

/// Replaces vertex `v` of `pattern` by an independent set of `sizes[v]`
/// vertices. Blobs are laid out consecutively in pattern order and each
/// vertex is labelled `blob <v>`.
pub fn build_blowup(pattern: &Graph, sizes: &[usize]) -> Result<Graph> {
    if sizes.len() != pattern.n() {
        return Err(Error::SizeMismatch {
            expected: pattern.n(),
            got: sizes.len(),
        });
    }
    let mut start = Vec::with_capacity(sizes.len() + 1);
    start.push(0);
    for &s in sizes {
        start.push(start.last().unwrap() + s);
    }
    let total = *start.last().unwrap();
    let mut g = Graph::empty(total);
    for (p, q) in pattern.edges() {
        for u in start[p]..start[p + 1] {
            for v in start[q]..start[q + 1] {
                g.set_edge(u, v);
            }
        }
    }
    for p in 0..pattern.n() {
        for u in start[p]..start[p + 1] {
            g.set_label(u, format!("blob {p}"));
        }
    }
    Ok(g)
}

/// Two stars `K_{1,k-2}` whose centres are joined by a path with three
/// edges. Vertices: `0` and `3` are the centres, `1`, `2` the path
/// interior, then the leaves of `0`, then the leaves of `3`.
pub fn build_gps_example1(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "double-star pattern needs k >= 3, got {k}"
        )));
    }
    let leaves = k - 2;
    let mut g = Graph::empty(2 * k);
    g.set_edge(0, 1);
    g.set_edge(1, 2);
    g.set_edge(2, 3);
    for i in 0..leaves {
        g.set_edge(0, 4 + i);
        g.set_edge(3, 4 + leaves + i);
    }
    g.set_label(0, "centre");
    g.set_label(3, "centre");
    g.set_label(1, "spine");
    g.set_label(2, "spine");
    for v in 4..2 * k {
        g.set_label(v, "leaf");
    }
    Ok(g)
}

/// Blob (0-based, `0..5`) of every vertex of `H(d, x)` in the five-cycle
/// blow-up: leaves and pendant-path tops go to blob 0, `u1` and the pendant
/// middles to blob 1, then `p`, `q`, `u2` to blobs 2, 3, 4.
///
/// Vertex layout matches [`build_theorem2_h`].
pub fn theorem2_blob_assignment(d: usize, x: usize) -> Result<Vec<usize>> {
    check_theorem2_params(d, x)?;
    let mut blob = vec![0; 4];
    blob[0] = 1; // u1
    blob[1] = 2; // p
    blob[2] = 3; // q
    blob[3] = 4; // u2
    blob.extend(std::iter::repeat_n(0, 2 * (d + 1)));
    for _ in 0..x - 3 {
        blob.push(1);
        blob.push(0);
    }
    Ok(blob)
}

fn check_theorem2_params(d: usize, x: usize) -> Result<()> {
    if d < 1 || x < 3 {
        return Err(Error::InvalidParameter(format!(
            "H(d, x) needs d >= 1 and x >= 3, got d = {d}, x = {x}"
        )));
    }
    Ok(())
}

/// The tree `H(d, x)`: centres `u1` (vertex 0) and `u2` (vertex 3) with
/// `d + 1` pendant leaves each, the spine `u1 - p - q - u2` (`p` = 1,
/// `q` = 2), and `x - 3` pendant 2-edge paths hanging from `p`.
///
/// Labels record the blob of each vertex as `blob 1` .. `blob 5`.
pub fn build_theorem2_h(d: usize, x: usize) -> Result<Graph> {
    let blob = theorem2_blob_assignment(d, x)?;
    let mut g = Graph::empty(2 * x + 2 * d);
    g.set_edge(0, 1);
    g.set_edge(1, 2);
    g.set_edge(2, 3);
    let mut next = 4;
    for centre in [0, 3] {
        for _ in 0..=d {
            g.set_edge(centre, next);
            next += 1;
        }
    }
    for _ in 0..x - 3 {
        g.set_edge(1, next);
        g.set_edge(next, next + 1);
        next += 2;
    }
    debug_assert_eq!(next, g.n());
    for (v, b) in blob.iter().enumerate() {
        g.set_label(v, format!("blob {}", b + 1));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan2_small_cases() {
        assert_eq!(build_turan2(2).unwrap().edge_count(), 1);
        let t5 = build_turan2(5).unwrap();
        assert_eq!(t5.edge_count(), 6);
        assert_eq!(t5.complete_bipartite_parts(), Some((2, 3)));
        let t10 = build_turan2(10).unwrap();
        assert_eq!(t10.edge_count(), 25);
        assert!(t10.is_bipartite().is_some());
        assert!(t10.is_triangle_free());
        assert!(build_turan2(0).is_err());
    }

    #[test]
    fn blowup_cases() {
        let k23 = build_blowup(&Graph::complete(2), &[2, 3]).unwrap();
        assert_eq!(k23.without_labels(), Graph::complete_bipartite(2, 3));

        let c5 = build_blowup(&Graph::cycle(5), &[1; 5]).unwrap();
        assert_eq!(c5.without_labels(), Graph::cycle(5));

        // blob 0 doubled: its two copies each see blobs 1 and 4, plus the
        // three remaining cycle edges.
        let g = build_blowup(&Graph::cycle(5), &[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 2 * 2 + 3);
        assert!(g.is_triangle_free());
        assert_eq!(g.label(1), Some("blob 0"));

        assert!(matches!(
            build_blowup(&Graph::cycle(5), &[1, 1]),
            Err(Error::SizeMismatch {
                expected: 5,
                got: 2
            })
        ));
    }

    #[test]
    fn gps_example_shapes() {
        let p6 = build_gps_example1(3).unwrap();
        assert_eq!(p6.n(), 6);
        assert_eq!(p6.edge_count(), 5);
        let degrees: Vec<usize> = (0..6).map(|v| p6.degree(v)).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);
        assert!(p6.connected_components().count() == 1);

        let g = build_gps_example1(4).unwrap();
        let by_hand =
            Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)])
                .unwrap();
        assert_eq!(g.clone().without_labels(), by_hand);
        let bip = g.is_bipartite().unwrap();
        assert_eq!(bip.side(0).len(), 4);
        assert_eq!(bip.side(1).len(), 4);

        for k in 3..12 {
            assert_eq!(build_gps_example1(k).unwrap().n(), 2 * k);
        }
        assert!(build_gps_example1(2).is_err());
    }

    #[test]
    fn theorem2_pattern_is_a_tree_of_the_right_size() {
        for d in 1..5 {
            for x in 3..10 {
                let h = build_theorem2_h(d, x).unwrap();
                assert_eq!(h.n(), 2 * x + 2 * d);
                assert_eq!(h.edge_count(), 2 * x + 2 * d - 1);
                assert_eq!(h.connected_components().count(), 1);
                assert!(h.is_bipartite().is_some());
            }
        }
        assert!(build_theorem2_h(0, 3).is_err());
        assert!(build_theorem2_h(1, 2).is_err());
    }

    #[test]
    fn theorem2_pattern_d1_x3_by_hand() {
        let h = build_theorem2_h(1, 3).unwrap().without_labels();
        let by_hand =
            Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)])
                .unwrap();
        assert_eq!(h, by_hand);
    }

    #[test]
    fn theorem2_blob_assignment_is_a_c5_homomorphism() {
        let c5 = Graph::cycle(5);
        for d in 1..4 {
            for x in 3..8 {
                let h = build_theorem2_h(d, x).unwrap();
                let blob = theorem2_blob_assignment(d, x).unwrap();
                for (u, v) in h.edges() {
                    assert!(
                        c5.has_edge(blob[u], blob[v]),
                        "edge {u}-{v} not mapped to a C5 edge"
                    );
                }
                let in_blob = |b: usize| blob.iter().filter(|&&x| x == b).count();
                assert_eq!(in_blob(0), 2 * d + x - 1);
                assert_eq!(in_blob(1), x - 2);
                assert_eq!((in_blob(2), in_blob(3), in_blob(4)), (1, 1, 1));
            }
        }
    }
}
