//! Exhaustive ground truth on small hosts: every triangle-free graph on `n`
//! vertices up to isomorphism, and the exact maximisers of copy counts.
//!
//! Graphs on `k + 1` vertices are produced from the canonical graphs on `k`
//! vertices by adding one vertex joined to an independent set. Deleting any
//! vertex of a triangle-free graph leaves a triangle-free graph whose
//! neighbourhood of the deleted vertex is independent, so every class is
//! reached; children are canonicalised and deduplicated per level.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::embeddings::{count_copies, h_degrees};
use crate::error::{Error, Result};
use crate::graph::canon::{canonical_code_rows, graph_from_code, CanonicalCode, MAX_CANON_N};
use crate::graph::Graph;
use crate::rational::big_string;

/// Largest host size enumerated without an explicit override.
pub const DEFAULT_MAX_N: usize = 8;
/// Largest host size enumerated at all.
pub const OVERRIDE_MAX_N: usize = 9;

fn check_budget(n: usize, allow_nine: bool) -> Result<()> {
    let limit = if allow_nine {
        OVERRIDE_MAX_N
    } else {
        DEFAULT_MAX_N
    };
    if n > limit {
        return Err(Error::BudgetExceeded(format!(
            "triangle-free enumeration is limited to n <= {limit}, got {n}"
        )));
    }
    Ok(())
}

fn rows_from_code(n: usize, code: CanonicalCode) -> Vec<u16> {
    let g = graph_from_code(n, code);
    (0..n).map(|v| g.row(v)[0] as u16).collect()
}

/// Independent subsets of `0..rows.len()`, as bit masks.
fn independent_sets(rows: &[u16]) -> Vec<u16> {
    let mut out = vec![0u16];
    for (v, &row) in rows.iter().enumerate() {
        let extended: Vec<u16> = out
            .iter()
            .filter(|&&s| s & row == 0)
            .map(|&s| s | 1 << v)
            .collect();
        out.extend(extended);
    }
    out
}

fn extend_level(k: usize, codes: &[CanonicalCode]) -> Vec<CanonicalCode> {
    let mut children: Vec<CanonicalCode> = codes
        .par_iter()
        .flat_map_iter(|&code| {
            let mut rows = rows_from_code(k, code);
            rows.push(0);
            independent_sets(&rows[..k])
                .into_iter()
                .map(|s| {
                    let mut child = rows.clone();
                    child[k] = s;
                    for (u, row) in child.iter_mut().enumerate().take(k) {
                        *row |= (s >> u & 1) << k;
                    }
                    canonical_code_rows(&child).0
                })
                .collect::<BTreeSet<_>>()
        })
        .collect();
    children.par_sort_unstable();
    children.dedup();
    children
}

/// Canonical codes of all triangle-free graphs on `n` vertices, ascending.
pub fn triangle_free_codes(n: usize, allow_nine: bool) -> Result<Vec<CanonicalCode>> {
    check_budget(n, allow_nine)?;
    debug_assert!(n <= MAX_CANON_N);
    let mut level = vec![0];
    for k in 1..n {
        level = extend_level(k, &level);
    }
    Ok(level)
}

/// Every triangle-free graph on `n` vertices exactly once up to
/// isomorphism, in canonical form, ordered by canonical code. `n > 8` needs
/// `allow_nine`.
pub fn enumerate_triangle_free(n: usize, allow_nine: bool) -> Result<Vec<Graph>> {
    Ok(triangle_free_codes(n, allow_nine)?
        .into_iter()
        .map(|c| graph_from_code(n, c))
        .collect())
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchConfig {
    pub allow_nine: bool,
    /// Abandon the search with [`Error::BudgetExceeded`] after this instant.
    pub deadline: Option<Instant>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximizerReport {
    pub n: usize,
    pub pattern_id: String,
    pub graphs_checked: usize,
    pub max_count: BigUint,
    /// Canonical forms, ordered by canonical code.
    pub witnesses: Vec<Graph>,
    pub all_bipartite: bool,
    pub all_complete_bipartite: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSummary {
    pub edges: Vec<(usize, usize)>,
    pub edge_count: usize,
    pub bipartite: bool,
    /// Part sizes, smaller first, when the witness is complete bipartite.
    pub complete_bipartite: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MaximizerSummary {
    pub n: usize,
    pub pattern_id: String,
    pub graphs_checked: usize,
    pub max_count: String,
    pub witnesses: Vec<WitnessSummary>,
    pub all_bipartite: bool,
    pub all_complete_bipartite: bool,
}

impl MaximizerReport {
    pub fn summary(&self) -> MaximizerSummary {
        MaximizerSummary {
            n: self.n,
            pattern_id: self.pattern_id.clone(),
            graphs_checked: self.graphs_checked,
            max_count: big_string(&self.max_count),
            witnesses: self
                .witnesses
                .iter()
                .map(|w| WitnessSummary {
                    edges: w.edges(),
                    edge_count: w.edge_count(),
                    bipartite: w.is_bipartite().is_some(),
                    complete_bipartite: w
                        .complete_bipartite_parts()
                        .map(|(a, b)| (a.min(b), a.max(b))),
                })
                .collect(),
            all_bipartite: self.all_bipartite,
            all_complete_bipartite: self.all_complete_bipartite,
        }
    }
}

/// `"<m>:<canonical code in hex>"`, or the edge list above the canonical
/// form limit.
pub fn pattern_id(pattern: &Graph) -> String {
    match pattern.canonical_code() {
        Ok(code) => format!("{}:{code:x}", pattern.n()),
        Err(_) => format!("{}:{:?}", pattern.n(), pattern.edges()),
    }
}

/// Exact maximisers of `count_copies(pattern, G)` over triangle-free `G` on
/// `n` vertices.
pub fn find_maximizers(
    pattern: &Graph,
    n: usize,
    config: &SearchConfig,
) -> Result<MaximizerReport> {
    if pattern.n() > n {
        return Err(Error::InvalidParameter(format!(
            "pattern has {} vertices, more than the host size {n}",
            pattern.n()
        )));
    }
    let codes = triangle_free_codes(n, config.allow_nine)?;
    let counts: Vec<(CanonicalCode, BigUint)> = codes
        .par_iter()
        .map(|&code| {
            if config.deadline.is_some_and(|d| Instant::now() > d) {
                return Err(Error::BudgetExceeded(
                    "maximizer search passed its deadline".into(),
                ));
            }
            Ok((code, count_copies(pattern, &graph_from_code(n, code))))
        })
        .collect::<Result<_>>()?;
    let max_count = counts
        .iter()
        .map(|(_, c)| c)
        .max()
        .cloned()
        .unwrap_or_else(BigUint::zero);
    let witnesses: Vec<Graph> = counts
        .iter()
        .filter(|(_, c)| *c == max_count)
        .map(|&(code, _)| graph_from_code(n, code))
        .collect();
    Ok(MaximizerReport {
        n,
        pattern_id: pattern_id(pattern),
        graphs_checked: codes.len(),
        all_bipartite: witnesses.iter().all(|w| w.is_bipartite().is_some()),
        all_complete_bipartite: witnesses
            .iter()
            .all(|w| w.complete_bipartite_parts().is_some()),
        max_count,
        witnesses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub pairs_checked: usize,
    /// Ordered pairs `(u, v)` with `h(v) > h(u) + h(u, v)`.
    pub violations: Vec<(usize, usize)>,
}

impl Lemma1Report {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `h(v) <= h(u) + h(u, v)` for all ordered pairs of distinct vertices.
pub fn lemma1_check(pattern: &Graph, host: &Graph) -> Lemma1Report {
    let report = h_degrees(pattern, host);
    let n = host.n();
    let mut violations = Vec::new();
    for u in 0..n {
        for v in (0..n).filter(|&v| v != u) {
            if *report.h(v) > report.h(u) + report.pair(u, v) {
                violations.push((u, v));
            }
        }
    }
    Lemma1Report {
        pairs_checked: n * n.saturating_sub(1),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels() {
        assert_eq!(triangle_free_codes(0, false).unwrap().len(), 1);
        assert_eq!(triangle_free_codes(1, false).unwrap().len(), 1);
        assert_eq!(triangle_free_codes(2, false).unwrap().len(), 2);
        // empty, one edge, path
        assert_eq!(triangle_free_codes(3, false).unwrap().len(), 3);
    }

    #[test]
    fn enumeration_is_triangle_free_and_duplicate_free() {
        for n in 1..=7 {
            let graphs = enumerate_triangle_free(n, false).unwrap();
            assert!(graphs.iter().all(|g| g.n() == n && g.is_triangle_free()));
            let codes: BTreeSet<_> = graphs.iter().map(|g| g.canonical_code().unwrap()).collect();
            assert_eq!(codes.len(), graphs.len());
        }
    }

    #[test]
    fn five_vertices_contain_c5_and_k23() {
        let codes = triangle_free_codes(5, false).unwrap();
        for g in [Graph::cycle(5), Graph::complete_bipartite(2, 3)] {
            assert!(codes.binary_search(&g.canonical_code().unwrap()).is_ok());
        }
    }

    #[test]
    fn complete_bipartite_closure() {
        let codes = triangle_free_codes(7, false).unwrap();
        for a in 0..=7 {
            let k = Graph::complete_bipartite(a, 7 - a);
            assert!(
                codes.binary_search(&k.canonical_code().unwrap()).is_ok(),
                "K_{a},{}",
                7 - a
            );
        }
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            triangle_free_codes(9, false),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            triangle_free_codes(10, true),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn edge_maximiser_at_five() {
        let r = find_maximizers(&Graph::complete(2), 5, &SearchConfig::default()).unwrap();
        assert_eq!(r.max_count, BigUint::from(6u8));
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(
            r.witnesses[0]
                .complete_bipartite_parts()
                .map(|(a, b)| (a.min(b), a.max(b))),
            Some((2, 3))
        );
        assert!(r.all_bipartite && r.all_complete_bipartite);
    }

    #[test]
    fn four_cycle_maximiser_at_six() {
        let r = find_maximizers(&Graph::cycle(4), 6, &SearchConfig::default()).unwrap();
        assert_eq!(r.max_count, BigUint::from(9u8));
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.witnesses[0]
            .is_isomorphic(&Graph::complete_bipartite(3, 3))
            .unwrap());
    }

    #[test]
    fn pattern_larger_than_host() {
        assert!(find_maximizers(&Graph::path(6), 5, &SearchConfig::default()).is_err());
    }

    #[test]
    fn expired_deadline() {
        let config = SearchConfig {
            allow_nine: false,
            deadline: Some(Instant::now()),
        };
        std::thread::sleep(std::time::Duration::from_millis(2));
        assert!(matches!(
            find_maximizers(&Graph::complete(2), 6, &config),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn lemma1_on_balanced_host() {
        let r = lemma1_check(&Graph::path(3), &Graph::complete_bipartite(3, 3));
        assert_eq!(r.pairs_checked, 30);
        assert!(r.holds());
    }

    #[test]
    fn pattern_ids_are_isomorphism_invariant() {
        let p = Graph::path(4);
        assert_eq!(pattern_id(&p), pattern_id(&p.permute(&[2, 0, 3, 1])));
        assert_ne!(pattern_id(&p), pattern_id(&Graph::star(3)));
    }
}
