//! Maximum matchings of bipartite patterns and the matching-based
//! hypotheses: at most `sqrt(x - 1) / 2` unmatched vertices for a maximum
//! matching of size `x`, and the near-perfect matching condition.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ratio, ratio_string};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingReport {
    pub size_x: usize,
    /// Matched edges `(u, v)` with `u < v`, sorted.
    pub matched_pairs: Vec<(usize, usize)>,
    pub unmatched: Vec<usize>,
    /// Half the defect when `m - 2x` is even.
    pub d: Option<usize>,
}

impl MatchingReport {
    pub fn vertex_count(&self) -> usize {
        2 * self.size_x + self.unmatched.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisVerdict {
    pub x: usize,
    pub unmatched: usize,
    /// `4 * unmatched^2 < x`.
    pub satisfies_thm1: bool,
    /// The matching has `floor(m / 2)` edges.
    pub satisfies_gps: bool,
    #[serde(serialize_with = "ser_opt_ratio")]
    pub lambda: Option<BigRational>,
}

fn ser_opt_ratio<S: serde::Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&ratio_string(r)),
        None => s.serialize_none(),
    }
}

/// Augmenting-path maximum matching from the 2-colouring. Left vertices are
/// processed in index order and their neighbours scanned in index order.
pub fn maximum_matching(pattern: &Graph) -> Result<MatchingReport> {
    let bip = pattern.is_bipartite().ok_or(Error::NotBipartite)?;
    let m = pattern.n();
    let mut mate = vec![usize::MAX; m];
    for u in 0..m {
        if bip.color[u] != 0 {
            continue;
        }
        let mut seen = vec![false; m];
        augment(pattern, u, &mut mate, &mut seen);
    }
    debug_assert!(!has_augmenting_path(pattern, &bip.color, &mate));
    Ok(report_from_mates(&mate))
}

fn augment(g: &Graph, u: usize, mate: &mut [usize], seen: &mut [bool]) -> bool {
    for v in g.neighbors(u) {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if mate[v] == usize::MAX || augment(g, mate[v], mate, seen) {
            mate[v] = u;
            mate[u] = v;
            return true;
        }
    }
    false
}

fn report_from_mates(mate: &[usize]) -> MatchingReport {
    let m = mate.len();
    let matched_pairs: Vec<(usize, usize)> = (0..m)
        .filter(|&u| mate[u] != usize::MAX && u < mate[u])
        .map(|u| (u, mate[u]))
        .collect();
    let unmatched: Vec<usize> = (0..m).filter(|&u| mate[u] == usize::MAX).collect();
    let defect = unmatched.len();
    MatchingReport {
        size_x: matched_pairs.len(),
        matched_pairs,
        d: defect.is_multiple_of(2).then_some(defect / 2),
        unmatched,
    }
}

/// Alternating BFS from every free left vertex; true iff it reaches a free
/// right vertex.
pub(crate) fn has_augmenting_path(g: &Graph, color: &[u8], mate: &[usize]) -> bool {
    let m = g.n();
    let mut seen = vec![false; m];
    let mut queue: Vec<usize> = (0..m)
        .filter(|&u| color[u] == 0 && mate[u] == usize::MAX)
        .collect();
    queue.iter().for_each(|&u| seen[u] = true);
    while let Some(u) = queue.pop() {
        for v in g.neighbors(u) {
            if seen[v] || mate[u] == v {
                continue;
            }
            seen[v] = true;
            if mate[v] == usize::MAX {
                return true;
            }
            let w = mate[v];
            if !seen[w] {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    false
}

/// Checks that `report` is a matching of `pattern` admitting no augmenting
/// path, i.e. a maximum matching.
pub fn certify_maximum(pattern: &Graph, report: &MatchingReport) -> Result<bool> {
    let bip = pattern.is_bipartite().ok_or(Error::NotBipartite)?;
    let mut mate = vec![usize::MAX; pattern.n()];
    for &(u, v) in &report.matched_pairs {
        if !pattern.has_edge(u, v) || mate[u] != usize::MAX || mate[v] != usize::MAX {
            return Ok(false);
        }
        mate[u] = v;
        mate[v] = u;
    }
    let unmatched: Vec<usize> = (0..pattern.n())
        .filter(|&u| mate[u] == usize::MAX)
        .collect();
    Ok(unmatched == report.unmatched && !has_augmenting_path(pattern, &bip.color, &mate))
}

pub fn verdict_from_report(report: &MatchingReport) -> HypothesisVerdict {
    let x = report.size_x;
    let u = report.unmatched.len();
    let m = report.vertex_count();
    HypothesisVerdict {
        x,
        unmatched: u,
        satisfies_thm1: 4 * u * u < x,
        satisfies_gps: x == m / 2,
        lambda: (x > 0).then(|| ratio(u as i64, x as i64)),
    }
}

pub fn check_theorem1_hypothesis(pattern: &Graph) -> Result<HypothesisVerdict> {
    Ok(verdict_from_report(&maximum_matching(pattern)?))
}

/// Drops isolated vertices. Each removed vertex multiplies the embedding
/// count in an `n`-vertex host by the next factor of the falling factorial
/// `(n - m')(n - m' - 1)...`, where `m'` is the reduced vertex count.
pub fn remove_isolated_vertices(pattern: &Graph) -> (Graph, usize) {
    let keep: Vec<usize> = (0..pattern.n())
        .filter(|&v| pattern.degree(v) > 0)
        .collect();
    let removed = pattern.n() - keep.len();
    (pattern.induced(&keep), removed)
}

/// The falling factorial `(n - reduced)(n - reduced - 1)...` with `removed`
/// factors: the ratio between embedding counts with and without the removed
/// isolated vertices.
pub fn isolated_vertex_factor(
    host_n: usize,
    reduced: usize,
    removed: usize,
) -> num_bigint::BigUint {
    (0..removed)
        .map(|i| host_n.saturating_sub(reduced + i))
        .fold(num_bigint::BigUint::from(1u8), |acc, f| acc * f)
}
