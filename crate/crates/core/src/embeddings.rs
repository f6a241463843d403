//! Exact counts of injective embeddings (edge-preserving injections) of a
//! pattern into a host, automorphisms, copies, and H-degrees.
//!
//! The search places pattern vertices in a fixed order. The candidate set
//! for the next vertex is the intersection of the host rows of the images of
//! its already-placed neighbours, minus used and forbidden host vertices. At
//! the last position the candidates are counted with a popcount instead of
//! being enumerated.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{iter_bits, Graph, WORD};
use crate::rational::big_string;

pub type EmbeddingCount = BigUint;

/// Hosts at least this large split the search over the first vertex's image.
const PARALLEL_HOST_MIN: usize = 24;

/// Placement order and back-edges for a pattern.
#[derive(Clone, Debug)]
pub(crate) struct SearchPlan {
    pub order: Vec<usize>,
    /// For position `i`, the earlier positions adjacent to `order[i]`.
    pub back: Vec<Vec<usize>>,
}

impl SearchPlan {
    /// Highest degree first; afterwards prefer vertices with the most placed
    /// neighbours, then higher degree, then lower index.
    pub fn new(pattern: &Graph) -> SearchPlan {
        let m = pattern.n();
        let mut placed = vec![false; m];
        let mut placed_nbrs = vec![0usize; m];
        let mut order = Vec::with_capacity(m);
        for _ in 0..m {
            let next = (0..m)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (placed_nbrs[v], pattern.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            placed[next] = true;
            order.push(next);
            for w in pattern.neighbors(next) {
                placed_nbrs[w] += 1;
            }
        }
        let position: Vec<usize> = {
            let mut p = vec![0; m];
            for (i, &v) in order.iter().enumerate() {
                p[v] = i;
            }
            p
        };
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                pattern
                    .neighbors(v)
                    .map(|w| position[w])
                    .filter(|&j| j < i)
                    .collect()
            })
            .collect();
        SearchPlan { order, back }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }
}

/// Receives groups of completed embeddings: `images` holds the host images
/// of the first `m - 1` positions and every bit of `last` is a valid image
/// for the final position.
pub(crate) trait Visitor: Send {
    fn visit(&mut self, images: &[usize], last: &[u64], count: u64);
    fn merge(&mut self, other: Self);
}

#[derive(Default)]
struct Tally(u128);

impl Visitor for Tally {
    fn visit(&mut self, _: &[usize], _: &[u64], count: u64) {
        self.0 += u128::from(count);
    }
    fn merge(&mut self, other: Self) {
        self.0 += other.0;
    }
}

/// Per-host-vertex membership counts.
struct Membership {
    total: u128,
    per_vertex: Vec<u128>,
}

impl Visitor for Membership {
    fn visit(&mut self, images: &[usize], last: &[u64], count: u64) {
        self.total += u128::from(count);
        for &y in images {
            self.per_vertex[y] += u128::from(count);
        }
        for y in iter_bits(last) {
            self.per_vertex[y] += 1;
        }
    }
    fn merge(&mut self, other: Self) {
        self.total += other.total;
        for (a, b) in self.per_vertex.iter_mut().zip(other.per_vertex) {
            *a += b;
        }
    }
}

struct Frame<'a> {
    plan: &'a SearchPlan,
    host: &'a Graph,
    words: usize,
    /// Host vertices never used as images.
    blocked: Vec<u64>,
    images: Vec<usize>,
    used: Vec<u64>,
    /// One candidate buffer per position.
    cand: Vec<u64>,
}

impl<'a> Frame<'a> {
    fn new(plan: &'a SearchPlan, host: &'a Graph, forbidden: &[usize]) -> Frame<'a> {
        let words = host.words().max(1);
        let mut blocked = vec![0u64; words];
        for &f in forbidden {
            blocked[f / WORD] |= 1 << (f % WORD);
        }
        // bits past n are never candidates
        let n = host.n();
        for (wi, w) in blocked.iter_mut().enumerate() {
            let lo = wi * WORD;
            if lo + WORD > n {
                let valid = n.saturating_sub(lo);
                *w |= if valid == 0 {
                    u64::MAX
                } else {
                    !((1u64 << valid) - 1)
                };
            }
        }
        Frame {
            plan,
            host,
            words,
            blocked,
            images: vec![0; plan.len()],
            used: vec![0; words],
            cand: vec![0; plan.len() * words],
        }
    }

    fn fill_candidates(&mut self, depth: usize) {
        let w = self.words;
        let (cur, _) = self.cand[depth * w..].split_at_mut(w);
        for (c, (u, b)) in cur.iter_mut().zip(self.used.iter().zip(&self.blocked)) {
            *c = !(u | b);
        }
        for &j in &self.plan.back[depth] {
            let row = self.host.row(self.images[j]);
            for i in 0..w {
                cur[i] &= row[i];
            }
        }
    }

    fn place(&mut self, depth: usize, y: usize) {
        self.images[depth] = y;
        self.used[y / WORD] |= 1 << (y % WORD);
    }

    fn unplace(&mut self, y: usize) {
        self.used[y / WORD] &= !(1 << (y % WORD));
    }

    fn descend<V: Visitor>(&mut self, depth: usize, visitor: &mut V) {
        let m = self.plan.len();
        self.fill_candidates(depth);
        let w = self.words;
        if depth + 1 == m {
            let last = &self.cand[depth * w..(depth + 1) * w];
            let count: u64 = last.iter().map(|x| u64::from(x.count_ones())).sum();
            if count > 0 {
                visitor.visit(&self.images[..depth], last, count);
            }
            return;
        }
        for wi in 0..w {
            let mut bits = self.cand[depth * w + wi];
            while bits != 0 {
                let y = wi * WORD + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.place(depth, y);
                self.descend(depth + 1, visitor);
                self.unplace(y);
            }
        }
    }
}

/// Runs the search, splitting on the image of the first placed vertex.
fn run<V, F>(pattern: &Graph, host: &Graph, forbidden: &[usize], make: F) -> V
where
    V: Visitor,
    F: Fn() -> V + Sync,
{
    let m = pattern.n();
    let n = host.n();
    let mut acc = make();
    if m == 0 || m > n {
        return acc;
    }
    let plan = SearchPlan::new(pattern);
    if m == 1 {
        let mut frame = Frame::new(&plan, host, forbidden);
        frame.descend(0, &mut acc);
        return acc;
    }
    let firsts: Vec<usize> = (0..n).filter(|v| !forbidden.contains(v)).collect();
    let branch = |y: usize| {
        let mut frame = Frame::new(&plan, host, forbidden);
        let mut local = make();
        frame.place(0, y);
        frame.descend(1, &mut local);
        local
    };
    if n >= PARALLEL_HOST_MIN {
        let parts: Vec<V> = firsts.par_iter().map(|&y| branch(y)).collect();
        for p in parts {
            acc.merge(p);
        }
    } else {
        for y in firsts {
            acc.merge(branch(y));
        }
    }
    acc
}

/// Number of injective maps `V(pattern) -> V(host)` sending every pattern
/// edge to a host edge.
pub fn count_embeddings(pattern: &Graph, host: &Graph) -> EmbeddingCount {
    count_embeddings_avoiding(pattern, host, &[])
}

/// Embeddings whose image avoids every vertex in `forbidden`.
pub fn count_embeddings_avoiding(
    pattern: &Graph,
    host: &Graph,
    forbidden: &[usize],
) -> EmbeddingCount {
    if pattern.n() == 0 {
        return BigUint::from(1u8);
    }
    BigUint::from(run(pattern, host, forbidden, Tally::default).0)
}

pub fn count_automorphisms(pattern: &Graph) -> EmbeddingCount {
    count_embeddings(pattern, pattern)
}

/// Subgraphs of `host` isomorphic to `pattern`.
///
/// Panics if the embedding count is not divisible by the automorphism
/// count, which can only happen through a counting bug.
pub fn count_copies(pattern: &Graph, host: &Graph) -> EmbeddingCount {
    let emb = count_embeddings(pattern, host);
    let aut = count_automorphisms(pattern);
    let (q, r) = num_integer::Integer::div_rem(&emb, &aut);
    assert!(
        r.is_zero(),
        "embedding count {emb} not divisible by automorphism count {aut}"
    );
    q
}

/// H-degrees of every host vertex, with pair values computed on demand.
#[derive(Clone, Debug)]
pub struct HDegreeReport {
    pattern: Graph,
    host: Graph,
    total: EmbeddingCount,
    h: Vec<EmbeddingCount>,
}

impl HDegreeReport {
    pub fn total(&self) -> &EmbeddingCount {
        &self.total
    }

    /// Embeddings whose image contains `v`.
    pub fn h(&self, v: usize) -> &EmbeddingCount {
        &self.h[v]
    }

    pub fn values(&self) -> &[EmbeddingCount] {
        &self.h
    }

    /// Embeddings whose image contains both `u` and `v`, by inclusion and
    /// exclusion over restricted counts.
    pub fn pair(&self, u: usize, v: usize) -> EmbeddingCount {
        if u == v {
            return self.h[u].clone();
        }
        let avoid_both = count_embeddings_avoiding(&self.pattern, &self.host, &[u, v]);
        // total - avoid(u) - avoid(v) + avoid(u, v) = h(u) + h(v) - total + avoid(u, v)
        &self.h[u] + &self.h[v] + avoid_both - &self.total
    }

    /// Embeddings containing `u` but not `v`.
    pub fn with_without(&self, u: usize, v: usize) -> EmbeddingCount {
        &self.h[u] - self.pair(u, v)
    }

    pub fn summary(&self) -> HDegreeSummary {
        HDegreeSummary {
            total: big_string(&self.total),
            h: self.h.iter().map(big_string).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HDegreeSummary {
    pub total: String,
    pub h: Vec<String>,
}

pub fn h_degrees(pattern: &Graph, host: &Graph) -> HDegreeReport {
    let n = host.n();
    let (total, per_vertex) = if pattern.n() == 0 {
        (BigUint::from(1u8), vec![BigUint::zero(); n])
    } else {
        let acc = run(pattern, host, &[], || Membership {
            total: 0,
            per_vertex: vec![0; n],
        });
        (
            BigUint::from(acc.total),
            acc.per_vertex.into_iter().map(BigUint::from).collect(),
        )
    };
    HDegreeReport {
        pattern: pattern.clone(),
        host: host.clone(),
        total,
        h: per_vertex,
    }
}

/// Deletes `u` and inserts a clone of `v` (not adjacent to `v`) in its
/// place. The result stays triangle-free whenever the host is.
pub fn clone_move(host: &Graph, u: usize, v: usize) -> crate::Result<Graph> {
    if u == v {
        return Err(crate::Error::InvalidParameter(
            "clone move needs u != v".into(),
        ));
    }
    if u >= host.n() || v >= host.n() {
        return Err(crate::Error::InvalidParameter(format!(
            "vertex out of range for n = {}",
            host.n()
        )));
    }
    Ok(host.clone_vertex_over(u, v))
}
