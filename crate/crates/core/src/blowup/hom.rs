//! Weighted homomorphism sums `sum_phi prod_v w(phi(v))` over all
//! edge-preserving maps `H -> P`.
//!
//! The sum factorises over the components of `H`. Tree components are
//! evaluated by dynamic programming from the leaves up; components with a
//! cycle fall back to backtracking in connectivity-first order, which skips
//! zero-weight targets as soon as they are reached.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::embeddings::SearchPlan;
use crate::graph::Graph;

pub(crate) trait Weight: Clone + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
}

impl Weight for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Weight for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

pub(crate) fn hom_sum<T: Weight>(h: &Graph, p: &Graph, w: &[T]) -> T {
    debug_assert_eq!(w.len(), p.n());
    let mut total = T::one();
    for part in h.connected_components().parts {
        let comp = h.induced(&part);
        let value = if comp.edge_count() + 1 == comp.n() {
            tree_sum(&comp, p, w)
        } else {
            backtrack_sum(&comp, p, w)
        };
        if value.is_zero() {
            return T::zero();
        }
        total = total.mul(&value);
    }
    total
}

fn tree_sum<T: Weight>(tree: &Graph, p: &Graph, w: &[T]) -> T {
    let m = tree.n();
    let k = p.n();
    let mut parent = vec![usize::MAX; m];
    let mut order = vec![0];
    let mut seen = vec![false; m];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for v in tree.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let p_nbrs: Vec<Vec<usize>> = (0..k).map(|i| p.neighbors(i).collect()).collect();
    let mut acc: Vec<Vec<T>> = vec![w.to_vec(); m];
    for &v in order.iter().rev() {
        if parent[v] == usize::MAX {
            continue;
        }
        let msg: Vec<T> = (0..k)
            .map(|i| {
                let mut s = T::zero();
                for &j in &p_nbrs[i] {
                    if !acc[v][j].is_zero() {
                        s.add_assign(&acc[v][j]);
                    }
                }
                s
            })
            .collect();
        let up = &mut acc[parent[v]];
        for i in 0..k {
            if !up[i].is_zero() {
                up[i] = up[i].mul(&msg[i]);
            }
        }
    }
    let mut total = T::zero();
    for x in &acc[0] {
        total.add_assign(x);
    }
    total
}

fn backtrack_sum<T: Weight>(comp: &Graph, p: &Graph, w: &[T]) -> T {
    let plan = SearchPlan::new(comp);
    let mut images = vec![0usize; plan.len()];
    let mut total = T::zero();
    backtrack(&plan, p, w, 0, T::one(), &mut images, &mut total);
    total
}

fn backtrack<T: Weight>(
    plan: &SearchPlan,
    p: &Graph,
    w: &[T],
    depth: usize,
    partial: T,
    images: &mut [usize],
    total: &mut T,
) {
    let last = depth + 1 == plan.len();
    let mut leaf_sum = T::zero();
    for i in 0..p.n() {
        if w[i].is_zero() || !plan.back[depth].iter().all(|&j| p.has_edge(images[j], i)) {
            continue;
        }
        if last {
            leaf_sum.add_assign(&w[i]);
        } else {
            images[depth] = i;
            backtrack(plan, p, w, depth + 1, partial.mul(&w[i]), images, total);
        }
    }
    if last && !leaf_sum.is_zero() {
        total.add_assign(&partial.mul(&leaf_sum));
    }
}

/// Every homomorphism `H -> P` as an image vector indexed by `H`'s vertices.
pub(crate) fn list_homs(h: &Graph, p: &Graph) -> Vec<Vec<usize>> {
    let plan = SearchPlan::new(h);
    let mut out = Vec::new();
    if h.n() == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut images = vec![0usize; plan.len()];
    list_rec(&plan, p, 0, &mut images, &mut out);
    out.sort();
    out
}

fn list_rec(
    plan: &SearchPlan,
    p: &Graph,
    depth: usize,
    images: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    if depth == plan.len() {
        let mut phi = vec![0; plan.len()];
        for (pos, &v) in plan.order.iter().enumerate() {
            phi[v] = images[pos];
        }
        out.push(phi);
        return;
    }
    for i in 0..p.n() {
        if plan.back[depth].iter().all(|&j| p.has_edge(images[j], i)) {
            images[depth] = i;
            list_rec(plan, p, depth + 1, images, out);
        }
    }
}
