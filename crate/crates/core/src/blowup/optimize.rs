//! Heuristic maximisation of the leading coefficient over the weight
//! simplex.
//!
//! 1. Seed: every composition of `R` into `|V(P)|` parts (weights `j / R`),
//!    one representative per orbit of `Aut(P)`, evaluated in floating point.
//! 2. Polish the best seeds: repeatedly move mass `delta` between two blobs
//!    while that improves the value; halve `delta` when no move helps.
//! 3. Snap each polished point to a nearby simple fraction, re-evaluate
//!    exactly, and keep the best exact value (ties: lexicographically smaller
//!    weights). The best grid point is itself a candidate, so the result is
//!    never worse than the seed.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{leading_coefficient, weighted_hom_sum_f64, LeadingCoefficient, WeightedPattern};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ratio, ratio_string, simplest_within, to_f64};

pub const MAX_PATTERN_VERTICES: usize = 8;

#[derive(Clone, Debug)]
pub struct OptimizerConfig {
    /// Grid denominator `R`; seeds are the points with weights `j / R`.
    pub grid: usize,
    /// Ascent iterations per seed.
    pub max_iter: usize,
    /// The ascent stops once its step falls below this.
    pub tol: f64,
    /// Number of best grid points that get polished.
    pub seeds: usize,
    /// `R` is lowered until the grid has at most this many points.
    pub max_grid_points: usize,
    pub trace: bool,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            grid: 50,
            max_iter: 200,
            tol: 1e-6,
            seeds: 4,
            max_grid_points: 400_000,
            trace: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub seed: usize,
    pub iter: usize,
    pub step: f64,
    pub value: f64,
}

#[derive(Clone, Debug)]
pub struct OptimizeResult {
    pub weights: WeightedPattern,
    pub coefficient: LeadingCoefficient,
    /// Grid denominator actually used.
    pub grid: usize,
    pub grid_points: usize,
    pub trace: Vec<TraceStep>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimizeSummary {
    pub weights: Vec<String>,
    pub coefficient: String,
    pub coefficient_approx: f64,
    pub hom_count: String,
    pub grid: usize,
    pub grid_points: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TraceStep>,
}

impl OptimizeResult {
    pub fn summary(&self) -> OptimizeSummary {
        let c = self.coefficient.summary();
        OptimizeSummary {
            weights: self.weights.weight_strings(),
            coefficient: c.value,
            coefficient_approx: c.approx,
            hom_count: c.hom_count,
            grid: self.grid,
            grid_points: self.grid_points,
            trace: self.trace.clone(),
        }
    }
}

/// Automorphisms of a small graph as image vectors.
pub(crate) fn automorphisms(p: &Graph) -> Vec<Vec<usize>> {
    fn rec(p: &Graph, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let v = perm.len();
        if v == p.n() {
            out.push(perm.clone());
            return;
        }
        for y in 0..p.n() {
            if used[y] || p.degree(y) != p.degree(v) {
                continue;
            }
            if (0..v).all(|u| p.has_edge(u, v) == p.has_edge(perm[u], y)) {
                used[y] = true;
                perm.push(y);
                rec(p, perm, used, out);
                perm.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(p, &mut Vec::new(), &mut vec![false; p.n()], &mut out);
    out
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// All compositions of `total` into `parts` non-negative parts, in
/// lexicographic order.
fn compositions(total: usize, parts: usize) -> Vec<Vec<u32>> {
    fn rec(left: usize, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == parts {
            cur.push(left as u32);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for j in 0..=left {
            cur.push(j as u32);
            rec(left - j, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// True if `point` is lexicographically smallest among its images under
/// the automorphisms.
fn is_orbit_representative(point: &[u32], auts: &[Vec<usize>], scratch: &mut [u32]) -> bool {
    for sigma in auts {
        for (v, &s) in sigma.iter().enumerate() {
            scratch[s] = point[v];
        }
        if scratch[..] < point[..] {
            return false;
        }
    }
    true
}

fn lex_cmp_ratios(a: &[BigRational], b: &[BigRational]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn ascend(
    h: &Graph,
    p: &Graph,
    start: Vec<f64>,
    step0: f64,
    config: &OptimizerConfig,
    seed: usize,
    trace: &mut Vec<TraceStep>,
) -> Vec<f64> {
    let k = start.len();
    let mut w = start;
    let mut value = weighted_hom_sum_f64(h, p, &w);
    let mut step = step0;
    for iter in 0..config.max_iter {
        if step < config.tol {
            break;
        }
        let mut best: Option<(f64, usize, usize, f64)> = None;
        for i in 0..k {
            for j in 0..k {
                if i == j || w[j] <= 0.0 {
                    continue;
                }
                let t = step.min(w[j]);
                let mut trial = w.clone();
                trial[i] += t;
                trial[j] -= t;
                let v = weighted_hom_sum_f64(h, p, &trial);
                if v > value && best.is_none_or(|b| v > b.0) {
                    best = Some((v, i, j, t));
                }
            }
        }
        match best {
            Some((v, i, j, t)) => {
                w[i] += t;
                w[j] -= t;
                value = v;
            }
            None => step /= 2.0,
        }
        if config.trace {
            trace.push(TraceStep {
                seed,
                iter,
                step,
                value,
            });
        }
    }
    w
}

/// Snaps floating weights to simple fractions summing to one; `None` if the
/// snapped point leaves the simplex.
fn rationalize(w: &[f64], tol: f64) -> Option<Vec<BigRational>> {
    let mut out: Vec<BigRational> = w.iter().map(|&x| simplest_within(x, tol)).collect();
    let (largest, _) =
        w.iter().enumerate().fold(
            (0, f64::MIN),
            |acc, (i, &x)| if x > acc.1 { (i, x) } else { acc },
        );
    let others: BigRational = out
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != largest)
        .map(|(_, x)| x.clone())
        .sum();
    out[largest] = ratio(1, 1) - others;
    (!out[largest].is_negative()).then_some(out)
}

/// Maximises `leading_coefficient(h, (p, w))` over weight vectors `w`.
/// Deterministic for a fixed config, independent of the rayon pool size.
pub fn optimize_weights(h: &Graph, p: &Graph, config: &OptimizerConfig) -> Result<OptimizeResult> {
    let k = p.n();
    if k == 0 || k > MAX_PATTERN_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "blow-up pattern must have 1..={MAX_PATTERN_VERTICES} vertices, got {k}"
        )));
    }
    if config.grid == 0 {
        return Err(Error::InvalidParameter(
            "grid resolution must be positive".into(),
        ));
    }
    let mut grid = config.grid;
    while grid > 1 && binomial(grid + k - 1, k - 1) > config.max_grid_points as f64 {
        grid -= 1;
    }

    let auts = automorphisms(p);
    let points: Vec<Vec<u32>> = compositions(grid, k)
        .into_iter()
        .filter(|pt| is_orbit_representative(pt, &auts, &mut vec![0; k]))
        .collect();
    let values: Vec<f64> = points
        .par_iter()
        .map(|pt| {
            let w: Vec<f64> = pt.iter().map(|&j| j as f64 / grid as f64).collect();
            weighted_hom_sum_f64(h, p, &w)
        })
        .collect();

    // best first; equal values keep grid (lexicographic) order
    let mut ranked: Vec<usize> = (0..points.len()).collect();
    ranked.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    ranked.truncate(config.seeds.max(1));

    let to_exact = |pt: &[u32]| -> Vec<BigRational> {
        pt.iter().map(|&j| ratio(j as i64, grid as i64)).collect()
    };

    let polished: Vec<(Vec<f64>, Vec<TraceStep>)> = ranked
        .par_iter()
        .enumerate()
        .map(|(seed, &idx)| {
            let start: Vec<f64> = points[idx]
                .iter()
                .map(|&j| j as f64 / grid as f64)
                .collect();
            let mut trace = Vec::new();
            let w = ascend(h, p, start, 1.0 / grid as f64, config, seed, &mut trace);
            (w, trace)
        })
        .collect();

    let mut candidates: Vec<Vec<BigRational>> = vec![to_exact(&points[ranked[0]])];
    let mut trace = Vec::new();
    for (w, t) in polished {
        if let Some(exact) = rationalize(&w, config.tol / 10.0) {
            candidates.push(exact);
        }
        trace.extend(t);
    }

    let mut best: Option<(Vec<BigRational>, LeadingCoefficient)> = None;
    for cand in candidates {
        let wp = WeightedPattern::new(p.clone(), cand.clone())?;
        let lc = leading_coefficient(h, &wp);
        let better = match &best {
            None => true,
            Some((bw, bl)) => match lc.value.cmp(&bl.value) {
                Ordering::Greater => true,
                Ordering::Equal => lex_cmp_ratios(&cand, bw) == Ordering::Less,
                Ordering::Less => false,
            },
        };
        if better {
            best = Some((cand, lc));
        }
    }
    let (weights, coefficient) = best.expect("at least the grid seed is a candidate");
    debug_assert!(!coefficient.value.is_negative() || coefficient.value.is_zero());
    Ok(OptimizeResult {
        weights: WeightedPattern::new(p.clone(), weights)?,
        coefficient,
        grid,
        grid_points: points.len(),
        trace,
    })
}

/// `(weights, value)` as strings, for logs.
pub fn describe(result: &OptimizeResult) -> String {
    format!(
        "weights [{}] coefficient {} (~{:.6e})",
        result.weights.weight_strings().join(", "),
        ratio_string(&result.coefficient.value),
        to_f64(&result.coefficient.value)
    )
}
