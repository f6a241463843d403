//! Finite-`n` check of the leading coefficient: count embeddings exactly in
//! an actual blow-up with blob sizes `round(w * n)` and compare.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::{leading_coefficient, WeightedPattern};
use crate::embeddings::count_embeddings;
use crate::error::{Error, Result};
use crate::graph::builders::build_blowup;
use crate::graph::Graph;
use crate::rational::{ser_big, ser_ratio, to_f64};

/// Default cap on `n^(m-1)`, the number of partial embeddings the search may
/// have to visit.
pub const DEFAULT_WORK_BUDGET: f64 = 2e8;

/// The error of `err(n2) * n2` against `err(n1) * n1` may grow by at most
/// this factor for the `C / n` fit to be accepted.
pub const FIT_SLACK: f64 = 2.0;

#[derive(Clone, Debug, Serialize)]
pub struct SaturationPoint {
    pub n: usize,
    pub sizes: Vec<usize>,
    #[serde(serialize_with = "ser_big")]
    pub count: BigUint,
    #[serde(serialize_with = "ser_ratio")]
    pub normalized: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub coefficient: BigRational,
    /// `|count / n^m - coefficient|`.
    #[serde(serialize_with = "ser_ratio")]
    pub error: BigRational,
    /// `error / coefficient`, when the coefficient is non-zero.
    pub relative_error: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SaturationFit {
    pub points: [SaturationPoint; 2],
    /// `C = err(n1) * n1`, fitted at the smaller size.
    pub fitted_constant: f64,
    /// `err(n2) <= FIT_SLACK * C / n2`.
    pub holds: bool,
}

/// Largest-remainder rounding of `w * n`; sizes sum to `n` exactly and ties
/// go to the lower index.
pub fn apportion(weights: &[BigRational], n: usize) -> Vec<usize> {
    let n_big = BigRational::from_integer(BigInt::from(n));
    let exact: Vec<BigRational> = weights.iter().map(|w| w * &n_big).collect();
    let mut sizes: Vec<usize> = exact
        .iter()
        .map(|x| x.floor().to_integer().to_usize().unwrap_or(0))
        .collect();
    let assigned: usize = sizes.iter().sum();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&i, &j| {
        let ri = &exact[i] - exact[i].floor();
        let rj = &exact[j] - exact[j].floor();
        rj.cmp(&ri).then(i.cmp(&j))
    });
    for &i in order.iter().take(n.saturating_sub(assigned)) {
        sizes[i] += 1;
    }
    sizes
}

/// Exact embedding count in the size-`n` blow-up against the leading
/// coefficient. Exceeding the work budget is returned as
/// [`Error::BudgetExceeded`].
pub fn saturation_check(
    h: &Graph,
    wp: &WeightedPattern,
    n: usize,
    budget: f64,
) -> Result<SaturationPoint> {
    let m = h.n();
    let work = (n as f64).powi(m.saturating_sub(1) as i32);
    if work > budget {
        return Err(Error::BudgetExceeded(format!(
            "n^(m-1) = {work:.3e} exceeds the counting budget {budget:.3e}"
        )));
    }
    let sizes = apportion(wp.weights(), n);
    let host = build_blowup(wp.pattern(), &sizes)?;
    let count = count_embeddings(h, &host);
    let scale = num_traits::pow(BigInt::from(n), m);
    let normalized = BigRational::new(BigInt::from(count.clone()), scale);
    let coefficient = leading_coefficient(h, wp).value;
    let error = (&normalized - &coefficient).abs();
    let relative_error =
        (!num_traits::Zero::is_zero(&coefficient)).then(|| to_f64(&(&error / &coefficient)));
    Ok(SaturationPoint {
        n,
        sizes,
        count,
        normalized,
        coefficient,
        error,
        relative_error,
    })
}

/// Fits `err(n) <= C / n` at `n1` and checks it at `n2 > n1`.
pub fn saturation_fit(
    h: &Graph,
    wp: &WeightedPattern,
    n1: usize,
    n2: usize,
    budget: f64,
) -> Result<SaturationFit> {
    if n1 == 0 || n2 <= n1 {
        return Err(Error::InvalidParameter(format!(
            "need 0 < n1 < n2, got {n1}, {n2}"
        )));
    }
    let p1 = saturation_check(h, wp, n1, budget)?;
    let p2 = saturation_check(h, wp, n2, budget)?;
    let fitted_constant = to_f64(&p1.error) * n1 as f64;
    let holds = to_f64(&p2.error) * n2 as f64 <= FIT_SLACK * fitted_constant + f64::EPSILON;
    Ok(SaturationFit {
        points: [p1, p2],
        fitted_constant,
        holds,
    })
}
