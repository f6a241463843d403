//! Leading coefficients of embedding counts in weighted blow-ups.
//!
//! If every vertex `i` of a pattern `P` is blown up into a blob of about
//! `w_i * n` vertices, the number of injective embeddings of an `m`-vertex
//! `H` is `L * n^m + O(n^(m-1))` with
//! `L = sum over homomorphisms phi: H -> P of prod_v w(phi(v))`.
//! Coefficients are evaluated exactly: weights are brought to a common
//! denominator `D` and the integer sum is divided by `D^m`.

mod hom;
pub mod optimize;
pub mod saturation;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{big_string, ratio_string};

pub use optimize::{optimize_weights, OptimizeResult, OptimizerConfig};
pub use saturation::{saturation_check, saturation_fit, SaturationFit, SaturationPoint};

/// Largest pattern for which homomorphisms can be listed explicitly.
pub const MAX_LISTING_VERTICES: usize = 20;

/// A small pattern with one exact non-negative weight per vertex, summing
/// to one.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedPattern {
    pattern: Graph,
    weights: Vec<BigRational>,
}

impl WeightedPattern {
    pub fn new(pattern: Graph, weights: Vec<BigRational>) -> Result<WeightedPattern> {
        if weights.len() != pattern.n() {
            return Err(Error::SizeMismatch {
                expected: pattern.n(),
                got: weights.len(),
            });
        }
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::InvalidParameter(
                "blob weights must be non-negative".into(),
            ));
        }
        let sum: BigRational = weights.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidParameter(format!(
                "blob weights sum to {}, not 1",
                ratio_string(&sum)
            )));
        }
        Ok(WeightedPattern { pattern, weights })
    }

    /// `pattern` with all weights equal to `1 / |V(pattern)|`.
    pub fn uniform(pattern: Graph) -> Result<WeightedPattern> {
        let k = pattern.n() as i64;
        if k == 0 {
            return Err(Error::InvalidParameter("empty blow-up pattern".into()));
        }
        WeightedPattern::new(pattern, vec![crate::rational::ratio(1, k); k as usize])
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn weight_strings(&self) -> Vec<String> {
        self.weights.iter().map(ratio_string).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingCoefficient {
    pub value: BigRational,
    /// Homomorphisms with a non-zero weight product.
    pub hom_count: BigUint,
}

impl LeadingCoefficient {
    pub fn summary(&self) -> CoefficientSummary {
        CoefficientSummary {
            value: ratio_string(&self.value),
            approx: crate::rational::to_f64(&self.value),
            hom_count: big_string(&self.hom_count),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientSummary {
    pub value: String,
    pub approx: f64,
    pub hom_count: String,
}

/// Scales non-negative rational weights to integers over their least common
/// denominator.
fn integer_weights(weights: &[BigRational]) -> Result<(Vec<BigUint>, BigUint)> {
    if weights.iter().any(|w| w.is_negative()) {
        return Err(Error::InvalidParameter(
            "weights must be non-negative".into(),
        ));
    }
    let den = weights
        .iter()
        .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let ints = weights
        .iter()
        .map(|w| {
            (w.numer() * (&den / w.denom()))
                .to_biguint()
                .expect("non-negative")
        })
        .collect();
    Ok((ints, den.to_biguint().expect("positive")))
}

/// `sum_phi prod_v weights[phi(v)]` for arbitrary non-negative weights (no
/// normalisation). Homogeneous of degree `|V(h)|` in the weights.
pub fn weighted_hom_sum(h: &Graph, p: &Graph, weights: &[BigRational]) -> Result<BigRational> {
    if weights.len() != p.n() {
        return Err(Error::SizeMismatch {
            expected: p.n(),
            got: weights.len(),
        });
    }
    let (ints, den) = integer_weights(weights)?;
    let num = hom::hom_sum(h, p, &ints);
    let scale = num_traits::pow(den, h.n());
    Ok(BigRational::new(BigInt::from(num), BigInt::from(scale)))
}

/// Floating-point evaluation used inside the weight search.
pub fn weighted_hom_sum_f64(h: &Graph, p: &Graph, weights: &[f64]) -> f64 {
    hom::hom_sum(h, p, weights)
}

pub fn leading_coefficient(h: &Graph, wp: &WeightedPattern) -> LeadingCoefficient {
    let value =
        weighted_hom_sum(h, &wp.pattern, &wp.weights).expect("weighted pattern is validated");
    let indicator: Vec<BigUint> = wp
        .weights
        .iter()
        .map(|w| {
            if w.is_zero() {
                BigUint::zero()
            } else {
                BigUint::one()
            }
        })
        .collect();
    LeadingCoefficient {
        value,
        hom_count: hom::hom_sum(h, &wp.pattern, &indicator),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomEnumeration {
    pub count: BigUint,
    /// Image vectors indexed by the vertices of `H`, sorted.
    pub listing: Option<Vec<Vec<usize>>>,
}

/// Counts (and optionally lists) the edge-preserving maps `H -> P`.
/// Listing is refused for patterns above [`MAX_LISTING_VERTICES`].
pub fn enumerate_homomorphisms(h: &Graph, p: &Graph, list: bool) -> Result<HomEnumeration> {
    let ones = vec![BigUint::one(); p.n()];
    let count = hom::hom_sum(h, p, &ones);
    let listing = if list {
        if h.n() > MAX_LISTING_VERTICES {
            return Err(Error::BudgetExceeded(format!(
                "listing homomorphisms needs |V(H)| <= {MAX_LISTING_VERTICES}, got {}",
                h.n()
            )));
        }
        Some(hom::list_homs(h, p))
    } else {
        None
    };
    Ok(HomEnumeration { count, listing })
}

/// Product of the weights along one map `phi: V(H) -> V(P)`, or `None` if
/// `phi` is not a homomorphism.
pub fn single_hom_weight(h: &Graph, wp: &WeightedPattern, phi: &[usize]) -> Option<BigRational> {
    if phi.len() != h.n() || phi.iter().any(|&i| i >= wp.pattern.n()) {
        return None;
    }
    if !h
        .edges()
        .iter()
        .all(|&(u, v)| wp.pattern.has_edge(phi[u], phi[v]))
    {
        return None;
    }
    Some(phi.iter().map(|&i| wp.weights[i].clone()).product())
}
