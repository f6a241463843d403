//! The minimum-degree coefficient
//! `(d+x-1)^(2d+2x-2) / (2 (2d+x-1)^(2d+x-1) (x-1)^(x-1))` for a bipartite
//! pattern with a matching of size `x` and `2d` unmatched vertices, and the
//! chain of estimates showing it exceeds `2/5` when `16 d^2 <= x - 1`.

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::{Inequality, Relation};
use crate::error::{Error, Result};
use crate::rational::{pow_int, ratio, ratio_int, ser_ratio, to_f64};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Coefficient {
    pub x: u64,
    pub d: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub value: BigRational,
}

impl Theorem1Coefficient {
    pub fn exceeds_two_fifths(&self) -> bool {
        self.value > ratio(2, 5)
    }
}

/// `16 d^2 <= x - 1`, the unmatched-vertex hypothesis with `2d` unmatched
/// vertices.
pub fn thm1_hypothesis(x: u64, d: u64) -> bool {
    16 * d * d < x
}

fn check_x(x: u64) -> Result<()> {
    if x < 2 {
        return Err(Error::InvalidParameter(format!(
            "matching size x must be at least 2, got {x}"
        )));
    }
    Ok(())
}

pub fn thm1_coefficient(x: u64, d: u64) -> Result<Theorem1Coefficient> {
    check_x(x)?;
    let (xi, di) = (x as i64, d as i64);
    let num = pow_int(&ratio_int(di + xi - 1), 2 * di + 2 * xi - 2);
    let den = ratio_int(2)
        * pow_int(&ratio_int(2 * di + xi - 1), 2 * di + xi - 1)
        * pow_int(&ratio_int(xi - 1), xi - 1);
    Ok(Theorem1Coefficient {
        x,
        d,
        value: num / den,
    })
}

/// `(2d+x-1) / (2d+2x-2)`, the maximiser of `t^(2d+x-1) (1-t)^(x-1)` on
/// `[0, 1]`.
pub fn optimal_delta_fraction(x: u64, d: u64) -> Result<BigRational> {
    if x == 0 || 2 * d + 2 * x == 2 {
        return Err(Error::InvalidParameter(format!(
            "degenerate maximisation at x = {x}, d = {d}"
        )));
    }
    Ok(ratio((2 * d + x - 1) as i64, (2 * d + 2 * x - 2) as i64))
}

/// Argmax of `t^(2d+x-1) (1-t)^(x-1)` over the open grid `k * step`, in log
/// space; the first maximiser wins ties.
pub fn delta_grid_argmax(x: u64, d: u64, step: f64) -> f64 {
    let (p, q) = ((2 * d + x) as f64 - 1.0, x as f64 - 1.0);
    let steps = (1.0 / step).round() as u64;
    let mut best = (f64::NEG_INFINITY, 0.0);
    for k in 1..steps {
        let t = k as f64 * step;
        let v = p * t.ln() + q * (1.0 - t).ln();
        if v > best.0 {
            best = (v, t);
        }
    }
    best.1
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub x: u64,
    pub d: u64,
    pub hypothesis: bool,
    /// The seven displayed expressions, first to last.
    #[serde(serialize_with = "ser_ratios")]
    pub values: Vec<BigRational>,
    /// Consecutive comparisons, then the final `> 2/5`.
    pub steps: Vec<Inequality>,
    /// The two one-variable estimates used between the fifth and sixth
    /// expressions.
    pub bernoulli: Vec<Inequality>,
    pub holds: bool,
}

fn ser_ratios<S: serde::Serializer>(
    xs: &[BigRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(crate::rational::ratio_string))
}

impl ChainReport {
    pub fn failed_steps(&self) -> impl Iterator<Item = &Inequality> {
        self.steps
            .iter()
            .chain(&self.bernoulli)
            .filter(|q| !q.holds)
    }
}

/// Evaluates every expression of the chain exactly and checks each link.
/// A violated hypothesis is flagged, not rejected.
pub fn thm1_chain_check(x: u64, d: u64) -> Result<ChainReport> {
    check_x(x)?;
    let (xi, di) = (x as i64, d as i64);
    let one = ratio_int(1);
    let half = ratio(1, 2);
    let s = ratio(di, xi - 1);
    let e1 = thm1_coefficient(x, d)?.value;
    let e2 = &half
        * pow_int(&(&one - ratio(di, 2 * di + xi - 1)), 2 * di + xi - 1)
        * pow_int(&(&one + &s), xi - 1);
    let e3 = &half * pow_int(&(&one - &s), 2 * di + xi - 1) * pow_int(&(&one + &s), xi - 1);
    let e4 = &half * pow_int(&(&one - &s), 2 * di) * pow_int(&((&one - &s) * (&one + &s)), xi - 1);
    let e5 = &half * pow_int(&(&one - &s), 2 * di) * pow_int(&(&one - &s * &s), xi - 1);
    let e6 = &half * (&one - ratio(2 * di * di, xi - 1)) * (&one - ratio(di * di, xi - 1));
    let e7 = ratio(105, 256);
    let values = vec![e1, e2, e3, e4, e5, e6, e7];
    let relations = [
        Relation::Eq,
        Relation::Ge,
        Relation::Eq,
        Relation::Eq,
        Relation::Ge,
        Relation::Ge,
    ];
    let mut steps: Vec<Inequality> = relations
        .iter()
        .enumerate()
        .map(|(i, &rel)| {
            Inequality::exact(
                format!("E{} {} E{}", i + 1, rel.symbol(), i + 2),
                values[i].clone(),
                rel,
                values[i + 1].clone(),
            )
        })
        .collect();
    steps.push(Inequality::exact(
        "E7 > 2/5",
        values[6].clone(),
        Relation::Gt,
        ratio(2, 5),
    ));
    let bernoulli = vec![
        Inequality::exact(
            "(1-d/(x-1))^(2d) >= 1-2d^2/(x-1)",
            pow_int(&(&one - &s), 2 * di),
            Relation::Ge,
            &one - ratio(2 * di * di, xi - 1),
        ),
        Inequality::exact(
            "(1-d^2/(x-1)^2)^(x-1) >= 1-d^2/(x-1)",
            pow_int(&(&one - &s * &s), xi - 1),
            Relation::Ge,
            &one - ratio(di * di, xi - 1),
        ),
    ];
    let holds = steps.iter().chain(&bernoulli).all(|q| q.holds);
    Ok(ChainReport {
        x,
        d,
        hypothesis: thm1_hypothesis(x, d),
        values,
        steps,
        bernoulli,
        holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepViolation {
    pub x: u64,
    pub d: u64,
    pub what: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub x_max: u64,
    pub pairs_checked: usize,
    /// The pair with the smallest coefficient.
    pub min_pair: (u64, u64),
    #[serde(serialize_with = "ser_ratio")]
    pub min_coefficient: BigRational,
    pub min_coefficient_approx: f64,
    /// Sorted by `(x, d)`.
    pub violations: Vec<SweepViolation>,
    pub holds: bool,
}

/// Coefficient and chain for every `2 <= x <= x_max` and `d >= 0` with
/// `16 d^2 <= x - 1`.
pub fn thm1_sweep(x_max: u64) -> Result<SweepReport> {
    if x_max < 2 {
        return Err(Error::InvalidParameter(format!(
            "sweep needs x_max >= 2, got {x_max}"
        )));
    }
    let pairs: Vec<(u64, u64)> = (2..=x_max)
        .flat_map(|x| {
            (0..)
                .take_while(move |&d| thm1_hypothesis(x, d))
                .map(move |d| (x, d))
        })
        .collect();
    let results: Vec<(u64, u64, BigRational, Vec<SweepViolation>)> = pairs
        .par_iter()
        .map(|&(x, d)| {
            let coeff = thm1_coefficient(x, d).expect("x >= 2");
            let mut bad = Vec::new();
            if !coeff.exceeds_two_fifths() {
                bad.push(SweepViolation {
                    x,
                    d,
                    what: "coefficient <= 2/5".into(),
                });
            }
            let chain = thm1_chain_check(x, d).expect("x >= 2");
            bad.extend(chain.failed_steps().map(|q| SweepViolation {
                x,
                d,
                what: q.name.clone(),
            }));
            (x, d, coeff.value, bad)
        })
        .collect();
    let (mx, md, min) = results
        .iter()
        .min_by(|a, b| a.2.cmp(&b.2).then((a.0, a.1).cmp(&(b.0, b.1))))
        .map(|(x, d, v, _)| (*x, *d, v.clone()))
        .expect("at least one pair");
    let violations: Vec<SweepViolation> = results.into_iter().flat_map(|r| r.3).collect();
    Ok(SweepReport {
        x_max,
        pairs_checked: pairs.len(),
        min_pair: (mx, md),
        min_coefficient_approx: to_f64(&min),
        min_coefficient: min,
        holds: violations.is_empty(),
        violations,
    })
}
