//! Parameters for the five-cycle blow-up that beats every bipartite host on
//! the pattern `H(d, x)`, and the end-to-end leading-coefficient comparison.
//!
//! With `lambda = 2d / x`, blob weights `(a, b, c, c, c)` and `b = 1 - a - 3c`:
//! `f(a) = a^(lambda+1) (1-a) - (1/2)^(lambda+2) > 0`,
//! `g(c) = a^(lambda+1) b - (1/2)^(lambda+2) > 0`,
//! `p = a^(lambda+1) b / (1/2)^(lambda+2) > 1` and `x_min` is the least `x`
//! with `p^x > T = 2ab^2/c^3`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::{Inequality, Relation};
use crate::blowup::{leading_coefficient, single_hom_weight, weighted_hom_sum, WeightedPattern};
use crate::error::{Error, Result};
use crate::graph::builders::{build_theorem2_h, theorem2_blob_assignment};
use crate::graph::Graph;
use crate::rational::{
    log2_ratio, pow_int, ratio, ratio_int, ratio_string, ser_ratio, to_f64, PowerProduct,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theorem2Config {
    /// `a` is scanned over `1/2 + j / scan_denominator`.
    pub scan_denominator: u64,
    /// `c` is halved from `(1 - a) / 6` at most this many times.
    pub halving_depth: u32,
}

impl Default for Theorem2Config {
    fn default() -> Self {
        Theorem2Config {
            scan_denominator: 1024,
            halving_depth: 60,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem2Params {
    #[serde(serialize_with = "ser_ratio")]
    pub lambda: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub a: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub b: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub c: BigRational,
    /// `p` itself may be irrational; `p^p_power` is exact.
    pub p_power: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub p_raised: BigRational,
    pub p_approx: f64,
    /// `T = 2ab^2 / c^3`.
    #[serde(serialize_with = "ser_ratio")]
    pub threshold: BigRational,
    pub x_min: u64,
    pub certificates: Vec<Inequality>,
}

impl Theorem2Params {
    pub fn holds(&self) -> bool {
        self.certificates.iter().all(|q| q.holds)
    }
}

fn check_lambda(lambda: &BigRational) -> Result<()> {
    if !lambda.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "lambda must be positive, got {}",
            ratio_string(lambda)
        )));
    }
    Ok(())
}

fn half_pow(lambda: &BigRational, extra: i64) -> PowerProduct {
    PowerProduct::constant(ratio_int(1)).times(ratio(1, 2), lambda + ratio_int(extra))
}

fn a_power(lambda: &BigRational, a: &BigRational, coeff: BigRational) -> PowerProduct {
    PowerProduct::constant(coeff).times(a.clone(), lambda + ratio_int(1))
}

pub fn solve_theorem2_params(
    lambda: &BigRational,
    config: &Theorem2Config,
) -> Result<Theorem2Params> {
    check_lambda(lambda)?;
    if config.scan_denominator < 4 {
        return Err(Error::InvalidParameter(
            "scan denominator must be at least 4".into(),
        ));
    }
    let lf = to_f64(lambda);
    let den = config.scan_denominator as i64;
    let mut scan: Vec<(f64, i64)> = (1..(den + 1) / 2)
        .map(|j| {
            let z = 0.5 + j as f64 / den as f64;
            (z.powf(lf + 1.0) * (1.0 - z) - 0.5f64.powf(lf + 2.0), j)
        })
        .filter(|&(_, j)| 2 * j < den)
        .collect();
    scan.sort_by(|p, q| q.0.total_cmp(&p.0).then(p.1.cmp(&q.1)));
    let threshold_side = half_pow(lambda, 2);
    let a = scan
        .iter()
        .filter(|&&(v, _)| v > 0.0)
        .map(|&(_, j)| ratio(1, 2) + ratio(j, den))
        .find(|a| {
            a_power(lambda, a, ratio_int(1) - a).cmp_exact(&threshold_side) == Ordering::Greater
        })
        .ok_or_else(|| Error::Internal("no admissible a on the scan grid".into()))?;

    let c0 = (ratio_int(1) - &a) / ratio_int(6);
    let c = (0..=config.halving_depth)
        .map(|k| &c0 / pow_int(&ratio_int(2), k as i64))
        .find(|c| {
            let b = ratio_int(1) - &a - ratio_int(3) * c;
            a_power(lambda, &a, b).cmp_exact(&threshold_side) == Ordering::Greater
        })
        .ok_or_else(|| Error::Internal("no admissible c within the halving depth".into()))?;
    let b = ratio_int(1) - &a - ratio_int(3) * &c;

    let p_sym = a_power(lambda, &a, b.clone()).times(ratio_int(2), lambda + ratio_int(2));
    let p_power_big = lambda.denom().clone();
    let p_power = p_power_big
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("lambda denominator too large".into()))?;
    let p_raised = p_sym.raised(&p_power_big);
    let threshold = ratio_int(2) * &a * &b * &b / (&c * &c * &c);
    let t_raised = pow_int(&threshold, p_power as i64);

    let exceeds = |x: u64| pow_int(&p_raised, x as i64) > t_raised;
    let x_min = if p_raised <= ratio_int(1) {
        0
    } else {
        let est = (log2_ratio(&threshold) / (log2_ratio(&p_raised) / p_power as f64))
            .floor()
            .max(0.0) as u64
            + 1;
        let mut x = est.max(1);
        while !exceeds(x) {
            x += 1;
        }
        while x > 1 && exceeds(x - 1) {
            x -= 1;
        }
        x
    };

    let one = PowerProduct::constant(ratio_int(1));
    let mut certificates = vec![
        Inequality::powers(
            "f(a) > 0",
            &a_power(lambda, &a, ratio_int(1) - &a),
            Relation::Gt,
            &threshold_side,
        ),
        Inequality::powers(
            "g(c) > 0",
            &a_power(lambda, &a, b.clone()),
            Relation::Gt,
            &threshold_side,
        ),
        Inequality::exact("c > 0", c.clone(), Relation::Gt, ratio_int(0)),
        Inequality::exact("b > 0", b.clone(), Relation::Gt, ratio_int(0)),
        Inequality::powers("p > 1", &p_sym, Relation::Gt, &one),
    ];
    if x_min > 0 {
        let t = PowerProduct::constant(threshold.clone());
        let px = |x: u64| {
            PowerProduct::constant(ratio_int(1))
                .times(p_raised.clone(), ratio(x as i64, p_power as i64))
        };
        certificates.push(Inequality::powers(
            "p^x_min > T",
            &px(x_min),
            Relation::Gt,
            &t,
        ));
        if x_min > 1 {
            certificates.push(Inequality::powers(
                "p^(x_min-1) <= T",
                &px(x_min - 1),
                Relation::Le,
                &t,
            ));
        }
    }
    Ok(Theorem2Params {
        lambda: lambda.clone(),
        p_approx: p_sym.to_f64(),
        a,
        b,
        c,
        p_power,
        p_raised,
        threshold,
        x_min,
        certificates,
    })
}

/// The single-homomorphism lower bound
/// `a^(x+lambda x-1) b^(x-2) c^3 > 2 (1/2)^e` at `x`, once with the exponent
/// `e = 2x + 2 lambda` and once with `e = 2x + lambda x = |V(H)|`. Only the
/// second is equivalent to `p^x > T`.
pub fn final_inequality_forms(params: &Theorem2Params, x: u64) -> (Inequality, Inequality) {
    let xr = ratio_int(x as i64);
    let lam = &params.lambda;
    let lhs = PowerProduct::constant(pow_int(&params.c, 3))
        .times(params.a.clone(), &xr + lam * &xr - ratio_int(1))
        .times_int(params.b.clone(), x as i64 - 2);
    let rhs = |e: BigRational| PowerProduct::constant(ratio_int(2)).times(ratio(1, 2), e);
    let written = Inequality::powers(
        "single hom > 2 (1/2)^(2x+2 lambda)",
        &lhs,
        Relation::Gt,
        &rhs(ratio_int(2) * &xr + ratio_int(2) * lam),
    );
    let vertices = Inequality::powers(
        "single hom > 2 (1/2)^(2x+lambda x)",
        &lhs,
        Relation::Gt,
        &rhs(ratio_int(2) * &xr + lam * &xr),
    );
    (written, vertices)
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem2Certificate {
    pub params: Theorem2Params,
    pub x: u64,
    pub d: u64,
    pub vertices: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub l_c5: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub l_k2: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub single_hom: BigRational,
    /// `L_K2 = 2 (1/2)^|V(H)|`, as for any connected bipartite pattern.
    pub l_k2_closed_form: bool,
    pub comparison: Inequality,
    pub written_form: Inequality,
    pub vertex_form: Inequality,
    pub holds: bool,
}

/// `d = lambda x / 2` when it is a positive integer.
fn half_defect(lambda: &BigRational, x: u64) -> Option<u64> {
    let d = lambda * ratio_int(x as i64) / ratio_int(2);
    (d.is_integer() && d.is_positive())
        .then(|| d.to_integer().to_u64())
        .flatten()
}

/// Builds `H(d, x)` and compares its leading coefficients in the `(a, b, c,
/// c, c)` five-cycle blow-up and the balanced complete bipartite graph. By
/// default `x` is the first value `>= max(x_min, 3)` with `lambda x` even.
pub fn theorem2_end_to_end(
    lambda: &BigRational,
    x: Option<u64>,
    config: &Theorem2Config,
) -> Result<Theorem2Certificate> {
    let params = solve_theorem2_params(lambda, config)?;
    let x = match x {
        Some(x) => x,
        None => {
            let step = (lambda.denom() / lambda.denom().gcd(&BigInt::from(2u8))
                * BigInt::from(2u8))
            .to_u64()
            .ok_or_else(|| Error::InvalidParameter("lambda denominator too large".into()))?;
            let start = params.x_min.max(3);
            (start..start + 2 * step + 2)
                .find(|&x| half_defect(lambda, x).is_some())
                .expect("period of lambda x")
        }
    };
    if x < 3 {
        return Err(Error::InvalidParameter(format!(
            "H(d, x) needs x >= 3, got {x}"
        )));
    }
    let d = half_defect(lambda, x).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "lambda x = {} is not a positive even integer",
            ratio_string(&(lambda * ratio_int(x as i64)))
        ))
    })?;
    let (du, xu) = (d as usize, x as usize);
    let h = build_theorem2_h(du, xu)?;
    let weights = vec![
        params.a.clone(),
        params.b.clone(),
        params.c.clone(),
        params.c.clone(),
        params.c.clone(),
    ];
    let wp = WeightedPattern::new(Graph::cycle(5), weights)?;
    let l_c5 = weighted_hom_sum(&h, wp.pattern(), wp.weights())?;
    let l_k2 = leading_coefficient(&h, &WeightedPattern::uniform(Graph::complete(2))?).value;
    let l_k2_closed_form = l_k2 == ratio_int(2) * pow_int(&ratio(1, 2), h.n() as i64);
    let phi = theorem2_blob_assignment(du, xu)?;
    let single_hom = single_hom_weight(&h, &wp, &phi)
        .ok_or_else(|| Error::Internal("blob assignment is not a homomorphism".into()))?;
    let comparison = Inequality::exact("L_C5 > L_K2", l_c5.clone(), Relation::Gt, l_k2.clone());
    let (written_form, vertex_form) = final_inequality_forms(&params, x);
    let holds = comparison.holds && params.holds() && l_k2_closed_form;
    Ok(Theorem2Certificate {
        params,
        x,
        d,
        vertices: h.n(),
        l_c5,
        l_k2,
        single_hom,
        l_k2_closed_form,
        comparison,
        written_form,
        vertex_form,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_ratio;
    use num_traits::Zero;

    fn solve(l: &str) -> Theorem2Params {
        solve_theorem2_params(&parse_ratio(l).unwrap(), &Theorem2Config::default()).unwrap()
    }

    #[test]
    fn lambda_one_parameters() {
        let p = solve("1");
        assert!(
            p.holds(),
            "{:?}",
            p.certificates
                .iter()
                .filter(|q| !q.holds)
                .collect::<Vec<_>>()
        );
        assert!(p.a > ratio(1, 2) && p.a < ratio_int(1));
        assert!(p.c.is_positive() && p.c < (ratio_int(1) - &p.a) / ratio_int(3));
        assert_eq!(p.b, ratio_int(1) - &p.a - ratio_int(3) * &p.c);
        assert_eq!(p.p_power, 1);
        assert!(p.p_raised > ratio_int(1));
        // the maximiser of z^2 (1 - z) is 2/3
        assert!((to_f64(&p.a) - 2.0 / 3.0).abs() < 1e-3);
        let ceil_log = (to_f64(&p.threshold).ln() / p.p_approx.ln()).ceil() as u64;
        assert!(p.x_min >= ceil_log);
    }

    #[test]
    fn scan_point_from_direct_evaluation() {
        // f(3/5) = 9/25 * 2/5 - 1/8 > 0
        let lhs = ratio(9, 25) * ratio(2, 5);
        assert!(lhs > ratio(1, 8));
    }

    #[test]
    fn fractional_lambda_is_certified() {
        for l in ["1/3", "2/5", "3/2", "2"] {
            let p = solve(l);
            assert!(p.holds(), "lambda {l}");
            assert_eq!(
                p.p_power as i64,
                parse_ratio(l).unwrap().denom().to_i64().unwrap()
            );
        }
    }

    #[test]
    fn rejects_non_positive_lambda() {
        assert!(solve_theorem2_params(&ratio_int(0), &Theorem2Config::default()).is_err());
        assert!(solve_theorem2_params(&ratio(-1, 2), &Theorem2Config::default()).is_err());
    }

    #[test]
    fn vertex_form_holds_at_x_min() {
        let p = solve("1");
        let (written, vertices) = final_inequality_forms(&p, p.x_min);
        assert!(vertices.holds);
        assert!(!written.holds);
        let (_, below) = final_inequality_forms(&p, p.x_min - 1);
        assert!(!below.holds);
    }

    #[test]
    fn small_x_is_reported_not_assumed() {
        let cert = theorem2_end_to_end(&ratio_int(1), Some(4), &Theorem2Config::default()).unwrap();
        assert_eq!((cert.x, cert.d, cert.vertices), (4, 2, 12));
        assert!(cert.l_k2_closed_form);
        assert_eq!(cert.comparison.holds, cert.l_c5 > cert.l_k2);
        assert!(theorem2_end_to_end(&ratio_int(1), Some(5), &Theorem2Config::default()).is_err());
    }

    #[test]
    fn zero_weight_blobs_annihilate_the_assignment() {
        let (d, x) = (2, 4);
        let h = build_theorem2_h(d, x).unwrap();
        let wp = WeightedPattern::new(
            Graph::cycle(5),
            vec![
                ratio(2, 3),
                ratio(1, 3),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            ],
        )
        .unwrap();
        let phi = theorem2_blob_assignment(d, x).unwrap();
        assert!(single_hom_weight(&h, &wp, &phi).unwrap().is_zero());
    }

    #[test]
    fn lambda_one_end_to_end() {
        let cert = theorem2_end_to_end(&ratio_int(1), None, &Theorem2Config::default()).unwrap();
        assert!(cert.x >= cert.params.x_min.max(3));
        assert_eq!(cert.x % 2, 0);
        assert_eq!(cert.d * 2, cert.x);
        assert_eq!(cert.vertices as u64, 3 * cert.x);
        assert!(cert.holds && cert.comparison.holds);
        assert!(cert.vertex_form.holds);
        assert!(cert.l_c5 >= cert.single_hom);
    }
}
