//! Exact checks of the edge bound for triangle-free graphs, the minimum
//! degree coefficient behind the bipartite-maximizer result, and the
//! parameter derivation for the five-cycle counterexample family.
//!
//! Every comparison is made in exact rational arithmetic and recorded as an
//! [`Inequality`]. Sides involving rational exponents are compared after
//! raising both to a common power that clears every exponent denominator.

mod edge;
mod theorem1;
mod theorem2;

use std::cmp::Ordering;

use num_rational::BigRational;
use serde::Serialize;

use crate::rational::{ser_ratio, to_f64, PowerProduct};

pub use edge::{edge_bound_check, EdgeBoundReport};
pub use theorem1::{
    delta_grid_argmax, optimal_delta_fraction, thm1_chain_check, thm1_coefficient, thm1_hypothesis,
    thm1_sweep, ChainReport, SweepReport, Theorem1Coefficient,
};
pub use theorem2::{
    final_inequality_forms, solve_theorem2_params, theorem2_end_to_end, Theorem2Certificate,
    Theorem2Config, Theorem2Params,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "<=")]
    Le,
}

impl Relation {
    pub fn holds(self, ord: Ordering) -> bool {
        match self {
            Relation::Eq => ord == Ordering::Equal,
            Relation::Ge => ord != Ordering::Less,
            Relation::Gt => ord == Ordering::Greater,
            Relation::Le => ord != Ordering::Greater,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Le => "<=",
        }
    }
}

/// One certified comparison `lhs relation rhs`. When `power > 1` the stored
/// sides are the original sides raised to `power`.
#[derive(Clone, Debug, Serialize)]
pub struct Inequality {
    pub name: String,
    pub relation: Relation,
    #[serde(serialize_with = "ser_ratio")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub rhs: BigRational,
    pub power: u64,
    /// Unraised sides.
    pub lhs_approx: f64,
    pub rhs_approx: f64,
    pub holds: bool,
}

impl Inequality {
    pub fn exact(
        name: impl Into<String>,
        lhs: BigRational,
        relation: Relation,
        rhs: BigRational,
    ) -> Inequality {
        let holds = relation.holds(lhs.cmp(&rhs));
        Inequality {
            name: name.into(),
            relation,
            lhs_approx: to_f64(&lhs),
            rhs_approx: to_f64(&rhs),
            lhs,
            rhs,
            power: 1,
            holds,
        }
    }

    pub fn powers(
        name: impl Into<String>,
        lhs: &PowerProduct,
        relation: Relation,
        rhs: &PowerProduct,
    ) -> Inequality {
        let (l, r, k) = lhs.exact_sides(rhs);
        let holds = relation.holds(l.cmp(&r));
        Inequality {
            name: name.into(),
            relation,
            lhs: l,
            rhs: r,
            power: num_traits::ToPrimitive::to_u64(&k).expect("power fits in u64"),
            lhs_approx: lhs.to_f64(),
            rhs_approx: rhs.to_f64(),
            holds,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ratio, ratio_int};

    #[test]
    fn relations() {
        assert!(Relation::Ge.holds(Ordering::Equal));
        assert!(!Relation::Gt.holds(Ordering::Equal));
        assert!(Relation::Le.holds(Ordering::Less));
        assert!(!Relation::Eq.holds(Ordering::Greater));
    }

    #[test]
    fn raised_sides_are_recorded() {
        let root2 = PowerProduct::constant(ratio_int(1)).times(ratio_int(2), ratio(1, 2));
        let q = Inequality::powers(
            "sqrt2 > 7/5",
            &root2,
            Relation::Gt,
            &PowerProduct::constant(ratio(7, 5)),
        );
        assert!(q.holds);
        assert_eq!(q.power, 2);
        assert_eq!(q.lhs, ratio_int(2));
        assert_eq!(q.rhs, ratio(49, 25));
        let json = serde_json::to_string(&q).unwrap();
        assert!(json.contains("\"relation\":\">\""));
        assert!(json.contains("\"lhs\":\"2/1\""));
    }
}
