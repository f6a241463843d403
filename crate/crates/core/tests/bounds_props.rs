mod common;

use common::*;
use extremal_count::bounds::{
    edge_bound_check, final_inequality_forms, solve_theorem2_params, thm1_chain_check,
    Theorem2Config,
};
use extremal_count::rational::{pow_int, ratio, ratio_int};
use num_rational::BigRational;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_bound_on_random_triangle_free(g in arb_triangle_free(1, 12)) {
        let r = edge_bound_check(&g).unwrap();
        prop_assert!(r.holds);
        prop_assert_eq!(r.equality, r.complete_bipartite);
        prop_assert_eq!(r.equality, r.equality_is_complete_bipartite);
    }

    #[test]
    fn bernoulli_step(x in 2u64..400, d in 0u64..400) {
        prop_assume!(d < x);
        let s = ratio(d as i64, x as i64 - 1);
        prop_assume!(s <= ratio_int(1));
        let lhs = pow_int(&(ratio_int(1) - &s), 2 * d as i64);
        prop_assert!(lhs >= ratio_int(1) - ratio(2 * (d * d) as i64, x as i64 - 1));
    }

    #[test]
    fn chain_links_under_hypothesis(x in 2u64..300, d in 0u64..5) {
        prop_assume!(16 * d * d < x);
        let r = thm1_chain_check(x, d).unwrap();
        prop_assert!(r.holds);
    }

    #[test]
    fn theorem2_params_invariants(num in 1i64..6, den in 1i64..6) {
        let lambda = BigRational::new(num.into(), den.into());
        let p = solve_theorem2_params(&lambda, &Theorem2Config::default()).unwrap();
        prop_assert!(p.holds());
        prop_assert!(p.a > ratio(1, 2) && p.a < ratio_int(1));
        prop_assert!(p.c > ratio_int(0));
        prop_assert_eq!(p.b.clone(), ratio_int(1) - &p.a - ratio_int(3) * &p.c);
        prop_assert!(p.p_raised > ratio_int(1));
        let (_, vertex_form) = final_inequality_forms(&p, p.x_min);
        prop_assert!(vertex_form.holds);
    }
}
