mod common;

use common::*;
use extremal_count::blowup::{leading_coefficient, weighted_hom_sum, WeightedPattern};
use extremal_count::embeddings::count_embeddings;
use extremal_count::graph::builders::build_blowup;
use extremal_count::rational::{pow_int, ratio, ratio_int};
use extremal_count::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_weights(k: usize) -> impl Strategy<Value = Vec<BigRational>> {
    proptest::collection::vec(0i64..6, k).prop_map(|v| v.into_iter().map(|x| ratio(x, 5)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hom_sum_matches_all_maps((h, p, w) in (arb_graph(5), arb_graph(5)).prop_flat_map(|(h, p)| {
        let k = p.n();
        (Just(h), Just(p), arb_weights(k))
    })) {
        prop_assert_eq!(weighted_hom_sum(&h, &p, &w).unwrap(), all_maps_hom_sum(&h, &p, &w));
    }

    #[test]
    fn bipartite_patterns_in_half_half(seed in any::<u64>(), m in 1usize..=10, c in 1usize..=3) {
        prop_assume!(c <= m);
        let h = random_bipartite(m, c, &mut ChaCha8Rng::seed_from_u64(seed));
        let wp = WeightedPattern::uniform(Graph::complete(2)).unwrap();
        let expected = pow_int(&ratio_int(2), c as i64) * pow_int(&ratio(1, 2), h.n() as i64);
        prop_assert_eq!(leading_coefficient(&h, &wp).value, expected);
    }

    #[test]
    fn coefficient_is_the_limit_of_scaled_blowups(h in arb_graph(3), p in arb_graph(3), s in 1usize..4) {
        // blob sizes s * k_i: count / N^m equals the coefficient up to O(1/N)
        // and the exact count is a polynomial in s, so compare at fixed s
        let sizes: Vec<usize> = (0..p.n()).map(|i| s * (i + 1)).collect();
        let total: usize = sizes.iter().sum();
        let host = build_blowup(&p, &sizes).unwrap();
        let w: Vec<BigRational> = sizes.iter().map(|&x| ratio(x as i64, total as i64)).collect();
        let wp = WeightedPattern::new(p.clone(), w).unwrap();
        let coeff = leading_coefficient(&h, &wp).value;
        let normalised = BigRational::new(
            BigInt::from(count_embeddings(&h, &host)),
            BigInt::from(total).pow(h.n() as u32),
        );
        // injective maps are a subset of all maps into the blow-up
        prop_assert!(normalised <= coeff);
    }
}
