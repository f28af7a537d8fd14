//! Properties of orthoscalar representations and their morphisms, on
//! seeded samples.

mod common;

use common::*;
use orthoscalar::morphism::{is_schur, split_decomposition};
use orthoscalar::rep::{direct_sum, orthoscalarity_report};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn equal_lengths_force_equal_matrices(seed in any::<u64>()) {
        prop_assert!(lemma_scaling(seed));
    }

    #[test]
    fn unitary_intertwiner_is_a_hilbert_morphism(seed in 0u64..10_000) {
        prop_assert!(lemma_unitary_morphism(seed));
    }

    #[test]
    fn self_adjoint_endomorphisms_commute_with_adjoints(seed in 0u64..10_000) {
        prop_assert!(lemma_self_adjoint(seed));
    }

    #[test]
    fn scrambled_copies_are_unitarily_equivalent(seed in 0u64..10_000) {
        prop_assert!(theorem_unitary_equivalence(seed));
    }

    #[test]
    fn schur_iff_single_summand(seed in 0u64..10_000, doubled in any::<bool>()) {
        let t1 = orthoscalar_sample(seed);
        let t = if doubled { direct_sum(&[t1.clone(), t1]).unwrap() } else { t1 };
        prop_assert!(orthoscalarity_report(&t).defect < 1e-9 * t.scale().max(1.0).powi(2));
        let schur = is_schur(&t, 1e-9).unwrap();
        let parts = split_decomposition(&t, 1e-9).unwrap();
        prop_assert_eq!(schur, parts.len() == 1);
        prop_assert_eq!(schur, !doubled);
    }
}
