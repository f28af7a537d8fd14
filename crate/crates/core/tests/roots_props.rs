//! Reflection algebra and root classification properties.

mod common;

use common::*;
use orthoscalar::catalog::Parity;
use orthoscalar::roots::{
    classify_vector, coxeter_sweep, coxeter_transform, enumerate_positive_roots, linear_form_l,
    scan_box_roots, simple_reflection, RootLimits, singular_reduction_path, tits_form, GVector, RootTag,
};
use proptest::prelude::*;

const GRAPHS: [&str; 9] = ["A5", "D5", "E6", "A~4", "A~8", "D~4", "D~7", "E7~", "E8~"];

fn graph_and_vector() -> impl Strategy<Value = (&'static str, Vec<i64>)> {
    (0..GRAPHS.len()).prop_flat_map(|g| {
        let n = quiver(GRAPHS[g]).vertex_count();
        (Just(GRAPHS[g]), proptest::collection::vec(-20i64..20, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reflections_are_involutive_isometries((g, x) in graph_and_vector(), k in 0usize..16) {
        let q = quiver(g);
        let x = GVector(x);
        let k = k % q.vertex_count();
        let y = simple_reflection(&q, k, &x).unwrap();
        prop_assert_eq!(simple_reflection(&q, k, &y).unwrap(), x.clone());
        prop_assert_eq!(tits_form(&q, &y).unwrap(), tits_form(&q, &x).unwrap());
    }

    #[test]
    fn sweeps_are_involutions((g, x) in graph_and_vector()) {
        let q = quiver(g);
        let x = GVector(x);
        for p in [Parity::Even, Parity::Odd] {
            let y = coxeter_sweep(&q, p, &x).unwrap();
            prop_assert_eq!(coxeter_sweep(&q, p, &y).unwrap(), x.clone());
        }
        let there = coxeter_transform(&q, &x, 3).unwrap();
        prop_assert_eq!(coxeter_transform(&q, &there, -3).unwrap(), x);
    }
}

#[test]
fn delta_is_radical_with_zero_l() {
    for g in ["A~4", "A~10", "D~4", "D~10", "E6~", "E7~", "E8~"] {
        let q = quiver(g);
        let d = GVector(q.delta().unwrap().to_vec());
        assert_eq!(tits_form(&q, &d).unwrap(), 0, "{g}");
        assert_eq!(linear_form_l(&q, &d).unwrap(), 0, "{g}");
        for p in [Parity::Even, Parity::Odd] {
            assert_eq!(coxeter_sweep(&q, p, &d).unwrap(), d, "{g}");
        }
    }
}

#[test]
fn enumeration_matches_box_scan() {
    for g in ["D~4", "D~5", "E6~", "A~4"] {
        let q = quiver(g);
        let bound = GVector(q.delta().unwrap().to_vec()).scaled(2);
        let mut fast: Vec<GVector> =
            enumerate_positive_roots(&q, &bound).unwrap().into_iter().map(|r| r.0).collect();
        let mut slow = scan_box_roots(&q, &bound, RootLimits::default()).unwrap();
        fast.sort_by(|a, b| a.0.cmp(&b.0));
        slow.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(fast, slow, "{g}");
    }
}

#[test]
fn singular_paths_replay_to_the_root() {
    for g in ["D~4", "D~6", "E6~", "E7~"] {
        let q = quiver(g);
        let bound = GVector(q.delta().unwrap().to_vec()).scaled(2);
        for d in singular_roots(&q, &bound) {
            let path = singular_reduction_path(&q, &d).unwrap();
            assert_eq!(path.replay(&q), d);
            assert!(path.terminal.simple_index().is_some());
        }
    }
}

#[test]
fn singular_class_is_q_one_with_nonzero_l() {
    let q = quiver("E6~");
    let bound = GVector(q.delta().unwrap().to_vec()).scaled(2);
    for (x, class) in enumerate_positive_roots(&q, &bound).unwrap() {
        let again = classify_vector(&q, &x).unwrap();
        assert_eq!(again, class);
        assert_eq!(class.tag == RootTag::RealSingular, class.q_value == 1 && class.l_value != Some(0));
    }
}
