mod common;

use proptest::prelude::*;
use sphere_recolor::coloring::is_balanced;
use sphere_recolor::complex::{double_wheel, octahedron, stacked_gluing, stacked_octahedra};
use sphere_recolor::connectivity::{
    contraction_sequence, decide_connected, four_connected_pieces, is_four_connected, is_octahedron, unbalanced_witness,
};
use sphere_recolor::corpus::four_connected_even;
use sphere_recolor::graph::Graph;
use sphere_recolor::oracle::{reconfig_connected, DEFAULT_BUDGET};

use common::small_even;

#[test]
fn decision_matches_the_oracle() {
    for (g, _) in small_even() {
        let oracle = reconfig_connected(&Graph::from_triangulation(g), 4, None, DEFAULT_BUDGET).unwrap();
        assert_eq!(decide_connected(g), oracle);
    }
}

#[test]
fn contraction_ends_at_the_double_wheel() {
    let dw8 = double_wheel(8).unwrap();
    for g in four_connected_even(12).into_iter().filter(|g| !is_octahedron(g)) {
        let seq = contraction_sequence(&g).unwrap();
        let (last, _) = seq.last().unwrap();
        assert!(is_octahedron(last));
        let before = if seq.len() >= 2 { &seq[seq.len() - 2].0 } else { &g };
        assert!(before.is_isomorphic(&dw8));
        assert!(seq.iter().all(|(h, _)| h.is_even() && is_four_connected(h)));
        assert!(!is_balanced(&g, &unbalanced_witness(&g).unwrap()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn stacked_octahedra_are_connected(steps in 0usize..40, seed in any::<u64>()) {
        let g = stacked_octahedra(steps, seed);
        let d = four_connected_pieces(&g);
        prop_assert_eq!(d.pieces.len(), d.separating_triangles.len() + 1);
        prop_assert!(decide_connected(&g));
    }

    #[test]
    fn one_double_wheel_breaks_connectivity(steps in 1usize..30, seed in any::<u64>()) {
        let g = stacked_gluing(&octahedron(), &[octahedron(), double_wheel(10).unwrap()], steps, seed);
        let has_wheel = four_connected_pieces(&g).pieces.iter().any(|p| !is_octahedron(&p.tri));
        prop_assert_eq!(decide_connected(&g), !has_wheel);
        if has_wheel {
            let w = unbalanced_witness(&g).unwrap();
            prop_assert!(w.is_proper(&g));
            prop_assert!(!is_balanced(&g, &w).unwrap());
        }
    }
}
