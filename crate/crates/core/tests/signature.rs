mod common;

use proptest::prelude::*;
use sphere_recolor::coloring::{apply_single_change, is_balanced, recolorable_colors, signatures};
use sphere_recolor::graph::Graph;
use sphere_recolor::oracle::{Instance, ReconfigGraph, DEFAULT_BUDGET};

use common::{coloring, small_even};

proptest! {
    #[test]
    fn star_counts_agree_mod_three(graph in 0usize..4, pick in any::<prop::sample::Index>()) {
        let (g, all) = &small_even()[graph];
        let alpha = coloring(&all[pick.index(all.len())]);
        let s = signatures(g, &alpha).unwrap();
        for v in 0..g.vertex_count() {
            let (plus, minus) = s.star_counts(g, v);
            prop_assert_eq!(plus % 3, minus % 3);
            prop_assert_eq!(s.ns(g, v).len() % 2, 0);
        }
    }

    #[test]
    fn single_change_toggles_the_link(graph in 0usize..4, pick in any::<prop::sample::Index>(), which in any::<prop::sample::Index>()) {
        let (g, all) = &small_even()[graph];
        let alpha = coloring(&all[pick.index(all.len())]);
        let moves: Vec<_> = (0..g.vertex_count())
            .flat_map(|v| recolorable_colors(g, &alpha, v).into_iter().map(move |c| (v, c)))
            .collect();
        prop_assume!(!moves.is_empty());
        let (v, c) = moves[which.index(moves.len())];
        let beta = apply_single_change(g, &alpha, v, c).unwrap();
        let before = signatures(g, &alpha).unwrap();
        let after = signatures(g, &beta).unwrap();
        let link = g.link_edges(v);
        for e in 0..g.edge_count() {
            prop_assert_eq!(after.is_nonsingular(e), before.is_nonsingular(e) ^ link.contains(&e));
        }
        let mut incremental = before.clone();
        incremental.update_after_change(g, &beta, v);
        prop_assert_eq!(incremental, after);
    }
}

#[test]
fn balance_is_membership_in_the_three_coloring_component() {
    for (g, all) in small_even() {
        let graph = Graph::from_triangulation(g);
        let rg = ReconfigGraph::build(&Instance::new(&graph, 4, None, DEFAULT_BUDGET).unwrap()).unwrap();
        let with_three = rg.components_with_few_colors(3);
        for colors in all {
            let expected = with_three[rg.component_of(colors).unwrap() as usize];
            assert_eq!(is_balanced(g, &coloring(colors)).unwrap(), expected, "{colors:?}");
        }
    }
}
