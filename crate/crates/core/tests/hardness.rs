use std::collections::{BTreeMap, BTreeSet, VecDeque};

use proptest::prelude::*;
use sphere_recolor::coloring::{find_3_coloring, Color, Coloring};
use sphere_recolor::complex::{double_wheel, octahedron, OrientedTriangulation2};
use sphere_recolor::connectivity::DOUBLE_WHEEL_8_UNBALANCED;
use sphere_recolor::graph::Graph;
use sphere_recolor::hardness::{
    admissible_parameters, forbidding_path, parse_gadget_x, parse_list_instance, prepare_planar, reduce_instance,
    suspend_instance, write_gadget_x, write_list_instance, FrozenGadget, GadgetX, ListInstance, ListedPlaneGraph,
};
use sphere_recolor::highdim::OrientedComplexD;
use sphere_recolor::oracle::{enumerate_colorings, same_component, DEFAULT_BUDGET};

/// Endpoint pairs of the listed path that extend to a proper list coloring, by brute force.
fn realizable_pairs(lists: &[Vec<Color>; 7]) -> BTreeSet<(Color, Color)> {
    let mut out = BTreeSet::new();
    let sizes: Vec<usize> = lists.iter().map(Vec::len).collect();
    let total: usize = sizes.iter().product();
    for mut code in 0..total {
        let colors: Vec<Color> = (0..7)
            .map(|i| {
                let c = lists[i][code % sizes[i]];
                code /= sizes[i];
                c
            })
            .collect();
        if colors.windows(2).all(|w| w[0] != w[1]) {
            out.insert((colors[0], colors[6]));
        }
    }
    out
}

#[test]
fn every_admissible_path_verifies() {
    let params = admissible_parameters();
    assert!(!params.is_empty());
    for (l_u, l_v, a, b, c) in params {
        let fp = forbidding_path(&l_u, &l_v, a, b, c).unwrap();
        fp.verify().unwrap_or_else(|e| panic!("{l_u:?} {l_v:?} a={a} b={b} c={c}: {e}"));
    }
}

proptest! {
    #[test]
    fn only_the_forbidden_pair_is_missing(pick in any::<prop::sample::Index>()) {
        let params = admissible_parameters();
        let (l_u, l_v, a, b, c) = &params[pick.index(params.len())];
        let fp = forbidding_path(l_u, l_v, *a, *b, *c).unwrap();
        let pairs = realizable_pairs(&fp.lists);
        for &x in l_u {
            for &y in l_v {
                prop_assert_eq!(pairs.contains(&(x, y)), (x, y) != (*a, *b));
            }
        }
    }
}

fn cut_vertex_x() -> GadgetX {
    GadgetX::new(
        8,
        vec![[0, 1, 2], [5, 6, 7]],
        vec![[3, 4]],
        vec![vec![0, 2, 1], vec![0, 1, 3], vec![5, 6, 7], vec![4, 6, 5], vec![2, 0, 3, 4, 5, 7, 6, 4, 3, 1]],
    )
    .unwrap()
}

/// Terminal colorings avoiding every forbidden pair.
fn terminal_states(h: &ListedPlaneGraph) -> Vec<Vec<Color>> {
    let mut states = vec![Vec::new()];
    for t in 0..h.terminals {
        states = states
            .into_iter()
            .flat_map(|s: Vec<Color>| h.lists[t].iter().map(move |&c| [s.clone(), vec![c]].concat()))
            .collect();
    }
    states.retain(|s| h.edges.iter().all(|e| (s[e.u], s[e.v]) != (e.a, e.b)));
    states
}

/// Components of the terminal states under single changes.
fn terminal_components(states: &[Vec<Color>]) -> BTreeMap<Vec<Color>, usize> {
    let mut comp = BTreeMap::new();
    for start in states {
        if comp.contains_key(start) {
            continue;
        }
        let id = comp.len();
        comp.insert(start.clone(), id);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(s) = queue.pop_front() {
            for t in states.iter().filter(|t| s.iter().zip(t.iter()).filter(|(x, y)| x != y).count() == 1) {
                if !comp.contains_key(t) {
                    comp.insert(t.clone(), id);
                    queue.push_back(t.clone());
                }
            }
        }
    }
    comp
}

#[test]
fn listed_graph_mirrors_the_contracted_graph() {
    for x in [GadgetX::smallest(), cut_vertex_x()] {
        let h = x.build_h().unwrap();
        let graph = h.plane.graph();
        let all = enumerate_colorings(&graph, 4, Some(&h.lists), DEFAULT_BUDGET).unwrap();
        let restricted: BTreeSet<Vec<Color>> = all.iter().map(|c| c[..h.terminals].to_vec()).collect();
        let states = terminal_states(&h);
        assert_eq!(restricted, states.iter().cloned().collect());
        let comp = terminal_components(&states);
        for s in &states {
            for t in &states {
                let (a, b) = (h.extend_coloring(s).unwrap(), h.extend_coloring(t).unwrap());
                let (reach, _) = same_component(&graph, 4, &a, &b, Some(&h.lists), DEFAULT_BUDGET).unwrap();
                assert_eq!(reach, comp[s] == comp[t], "{s:?} -> {t:?}");
            }
        }
        assert_eq!(parse_gadget_x(&write_gadget_x(&x)).unwrap(), x);
        let inst = ListInstance::from_listed(&h, &states[0], states.last().unwrap()).unwrap();
        assert_eq!(parse_list_instance(&write_list_instance(&inst)).unwrap(), inst);
    }
}

fn check_reduction(x: &GadgetX, k: usize) {
    let h = x.build_h().unwrap();
    let states = terminal_states(&h);
    let (s, t) = (states.first().unwrap(), states.last().unwrap());
    let prepared = prepare_planar(&h).unwrap();
    let alpha_h = prepared.extend_coloring(&h.extend_coloring(s).unwrap());
    let beta_h = prepared.extend_coloring(&h.extend_coloring(t).unwrap());
    let gadget = FrozenGadget::cached().unwrap();
    let r = reduce_instance(&prepared, &gadget, &alpha_h, &beta_h, k).unwrap();
    let tri = &r.triangulation;
    assert!(tri.is_even());
    assert!(find_3_coloring(tri).unwrap().is_proper(tri));
    if k == 4 {
        r.check_restricted(&alpha_h, &r.alpha).unwrap();
        r.check_restricted(&beta_h, &r.beta).unwrap();
        for c in [&r.alpha, &r.beta] {
            assert_eq!(r.unfrozen_outside(c), None);
            assert!(r.gadgets_frozen(&gadget, c));
        }
    }
    assert_eq!(r.complex.dim(), k - 2);
    assert!(r.complex.is_even());
    let skeleton = r.complex.one_skeleton();
    for c in [&r.alpha, &r.beta] {
        assert_eq!(c.k(), k + 1);
        assert!(skeleton.edges().iter().all(|&(u, v)| c.get(u) != c.get(v)));
        for (i, apex) in (tri.vertex_count()..r.complex.vertex_count()).enumerate() {
            assert_eq!(c.get(apex) as usize, 5 + i / 2);
        }
    }
}

#[test]
fn smallest_gadget_reduction() {
    check_reduction(&GadgetX::smallest(), 4);
}

#[test]
fn reduction_with_a_cut_vertex() {
    let x = cut_vertex_x();
    let prepared = prepare_planar(&x.build_h().unwrap()).unwrap();
    assert_eq!(prepared.bridges.len(), 1);
    check_reduction(&x, 4);
    check_reduction(&x, 6);
}

fn reachable_before_and_after(g: &OrientedTriangulation2, k: usize, a: Vec<Color>, b: Vec<Color>) -> (bool, bool) {
    let before = same_component(&Graph::from_triangulation(g), k, &a, &b, None, DEFAULT_BUDGET).unwrap().0;
    let (s, sa, sb) = suspend_instance(
        &OrientedComplexD::from_triangulation(g),
        &Coloring::new(k, a).unwrap(),
        &Coloring::new(k, b).unwrap(),
    );
    let after = same_component(&s.one_skeleton(), k + 1, sa.colors(), sb.colors(), None, DEFAULT_BUDGET).unwrap().0;
    (before, after)
}

#[test]
fn suspension_preserves_reachability() {
    let oct = octahedron();
    let three = find_3_coloring(&oct).unwrap().into_colors();
    let swapped: Vec<Color> = three.iter().map(|&c| [1, 0, 2][c as usize]).collect();
    assert_eq!(reachable_before_and_after(&oct, 4, three, swapped), (true, true));

    let dw = double_wheel(8).unwrap();
    let three = find_3_coloring(&dw).unwrap().into_colors();
    assert_eq!(reachable_before_and_after(&dw, 4, DOUBLE_WHEEL_8_UNBALANCED.to_vec(), three), (false, false));

    let j = FrozenGadget::cached().unwrap();
    let renamed = j.coloring_for([1, 0, 2]).unwrap();
    assert_eq!(reachable_before_and_after(&j.tri, 5, j.reference.clone(), renamed), (false, false));
}
