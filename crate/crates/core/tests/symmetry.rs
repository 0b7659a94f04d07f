mod common;

use edgefix::families::*;
use edgefix::symmetry::*;
use edgefix::verify::{cubic_catalogue, quartic_catalogue};
use edgefix::{Graph, Permutation, PermutationGroup};
use proptest::prelude::*;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn reference_orders() {
    for n in 3..=7 {
        assert_eq!(automorphism_group(&complete(n)).unwrap().order().unwrap(), factorial(n));
    }
    assert_eq!(automorphism_group(&complete_bipartite(4, 4)).unwrap().order().unwrap(), 1152);
    assert_eq!(automorphism_group(&complete_bipartite(3, 3)).unwrap().order().unwrap(), 72);
    assert_eq!(automorphism_group(&bch()).unwrap().order().unwrap(), 336);
    assert_eq!(automorphism_group(&heawood()).unwrap().order().unwrap(), 336);
    assert_eq!(automorphism_group(&hypercube(4)).unwrap().order().unwrap(), 384);
    assert_eq!(automorphism_group(&k55_minus_matching()).unwrap().order().unwrap(), 240);
    for (r, s) in [(3, 1), (3, 2), (5, 1), (5, 2), (5, 3), (6, 1), (6, 2), (6, 3)] {
        assert_eq!(automorphism_group(&px(r, s).unwrap()).unwrap().order().unwrap(), (1 << r) * 2 * r, "PX({r},{s})");
    }
}

#[test]
fn brute_force_agrees_on_small_graphs() {
    let graphs =
        [petersen(), complete_bipartite(3, 3), prism(5).unwrap(), moebius(4).unwrap(), px(3, 1).unwrap(), hypercube(3)];
    for g in graphs {
        assert_eq!(automorphism_group(&g).unwrap().order().unwrap(), common::brute_automorphism_count(&g));
    }
}

#[test]
fn every_enumerated_element_is_an_automorphism() {
    for g in [bch(), px(5, 2).unwrap(), split_px(4, 1).unwrap()] {
        let aut = automorphism_group(&g).unwrap();
        assert!(aut.elements().unwrap().iter().all(|p| g.is_automorphism(p.images())));
    }
}

#[test]
fn index_of_h_in_small_px() {
    for (s, index) in [(1, 9), (2, 3), (3, 2)] {
        let g = px(4, s).unwrap();
        let aut = automorphism_group(&g).unwrap().order().unwrap();
        let h = px_groups(4, s).unwrap().h.order().unwrap();
        assert_eq!(h, 128);
        assert_eq!(aut, index * h, "PX(4,{s})");
    }
}

#[test]
fn h_is_contained_in_aut() {
    for (r, s) in [(3, 1), (5, 1), (5, 2), (6, 2)] {
        let g = px(r, s).unwrap();
        let aut = automorphism_group(&g).unwrap();
        let h = px_groups(r, s).unwrap().h;
        assert!(aut.contains_group(&h).unwrap());
    }
}

#[test]
fn arc_transitivity_bounds_girth() {
    let mut graphs: Vec<Graph> = quartic_catalogue().unwrap().into_iter().map(|e| e.graph).collect();
    graphs.extend(cubic_catalogue().unwrap().into_iter().map(|e| e.graph));
    for g in graphs {
        let aut = automorphism_group(&g).unwrap();
        let p = transitivity_profile(&g, &aut).unwrap();
        if let Some(s) = p.max_s {
            assert!(g.girth().at_least(s + 1), "s = {s}, girth {:?}", g.girth());
        }
    }
}

#[test]
fn cubic_arc_transitive_graphs_are_regular_at_the_top() {
    for e in cubic_catalogue().unwrap() {
        let aut = automorphism_group(&e.graph).unwrap();
        let p = transitivity_profile(&e.graph, &aut).unwrap();
        if p.arc_transitive {
            let s = p.max_s.unwrap();
            assert_eq!(p.s_arc_regular_at, Some(s), "{}", e.id);
            assert_eq!(aut.order().unwrap(), common::brute_s_arc_count(&e.graph, s), "{}", e.id);
        }
    }
}

#[test]
fn profile_invariants() {
    for e in quartic_catalogue().unwrap() {
        let g = &e.graph;
        let aut = automorphism_group(g).unwrap();
        let p = transitivity_profile(g, &aut).unwrap();
        if p.half_arc_transitive {
            assert!(p.vertex_transitive && p.edge_transitive && !p.arc_transitive);
        }
        if let Some(s) = p.s_arc_regular_at {
            assert_eq!(aut.order().unwrap(), g.count_s_arcs(s));
        }
    }
}

#[test]
fn px_is_not_two_arc_transitive() {
    for (r, s) in [(3, 2), (5, 1), (5, 2), (6, 3)] {
        let g = px(r, s).unwrap();
        let groups = px_groups(r, s).unwrap();
        let p = transitivity_profile(&g, &groups.h).unwrap();
        assert!(p.vertex_transitive && p.edge_transitive);
        assert_eq!(p.max_s, Some(1));
        let plus = transitivity_profile(&g, &groups.h_plus).unwrap();
        assert_eq!(plus.arc_orbits, 2);
        assert!(plus.half_arc_transitive);
    }
}

#[test]
fn k5_is_two_but_not_three_arc_transitive() {
    let g = complete(5);
    let p = transitivity_profile(&g, &automorphism_group(&g).unwrap()).unwrap();
    assert_eq!(p.max_s, Some(2));
}

#[test]
fn local_groups() {
    for (r, s) in [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (6, 2)] {
        let g = split_px(r, s).unwrap();
        let aut = automorphism_group(&g).unwrap();
        for v in [0, 1, g.order() - 1] {
            let la = local_action(&g, &aut, v).unwrap();
            assert_eq!(la.orbit_lengths(), vec![1, 2], "SPLIT_PX({r},{s}) at {v}");
            assert_eq!(la.local.order().unwrap(), 2);
        }
    }
    for g in [petersen(), heawood(), complete(4)] {
        let aut = automorphism_group(&g).unwrap();
        let la = local_action(&g, &aut, 0).unwrap();
        assert!(la.local.is_transitive());
        assert_eq!(la.stabilizer.order().unwrap(), la.local.order().unwrap() * la.kernel.order().unwrap());
    }
}

#[test]
fn identification() {
    let limits = Limits::default();
    for (r, s) in [(3, 1), (4, 1), (5, 2), (6, 3), (7, 1)] {
        let found = identify_px(&px(r, s).unwrap(), &limits).unwrap();
        let PxIdentification::Found { r: fr, s: fs, isomorphism } = found else { panic!("PX({r},{s}) not found") };
        let target = px(fr, fs).unwrap();
        for &(u, v) in px(r, s).unwrap().edges() {
            assert!(target.has_edge(isomorphism[u], isomorphism[v]));
        }
        assert_eq!(target.order(), r << s);
    }
    assert_eq!(identify_px(&complete(5), &limits).unwrap(), PxIdentification::NotPx);
    assert_eq!(identify_px(&bch(), &limits).unwrap(), PxIdentification::NotPx);
    for (r, s) in [(3, 1), (4, 1), (5, 2)] {
        assert_eq!(identify_split_px(&split_px(r, s).unwrap(), &limits).unwrap().params(), Some((r, s)));
    }
    assert_eq!(identify_split_px(&heawood(), &limits).unwrap(), PxIdentification::NotPx);
}

#[test]
fn neighbour_generated_group_on_px() {
    let (r, s) = (3, 1);
    let g = px(r, s).unwrap();
    let v = 0;
    let mut transversal: Vec<Permutation> = Vec::new();
    let h = px_groups(r, s).unwrap().h;
    for &w in g.neighbourhood(v).unwrap() {
        let t = h.elements().unwrap().iter().find(|x| x.apply(v) == w).unwrap();
        transversal.push(t.clone());
    }
    let t = neighbour_generated_group(&g, v, &transversal).unwrap();
    assert!(t.is_transitive());
    assert!(h.contains_group(&t).unwrap());
}

#[test]
fn search_budget_and_cap() {
    let tight = Limits { enumeration_cap: 100, search_budget: 1_000_000 };
    assert!(matches!(automorphism_group_with(&complete(6), &tight), Err(edgefix::Error::CapExceeded { .. })));
    let tiny = Limits { enumeration_cap: 1_000_000, search_budget: 2 };
    assert!(matches!(automorphism_group_with(&heawood(), &tiny), Err(edgefix::Error::SearchBudgetExceeded { .. })));
}

fn random_graph(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k % bits.len()] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn automorphism_count_matches_brute_force(n in 1usize..8, bits in prop::collection::vec(any::<bool>(), 1..40)) {
        let g = random_graph(n, &bits);
        let aut = automorphism_group(&g).unwrap();
        prop_assert_eq!(aut.order().unwrap(), common::brute_automorphism_count(&g));
    }

    #[test]
    fn relabelled_copies_are_isomorphic(n in 1usize..10, bits in prop::collection::vec(any::<bool>(), 1..50), seed in any::<u64>()) {
        let g = random_graph(n, &bits);
        let mut images: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            images.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&images).unwrap();
        let map = are_isomorphic(&g, &h).unwrap();
        prop_assert!(map.is_some());
        let map = map.unwrap();
        for &(u, v) in g.edges() {
            prop_assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn isomorphism_decision_matches_brute_force(n in 1usize..7, a in prop::collection::vec(any::<bool>(), 1..30), b in prop::collection::vec(any::<bool>(), 1..30)) {
        let (g, h) = (random_graph(n, &a), random_graph(n, &b));
        let ours = are_isomorphic(&g, &h).unwrap().is_some();
        let brute = !common::brute_isomorphisms(&g, &h, 1).is_empty();
        prop_assert_eq!(ours, brute);
    }

    #[test]
    fn generators_generate_a_group_of_predicted_order(n in 2usize..9, bits in prop::collection::vec(any::<bool>(), 1..40)) {
        let g = random_graph(n, &bits);
        let found = automorphism_search(&g, &Limits::default()).unwrap();
        let group = PermutationGroup::new(n, found.generators.clone()).unwrap();
        prop_assert_eq!(group.order().unwrap() as u128, found.order());
    }
}
