mod common;

use leafbox::construct::{build_box_rep_rooted, tree_power_coordinates};
use leafbox::graph::graphs_equal;
use leafbox::random::{random_leaf_root_with, random_tree, rng_from_seed};
use leafbox::verify::{
    box_intersection_graph, check_asteroidal_triple, check_chordless_cycle, find_asteroidal_triple,
    interval_intersection_graph, is_chordal, is_interval_graph, verify_representation,
};
use leafbox::{
    build_box_rep, build_graph_from_leaf_root, build_leaf_power_box_rep, critical_clique_graph,
    intersect, lift_representation, power, Graph, RootedTree, Witness,
};
use proptest::prelude::*;

fn arb_tree() -> impl Strategy<Value = Graph> {
    (1usize..60, any::<u64>()).prop_map(|(n, seed)| random_tree(n, seed).unwrap())
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n, any::<u64>(), 0.1f64..0.9)
        .prop_map(|(n, seed, p)| common::random_graph(n, p, &mut rng_from_seed(seed)))
}

proptest! {
    #[test]
    fn power_is_monotone(g in arb_graph(12), k in 1usize..5) {
        let a = power(&g, k).unwrap();
        let b = power(&g, k + 1).unwrap();
        prop_assert!(a.edges().all(|(u, v)| b.has_edge(u, v)));
    }

    #[test]
    fn intersect_is_commutative_and_idempotent(a in arb_graph(9), seed in any::<u64>()) {
        let b = common::random_graph(a.n(), 0.5, &mut rng_from_seed(seed));
        let ab = intersect(&[a.clone(), b.clone()]).unwrap();
        let ba = intersect(&[b.clone(), a.clone()]).unwrap();
        prop_assert!(graphs_equal(&ab, &ba).is_ok());
        prop_assert!(graphs_equal(&intersect(&[a.clone(), a.clone()]).unwrap(), &a).is_ok());
        let abb = intersect(&[a, b.clone(), b]).unwrap();
        prop_assert!(graphs_equal(&abb, &ab).is_ok());
    }

    #[test]
    fn critical_cliques_are_twin_classes(g in arb_graph(12)) {
        let (cc, map) = critical_clique_graph(&g);
        for members in &map.representatives {
            prop_assert!(!members.is_empty());
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    prop_assert!(g.has_edge(a, b));
                    prop_assert_eq!(g.closed_neighborhood(a), g.closed_neighborhood(b));
                }
            }
        }
        let total: usize = map.representatives.iter().map(Vec::len).sum();
        prop_assert_eq!(total, g.n());
        // applying it again changes nothing
        let (cc2, map2) = critical_clique_graph(&cc);
        prop_assert_eq!(cc2.n(), cc.n());
        prop_assert!(graphs_equal(&cc2, &cc).is_ok());
        prop_assert_eq!(map2.class_of, (0..cc.n()).collect::<Vec<_>>());
    }

    #[test]
    fn ancestor_iteration_composes(t in arb_tree(), i in 0usize..8) {
        let rt = RootedTree::build(&t, None).unwrap();
        for u in 0..rt.n() {
            let mut v = u;
            for _ in 0..i {
                v = rt.ancestor_at(v, 1);
            }
            prop_assert_eq!(rt.ancestor_at(u, i), v);
        }
    }

    #[test]
    fn tree_distance_matches_bfs(t in arb_tree()) {
        let rt = RootedTree::build(&t, None).unwrap();
        for u in 0..t.n() {
            let dist = t.bfs_distances(u, None);
            for (v, d) in dist.into_iter().enumerate() {
                prop_assert_eq!(Some(rt.distance(u, v)), d);
            }
        }
    }

    #[test]
    fn box_rep_is_exact_with_axis_structure(t in arb_tree(), k in 1usize..7) {
        let rt = RootedTree::build(&t, None).unwrap();
        let pw = power(&t, k).unwrap();
        let rep = build_box_rep_rooted::<i64>(&rt, k).unwrap();
        prop_assert!(verify_representation(&pw, &rep).unwrap().ok);
        if t.n() >= 3 {
            prop_assert_eq!(rep.dimension(), k + 1);
            let coords = tree_power_coordinates::<i64>(&rt, k).unwrap();
            let axis_graphs: Vec<Graph> = coords.iter().map(interval_intersection_graph).collect();
            for ag in &axis_graphs {
                prop_assert!(pw.edges().all(|(u, v)| ag.has_edge(u, v)));
            }
            prop_assert!(graphs_equal(&intersect(&axis_graphs).unwrap(), &box_intersection_graph(&rep)).is_ok());
            // endpoint range
            let bound = rt.leaf_count().max(rt.height() + k) as i64;
            for b in rep.boxes() {
                for iv in b {
                    prop_assert!(0 <= iv.lo() && iv.hi() <= bound);
                }
            }
        } else {
            prop_assert_eq!(rep.dimension(), 1);
        }
    }

    #[test]
    fn any_inner_root_works(t in arb_tree(), pick in any::<usize>(), k in 1usize..5) {
        let inner: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) >= 2).collect();
        prop_assume!(!inner.is_empty());
        let root = inner[pick % inner.len()];
        let rep = build_box_rep::<i64>(&t, k, Some(root)).unwrap();
        prop_assert!(verify_representation(&power(&t, k).unwrap(), &rep).unwrap().ok);
    }

    #[test]
    fn leaf_power_rep_is_exact(inner in 1usize..30, pendants in 0usize..4, k in 2usize..7, seed in any::<u64>()) {
        let lr = random_leaf_root_with(inner, pendants, k, &mut rng_from_seed(seed)).unwrap();
        let g = build_graph_from_leaf_root(&lr);
        let rep = build_leaf_power_box_rep::<i64>(&lr).unwrap();
        prop_assert_eq!(rep.dimension(), (k - 1).max(1));
        prop_assert!(verify_representation(&g, &rep).unwrap().ok);
    }

    #[test]
    fn lifting_preserves_exactness(base in arb_graph(8), seed in any::<u64>()) {
        let (g, _) = common::plant_twins(&base, 3, &mut rng_from_seed(seed));
        let (cc, map) = critical_clique_graph(&g);
        let rep = common::non_edge_box_rep(&cc);
        prop_assert!(verify_representation(&cc, &rep).unwrap().ok);
        let lifted = lift_representation(&rep, &map).unwrap();
        prop_assert!(verify_representation(&g, &lifted).unwrap().ok);
    }

    #[test]
    fn tree_powers_are_chordal(t in arb_tree(), k in 1usize..5) {
        prop_assert!(is_chordal(&power(&t, k).unwrap()).ok);
    }

    #[test]
    fn witnesses_revalidate(g in arb_graph(10)) {
        match is_chordal(&g).witness {
            Some(Witness::ChordlessCycle { cycle }) => prop_assert!(check_chordless_cycle(&g, &cycle)),
            Some(Witness::EliminationOrdering { order }) => {
                prop_assert_eq!(order.len(), g.n());
                // each vertex's later neighbors form a clique
                let pos: Vec<usize> = {
                    let mut p = vec![0; g.n()];
                    for (i, &v) in order.iter().enumerate() { p[v] = i; }
                    p
                };
                for &v in &order {
                    let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
                    for (i, &a) in later.iter().enumerate() {
                        for &b in &later[i + 1..] {
                            prop_assert!(g.has_edge(a, b));
                        }
                    }
                }
            }
            other => prop_assert!(false, "unexpected chordality witness {:?}", other),
        }
        if let Some(Witness::AsteroidalTriple { triple, paths }) = find_asteroidal_triple(&g) {
            prop_assert!(check_asteroidal_triple(&g, triple, &paths));
            let [a, b, c] = triple;
            prop_assert!(!g.has_edge(a, b) && !g.has_edge(b, c) && !g.has_edge(a, c));
        }
    }

    #[test]
    fn interval_recognition_matches_brute_force(g in arb_graph(8)) {
        prop_assert_eq!(is_interval_graph(&g).ok, common::brute_force_is_interval(&g));
    }

    #[test]
    fn graph_json_and_dot_round_trip(g in arb_graph(10)) {
        let json = serde_json::to_string(&g).unwrap();
        let from_json: Graph = serde_json::from_str(&json).unwrap();
        let from_dot = Graph::from_dot(&from_json.to_dot()).unwrap();
        prop_assert_eq!(serde_json::to_string(&from_dot).unwrap(), json);
    }
}

#[test]
fn spans_nest_and_are_contiguous_on_random_trees() {
    for seed in 0..200 {
        let t = random_tree(3 + seed as usize % 80, seed).unwrap();
        let rt = RootedTree::build(&t, None).unwrap();
        for u in 0..rt.n() {
            let (su, tu) = rt.span(u);
            let mut below = Vec::new();
            let mut stack = vec![u];
            while let Some(x) = stack.pop() {
                if rt.is_leaf(x) {
                    below.push(rt.leaf_order().iter().position(|&l| l == x).unwrap() + 1);
                }
                stack.extend_from_slice(rt.children(x));
            }
            below.sort_unstable();
            assert_eq!(below, (su..=tu).collect::<Vec<_>>());
        }
    }
}
