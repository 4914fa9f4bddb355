mod common;

use minorcat::graph::builders::{complete, complete_bipartite, cycle, path, rose, star};
use minorcat::graph::format::{parse_graph, write_graph};
use minorcat::graph::{canonical_form, enumerate_connected_graphs, is_isomorphic, is_planar};
use minorcat::Graph;
use proptest::prelude::*;

use common::brute_force_class_count;

#[test]
fn class_counts_match_brute_force() {
    let graphs = enumerate_connected_graphs(4);
    for e in 0..=4 {
        let found = graphs.iter().filter(|g| g.num_edges() == e).count();
        assert_eq!(found, brute_force_class_count(e), "{e} edges");
    }
}

#[test]
fn enumerated_classes_are_distinct() {
    let graphs = enumerate_connected_graphs(4);
    for (k, g) in graphs.iter().enumerate() {
        assert!(g.is_connected());
        for h in &graphs[k + 1..] {
            assert!(!is_isomorphic(g, h), "{:?} and {:?}", g.name(), h.name());
        }
    }
    let names = common::names(&graphs);
    let mut unique = names.clone();
    unique.sort();
    unique.dedup();
    assert_eq!(unique.len(), names.len());
}

#[test]
fn small_planarity() {
    assert!(!is_planar(&complete(5)));
    assert!(!is_planar(&complete_bipartite(3, 3)));
    assert!(is_planar(&complete(4)));
    assert!(is_planar(&complete_bipartite(2, 5)));
    assert!(is_planar(&rose(4)));
    // K3,3 with a doubled edge and a loop is still non-planar
    let k33 = complete_bipartite(3, 3);
    let mut edges: Vec<(usize, usize)> = k33.edges().iter().map(|e| (k33.head(e.representative), k33.tail(e.representative))).collect();
    edges.push(edges[0]);
    edges.push((2, 2));
    assert!(!is_planar(&Graph::from_edges(6, &edges)));
    for g in enumerate_connected_graphs(5) {
        assert!(is_planar(&g), "{:?}", g.name());
    }
}

#[test]
fn text_format_round_trip() {
    for g in [cycle(3), star(4), path(2), complete_bipartite(2, 3), rose(2)] {
        let back = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(canonical_form(&back), canonical_form(&g));
        assert_eq!(back.name(), g.name());
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..6)
        .prop_flat_map(|v| (Just(v), prop::collection::vec((0..v, 0..v), 0..7)))
        .prop_map(|(v, edges)| Graph::from_edges(v, &edges))
}

proptest! {
    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut vp: Vec<usize> = (0..g.num_vertices()).collect();
        vp.shuffle(&mut rng);
        // permute edges and flip orientations, keeping σ-orbits together
        let mut order: Vec<usize> = (0..g.num_edges()).collect();
        order.shuffle(&mut rng);
        let mut ap = vec![0; g.num_arrows()];
        for (slot, &e) in order.iter().enumerate() {
            let edge = g.edges()[e];
            let flip = rand::Rng::gen_bool(&mut rng, 0.5);
            let (x, y) = if flip { (edge.partner, edge.representative) } else { (edge.representative, edge.partner) };
            ap[x] = 2 * slot;
            ap[y] = 2 * slot + 1;
        }
        let h = g.relabeled(&vp, &ap).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn adding_an_edge_changes_the_class(g in arb_graph(), a in 0usize..6, b in 0usize..6) {
        let v = g.num_vertices();
        let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (g.head(e.representative), g.tail(e.representative))).collect();
        edges.push((a % v, b % v));
        let h = Graph::from_edges(v, &edges);
        prop_assert!(!is_isomorphic(&g, &h));
    }
}
