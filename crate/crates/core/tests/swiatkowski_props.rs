use std::sync::Arc;

use minorcat::graph::builders::{complete, cycle, star};
use minorcat::graph::enumerate_connected_graphs;
use minorcat::homology::homology_dense;
use minorcat::minor::hom_set;
use minorcat::swiatkowski::pullback::pullback_with_root;
use minorcat::swiatkowski::{rank_formula, RootChoice, SwiatkowskiComplex};
use minorcat::Graph;

fn complexes(max_edges: usize, i_max: usize, n_max: usize) -> Vec<SwiatkowskiComplex> {
    enumerate_connected_graphs(max_edges)
        .into_iter()
        .map(|g| SwiatkowskiComplex::build_shared(Arc::new(g), i_max, n_max).unwrap())
        .collect()
}

#[test]
fn ranks_match_the_closed_formula() {
    for cx in complexes(4, 3, 5) {
        for i in 0..=4 {
            for n in 0..=5 {
                assert_eq!(
                    cx.rank(i, n).unwrap() as u128,
                    rank_formula(cx.graph(), i, n),
                    "{:?} ({i},{n})",
                    cx.graph().name()
                );
            }
        }
    }
    for g in [complete(5), star(5)] {
        let cx = SwiatkowskiComplex::build(&g, 2, 3).unwrap();
        assert_eq!(cx.rank(2, 3).unwrap() as u128, rank_formula(&g, 2, 3));
    }
}

#[test]
fn sparse_and_dense_homology_agree() {
    for cx in complexes(3, 2, 3) {
        for i in 0..=2 {
            for n in 0..=3 {
                let dense = homology_dense(
                    &cx.differential(i, n).unwrap().to_dense(),
                    &cx.differential(i + 1, n).unwrap().to_dense(),
                )
                .unwrap();
                assert_eq!(cx.homology(i, n).unwrap(), dense);
            }
        }
    }
}

#[test]
fn stabilization_is_a_chain_map() {
    for cx in complexes(3, 2, 3) {
        for e in 0..cx.graph().num_edges() {
            for n in 0..3 {
                for i in 1..=3 {
                    let up = cx.stabilization(e, i, n).unwrap();
                    let down = cx.stabilization(e, i - 1, n).unwrap();
                    let lhs = cx.differential(i, n + 1).unwrap().mul(&up).unwrap();
                    let rhs = down.mul(cx.differential(i, n).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

/// Generators are differences of arrows, so the telescoping paths to the
/// root cancel and the chain maps agree exactly.
#[test]
fn root_choice_does_not_change_pullbacks() {
    let classes: Vec<Arc<Graph>> = enumerate_connected_graphs(4).into_iter().map(Arc::new).collect();
    let cxs: Vec<SwiatkowskiComplex> = classes
        .iter()
        .map(|g| SwiatkowskiComplex::build_shared(g.clone(), 2, 3).unwrap())
        .collect();
    for (s, g) in classes.iter().enumerate() {
        for (t, h) in classes.iter().enumerate() {
            for phi in hom_set(g, h).unwrap() {
                for n in 0..=3 {
                    for i in 0..=2 {
                        let a = pullback_with_root(&phi, &cxs[s], &cxs[t], i, n, RootChoice::MinVertex).unwrap();
                        let b = pullback_with_root(&phi, &cxs[s], &cxs[t], i, n, RootChoice::MaxVertex).unwrap();
                        assert_eq!(a, b, "{:?} -> {:?} ({i},{n})", g.name(), h.name());
                    }
                }
            }
        }
    }
}

#[test]
fn small_known_groups() {
    let h = |g: &Graph, i, n| SwiatkowskiComplex::build(g, i, n).unwrap().homology(i, n).unwrap();
    assert_eq!(h(&cycle(3), 1, 1).rank, 1);
    assert_eq!(h(&star(3), 1, 2).rank, 1);
    assert_eq!(h(&star(4), 1, 2).rank, 3);
    assert!(h(&complete(4), 1, 2).torsion.is_empty());
}
