//! Isomorphism classes of small connected multigraphs.

use std::collections::BTreeMap;

use super::builders::{complete, complete_bipartite, cycle, lollipop, path, point, rose, star};
use super::canon::{canonical_labeling, CanonicalForm};
use super::Graph;

/// One representative per isomorphism class of nonempty connected
/// multigraphs with at most `max_edges` edges, ordered by edge count, then
/// vertex count, then canonical form.
///
/// Every connected graph with `e >= 1` edges arises from one with `e - 1`
/// edges by adding a loop, an edge between existing vertices, or a pendant
/// edge to a new vertex, so growing layer by layer is exhaustive.
pub fn enumerate_connected_graphs(max_edges: usize) -> Vec<Graph> {
    let catalog = catalog(max_edges);
    let mut layer: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    layer.insert(super::canonical_form(&point()), point());
    let mut all: Vec<(CanonicalForm, Graph)> = layer.clone().into_iter().collect();

    for _ in 0..max_edges {
        let mut next = BTreeMap::new();
        for g in layer.values() {
            for h in extensions(g) {
                next.entry(super::canonical_form(&h)).or_insert(h);
            }
        }
        all.extend(next.iter().map(|(k, g)| (k.clone(), g.clone())));
        layer = next;
    }

    all.sort_by(|(ka, a), (kb, b)| {
        (a.num_edges(), a.num_vertices(), ka).cmp(&(b.num_edges(), b.num_vertices(), kb))
    });
    let mut unnamed: BTreeMap<usize, usize> = BTreeMap::new();
    all.into_iter()
        .map(|(key, g)| match catalog.get(&key) {
            Some(named) => named.clone(),
            None => {
                let idx = unnamed.entry(g.num_edges()).or_insert(0);
                *idx += 1;
                canonical_relabel(&g).with_name(format!("G{}.{}", g.num_edges(), idx))
            }
        })
        .collect()
}

fn extensions(g: &Graph) -> Vec<Graph> {
    let n = g.num_vertices();
    let base: Vec<(usize, usize)> = (0..g.num_edges()).map(|e| g.endpoints(e)).collect();
    let mut out = Vec::new();
    for u in 0..n {
        for w in u..n {
            let mut edges = base.clone();
            edges.push((w, u));
            out.push(Graph::from_edges(n, &edges));
        }
        let mut edges = base.clone();
        edges.push((n, u));
        out.push(Graph::from_edges(n + 1, &edges));
    }
    out
}

/// Vertices renumbered by the canonical ordering, edges listed row by row
/// from the multiplicity matrix.
fn canonical_relabel(g: &Graph) -> Graph {
    let (_, order) = canonical_labeling(g);
    let mult = g.multiplicities();
    let mut edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        for (j, &w) in order.iter().enumerate().take(i + 1) {
            for _ in 0..mult[v][w] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(g.num_vertices(), &edges)
}

fn catalog(max_edges: usize) -> BTreeMap<CanonicalForm, Graph> {
    let mut named = vec![point(), lollipop()];
    for k in 1..=max_edges {
        named.push(rose(k));
        named.push(path(k));
        if k >= 2 {
            named.push(cycle(k));
        }
        if k >= 3 {
            named.push(star(k));
        }
    }
    for k in 4.. {
        if k * (k - 1) / 2 > max_edges {
            break;
        }
        named.push(complete(k));
    }
    for p in 2..=max_edges {
        for q in p..=max_edges {
            if p * q <= max_edges {
                named.push(complete_bipartite(p, q));
            }
        }
    }
    let mut out = BTreeMap::new();
    for g in named {
        if g.num_edges() <= max_edges {
            out.entry(super::canonical_form(&g)).or_insert(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(max_edges: usize) -> Vec<String> {
        enumerate_connected_graphs(max_edges)
            .iter()
            .map(|g| g.name().unwrap_or("?").to_string())
            .collect()
    }

    #[test]
    fn small_layers() {
        assert_eq!(names(0), ["*"]);
        assert_eq!(names(1), ["*", "R1", "P1"]);
        let two = names(2);
        assert_eq!(two.len(), 7);
        for n in ["*", "R1", "R2", "P1", "P2", "L", "C2"] {
            assert!(two.contains(&n.to_string()), "{n} missing");
        }
    }

    #[test]
    fn known_class_counts() {
        // three edges: R3; four classes on two vertices; P2 plus a loop (two
        // ways), doubled P2, C3; then P3 and S3
        let gs = enumerate_connected_graphs(4);
        let counts: Vec<usize> = (0..=4).map(|e| gs.iter().filter(|g| g.num_edges() == e).count()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 30]);
    }

    #[test]
    fn members_are_connected_and_distinct() {
        let gs = enumerate_connected_graphs(3);
        for (i, g) in gs.iter().enumerate() {
            assert!(g.is_connected());
            for h in &gs[i + 1..] {
                assert!(!super::super::is_isomorphic(g, h));
            }
        }
    }
}
