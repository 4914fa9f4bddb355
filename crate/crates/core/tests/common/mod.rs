//! Oracles and generators shared by the integration tests. Nothing here
//! calls the enumeration or canonical-form code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;
use minorcat::graph::OrderedDirectedGraph;
use minorcat::grobner::Quartet;
use minorcat::minor::od_hom_set;
use minorcat::Graph;

/// Connected multigraphs with exactly `e` edges, counted up to isomorphism
/// by brute force: every multiset of vertex pairs on `v <= e + 1` vertices,
/// reduced to the lexicographically least sorted edge list over all vertex
/// permutations.
pub fn brute_force_class_count(e: usize) -> usize {
    if e == 0 {
        return 1;
    }
    let mut seen: BTreeSet<(usize, Vec<(usize, usize)>)> = BTreeSet::new();
    for v in 1..=e + 1 {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a..v).map(move |b| (a, b))).collect();
        let perms: Vec<Vec<usize>> = (0..v).permutations(v).collect();
        for edges in pairs.iter().copied().combinations_with_replacement(e) {
            if !connected(v, &edges) {
                continue;
            }
            let key = perms
                .iter()
                .map(|p| {
                    let mut es: Vec<(usize, usize)> = edges
                        .iter()
                        .map(|&(a, b)| {
                            let (x, y) = (p[a], p[b]);
                            (x.min(y), x.max(y))
                        })
                        .collect();
                    es.sort_unstable();
                    es
                })
                .min()
                .unwrap();
            seen.insert((v, key));
        }
    }
    seen.len()
}

pub fn connected(v: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = v;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            parts -= 1;
        }
    }
    parts == 1
}

/// Connected ordered directed graphs with at most `max_arrows` arrows, one
/// per order-preserving isomorphism class (vertices named by first
/// appearance along the arrows).
pub fn ordered_graphs(max_arrows: usize) -> Vec<Arc<OrderedDirectedGraph>> {
    let mut out = vec![Arc::new(OrderedDirectedGraph::new(1, &[]).unwrap())];
    for k in 1..=max_arrows {
        let mut found: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        extend(&mut Vec::new(), 0, k, &mut found);
        for arrows in found {
            let v = arrows.iter().map(|&(h, t)| h.max(t) + 1).max().unwrap();
            if connected(v, &arrows) {
                out.push(Arc::new(OrderedDirectedGraph::new(v, &arrows).unwrap()));
            }
        }
    }
    out
}

/// Arrow lists whose endpoints introduce vertices in order (head, then tail).
fn extend(cur: &mut Vec<(usize, usize)>, used: usize, k: usize, out: &mut BTreeSet<Vec<(usize, usize)>>) {
    if cur.len() == k {
        out.insert(cur.clone());
        return;
    }
    for h in 0..=used {
        let used_h = used.max(h + 1);
        for t in 0..=used_h {
            cur.push((h, t));
            extend(cur, used_h.max(t + 1), k, out);
            cur.pop();
        }
    }
}

/// Every exponent vector of length `len` with entries at most `max`.
pub fn exponents(len: usize, max: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    (0..len).map(|_| 0..=max).multi_cartesian_product().collect()
}

/// All quartets `(d, d', φ, m)` with `d'` from `objects` and exponents at
/// most `max`.
pub fn quartets(d: &Arc<OrderedDirectedGraph>, objects: &[Arc<OrderedDirectedGraph>], max: u32) -> Vec<Quartet> {
    let mut out = Vec::new();
    for dp in objects {
        for phi in od_hom_set(dp, d).unwrap() {
            for m in exponents(dp.num_arrows(), max) {
                out.push(Quartet::new(phi.clone(), m).unwrap());
            }
        }
    }
    out
}

pub fn names(graphs: &[Graph]) -> Vec<String> {
    graphs.iter().map(|g| g.name().unwrap_or("?").to_string()).collect()
}
