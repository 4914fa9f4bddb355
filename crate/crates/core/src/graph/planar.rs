use super::builders::{complete, complete_bipartite};
use super::Graph;
use crate::minor::has_minor;

/// Wagner's criterion on the simplification: no `K5` and no `K3,3` minor.
/// Each component is first shrunk by dropping vertices of degree at most one
/// and smoothing vertices of degree two, which preserves planarity.
pub fn is_planar(g: &Graph) -> bool {
    let forbidden = [complete(5), complete_bipartite(3, 3)];
    g.components().iter().all(|comp| {
        let h = reduce(&g.induced(comp));
        let (v, e) = (h.num_vertices(), h.num_edges());
        if e < 9 {
            return true;
        }
        if v >= 3 && e > 3 * v - 6 {
            return false;
        }
        forbidden.iter().all(|k| !has_minor(&h, k))
    })
}

fn reduce(g: &Graph) -> Graph {
    let mut adj = adjacency(&g.simplification());
    loop {
        let n = adj.len();
        let Some(v) = (0..n).find(|&v| adj[v].len() <= 2 && n > 1) else {
            break;
        };
        let nbrs = adj[v].clone();
        for &w in &nbrs {
            adj[w].retain(|&x| x != v);
        }
        if let [a, b] = nbrs[..] {
            if !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj.remove(v);
        for list in adj.iter_mut() {
            for x in list.iter_mut() {
                if *x > v {
                    *x -= 1;
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (u, list) in adj.iter().enumerate() {
        edges.extend(list.iter().filter(|&&w| w > u).map(|&w| (w, u)));
    }
    Graph::from_edges(adj.len(), &edges)
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.num_vertices()];
    for e in 0..g.num_edges() {
        let (h, t) = g.endpoints(e);
        adj[h].push(t);
        adj[t].push(h);
    }
    adj
}

#[cfg(test)]
mod tests {
    use super::super::builders::*;
    use super::*;

    #[test]
    fn classical_cases() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(is_planar(&complete_bipartite(2, 5)));
        assert!(is_planar(&rose(3)));
        assert!(is_planar(&Graph::empty()));
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push(((i + 1) % 5, i));
            edges.push((i + 5, i));
            edges.push((5 + (i + 2) % 5, i + 5));
        }
        let p = Graph::from_edges(10, &edges);
        assert!(!is_planar(&p));
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        let k = complete_bipartite(3, 3);
        let mut edges: Vec<_> = (1..k.num_edges()).map(|e| k.endpoints(e)).collect();
        let (h, t) = k.endpoints(0);
        edges.push((6, t));
        edges.push((h, 6));
        assert!(!is_planar(&Graph::from_edges(7, &edges)));
    }
}
