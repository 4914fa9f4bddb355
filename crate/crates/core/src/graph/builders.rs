//! Named graphs with a fixed labeling.

use super::Graph;

/// The single vertex `*`.
pub fn point() -> Graph {
    Graph::from_edges(1, &[]).with_name("*")
}

/// `R_k`: one vertex carrying `k` loops.
pub fn rose(k: usize) -> Graph {
    let edges = vec![(0, 0); k];
    Graph::from_edges(1, &edges).with_name(format!("R{k}"))
}

/// `P_k`: path with `k` edges; edge `j` points from vertex `j` to `j + 1`.
pub fn path(k: usize) -> Graph {
    let edges: Vec<_> = (0..k).map(|j| (j + 1, j)).collect();
    Graph::from_edges(k + 1, &edges).with_name(format!("P{k}"))
}

/// `C_k`: cycle with `k` edges. `C_1` is a loop, `C_0` the point.
pub fn cycle(k: usize) -> Graph {
    if k == 0 {
        return point();
    }
    let edges: Vec<_> = (0..k).map(|j| ((j + 1) % k, j)).collect();
    Graph::from_edges(k, &edges).with_name(format!("C{k}"))
}

/// `K_k`, edges `(w, u)` for `u < w`.
pub fn complete(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for w in u + 1..k {
            edges.push((w, u));
        }
    }
    Graph::from_edges(k, &edges).with_name(format!("K{k}"))
}

/// `K_{p,q}` with arrows pointing from the `p` side to the `q` side.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..p {
        for j in 0..q {
            edges.push((p + j, i));
        }
    }
    Graph::from_edges(p + q, &edges).with_name(format!("K{p},{q}"))
}

/// Star with central vertex `0` and `k` satellites, arrows directed outward.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// `L`: an edge with a loop at one end.
pub fn lollipop() -> Graph {
    Graph::from_edges(2, &[(1, 0), (1, 1)]).with_name("L")
}

/// Resolves names such as `*`, `R2`, `P3`, `C4`, `K5`, `K3,3`, `S3`, `L`.
pub fn by_name(spec: &str) -> Option<Graph> {
    let spec = spec.trim();
    match spec {
        "*" | "point" => return Some(point()),
        "L" | "lollipop" => return Some(lollipop()),
        _ => {}
    }
    let (kind, rest) = spec.split_at(spec.char_indices().nth(1).map_or(spec.len(), |(i, _)| i));
    let rest = rest.trim_start_matches(':');
    if kind == "K" {
        if let Some((p, q)) = rest.split_once(',') {
            return Some(complete_bipartite(p.trim().parse().ok()?, q.trim().parse().ok()?));
        }
    }
    let k: usize = rest.parse().ok()?;
    match kind {
        "R" => Some(rose(k)),
        "P" => Some(path(k)),
        "C" => Some(cycle(k)),
        "K" => Some(complete(k)),
        "S" => Some(star(k)),
        _ => None,
    }
}
