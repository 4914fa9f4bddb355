use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    num_vertices: usize,
    head: Vec<usize>,
    tail: Vec<usize>,
}

impl DirectedGraph {
    pub fn new(num_vertices: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(h, t)) = arrows.iter().find(|&&(h, t)| h >= num_vertices || t >= num_vertices) {
            return Err(Error::InvalidGraph(format!(
                "arrow ({h}, {t}) leaves {num_vertices} vertices"
            )));
        }
        Ok(DirectedGraph {
            num_vertices,
            head: arrows.iter().map(|a| a.0).collect(),
            tail: arrows.iter().map(|a| a.1).collect(),
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_arrows(&self) -> usize {
        self.head.len()
    }

    pub fn head(&self, a: usize) -> usize {
        self.head[a]
    }

    pub fn tail(&self, a: usize) -> usize {
        self.tail[a]
    }

    /// Arrows become `A x {+1, -1}`: `(a, +1)` is arrow `2a` with the same
    /// head, `(a, -1)` is arrow `2a + 1` pointing backwards.
    pub fn underlying(&self) -> Graph {
        let edges: Vec<_> = (0..self.num_arrows()).map(|a| (self.head[a], self.tail[a])).collect();
        Graph::from_edges(self.num_vertices, &edges)
    }

    pub fn is_connected(&self) -> bool {
        self.underlying().is_connected()
    }
}

/// A directed graph whose arrow identifiers are their ranks in the total
/// order: arrow `0` is the smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedDirectedGraph {
    graph: DirectedGraph,
}

impl OrderedDirectedGraph {
    /// Arrows listed from smallest to largest.
    pub fn new(num_vertices: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        Ok(OrderedDirectedGraph {
            graph: DirectedGraph::new(num_vertices, arrows)?,
        })
    }

    /// Imposes `order` (arrow ids of `graph`, smallest first); arrows are
    /// renumbered by rank.
    pub fn with_order(graph: &DirectedGraph, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; graph.num_arrows()];
        if order.len() != graph.num_arrows() {
            return Err(Error::InvalidGraph("order must list every arrow once".into()));
        }
        for &a in order {
            if a >= seen.len() || std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidGraph("order must list every arrow once".into()));
            }
        }
        let arrows: Vec<_> = order.iter().map(|&a| (graph.head(a), graph.tail(a))).collect();
        Self::new(graph.num_vertices(), &arrows)
    }

    /// The directed graph `(V, A, h, t)` of a graph, ordered by arrow id.
    pub fn from_graph_arrows(g: &Graph) -> Self {
        let arrows: Vec<_> = (0..g.num_arrows()).map(|a| (g.head(a), g.tail(a))).collect();
        Self::new(g.num_vertices(), &arrows).expect("graph arrows are valid")
    }

    pub fn directed(&self) -> &DirectedGraph {
        &self.graph
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices
    }

    pub fn num_arrows(&self) -> usize {
        self.graph.num_arrows()
    }

    pub fn head(&self, a: usize) -> usize {
        self.graph.head[a]
    }

    pub fn tail(&self, a: usize) -> usize {
        self.graph.tail[a]
    }

    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_arrows()).map(|a| (self.head(a), self.tail(a)))
    }

    /// The underlying graph, forgetting the order.
    pub fn underlying(&self) -> Graph {
        self.graph.underlying()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn ensure_object(&self) -> Result<()> {
        if self.num_vertices() == 0 {
            Err(Error::EmptyGraph)
        } else if !self.is_connected() {
            Err(Error::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Canonical encoding. Isomorphisms must preserve the arrow order, so
    /// renaming vertices by first appearance along the ordered arrows (head
    /// before tail) is canonical; untouched vertices are appended.
    pub fn canonical_form(&self) -> Vec<u32> {
        let mut name = vec![u32::MAX; self.num_vertices()];
        let mut next = 0u32;
        let mut out = vec![self.num_vertices() as u32, self.num_arrows() as u32];
        for (h, t) in self.arrows() {
            for v in [h, t] {
                if name[v] == u32::MAX {
                    name[v] = next;
                    next += 1;
                }
                out.push(name[v]);
            }
        }
        out
    }

    /// The unique order-preserving isomorphism to `other`, as a vertex map,
    /// if one exists.
    pub fn isomorphism_to(&self, other: &OrderedDirectedGraph) -> Option<Vec<usize>> {
        if self.num_vertices() != other.num_vertices() || self.num_arrows() != other.num_arrows() {
            return None;
        }
        let mut map = vec![usize::MAX; self.num_vertices()];
        let mut hit = vec![false; other.num_vertices()];
        for a in 0..self.num_arrows() {
            for (v, w) in [(self.head(a), other.head(a)), (self.tail(a), other.tail(a))] {
                if map[v] == usize::MAX {
                    if hit[w] {
                        return None;
                    }
                    map[v] = w;
                    hit[w] = true;
                } else if map[v] != w {
                    return None;
                }
            }
        }
        let mut free = (0..other.num_vertices()).filter(|&w| !hit[w]);
        for slot in map.iter_mut().filter(|m| **m == usize::MAX) {
            *slot = free.next()?;
        }
        Some(map)
    }
}

/// JSON form: `{"vertices": n, "arrows": [[head, tail], ...]}` in order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderedDirectedGraphJson {
    pub vertices: usize,
    pub arrows: Vec<[usize; 2]>,
}

impl From<&OrderedDirectedGraph> for OrderedDirectedGraphJson {
    fn from(d: &OrderedDirectedGraph) -> Self {
        OrderedDirectedGraphJson {
            vertices: d.num_vertices(),
            arrows: d.arrows().map(|(h, t)| [h, t]).collect(),
        }
    }
}

impl TryFrom<&OrderedDirectedGraphJson> for OrderedDirectedGraph {
    type Error = Error;

    fn try_from(j: &OrderedDirectedGraphJson) -> Result<Self> {
        let arrows: Vec<_> = j.arrows.iter().map(|a| (a[0], a[1])).collect();
        OrderedDirectedGraph::new(j.vertices, &arrows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn underlying_of_single_arrow() {
        let d = DirectedGraph::new(2, &[(1, 0)]).unwrap();
        let g = d.underlying();
        assert_eq!(g.num_arrows(), 2);
        assert_eq!(g.num_edges(), 1);
        assert_eq!((g.head(0), g.head(1)), (1, 0));
        assert_eq!(g.sigma(0), 1);
    }

    #[test]
    fn underlying_of_loop_is_rose() {
        let d = DirectedGraph::new(1, &[(0, 0)]).unwrap();
        assert_eq!(d.underlying(), crate::graph::builders::rose(1));
    }

    #[test]
    fn underlying_of_directed_path() {
        let d = DirectedGraph::new(4, &[(1, 0), (2, 1), (3, 2)]).unwrap();
        let g = d.underlying();
        // brute-force count: each directed arrow contributes exactly two arrows
        let count = (0..d.num_arrows()).map(|_| 2).sum::<usize>();
        assert_eq!(g.num_arrows(), count);
        assert_eq!(g.num_edges(), 3);
        assert!(crate::graph::is_isomorphic(&g, &crate::graph::builders::path(3)));
    }

    #[test]
    fn reorder_renumbers_arrows() {
        let d = DirectedGraph::new(2, &[(1, 0), (0, 0)]).unwrap();
        let od = OrderedDirectedGraph::with_order(&d, &[1, 0]).unwrap();
        assert_eq!(od.head(0), 0);
        assert_eq!(od.tail(1), 0);
        assert!(OrderedDirectedGraph::with_order(&d, &[0, 0]).is_err());
    }

    #[test]
    fn ordered_isomorphism_is_unique() {
        let a = OrderedDirectedGraph::new(2, &[(1, 0), (0, 1)]).unwrap();
        let b = OrderedDirectedGraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(a.isomorphism_to(&b), Some(vec![1, 0]));
        assert_eq!(a.canonical_form(), b.canonical_form());
        let c = OrderedDirectedGraph::new(2, &[(1, 0), (1, 0)]).unwrap();
        assert_eq!(a.isomorphism_to(&c), None);
    }
}
