//! Graphs in the arrow-and-involution style.
//!
//! A [`Graph`] has vertices `0..n` and arrows `0..2e`. Every arrow has a head,
//! and `sigma` pairs each arrow with its reverse; the tail of an arrow is the
//! head of its reverse. Edges are the orbits `{a, sigma(a)}`. Loops are edges
//! whose two arrows share a head, which is what lets a loop carry the
//! orientation-reversing automorphism a plain vertex-pair encoding cannot.

pub mod builders;
pub mod canon;
pub mod directed;
pub mod enumerate;
pub mod format;
mod planar;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use directed::{DirectedGraph, OrderedDirectedGraph};
pub use enumerate::enumerate_connected_graphs;
pub use planar::is_planar;

use crate::error::{Error, Result};
use crate::util::UnionFind;

/// An edge: the pair `{representative, partner}` with `representative < partner`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub representative: usize,
    pub partner: usize,
}

impl Edge {
    pub fn pair(&self) -> [usize; 2] {
        [self.representative, self.partner]
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    name: Option<String>,
    vertex_labels: Vec<String>,
    edge_labels: Vec<String>,
    head: Vec<usize>,
    sigma: Vec<usize>,
    edges: Vec<Edge>,
    edge_of: Vec<usize>,
    incoming: Vec<Vec<usize>>,
}

/// Structural equality: same vertex count, heads and involution. Labels and
/// names are cosmetic.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_labels.len() == other.vertex_labels.len()
            && self.head == other.head
            && self.sigma == other.sigma
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(num_vertices: usize, head: Vec<usize>, sigma: Vec<usize>) -> Result<Self> {
        if head.len() != sigma.len() {
            return Err(Error::InvalidGraph(format!(
                "{} heads for {} arrows",
                head.len(),
                sigma.len()
            )));
        }
        for (a, &h) in head.iter().enumerate() {
            if h >= num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "arrow {a} has head {h} outside {num_vertices} vertices"
                )));
            }
        }
        for (a, &s) in sigma.iter().enumerate() {
            if s >= sigma.len() || s == a || sigma[s] != a {
                return Err(Error::InvalidGraph(format!(
                    "sigma is not a fixed-point-free involution at arrow {a}"
                )));
            }
        }
        let mut edges = Vec::with_capacity(sigma.len() / 2);
        let mut edge_of = vec![0; sigma.len()];
        for a in 0..sigma.len() {
            if a < sigma[a] {
                edge_of[a] = edges.len();
                edge_of[sigma[a]] = edges.len();
                edges.push(Edge {
                    representative: a,
                    partner: sigma[a],
                });
            }
        }
        let mut incoming = vec![Vec::new(); num_vertices];
        for (a, &h) in head.iter().enumerate() {
            incoming[h].push(a);
        }
        Ok(Graph {
            name: None,
            vertex_labels: (0..num_vertices).map(|v| format!("v{v}")).collect(),
            edge_labels: (0..edges.len()).map(|e| format!("e{e}")).collect(),
            head,
            sigma,
            edges,
            edge_of,
            incoming,
        })
    }

    /// Builds a graph from `(head, tail)` pairs. Edge `k` owns arrows `2k`
    /// (with the given head) and `2k + 1` (its reverse).
    pub fn from_edges(num_vertices: usize, edges: &[(usize, usize)]) -> Self {
        let mut head = Vec::with_capacity(2 * edges.len());
        let mut sigma = Vec::with_capacity(2 * edges.len());
        for (k, &(h, t)) in edges.iter().enumerate() {
            head.push(h);
            head.push(t);
            sigma.push(2 * k + 1);
            sigma.push(2 * k);
        }
        Graph::new(num_vertices, head, sigma).expect("edge endpoints must be existing vertices")
    }

    pub fn empty() -> Self {
        Graph::from_edges(0, &[])
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Replaces the vertex and edge labels. Labels must be distinct and no
    /// vertex label may collide with an arrow label (`<edge>:+` / `<edge>:-`).
    pub fn with_labels(mut self, vertex_labels: Vec<String>, edge_labels: Vec<String>) -> Result<Self> {
        if vertex_labels.len() != self.num_vertices() || edge_labels.len() != self.num_edges() {
            return Err(Error::InvalidGraph("label count mismatch".into()));
        }
        let mut seen = std::collections::HashSet::new();
        let arrow_labels = edge_labels
            .iter()
            .flat_map(|e| [format!("{e}:+"), format!("{e}:-")]);
        for label in vertex_labels.iter().cloned().chain(arrow_labels) {
            if !seen.insert(label.clone()) {
                return Err(Error::InvalidGraph(format!("duplicate identifier `{label}`")));
            }
        }
        if edge_labels.iter().collect::<std::collections::HashSet<_>>().len() != edge_labels.len() {
            return Err(Error::InvalidGraph("duplicate edge identifier".into()));
        }
        self.vertex_labels = vertex_labels;
        self.edge_labels = edge_labels;
        Ok(self)
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn edge_label(&self, e: usize) -> &str {
        &self.edge_labels[e]
    }

    /// `<edge>:+` for the representative arrow, `<edge>:-` for its partner.
    pub fn arrow_label(&self, a: usize) -> String {
        let e = self.edge_of[a];
        let sign = if self.edges[e].representative == a { '+' } else { '-' };
        format!("{}:{sign}", self.edge_labels[e])
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.head.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num_vertices() == 0
    }

    pub fn head(&self, a: usize) -> usize {
        self.head[a]
    }

    pub fn tail(&self, a: usize) -> usize {
        self.head[self.sigma[a]]
    }

    pub fn sigma(&self, a: usize) -> usize {
        self.sigma[a]
    }

    pub fn heads(&self) -> &[usize] {
        &self.head
    }

    pub fn sigmas(&self) -> &[usize] {
        &self.sigma
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_of(&self, a: usize) -> usize {
        self.edge_of[a]
    }

    /// `(head, tail)` of the edge's representative arrow.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let a = self.edges[e].representative;
        (self.head(a), self.tail(a))
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (h, t) = self.endpoints(e);
        h == t
    }

    /// Arrows whose head is `v`, ascending.
    pub fn arrows_at(&self, v: usize) -> &[usize] {
        &self.incoming[v]
    }

    /// Number of arrows with head `v`; loops count twice.
    pub fn degree(&self, v: usize) -> usize {
        self.incoming[v].len()
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.num_vertices());
        for e in 0..self.num_edges() {
            let (h, t) = self.endpoints(e);
            uf.union(h, t);
        }
        let mut index = std::collections::HashMap::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.num_vertices() {
            let r = uf.find(v);
            let k = *index.entry(r).or_insert_with(|| {
                comps.push(Vec::new());
                comps.len() - 1
            });
            comps[k].push(v);
        }
        comps
    }

    /// The empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.num_vertices() > 0 && self.components().len() == 1
    }

    /// Acyclic: no loops, no parallel edges, no cycles.
    pub fn is_forest(&self) -> bool {
        self.num_edges() + self.components().len() == self.num_vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_forest()
    }

    /// First Betti number `e - v + 1` of a nonempty connected graph.
    pub fn genus(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.num_edges() + 1 - self.num_vertices())
    }

    /// Checks the object constraint of the minor category.
    pub fn ensure_object(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyGraph)
        } else if !self.is_connected() {
            Err(Error::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Edge multiplicity matrix; loops are counted once on the diagonal.
    pub fn multiplicities(&self) -> Vec<Vec<u32>> {
        let n = self.num_vertices();
        let mut m = vec![vec![0u32; n]; n];
        for e in 0..self.num_edges() {
            let (h, t) = self.endpoints(e);
            m[h][t] += 1;
            if h != t {
                m[t][h] += 1;
            }
        }
        m
    }

    /// Drops loops and merges parallel edges.
    pub fn simplification(&self) -> Graph {
        let m = self.multiplicities();
        let n = self.num_vertices();
        let mut edges = Vec::new();
        for u in 0..n {
            for w in u + 1..n {
                if m[u][w] > 0 {
                    edges.push((w, u));
                }
            }
        }
        let mut g = Graph::from_edges(n, &edges);
        g.vertex_labels = self.vertex_labels.clone();
        g.name = self.name.clone();
        g
    }

    /// The subgraph on a vertex subset, keeping every edge with both ends inside.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges: Vec<_> = (0..self.num_edges())
            .map(|e| self.endpoints(e))
            .filter(|&(h, t)| pos[h] != usize::MAX && pos[t] != usize::MAX)
            .map(|(h, t)| (pos[h], pos[t]))
            .collect();
        Graph::from_edges(vertices.len(), &edges)
    }

    /// Relabels vertices by `vertex_perm[old] = new` and arrows by
    /// `arrow_perm[old] = new`. Labels are reset to defaults.
    pub fn relabeled(&self, vertex_perm: &[usize], arrow_perm: &[usize]) -> Result<Graph> {
        let mut head = vec![0; self.num_arrows()];
        let mut sigma = vec![0; self.num_arrows()];
        for a in 0..self.num_arrows() {
            head[arrow_perm[a]] = vertex_perm[self.head[a]];
            sigma[arrow_perm[a]] = arrow_perm[self.sigma[a]];
        }
        Graph::new(self.num_vertices(), head, sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::builders::*;
    use super::*;

    #[test]
    fn empty_graph_predicates() {
        let g = Graph::empty();
        assert!(!g.is_connected());
        assert!(g.is_forest());
        assert!(!g.is_tree());
        assert!(matches!(g.genus(), Err(Error::EmptyGraph)));
    }

    #[test]
    fn rose_one_is_not_a_forest() {
        let r1 = rose(1);
        assert!(r1.is_connected());
        assert!(!r1.is_forest());
        assert!(!r1.is_tree());
        assert_eq!(r1.arrows_at(0), &[0, 1]);
    }

    #[test]
    fn paths_are_trees() {
        assert!(path(2).is_tree());
        assert!(path(0).is_tree());
        assert!(!cycle(2).is_forest());
    }

    #[test]
    fn genus_values() {
        assert_eq!(star(4).genus().unwrap(), 0);
        assert_eq!(path(3).genus().unwrap(), 0);
        assert_eq!(cycle(3).genus().unwrap(), 1);
        assert_eq!(rose(2).genus().unwrap(), 2);
        let two = Graph::from_edges(2, &[]);
        assert!(matches!(two.genus(), Err(Error::Disconnected)));
    }

    #[test]
    fn rejects_bad_involution() {
        assert!(Graph::new(1, vec![0, 0], vec![0, 1]).is_err());
        assert!(Graph::new(1, vec![0, 0, 0], vec![1, 2, 0]).is_err());
        assert!(Graph::new(1, vec![0, 3], vec![1, 0]).is_err());
    }

    #[test]
    fn edges_partition_arrows() {
        let g = Graph::new(2, vec![0, 1, 1, 0], vec![2, 3, 0, 1]).unwrap();
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.edges()[0], Edge { representative: 0, partner: 2 });
        assert_eq!(g.edge_of(3), 1);
        assert_eq!(g.tail(0), 1);
        assert_eq!(g.arrow_label(2), "e0:-");
    }

    #[test]
    fn simplification_drops_loops_and_parallels() {
        let s = lollipop().simplification();
        assert_eq!(s.num_edges(), 1);
        assert_eq!(cycle(2).simplification().num_edges(), 1);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let g = path(1);
        assert!(g
            .clone()
            .with_labels(vec!["a".into(), "a".into()], vec!["e".into()])
            .is_err());
        assert!(g
            .with_labels(vec!["e:+".into(), "b".into()], vec!["e".into()])
            .is_err());
    }
}
