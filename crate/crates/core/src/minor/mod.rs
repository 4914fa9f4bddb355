//! Minor morphisms between graphs.
//!
//! A morphism `G -> G'` sends every vertex to a vertex and every arrow to an
//! arrow (kept), a vertex (contracted) or [`Image::Deleted`]. It commutes with
//! the involutions, every arrow of `G'` has exactly one preimage arrow, kept
//! arrows keep their incidences, and the preimage of each vertex of `G'` is a
//! tree made of vertices and contracted edges.

pub mod json;
pub mod ordered;
mod search;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use ordered::{od_hom_set, OrderedMinorMorphism};
pub use search::{automorphisms, has_minor, hom_count, hom_set, visit_homs};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::util::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Image {
    Vertex(usize),
    Arrow(usize),
    Deleted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// Map lengths match the source, images lie in the target.
    Shape,
    Equivariance,
    UniqueLift,
    KeptIncidence,
    ContractedIncidence,
    TreePreimage,
    /// Ordered morphisms only: the arrow injection preserves the orders.
    OrderPreserving,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Shape => "shape",
            Axiom::Equivariance => "equivariance",
            Axiom::UniqueLift => "unique lift",
            Axiom::KeptIncidence => "kept incidence",
            Axiom::ContractedIncidence => "contracted incidence",
            Axiom::TreePreimage => "tree preimage",
            Axiom::OrderPreserving => "order preserving",
        };
        f.write_str(s)
    }
}

/// Which axiom failed and on which element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: String,
    pub detail: String,
}

impl Violation {
    fn new(axiom: Axiom, witness: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            axiom,
            witness: witness.into(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at {}: {}", self.axiom, self.witness, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct MinorMorphism {
    source: Arc<Graph>,
    target: Arc<Graph>,
    vertex_map: Vec<usize>,
    arrow_map: Vec<Image>,
}

impl PartialEq for MinorMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_map == other.vertex_map
            && self.arrow_map == other.arrow_map
            && *self.source == *other.source
            && *self.target == *other.target
    }
}

impl Eq for MinorMorphism {}

impl MinorMorphism {
    /// Builds and validates a morphism.
    pub fn new(
        source: Arc<Graph>,
        target: Arc<Graph>,
        vertex_map: Vec<usize>,
        arrow_map: Vec<Image>,
    ) -> Result<Self> {
        let m = Self::unchecked(source, target, vertex_map, arrow_map);
        m.validate().map_err(Error::InvalidMorphism)?;
        Ok(m)
    }

    /// Builds an assignment without checking the axioms; see [`Self::validate`].
    pub fn unchecked(
        source: Arc<Graph>,
        target: Arc<Graph>,
        vertex_map: Vec<usize>,
        arrow_map: Vec<Image>,
    ) -> Self {
        MinorMorphism {
            source,
            target,
            vertex_map,
            arrow_map,
        }
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        MinorMorphism {
            vertex_map: (0..g.num_vertices()).collect(),
            arrow_map: (0..g.num_arrows()).map(Image::Arrow).collect(),
            source: g.clone(),
            target: g,
        }
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn arrow_map(&self) -> &[Image] {
        &self.arrow_map
    }

    pub fn vertex(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn arrow(&self, a: usize) -> Image {
        self.arrow_map[a]
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let (g, h) = (&*self.source, &*self.target);
        if self.vertex_map.len() != g.num_vertices() || self.arrow_map.len() != g.num_arrows() {
            return Err(Violation::new(
                Axiom::Shape,
                "map",
                format!(
                    "expected {} vertex and {} arrow images, got {} and {}",
                    g.num_vertices(),
                    g.num_arrows(),
                    self.vertex_map.len(),
                    self.arrow_map.len()
                ),
            ));
        }
        for (v, &w) in self.vertex_map.iter().enumerate() {
            if w >= h.num_vertices() {
                return Err(Violation::new(
                    Axiom::Shape,
                    g.vertex_label(v),
                    "image is not a target vertex",
                ));
            }
        }
        for (a, &img) in self.arrow_map.iter().enumerate() {
            let bad = match img {
                Image::Vertex(w) => w >= h.num_vertices(),
                Image::Arrow(b) => b >= h.num_arrows(),
                Image::Deleted => false,
            };
            if bad {
                return Err(Violation::new(Axiom::Shape, g.arrow_label(a), "image out of range"));
            }
        }

        for a in 0..g.num_arrows() {
            let here = self.arrow_map[a];
            let there = self.arrow_map[g.sigma(a)];
            let expected = match here {
                Image::Arrow(b) => Image::Arrow(h.sigma(b)),
                other => other,
            };
            if there != expected {
                return Err(Violation::new(
                    Axiom::Equivariance,
                    g.arrow_label(a),
                    "image of the reverse arrow is not the reverse image",
                ));
            }
        }

        let mut lifts = vec![0usize; h.num_arrows()];
        for &img in &self.arrow_map {
            if let Image::Arrow(b) = img {
                lifts[b] += 1;
            }
        }
        if let Some(b) = lifts.iter().position(|&c| c != 1) {
            return Err(Violation::new(
                Axiom::UniqueLift,
                h.arrow_label(b),
                format!("{} preimage arrows", lifts[b]),
            ));
        }

        for (a, &img) in self.arrow_map.iter().enumerate() {
            let (hv, tv) = (self.vertex_map[g.head(a)], self.vertex_map[g.tail(a)]);
            match img {
                Image::Arrow(b) if hv != h.head(b) || tv != h.tail(b) => {
                    return Err(Violation::new(
                        Axiom::KeptIncidence,
                        g.arrow_label(a),
                        format!("endpoints do not map to those of {}", h.arrow_label(b)),
                    ));
                }
                Image::Vertex(w) if hv != w || tv != w => {
                    return Err(Violation::new(
                        Axiom::ContractedIncidence,
                        g.arrow_label(a),
                        format!("endpoints do not both map to {}", h.vertex_label(w)),
                    ));
                }
                _ => {}
            }
        }

        let mut uf = UnionFind::new(g.num_vertices());
        let mut contracted = vec![0usize; h.num_vertices()];
        let mut preimage = vec![0usize; h.num_vertices()];
        for &w in &self.vertex_map {
            preimage[w] += 1;
        }
        for e in 0..g.num_edges() {
            let a = g.edges()[e].representative;
            if let Image::Vertex(w) = self.arrow_map[a] {
                contracted[w] += 1;
                if !uf.union(g.head(a), g.tail(a)) {
                    return Err(Violation::new(
                        Axiom::TreePreimage,
                        h.vertex_label(w),
                        format!("contracted edge {} closes a cycle", g.edge_label(e)),
                    ));
                }
            }
        }
        for w in 0..h.num_vertices() {
            if preimage[w] == 0 || contracted[w] + 1 != preimage[w] {
                return Err(Violation::new(
                    Axiom::TreePreimage,
                    h.vertex_label(w),
                    format!(
                        "preimage has {} vertices and {} contracted edges",
                        preimage[w], contracted[w]
                    ),
                ));
            }
        }
        Ok(())
    }

    /// `other ∘ self`. The target of `self` must equal the source of `other`
    /// as a graph, not merely up to isomorphism.
    pub fn then(&self, other: &MinorMorphism) -> Result<MinorMorphism> {
        compose(self, other)
    }

    /// The unique arrow of the source sent to `b`.
    pub fn arrow_lift(&self, b: usize) -> usize {
        self.arrow_map
            .iter()
            .position(|&img| img == Image::Arrow(b))
            .expect("valid morphisms lift every target arrow")
    }

    /// All arrow lifts, indexed by target arrow.
    pub fn arrow_lifts(&self) -> Vec<usize> {
        let mut lift = vec![usize::MAX; self.target.num_arrows()];
        for (a, &img) in self.arrow_map.iter().enumerate() {
            if let Image::Arrow(b) = img {
                lift[b] = a;
            }
        }
        lift
    }

    /// The induced injection on edges, indexed by target edge.
    pub fn edge_injection(&self) -> Vec<usize> {
        let lift = self.arrow_lifts();
        self.target
            .edges()
            .iter()
            .map(|e| self.source.edge_of(lift[e.representative]))
            .collect()
    }

    /// Source edges sent to vertices.
    pub fn contracted_edges(&self) -> Vec<usize> {
        self.edges_where(|img| matches!(img, Image::Vertex(_)))
    }

    pub fn deleted_edges(&self) -> Vec<usize> {
        self.edges_where(|img| img == Image::Deleted)
    }

    fn edges_where(&self, pred: impl Fn(Image) -> bool) -> Vec<usize> {
        (0..self.source.num_edges())
            .filter(|&e| pred(self.arrow_map[self.source.edges()[e].representative]))
            .collect()
    }

    /// Replaces the target by an isomorphic copy: `vertex_perm[old] = new`
    /// and `arrow_perm[old] = new` must describe an isomorphism onto `target`.
    pub fn transport(&self, target: Arc<Graph>, vertex_perm: &[usize], arrow_perm: &[usize]) -> Result<Self> {
        let vertex_map = self.vertex_map.iter().map(|&w| vertex_perm[w]).collect();
        let arrow_map = self
            .arrow_map
            .iter()
            .map(|img| match *img {
                Image::Vertex(w) => Image::Vertex(vertex_perm[w]),
                Image::Arrow(b) => Image::Arrow(arrow_perm[b]),
                Image::Deleted => Image::Deleted,
            })
            .collect();
        MinorMorphism::new(self.source.clone(), target, vertex_map, arrow_map)
    }
}

/// `psi ∘ phi` for `phi: G -> G'` and `psi: G' -> G''`.
pub fn compose(phi: &MinorMorphism, psi: &MinorMorphism) -> Result<MinorMorphism> {
    if *phi.target != *psi.source {
        return Err(Error::ObjectMismatch(
            "target of the first morphism is not the source of the second".into(),
        ));
    }
    Ok(MinorMorphism {
        source: phi.source.clone(),
        target: psi.target.clone(),
        vertex_map: phi.vertex_map.iter().map(|&w| psi.vertex_map[w]).collect(),
        arrow_map: phi
            .arrow_map
            .iter()
            .map(|img| match *img {
                Image::Vertex(w) => Image::Vertex(psi.vertex_map[w]),
                Image::Arrow(b) => psi.arrow_map[b],
                Image::Deleted => Image::Deleted,
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builders::*;

    fn arc(g: Graph) -> Arc<Graph> {
        Arc::new(g)
    }

    #[test]
    fn identity_validates() {
        assert!(MinorMorphism::identity(arc(cycle(3))).validate().is_ok());
    }

    #[test]
    fn contract_one_delete_other_on_c2() {
        let m = MinorMorphism::new(
            arc(cycle(2)),
            arc(point()),
            vec![0, 0],
            vec![Image::Vertex(0), Image::Vertex(0), Image::Deleted, Image::Deleted],
        );
        assert!(m.is_ok());
    }

    #[test]
    fn contracting_a_loop_is_rejected() {
        let m = MinorMorphism::unchecked(
            arc(rose(1)),
            arc(point()),
            vec![0],
            vec![Image::Vertex(0), Image::Vertex(0)],
        );
        let v = m.validate().unwrap_err();
        assert_eq!(v.axiom, Axiom::TreePreimage);
        assert_eq!(v.witness, "v0");
    }

    #[test]
    fn equivariance_violation_names_arrow() {
        let m = MinorMorphism::unchecked(
            arc(rose(1)),
            arc(rose(1)),
            vec![0],
            vec![Image::Arrow(0), Image::Arrow(0)],
        );
        let v = m.validate().unwrap_err();
        assert_eq!(v.axiom, Axiom::Equivariance);
        assert_eq!(v.witness, "e0:+");
    }

    #[test]
    fn missing_lift_detected() {
        let m = MinorMorphism::unchecked(arc(path(1)), arc(path(1)), vec![0, 1], vec![Image::Deleted; 2]);
        assert_eq!(m.validate().unwrap_err().axiom, Axiom::UniqueLift);
    }

    #[test]
    fn composing_mismatched_objects_fails() {
        let a = MinorMorphism::identity(arc(cycle(2)));
        let b = MinorMorphism::identity(arc(rose(2)));
        assert!(matches!(compose(&a, &b), Err(Error::ObjectMismatch(_))));
    }
}
