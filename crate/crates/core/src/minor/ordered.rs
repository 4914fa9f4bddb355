//! Minor morphisms between ordered directed graphs.

use std::sync::Arc;

use itertools::Itertools;

use super::{Axiom, Image, MinorMorphism, Violation};
use crate::error::{Error, Result};
use crate::graph::OrderedDirectedGraph;
use crate::util::UnionFind;

#[derive(Clone, Debug)]
pub struct OrderedMinorMorphism {
    source: Arc<OrderedDirectedGraph>,
    target: Arc<OrderedDirectedGraph>,
    vertex_map: Vec<usize>,
    arrow_map: Vec<Image>,
}

impl PartialEq for OrderedMinorMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_map == other.vertex_map
            && self.arrow_map == other.arrow_map
            && *self.source == *other.source
            && *self.target == *other.target
    }
}

impl Eq for OrderedMinorMorphism {}

impl OrderedMinorMorphism {
    pub fn new(
        source: Arc<OrderedDirectedGraph>,
        target: Arc<OrderedDirectedGraph>,
        vertex_map: Vec<usize>,
        arrow_map: Vec<Image>,
    ) -> Result<Self> {
        let m = Self::unchecked(source, target, vertex_map, arrow_map);
        m.validate().map_err(Error::InvalidMorphism)?;
        Ok(m)
    }

    pub fn unchecked(
        source: Arc<OrderedDirectedGraph>,
        target: Arc<OrderedDirectedGraph>,
        vertex_map: Vec<usize>,
        arrow_map: Vec<Image>,
    ) -> Self {
        OrderedMinorMorphism {
            source,
            target,
            vertex_map,
            arrow_map,
        }
    }

    pub fn identity(d: Arc<OrderedDirectedGraph>) -> Self {
        OrderedMinorMorphism {
            vertex_map: (0..d.num_vertices()).collect(),
            arrow_map: (0..d.num_arrows()).map(Image::Arrow).collect(),
            source: d.clone(),
            target: d,
        }
    }

    pub fn source(&self) -> &Arc<OrderedDirectedGraph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<OrderedDirectedGraph> {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn arrow_map(&self) -> &[Image] {
        &self.arrow_map
    }

    pub fn arrow(&self, a: usize) -> Image {
        self.arrow_map[a]
    }

    /// The induced injection on arrows: `lifts()[b]` is the source arrow
    /// sent to target arrow `b`.
    pub fn lifts(&self) -> Vec<usize> {
        let mut lift = vec![usize::MAX; self.target.num_arrows()];
        for (a, &img) in self.arrow_map.iter().enumerate() {
            if let Image::Arrow(b) = img {
                lift[b] = a;
            }
        }
        lift
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let (d, t) = (&*self.source, &*self.target);
        let fail = |axiom, witness: String, detail: &str| Err(Violation::new(axiom, witness, detail));
        if self.vertex_map.len() != d.num_vertices() || self.arrow_map.len() != d.num_arrows() {
            return fail(Axiom::Shape, "map".into(), "length mismatch");
        }
        if let Some(v) = self.vertex_map.iter().position(|&w| w >= t.num_vertices()) {
            return fail(Axiom::Shape, format!("vertex {v}"), "image out of range");
        }
        for (a, &img) in self.arrow_map.iter().enumerate() {
            let bad = match img {
                Image::Vertex(w) => w >= t.num_vertices(),
                Image::Arrow(b) => b >= t.num_arrows(),
                Image::Deleted => false,
            };
            if bad {
                return fail(Axiom::Shape, format!("arrow {a}"), "image out of range");
            }
        }
        let mut count = vec![0usize; t.num_arrows()];
        for &img in &self.arrow_map {
            if let Image::Arrow(b) = img {
                count[b] += 1;
            }
        }
        if let Some(b) = count.iter().position(|&c| c != 1) {
            return fail(Axiom::UniqueLift, format!("arrow {b}"), "needs exactly one preimage arrow");
        }
        for (a, &img) in self.arrow_map.iter().enumerate() {
            let (hv, tv) = (self.vertex_map[d.head(a)], self.vertex_map[d.tail(a)]);
            match img {
                Image::Arrow(b) if hv != t.head(b) || tv != t.tail(b) => {
                    return fail(Axiom::KeptIncidence, format!("arrow {a}"), "endpoints not preserved");
                }
                Image::Vertex(w) if hv != w || tv != w => {
                    return fail(Axiom::ContractedIncidence, format!("arrow {a}"), "endpoints not collapsed");
                }
                _ => {}
            }
        }
        let mut uf = UnionFind::new(d.num_vertices());
        let mut contracted = vec![0usize; t.num_vertices()];
        let mut preimage = vec![0usize; t.num_vertices()];
        for &w in &self.vertex_map {
            preimage[w] += 1;
        }
        for (a, &img) in self.arrow_map.iter().enumerate() {
            if let Image::Vertex(w) = img {
                contracted[w] += 1;
                if !uf.union(d.head(a), d.tail(a)) {
                    return fail(Axiom::TreePreimage, format!("vertex {w}"), "contracted arrows contain a cycle");
                }
            }
        }
        if let Some(w) = (0..t.num_vertices()).find(|&w| preimage[w] == 0 || contracted[w] + 1 != preimage[w]) {
            return fail(Axiom::TreePreimage, format!("vertex {w}"), "preimage is not a tree");
        }
        let lift = self.lifts();
        if let Some(b) = (1..lift.len()).find(|&b| lift[b - 1] > lift[b]) {
            return fail(Axiom::OrderPreserving, format!("arrow {b}"), "lifts out of order");
        }
        Ok(())
    }

    /// The same assignment on underlying graphs: arrow `a` becomes arrows
    /// `2a` and `2a + 1`.
    pub fn forget(&self) -> MinorMorphism {
        let mut arrow_map = Vec::with_capacity(2 * self.arrow_map.len());
        for &img in &self.arrow_map {
            match img {
                Image::Arrow(b) => {
                    arrow_map.push(Image::Arrow(2 * b));
                    arrow_map.push(Image::Arrow(2 * b + 1));
                }
                other => {
                    arrow_map.push(other);
                    arrow_map.push(other);
                }
            }
        }
        MinorMorphism::unchecked(
            Arc::new(self.source.underlying()),
            Arc::new(self.target.underlying()),
            self.vertex_map.clone(),
            arrow_map,
        )
    }
}

/// `psi ∘ phi` for `phi: D -> D'`, `psi: D' -> D''`.
pub fn compose(phi: &OrderedMinorMorphism, psi: &OrderedMinorMorphism) -> Result<OrderedMinorMorphism> {
    if *phi.target != *psi.source {
        return Err(Error::ObjectMismatch(
            "target of the first morphism is not the source of the second".into(),
        ));
    }
    Ok(OrderedMinorMorphism {
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

/// All order-preserving minor morphisms `d -> e`. Once the contracted
/// forest and the kept arrows are chosen, the arrow bijection is forced by
/// the orders, and so is the vertex map.
pub fn od_hom_set(d: &Arc<OrderedDirectedGraph>, e: &Arc<OrderedDirectedGraph>) -> Result<Vec<OrderedMinorMorphism>> {
    d.ensure_object()?;
    e.ensure_object()?;
    let (n, m) = (d.num_vertices(), e.num_vertices());
    let mut out = Vec::new();
    if m > n || e.num_arrows() + (n - m) > d.num_arrows() {
        return Ok(out);
    }
    let non_loops: Vec<usize> = (0..d.num_arrows()).filter(|&a| d.head(a) != d.tail(a)).collect();
    for forest in non_loops.iter().copied().combinations(n - m) {
        let mut uf = UnionFind::new(n);
        if !forest.iter().all(|&a| uf.union(d.head(a), d.tail(a))) {
            continue;
        }
        let mut in_forest = vec![false; d.num_arrows()];
        for &a in &forest {
            in_forest[a] = true;
        }
        let rest: Vec<usize> = (0..d.num_arrows()).filter(|&a| !in_forest[a]).collect();
        for kept in rest.iter().copied().combinations(e.num_arrows()) {
            if let Some(phi) = assemble(d, e, &mut uf, &forest, &kept) {
                out.push(phi);
            }
        }
    }
    Ok(out)
}

fn assemble(
    d: &Arc<OrderedDirectedGraph>,
    e: &Arc<OrderedDirectedGraph>,
    uf: &mut UnionFind,
    forest: &[usize],
    kept: &[usize],
) -> Option<OrderedMinorMorphism> {
    let n = d.num_vertices();
    let mut beta = vec![usize::MAX; n];
    let mut bind = |root: usize, w: usize| {
        if beta[root] == usize::MAX {
            beta[root] = w;
            true
        } else {
            beta[root] == w
        }
    };
    for (b, &a) in kept.iter().enumerate() {
        let (rh, rt) = (uf.find(d.head(a)), uf.find(d.tail(a)));
        if !bind(rh, e.head(b)) || !bind(rt, e.tail(b)) {
            return None;
        }
    }
    if e.num_arrows() == 0 {
        // the target is a single vertex and the forest spans everything
        beta[uf.find(0)] = 0;
    }
    let vertex_map: Vec<usize> = (0..n).map(|v| beta[uf.find(v)]).collect();
    let mut hit = vec![false; e.num_vertices()];
    for &w in &vertex_map {
        hit[w] = true;
    }
    let roots: std::collections::BTreeSet<usize> = (0..n).map(|v| uf.find(v)).collect();
    if !hit.iter().all(|&x| x) || roots.len() != e.num_vertices() {
        return None;
    }
    let mut arrow_map = vec![Image::Deleted; d.num_arrows()];
    for &a in forest {
        arrow_map[a] = Image::Vertex(vertex_map[d.head(a)]);
    }
    for (b, &a) in kept.iter().enumerate() {
        arrow_map[a] = Image::Arrow(b);
    }
    let phi = OrderedMinorMorphism::unchecked(d.clone(), e.clone(), vertex_map, arrow_map);
    debug_assert!(phi.validate().is_ok());
    Some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::hom_set;

    fn od(n: usize, arrows: &[(usize, usize)]) -> Arc<OrderedDirectedGraph> {
        Arc::new(OrderedDirectedGraph::new(n, arrows).unwrap())
    }

    #[test]
    fn parallel_arrows_to_point() {
        let d = od(2, &[(1, 0), (1, 0)]);
        let p = od(1, &[]);
        assert_eq!(od_hom_set(&d, &p).unwrap().len(), 2);
    }

    #[test]
    fn forget_identity() {
        let d = od(2, &[(1, 0), (0, 0)]);
        let id = OrderedMinorMorphism::identity(d.clone());
        let f = id.forget();
        assert_eq!(f, MinorMorphism::identity(Arc::new(d.underlying())));
    }

    #[test]
    fn forgetting_is_injective_and_valid() {
        let d = od(3, &[(1, 0), (2, 1), (0, 2)]);
        let e = od(2, &[(1, 0)]);
        let homs = od_hom_set(&d, &e).unwrap();
        let plain = hom_set(&d.underlying(), &e.underlying()).unwrap();
        assert!(homs.len() <= plain.len());
        for (i, phi) in homs.iter().enumerate() {
            let f = phi.forget();
            assert!(f.validate().is_ok());
            assert!(plain.contains(&f));
            assert!(homs[i + 1..].iter().all(|psi| psi.forget() != f));
        }
    }

    #[test]
    fn order_violation_detected() {
        let d = od(1, &[(0, 0), (0, 0)]);
        let swap = OrderedMinorMorphism::unchecked(d.clone(), d.clone(), vec![0], vec![Image::Arrow(1), Image::Arrow(0)]);
        assert_eq!(swap.validate().unwrap_err().axiom, Axiom::OrderPreserving);
        assert_eq!(od_hom_set(&d, &d).unwrap().len(), 1);
    }
}
