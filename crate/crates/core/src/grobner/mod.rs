//! Quartets for the pair (ordered directed graphs, arrow functor) and the
//! principal projective modules they index.
//!
//! A quartet `(d, d', φ, m)` has `φ: d' -> d` an ordered minor morphism (a
//! morphism `d -> d'` in the opposite category) and exponents `m` on the
//! arrows of `d'`. Morphisms `ψ: d'' -> d'` push quartets forward by
//! composition, transporting exponents along the arrow injection `ψ*`.

mod element;
pub mod json;

use std::cmp::Ordering;
use std::sync::Arc;

pub use element::{PPElement, Term};

use crate::error::{Error, Result};
use crate::graph::OrderedDirectedGraph;
use crate::minor::ordered::compose;
use crate::minor::{od_hom_set, Image, OrderedMinorMorphism};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quartet {
    phi: OrderedMinorMorphism,
    m: Vec<u32>,
}

impl Quartet {
    /// `phi` runs from `d'` to `d`; `m` has one exponent per arrow of `d'`.
    pub fn new(phi: OrderedMinorMorphism, m: Vec<u32>) -> Result<Self> {
        phi.validate().map_err(Error::InvalidMorphism)?;
        if m.len() != phi.source().num_arrows() {
            return Err(Error::Dimension(format!(
                "{} exponents for {} arrows",
                m.len(),
                phi.source().num_arrows()
            )));
        }
        Ok(Quartet { phi, m })
    }

    pub fn d(&self) -> &Arc<OrderedDirectedGraph> {
        self.phi.target()
    }

    pub fn d_prime(&self) -> &Arc<OrderedDirectedGraph> {
        self.phi.source()
    }

    pub fn phi(&self) -> &OrderedMinorMorphism {
        &self.phi
    }

    pub fn exponents(&self) -> &[u32] {
        &self.m
    }

    pub fn degree(&self) -> u64 {
        self.m.iter().map(|&x| u64::from(x)).sum()
    }

    /// `μ + n`.
    pub fn add(&self, n: &[u32]) -> Result<Quartet> {
        if n.len() != self.m.len() {
            return Err(Error::Dimension(format!("{} exponents for {} arrows", n.len(), self.m.len())));
        }
        Ok(Quartet {
            phi: self.phi.clone(),
            m: self.m.iter().zip(n).map(|(a, b)| a + b).collect(),
        })
    }

    /// `ψ(μ)` for `ψ: d'' -> d'`.
    pub fn push(&self, psi: &OrderedMinorMorphism) -> Result<Quartet> {
        let phi = compose(psi, &self.phi)?;
        Ok(Quartet {
            m: push_exponents(psi, &self.m),
            phi,
        })
    }

    /// Some `(ψ, n)` with `other = ψ(self) + n`, if `self <= other`.
    pub fn leq_witness(&self, other: &Quartet) -> Result<Option<(OrderedMinorMorphism, Vec<u32>)>> {
        Ok(self.witnesses(other, true)?.pop())
    }

    /// Every `(ψ, n)` with `other = ψ(self) + n`.
    pub fn leq_witnesses(&self, other: &Quartet) -> Result<Vec<(OrderedMinorMorphism, Vec<u32>)>> {
        self.witnesses(other, false)
    }

    fn witnesses(&self, other: &Quartet, first_only: bool) -> Result<Vec<(OrderedMinorMorphism, Vec<u32>)>> {
        if **self.d() != **other.d() {
            return Err(Error::ObjectMismatch("quartets have different first objects".into()));
        }
        let (big, small) = (other.d_prime(), self.d_prime());
        // a minor morphism never gains arrows or vertices
        if big.num_arrows() < small.num_arrows() || big.num_vertices() < small.num_vertices() || other.degree() < self.degree() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for psi in od_hom_set(big, small)? {
            if compose(&psi, &self.phi)? != other.phi {
                continue;
            }
            let pushed = push_exponents(&psi, &self.m);
            if let Some(n) = other
                .m
                .iter()
                .zip(&pushed)
                .map(|(a, b)| a.checked_sub(*b))
                .collect::<Option<Vec<u32>>>()
            {
                out.push((psi, n));
                if first_only {
                    break;
                }
            }
        }
        Ok(out)
    }

    pub fn leq(&self, other: &Quartet) -> Result<bool> {
        Ok(self.leq_witness(other)?.is_some())
    }

    pub fn equivalent(&self, other: &Quartet) -> Result<bool> {
        Ok(self.leq(other)? && other.leq(self)?)
    }

    /// The representative of this quartet's class whose `d'` has vertices
    /// numbered by first appearance along the ordered arrows. Equivalent
    /// quartets have equal representatives.
    pub fn canonical(&self) -> Quartet {
        let dp = self.d_prime();
        let mut name = vec![usize::MAX; dp.num_vertices()];
        let mut next = 0;
        for (h, t) in dp.arrows() {
            for v in [h, t] {
                if name[v] == usize::MAX {
                    name[v] = next;
                    next += 1;
                }
            }
        }
        for slot in name.iter_mut().filter(|x| **x == usize::MAX) {
            *slot = next;
            next += 1;
        }
        let arrows: Vec<_> = dp.arrows().map(|(h, t)| (name[h], name[t])).collect();
        let relabeled = Arc::new(OrderedDirectedGraph::new(dp.num_vertices(), &arrows).expect("relabeling is valid"));
        let mut vertex_map = vec![0; dp.num_vertices()];
        for (v, &w) in self.phi.vertex_map().iter().enumerate() {
            vertex_map[name[v]] = w;
        }
        let phi = OrderedMinorMorphism::unchecked(relabeled, self.d().clone(), vertex_map, self.phi.arrow_map().to_vec());
        Quartet { phi, m: self.m.clone() }
    }

    /// Arrows of `d'` sent to `⋆`, as an indicator vector.
    fn deleted(&self) -> Vec<bool> {
        self.phi.arrow_map().iter().map(|&img| img == Image::Deleted).collect()
    }
}

fn push_exponents(psi: &OrderedMinorMorphism, m: &[u32]) -> Vec<u32> {
    let mut out = vec![0; psi.source().num_arrows()];
    for (a, &lift) in psi.lifts().iter().enumerate() {
        out[lift] = m[a];
    }
    out
}

/// Orders ordered directed graphs by arrow count, vertex count, then
/// canonical encoding.
pub fn compare_objects(a: &OrderedDirectedGraph, b: &OrderedDirectedGraph) -> Ordering {
    (a.num_arrows(), a.num_vertices(), a.canonical_form()).cmp(&(b.num_arrows(), b.num_vertices(), b.canonical_form()))
}

/// A well-order on quartet classes with a common first object, compatible
/// with pushing forward and adding exponents.
///
/// Quartets are compared by the class of `d'`, then, through the unique
/// order-preserving isomorphism of the `d'`s (which fixes arrow ranks), by
/// the lifts `φ*(a)` of the arrows of `d` in order, then by which arrows of
/// `d'` are deleted rather than contracted, then by exponents
/// lexicographically. The deletion step separates quartets whose lifts agree
/// but whose remaining arrows are split differently between deletion and
/// contraction.
pub fn admissible_compare(a: &Quartet, b: &Quartet) -> Result<Ordering> {
    if **a.d() != **b.d() {
        return Err(Error::ObjectMismatch("quartets have different first objects".into()));
    }
    let by_object = compare_objects(a.d_prime(), b.d_prime());
    if by_object != Ordering::Equal {
        return Ok(by_object);
    }
    debug_assert!(a.d_prime().isomorphism_to(b.d_prime()).is_some());
    Ok(a.phi
        .lifts()
        .cmp(&b.phi.lifts())
        .then_with(|| a.deleted().cmp(&b.deleted()))
        .then_with(|| a.m.cmp(&b.m)))
}
