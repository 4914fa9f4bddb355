//! Reduced Świątkowski complexes.
//!
//! At a vertex `v` with incoming arrows `A_v = [b, a_1, ..., a_k]` (ascending,
//! loops contribute both arrows) the local module is free on `∅` and the
//! differences `b - a_j`. A basis element of `S̃_{i,n}(G)` picks `i` distinct
//! vertices, one local generator at each, and a monomial of degree `n - i`
//! in the edge variables. The differential sends `b - a` to
//! `(x_[b] - x_[a]) ∅`, with sign `(-1)^k` at the `k`-th distinguished vertex.

pub mod generators;
pub mod pullback;

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

pub use generators::{generator_search, GeneratorRow};
pub use pullback::{pullback, RootChoice};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{homology, HomologyGroup, SparseMatrix};
use crate::util::{monomial_count, monomials};

/// Default cap on the size of a single bidegree basis.
pub const DEFAULT_BASIS_LIMIT: u128 = 500_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalModule {
    pub vertex: usize,
    pub arrows: Vec<usize>,
}

impl LocalModule {
    pub fn base_arrow(&self) -> Option<usize> {
        self.arrows.first().copied()
    }

    /// Arrows `a` indexing the degree-one generators `base - a`.
    pub fn generators(&self) -> &[usize] {
        self.arrows.get(1..).unwrap_or(&[])
    }

    pub fn rank(&self) -> usize {
        1 + self.generators().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisElement {
    /// `(vertex, arrow)` pairs, ascending by vertex; each stands for the local
    /// generator `base_arrow(vertex) - arrow`.
    pub distinguished: Vec<(usize, usize)>,
    /// Exponent of each edge variable.
    pub monomial: Vec<u32>,
}

#[derive(Clone, Debug, Default)]
pub struct Basis {
    elements: Vec<BasisElement>,
    index: HashMap<BasisElement, usize>,
}

impl Basis {
    fn new(elements: Vec<BasisElement>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        Basis { elements, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn position(&self, b: &BasisElement) -> Option<usize> {
        self.index.get(b).copied()
    }
}

#[derive(Clone, Debug)]
pub struct SwiatkowskiComplex {
    graph: Arc<Graph>,
    i_max: usize,
    n_max: usize,
    locals: Vec<LocalModule>,
    /// `bases[i][n]` for `i <= i_max + 1`.
    bases: Vec<Vec<Basis>>,
    /// `differentials[i][n]: S̃_{i,n} -> S̃_{i-1,n}`; `i = 0` is the zero map.
    differentials: Vec<Vec<SparseMatrix>>,
}

impl SwiatkowskiComplex {
    /// Builds every bidegree `(i, n)` with `i <= i_max + 1` and `n <= n_max`,
    /// so that homology in degrees up to `i_max` is available.
    pub fn build(g: &Graph, i_max: usize, n_max: usize) -> Result<Self> {
        Self::build_with_limit(Arc::new(g.clone()), i_max, n_max, DEFAULT_BASIS_LIMIT)
    }

    pub fn build_shared(g: Arc<Graph>, i_max: usize, n_max: usize) -> Result<Self> {
        Self::build_with_limit(g, i_max, n_max, DEFAULT_BASIS_LIMIT)
    }

    pub fn build_with_limit(g: Arc<Graph>, i_max: usize, n_max: usize, limit: u128) -> Result<Self> {
        g.ensure_object()?;
        let top = i_max + 1;
        for i in 0..=top {
            for n in 0..=n_max {
                let size = rank_formula(&g, i, n);
                if size > limit {
                    return Err(Error::ResourceLimit {
                        what: format!("basis of S̃_({i},{n})"),
                        size,
                        limit,
                    });
                }
            }
        }
        let locals: Vec<LocalModule> = (0..g.num_vertices())
            .map(|v| LocalModule {
                vertex: v,
                arrows: g.arrows_at(v).to_vec(),
            })
            .collect();
        let bases: Vec<Vec<Basis>> = (0..=top)
            .map(|i| (0..=n_max).map(|n| Basis::new(enumerate_basis(&g, &locals, i, n))).collect())
            .collect();
        let mut cx = SwiatkowskiComplex {
            graph: g,
            i_max,
            n_max,
            locals,
            bases,
            differentials: Vec::new(),
        };
        cx.differentials = (0..=top)
            .map(|i| (0..=n_max).map(|n| cx.compute_differential(i, n)).collect())
            .collect();
        Ok(cx)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn local(&self, v: usize) -> &LocalModule {
        &self.locals[v]
    }

    fn check(&self, i: usize, n: usize) -> Result<()> {
        if i > self.i_max + 1 || n > self.n_max {
            return Err(Error::Dimension(format!(
                "bidegree ({i}, {n}) outside the built range i <= {}, n <= {}",
                self.i_max + 1,
                self.n_max
            )));
        }
        Ok(())
    }

    pub fn basis(&self, i: usize, n: usize) -> Result<&Basis> {
        self.check(i, n)?;
        Ok(&self.bases[i][n])
    }

    pub fn rank(&self, i: usize, n: usize) -> Result<usize> {
        Ok(self.basis(i, n)?.len())
    }

    /// `∂_{i,n}: S̃_{i,n} -> S̃_{i-1,n}`.
    pub fn differential(&self, i: usize, n: usize) -> Result<&SparseMatrix> {
        self.check(i, n)?;
        Ok(&self.differentials[i][n])
    }

    /// `H_i` of the weight-`n` strand, for `i <= i_max`.
    pub fn homology(&self, i: usize, n: usize) -> Result<HomologyGroup> {
        if i > self.i_max {
            return Err(Error::Dimension(format!("homology degree {i} exceeds i_max = {}", self.i_max)));
        }
        homology(self.differential(i, n)?, self.differential(i + 1, n)?)
    }

    /// Multiplication by `x_e` from `S̃_{i,n}` to `S̃_{i,n+1}`.
    pub fn stabilization(&self, e: usize, i: usize, n: usize) -> Result<SparseMatrix> {
        if e >= self.graph.num_edges() {
            return Err(Error::UnknownEdge(e));
        }
        let (src, dst) = (self.basis(i, n)?, self.basis(i, n + 1)?);
        let columns = src
            .elements()
            .iter()
            .map(|b| {
                let mut t = b.clone();
                t.monomial[e] += 1;
                vec![(dst.position(&t).expect("shifted monomial is a basis element"), 1)]
            })
            .collect();
        SparseMatrix::from_columns(dst.len(), columns)
    }

    fn compute_differential(&self, i: usize, n: usize) -> SparseMatrix {
        let src = &self.bases[i][n];
        if i == 0 {
            return SparseMatrix::zeros(0, src.len());
        }
        let dst = &self.bases[i - 1][n];
        let g = &self.graph;
        let columns = src
            .elements()
            .iter()
            .map(|b| {
                let mut col = Vec::with_capacity(2 * i);
                for (k, &(v, a)) in b.distinguished.iter().enumerate() {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let mut rest = b.distinguished.clone();
                    rest.remove(k);
                    let base = self.locals[v].base_arrow().expect("distinguished vertices have arrows");
                    for (arrow, s) in [(base, sign), (a, -sign)] {
                        let mut monomial = b.monomial.clone();
                        monomial[g.edge_of(arrow)] += 1;
                        let t = BasisElement {
                            distinguished: rest.clone(),
                            monomial,
                        };
                        col.push((dst.position(&t).expect("boundary term is a basis element"), s));
                    }
                }
                col
            })
            .collect();
        SparseMatrix::from_columns(dst.len(), columns).expect("boundary entries are small")
    }

    /// `∂_{i-1} ∘ ∂_i = 0` in every built bidegree.
    pub fn check_square_zero(&self) -> Result<()> {
        for i in 1..self.differentials.len() {
            for n in 0..=self.n_max {
                let prod = self.differentials[i - 1][n].mul(&self.differentials[i][n])?;
                if !prod.is_zero() {
                    return Err(Error::Composability);
                }
            }
        }
        Ok(())
    }
}

/// `Σ_{|W| = i} Π_{v ∈ W} (|A_v| - 1) · C(e + n - i - 1, n - i)`.
pub fn rank_formula(g: &Graph, i: usize, n: usize) -> u128 {
    if i > n {
        return 0;
    }
    let weights: Vec<u128> = (0..g.num_vertices())
        .map(|v| g.arrows_at(v).len().saturating_sub(1) as u128)
        .collect();
    // elementary symmetric polynomial e_i of the weights
    let mut e = vec![0u128; i + 1];
    e[0] = 1;
    for &w in &weights {
        for k in (1..=i).rev() {
            e[k] = e[k].saturating_add(e[k - 1].saturating_mul(w));
        }
    }
    e[i].saturating_mul(monomial_count(g.num_edges() as u64, (n - i) as u64))
}

/// Distinguished vertex sets in lexicographic order, generator choices in
/// arrow order, monomials in descending lexicographic order.
fn enumerate_basis(g: &Graph, locals: &[LocalModule], i: usize, n: usize) -> Vec<BasisElement> {
    if i > n || i > g.num_vertices() {
        return Vec::new();
    }
    let monos = monomials(g.num_edges(), (n - i) as u32);
    let mut out = Vec::new();
    for vs in (0..g.num_vertices()).combinations(i) {
        let choices: Vec<&[usize]> = vs.iter().map(|&v| locals[v].generators()).collect();
        for gens in product(&choices) {
            let distinguished: Vec<(usize, usize)> = vs.iter().copied().zip(gens).collect();
            for m in &monos {
                out.push(BasisElement {
                    distinguished: distinguished.clone(),
                    monomial: m.clone(),
                });
            }
        }
    }
    debug_assert_eq!(out.len() as u128, rank_formula(g, i, n));
    out
}

fn product(lists: &[&[usize]]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |&x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}
