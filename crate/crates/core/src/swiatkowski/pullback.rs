//! Chain maps induced by minor morphisms.
//!
//! For `φ: G -> G'` the map `φ*: S̃(G') -> S̃(G)` renames variables along the
//! edge injection and sends `∅` at `v'` to `∅` on the whole tree
//! `T = φ⁻¹(v')`. An arrow `a'` at `v'` lifts to `ã` at some `u ∈ T`; it is
//! sent to the telescoping sum `ρ(a')` of local differences along the tree
//! path from `u` to the root `r`, ending with the base arrow at `r`, so that
//! `∂ρ(a') = (x_[ã] - x_[b]) ∅`. Generators `b' - a'` go to `ρ(b') - ρ(a')`.

use std::collections::{BTreeMap, VecDeque};

use super::{BasisElement, SwiatkowskiComplex};
use crate::error::{Error, Result};
use crate::homology::SparseMatrix;
use crate::minor::{Image, MinorMorphism};
use crate::util::sort_sign;

/// Root of each contracted tree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RootChoice {
    #[default]
    MinVertex,
    MaxVertex,
}

/// Matrix of `φ*: S̃_{i,n}(G') -> S̃_{i,n}(G)`; `source` is built on `G`,
/// `target` on `G'`.
pub fn pullback(
    phi: &MinorMorphism,
    source: &SwiatkowskiComplex,
    target: &SwiatkowskiComplex,
    i: usize,
    n: usize,
) -> Result<SparseMatrix> {
    pullback_with_root(phi, source, target, i, n, RootChoice::MinVertex)
}

pub fn pullback_with_root(
    phi: &MinorMorphism,
    source: &SwiatkowskiComplex,
    target: &SwiatkowskiComplex,
    i: usize,
    n: usize,
    root: RootChoice,
) -> Result<SparseMatrix> {
    phi.validate().map_err(Error::InvalidMorphism)?;
    if **source.graph() != **phi.source() || **target.graph() != **phi.target() {
        return Err(Error::ObjectMismatch("complexes are not built on the morphism's graphs".into()));
    }
    let images = LocalImages::new(phi, source, target, root);
    let (rows, cols) = (source.basis(i, n)?, target.basis(i, n)?);
    let edge_map = phi.edge_injection();
    let num_edges = source.graph().num_edges();

    let mut columns = Vec::with_capacity(cols.len());
    for b in cols.elements() {
        let mut monomial = vec![0u32; num_edges];
        for (e, &x) in b.monomial.iter().enumerate() {
            monomial[edge_map[e]] = x;
        }
        let factors: Vec<&[(usize, usize, i64)]> = b
            .distinguished
            .iter()
            .map(|&(v, a)| images.generator(v, a))
            .collect();
        let mut col: BTreeMap<usize, i64> = BTreeMap::new();
        let mut pick = vec![0usize; factors.len()];
        if factors.iter().all(|f| !f.is_empty()) {
            loop {
                let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(pick.len());
                let mut coef = 1i64;
                for (f, &k) in factors.iter().zip(&pick) {
                    let (w, arrow, c) = f[k];
                    chosen.push((w, arrow));
                    coef *= c;
                }
                let keys: Vec<usize> = chosen.iter().map(|p| p.0).collect();
                coef *= sort_sign(&keys);
                chosen.sort_unstable();
                let elem = BasisElement {
                    distinguished: chosen,
                    monomial: monomial.clone(),
                };
                let row = rows.position(&elem).expect("pulled-back term is a basis element");
                *col.entry(row).or_insert(0) += coef;
                if !advance(&mut pick, &factors) {
                    break;
                }
            }
        }
        columns.push(col.into_iter().collect());
    }
    SparseMatrix::from_columns(rows.len(), columns)
}

fn advance(pick: &mut [usize], factors: &[&[(usize, usize, i64)]]) -> bool {
    for k in (0..pick.len()).rev() {
        pick[k] += 1;
        if pick[k] < factors[k].len() {
            return true;
        }
        pick[k] = 0;
    }
    false
}

/// Images of local generators: for each target vertex and generator arrow,
/// a list of `(vertex, generator arrow, coefficient)` in the source.
struct LocalImages {
    table: Vec<BTreeMap<usize, Vec<(usize, usize, i64)>>>,
}

impl LocalImages {
    fn new(phi: &MinorMorphism, source: &SwiatkowskiComplex, target: &SwiatkowskiComplex, root: RootChoice) -> Self {
        let g = source.graph();
        let h = target.graph();
        let lift = phi.arrow_lifts();

        // contracted-edge adjacency within each tree
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.num_vertices()];
        for a in 0..g.num_arrows() {
            if let Image::Vertex(_) = phi.arrow(a) {
                adj[g.tail(a)].push(a);
            }
        }
        let mut trees: Vec<Vec<usize>> = vec![Vec::new(); h.num_vertices()];
        for v in 0..g.num_vertices() {
            trees[phi.vertex(v)].push(v);
        }
        // toward[u]: arrow with head u on the tree edge from u to its parent
        let mut toward = vec![usize::MAX; g.num_vertices()];
        let mut roots = vec![usize::MAX; h.num_vertices()];
        for (w, tree) in trees.iter().enumerate() {
            let r = match root {
                RootChoice::MinVertex => tree[0],
                RootChoice::MaxVertex => *tree.last().expect("preimages are nonempty"),
            };
            roots[w] = r;
            let mut seen = vec![false; g.num_vertices()];
            seen[r] = true;
            let mut queue = VecDeque::from([r]);
            while let Some(p) = queue.pop_front() {
                // arrows leaving p along contracted edges: tail p, head child
                for &a in &adj[p] {
                    let child = g.head(a);
                    if !seen[child] {
                        seen[child] = true;
                        toward[child] = a;
                        queue.push_back(child);
                    }
                }
            }
        }

        let rho = |a_prime: usize| -> BTreeMap<(usize, usize), i64> {
            let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
            let mut cur = lift[a_prime];
            let mut u = g.head(cur);
            let r = roots[h.head(a_prime)];
            loop {
                let next = if u == r {
                    source.local(r).base_arrow().expect("root has an arrow")
                } else {
                    toward[u]
                };
                // (cur - next) at u = (base - next) - (base - cur)
                let gens = source.local(u).generators();
                if gens.contains(&next) {
                    *acc.entry((u, next)).or_insert(0) += 1;
                }
                if gens.contains(&cur) {
                    *acc.entry((u, cur)).or_insert(0) -= 1;
                }
                if u == r {
                    break;
                }
                cur = g.sigma(toward[u]);
                u = g.head(cur);
            }
            acc
        };

        let mut table = vec![BTreeMap::new(); h.num_vertices()];
        for (w, entry) in table.iter_mut().enumerate() {
            let local = target.local(w);
            let Some(base) = local.base_arrow() else { continue };
            let rho_base = rho(base);
            for &a in local.generators() {
                let mut img = rho_base.clone();
                for (key, c) in rho(a) {
                    *img.entry(key).or_insert(0) -= c;
                }
                let list: Vec<(usize, usize, i64)> = img
                    .into_iter()
                    .filter(|&(_, c)| c != 0)
                    .map(|((u, x), c)| (u, x, c))
                    .collect();
                entry.insert(a, list);
            }
        }
        LocalImages { table }
    }

    fn generator(&self, v: usize, a: usize) -> &[(usize, usize, i64)] {
        &self.table[v][&a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builders::*;
    use crate::minor::hom_set;
    use crate::Graph;

    fn chain_map_holds(g: &Graph, h: &Graph, i_max: usize, n_max: usize) {
        let cg = SwiatkowskiComplex::build(g, i_max, n_max).unwrap();
        let ch = SwiatkowskiComplex::build(h, i_max, n_max).unwrap();
        for phi in hom_set(g, h).unwrap() {
            for i in 1..=i_max {
                for n in 0..=n_max {
                    let top = pullback(&phi, &cg, &ch, i, n).unwrap();
                    let bottom = pullback(&phi, &cg, &ch, i - 1, n).unwrap();
                    let lhs = cg.differential(i, n).unwrap().mul(&top).unwrap();
                    let rhs = bottom.mul(ch.differential(i, n).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "chain map fails at ({i},{n})");
                }
            }
        }
    }

    #[test]
    fn identity_pulls_back_to_identity() {
        let g = lollipop();
        let cx = SwiatkowskiComplex::build(&g, 1, 2).unwrap();
        let id = MinorMorphism::identity(cx.graph().clone());
        for n in 0..=2 {
            for i in 0..=2 {
                let m = pullback(&id, &cx, &cx, i, n).unwrap();
                assert_eq!(m, SparseMatrix::identity(cx.rank(i, n).unwrap()));
            }
        }
    }

    #[test]
    fn cycle_three_onto_cycle_two() {
        chain_map_holds(&cycle(3), &cycle(2), 1, 3);
    }

    #[test]
    fn contraction_onto_rose() {
        chain_map_holds(&complete(4), &rose(2), 2, 3);
        chain_map_holds(&star(3), &path(2), 2, 3);
    }
}
