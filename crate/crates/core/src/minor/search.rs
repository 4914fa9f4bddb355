//! Exhaustive Hom-set enumeration.
//!
//! A morphism `G -> H` is determined by its contracted edge set `C` (a forest
//! with `v(G) - v(H)` edges), a bijection from the components of `C` onto
//! the vertices of `H`, and a choice of lifted arrow for every arrow pair of
//! `H`; whatever remains is deleted. The search enumerates exactly these
//! triples, so each morphism appears once.

use std::ops::ControlFlow;
use std::sync::Arc;

use super::{Image, MinorMorphism};
use crate::error::Result;
use crate::graph::Graph;
use crate::util::UnionFind;

pub fn hom_set(g: &Graph, h: &Graph) -> Result<Vec<MinorMorphism>> {
    g.ensure_object()?;
    h.ensure_object()?;
    let mut out = Vec::new();
    let _ = visit_homs(&Arc::new(g.clone()), &Arc::new(h.clone()), |m| {
        out.push(m);
        ControlFlow::Continue(())
    });
    Ok(out)
}

pub fn hom_count(g: &Graph, h: &Graph) -> Result<usize> {
    g.ensure_object()?;
    h.ensure_object()?;
    let mut count = 0;
    let _ = visit_homs(&Arc::new(g.clone()), &Arc::new(h.clone()), |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    Ok(count)
}

/// Every endomorphism preserves the edge count, so all of them are invertible.
pub fn automorphisms(g: &Graph) -> Result<Vec<MinorMorphism>> {
    g.ensure_object()?;
    let shared = Arc::new(g.clone());
    let mut out = Vec::new();
    let _ = visit_homs(&shared, &shared, |m| {
        out.push(m);
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Whether `h` is isomorphic to a minor of `g`; false unless both are
/// nonempty and connected.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    if g.ensure_object().is_err() || h.ensure_object().is_err() {
        return false;
    }
    visit_homs(&Arc::new(g.clone()), &Arc::new(h.clone()), |_| ControlFlow::Break(())).is_break()
}

/// Calls `visit` on every morphism `g -> h` until it breaks.
pub fn visit_homs<F>(g: &Arc<Graph>, h: &Arc<Graph>, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(MinorMorphism) -> ControlFlow<()>,
{
    let (n, m) = (g.num_vertices(), h.num_vertices());
    if m > n || h.num_edges() > g.num_edges() || n - m > g.num_edges() - h.num_edges() {
        return ControlFlow::Continue(());
    }
    let candidates: Vec<usize> = (0..g.num_edges()).filter(|&e| !g.is_loop(e)).collect();
    let mut search = Search {
        g,
        h,
        h_mult: h.multiplicities(),
        visit: &mut visit,
    };
    let mut chosen = Vec::new();
    search.forests(&candidates, 0, n - m, &mut chosen)
}

struct Search<'a, F> {
    g: &'a Arc<Graph>,
    h: &'a Arc<Graph>,
    h_mult: Vec<Vec<u32>>,
    visit: &'a mut F,
}

impl<F> Search<'_, F>
where
    F: FnMut(MinorMorphism) -> ControlFlow<()>,
{
    fn forests(&mut self, candidates: &[usize], start: usize, left: usize, chosen: &mut Vec<usize>) -> ControlFlow<()> {
        if left == 0 {
            return self.with_forest(chosen);
        }
        for idx in start..candidates.len() {
            if candidates.len() - idx < left {
                break;
            }
            chosen.push(candidates[idx]);
            if self.acyclic(chosen) {
                self.forests(candidates, idx + 1, left - 1, chosen)?;
            }
            chosen.pop();
        }
        ControlFlow::Continue(())
    }

    fn acyclic(&self, edges: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.g.num_vertices());
        edges.iter().all(|&e| {
            let (a, b) = self.g.endpoints(e);
            uf.union(a, b)
        })
    }

    fn with_forest(&mut self, contracted: &[usize]) -> ControlFlow<()> {
        let g = self.g;
        let mut uf = UnionFind::new(g.num_vertices());
        for &e in contracted {
            let (a, b) = g.endpoints(e);
            uf.union(a, b);
        }
        let mut comp = vec![usize::MAX; g.num_vertices()];
        let mut count = 0;
        for v in 0..g.num_vertices() {
            let r = uf.find(v);
            if comp[r] == usize::MAX {
                comp[r] = count;
                count += 1;
            }
            comp[v] = comp[r];
        }
        let mut in_c = vec![false; g.num_edges()];
        for &e in contracted {
            in_c[e] = true;
        }
        let mut q_mult = vec![vec![0u32; count]; count];
        for e in (0..g.num_edges()).filter(|&e| !in_c[e]) {
            let (a, b) = g.endpoints(e);
            let (ca, cb) = (comp[a], comp[b]);
            q_mult[ca][cb] += 1;
            if ca != cb {
                q_mult[cb][ca] += 1;
            }
        }
        let mut beta = Vec::with_capacity(count);
        let mut used = vec![false; count];
        let ctx = Quotient {
            comp,
            in_c,
            q_mult,
        };
        self.bijections(&ctx, &mut beta, &mut used)
    }

    fn bijections(&mut self, q: &Quotient, beta: &mut Vec<usize>, used: &mut [bool]) -> ControlFlow<()> {
        let c = beta.len();
        if c == q.q_mult.len() {
            let mut arrow_map = vec![Image::Deleted; self.g.num_arrows()];
            let mut edge_used = q.in_c.clone();
            return self.assign(q, beta, 0, &mut arrow_map, &mut edge_used);
        }
        for w in 0..used.len() {
            if used[w] {
                continue;
            }
            let fits = q.q_mult[c][c] >= self.h_mult[w][w]
                && beta
                    .iter()
                    .enumerate()
                    .all(|(c2, &w2)| q.q_mult[c][c2] >= self.h_mult[w][w2]);
            if !fits {
                continue;
            }
            used[w] = true;
            beta.push(w);
            self.bijections(q, beta, used)?;
            beta.pop();
            used[w] = false;
        }
        ControlFlow::Continue(())
    }

    fn assign(
        &mut self,
        q: &Quotient,
        beta: &[usize],
        f: usize,
        arrow_map: &mut Vec<Image>,
        edge_used: &mut Vec<bool>,
    ) -> ControlFlow<()> {
        let (g, h) = (self.g, self.h);
        if f == h.num_edges() {
            return self.emit(q, beta, arrow_map);
        }
        let b = h.edges()[f].representative;
        let (hb, tb) = (h.head(b), h.tail(b));
        for a in 0..g.num_arrows() {
            let e = g.edge_of(a);
            if edge_used[e] || beta[q.comp[g.head(a)]] != hb || beta[q.comp[g.tail(a)]] != tb {
                continue;
            }
            edge_used[e] = true;
            arrow_map[a] = Image::Arrow(b);
            arrow_map[g.sigma(a)] = Image::Arrow(h.sigma(b));
            let flow = self.assign(q, beta, f + 1, arrow_map, edge_used);
            arrow_map[a] = Image::Deleted;
            arrow_map[g.sigma(a)] = Image::Deleted;
            edge_used[e] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn emit(&mut self, q: &Quotient, beta: &[usize], arrow_map: &[Image]) -> ControlFlow<()> {
        let g = self.g;
        let vertex_map: Vec<usize> = (0..g.num_vertices()).map(|v| beta[q.comp[v]]).collect();
        let mut arrow_map = arrow_map.to_vec();
        for e in (0..g.num_edges()).filter(|&e| q.in_c[e]) {
            let [a, b] = g.edges()[e].pair();
            let w = vertex_map[g.head(a)];
            arrow_map[a] = Image::Vertex(w);
            arrow_map[b] = Image::Vertex(w);
        }
        let m = MinorMorphism::unchecked(self.g.clone(), self.h.clone(), vertex_map, arrow_map);
        debug_assert!(m.validate().is_ok(), "{:?}", m.validate());
        (self.visit)(m)
    }
}

struct Quotient {
    comp: Vec<usize>,
    in_c: Vec<bool>,
    q_mult: Vec<Vec<u32>>,
}
