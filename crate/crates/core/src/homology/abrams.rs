//! Discretized configuration spaces.
//!
//! After subdividing every edge into `max(n + 1, 3)` pieces, the unordered
//! configuration space of `n` points deformation retracts onto the cube
//! complex whose cells are sets of `n` pairwise disjoint closed cells (vertices
//! and edges) of the subdivision. Its cellular homology is computed here
//! directly, independently of the Świątkowski complex.

use std::collections::HashMap;

use itertools::Itertools;

use super::{homology, HomologyGroup, SparseMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::util::binomial;

pub const DEFAULT_CELL_LIMIT: u128 = 2_000_000;

pub fn abrams_oracle(g: &Graph, n: usize, i: usize) -> Result<HomologyGroup> {
    abrams_oracle_with_limit(g, n, i, DEFAULT_CELL_LIMIT)
}

pub fn abrams_oracle_with_limit(g: &Graph, n: usize, i: usize, cell_limit: u128) -> Result<HomologyGroup> {
    let s = Subdivision::new(g, n.max(2) + 1);
    let below = if i == 0 {
        SparseMatrix::zeros(0, s.cells(n, 0, cell_limit)?.len())
    } else {
        s.boundary(n, i, cell_limit)?
    };
    let above = s.boundary(n, i + 1, cell_limit)?;
    homology(&below, &above)
}

struct Subdivision {
    num_vertices: usize,
    /// `(head, tail)` of each edge of the subdivided graph.
    edges: Vec<(usize, usize)>,
}

/// A cube: edges of the subdivision (ascending) and vertices (ascending).
type Cell = (Vec<usize>, Vec<usize>);

impl Subdivision {
    fn new(g: &Graph, pieces: usize) -> Self {
        let mut next = g.num_vertices();
        let mut edges = Vec::new();
        for e in 0..g.num_edges() {
            let (h, t) = g.endpoints(e);
            let mut prev = t;
            for _ in 0..pieces - 1 {
                edges.push((next, prev));
                prev = next;
                next += 1;
            }
            edges.push((h, prev));
        }
        Subdivision {
            num_vertices: next,
            edges,
        }
    }

    /// Cells with `dim` edge factors in the `n`-point complex.
    fn cells(&self, n: usize, dim: usize, limit: u128) -> Result<Vec<Cell>> {
        if dim > n {
            return Ok(Vec::new());
        }
        let bound = binomial(self.edges.len() as u64, dim as u64)
            .saturating_mul(binomial(self.num_vertices as u64, (n - dim) as u64));
        if bound > limit {
            return Err(Error::ResourceLimit {
                what: format!("{n}-point cube complex, dimension {dim}"),
                size: bound,
                limit,
            });
        }
        let mut out = Vec::new();
        for es in (0..self.edges.len()).combinations(dim) {
            let mut covered = vec![false; self.num_vertices];
            let disjoint = es.iter().all(|&e| {
                let (h, t) = self.edges[e];
                !std::mem::replace(&mut covered[h], true) && !std::mem::replace(&mut covered[t], true)
            });
            if !disjoint {
                continue;
            }
            let free: Vec<usize> = (0..self.num_vertices).filter(|&v| !covered[v]).collect();
            for vs in free.into_iter().combinations(n - dim) {
                out.push((es.clone(), vs));
            }
        }
        Ok(out)
    }

    /// Cellular boundary from `dim`-cells to `(dim - 1)`-cells: the face
    /// replacing the `j`-th edge by its head minus the face replacing it by
    /// its tail, with sign `(-1)^j`.
    fn boundary(&self, n: usize, dim: usize, limit: u128) -> Result<SparseMatrix> {
        let lower = self.cells(n, dim - 1, limit)?;
        let upper = self.cells(n, dim, limit)?;
        let index: HashMap<&Cell, usize> = lower.iter().enumerate().map(|(k, c)| (c, k)).collect();
        let mut columns = Vec::with_capacity(upper.len());
        for (es, vs) in &upper {
            let mut col = Vec::with_capacity(2 * es.len());
            for (j, &e) in es.iter().enumerate() {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = es.iter().copied().filter(|&x| x != e).collect();
                let (h, t) = self.edges[e];
                for (end, s) in [(h, sign), (t, -sign)] {
                    let mut face_vs = vs.clone();
                    let pos = face_vs.binary_search(&end).unwrap_err();
                    face_vs.insert(pos, end);
                    let face = (rest.clone(), face_vs);
                    col.push((index[&face], s));
                }
            }
            columns.push(col);
        }
        SparseMatrix::from_columns(lower.len(), columns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builders::*;

    #[test]
    fn circle_two_points() {
        assert_eq!(abrams_oracle(&cycle(3), 2, 1).unwrap(), HomologyGroup::free(1));
        assert_eq!(abrams_oracle(&cycle(3), 2, 0).unwrap(), HomologyGroup::free(1));
    }

    #[test]
    fn path_two_points() {
        assert!(abrams_oracle(&path(2), 2, 1).unwrap().is_zero());
    }

    #[test]
    fn tripod_two_points() {
        assert_eq!(abrams_oracle(&star(3), 2, 1).unwrap(), HomologyGroup::free(1));
    }

    #[test]
    fn point_configurations() {
        let p = point();
        assert_eq!(abrams_oracle(&p, 0, 0).unwrap(), HomologyGroup::free(1));
        assert_eq!(abrams_oracle(&p, 1, 0).unwrap(), HomologyGroup::free(1));
        assert!(abrams_oracle(&p, 2, 0).unwrap().is_zero());
    }

    #[test]
    fn respects_cell_limit() {
        assert!(matches!(
            abrams_oracle_with_limit(&complete(5), 3, 1, 1000),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
