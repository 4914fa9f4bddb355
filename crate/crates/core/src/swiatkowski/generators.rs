//! Minimal generators of `S̃_{i,•}` coming from graphs with at most `2i` edges.

use std::sync::Arc;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::{pullback, SwiatkowskiComplex};
use crate::error::Result;
use crate::graph::{enumerate_connected_graphs, Graph};
use crate::homology::{HomologyGroup, SparseMatrix};
use crate::minor::hom_set;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorRow {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    /// Rank of `S̃_{i,i}(G)`.
    pub rank: usize,
    /// Rank of the span of pullbacks from proper minors.
    pub image_rank: usize,
    pub cokernel: HomologyGroup,
    /// Minimal number of generators of the cokernel.
    pub generators: usize,
}

/// For every class with at most `2i` edges, the cokernel of all pullbacks
/// `S̃_{i,i}(H) -> S̃_{i,i}(G)` along morphisms to graphs `H` with fewer
/// edges. In bidegree `(i, i)` there are no monomial multiples to add.
pub fn generator_search(i: usize) -> Result<Vec<GeneratorRow>> {
    let classes: Vec<Arc<Graph>> = enumerate_connected_graphs(2 * i).into_iter().map(Arc::new).collect();
    let complexes: Vec<SwiatkowskiComplex> = classes
        .par_iter()
        .map(|g| SwiatkowskiComplex::build_shared(g.clone(), i, i))
        .collect::<Result<_>>()?;
    classes
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let cx = &complexes[k];
            let dim = cx.rank(i, i)?;
            let mut columns = Vec::new();
            for (j, h) in classes.iter().enumerate() {
                if h.num_edges() >= g.num_edges() {
                    continue;
                }
                for phi in hom_set(g, h)? {
                    let m = pullback(&phi, cx, &complexes[j], i, i)?;
                    columns.extend((0..m.cols()).map(|c| m.column(c).to_vec()));
                }
            }
            let image = SparseMatrix::from_columns(dim, columns)?;
            let divisors = image.elementary_divisors();
            let cokernel = HomologyGroup {
                rank: dim - divisors.len(),
                torsion: divisors.into_iter().filter(|d| !d.is_one()).collect(),
            };
            Ok(GeneratorRow {
                graph: g.name().unwrap_or("?").to_string(),
                vertices: g.num_vertices(),
                edges: g.num_edges(),
                rank: dim,
                image_rank: image.rank(),
                generators: cokernel.rank + cokernel.torsion.len(),
                cokernel,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_generators() {
        let rows = generator_search(1).unwrap();
        assert_eq!(rows.len(), 7);
        let with: Vec<&str> = rows.iter().filter(|r| r.generators > 0).map(|r| r.graph.as_str()).collect();
        assert_eq!(with.len(), 5);
        for name in ["R1", "P2", "R2", "L", "C2"] {
            let row = rows.iter().find(|r| r.graph == name).unwrap();
            assert_eq!(row.generators, 1, "{name}");
        }
        for name in ["R2", "L", "C2"] {
            let row = rows.iter().find(|r| r.graph == name).unwrap();
            assert_eq!(row.rank - row.image_rank, 1, "{name}");
        }
    }
}
