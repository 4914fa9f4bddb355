//! JSON form of graph minor morphisms: vertex and arrow images keyed by
//! label, with `"*"` for deleted arrows.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Image, MinorMorphism};
use crate::error::{Error, Result};
use crate::graph::format::GraphJson;
use crate::graph::Graph;

pub const DELETED: &str = "*";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: GraphJson,
    pub target: GraphJson,
    pub vertex_map: BTreeMap<String, String>,
    pub arrow_map: BTreeMap<String, String>,
}

impl From<&MinorMorphism> for MorphismJson {
    fn from(m: &MinorMorphism) -> Self {
        let (g, h) = (m.source(), m.target());
        MorphismJson {
            source: GraphJson::from(&**g),
            target: GraphJson::from(&**h),
            vertex_map: (0..g.num_vertices())
                .map(|v| (g.vertex_label(v).to_string(), h.vertex_label(m.vertex(v)).to_string()))
                .collect(),
            arrow_map: (0..g.num_arrows())
                .map(|a| {
                    let img = match m.arrow(a) {
                        Image::Vertex(w) => h.vertex_label(w).to_string(),
                        Image::Arrow(b) => h.arrow_label(b),
                        Image::Deleted => DELETED.to_string(),
                    };
                    (g.arrow_label(a), img)
                })
                .collect(),
        }
    }
}

impl MorphismJson {
    /// Resolves labels into an assignment without validating the axioms.
    pub fn to_morphism_unchecked(&self) -> Result<MinorMorphism> {
        let g = Arc::new(Graph::try_from(&self.source)?);
        let h = Arc::new(Graph::try_from(&self.target)?);
        self.resolve(g, h)
    }

    /// Resolves against existing objects, so that morphisms read from
    /// separate files can share them.
    pub fn resolve(&self, g: Arc<Graph>, h: Arc<Graph>) -> Result<MinorMorphism> {
        let g_vertices = label_index(g.vertex_labels().iter().cloned());
        let g_arrows = label_index((0..g.num_arrows()).map(|a| g.arrow_label(a)));
        let h_vertices = label_index(h.vertex_labels().iter().cloned());
        let h_arrows = label_index((0..h.num_arrows()).map(|a| h.arrow_label(a)));

        let mut vertex_map = vec![usize::MAX; g.num_vertices()];
        for (v, w) in &self.vertex_map {
            let v = *g_vertices
                .get(v)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown source vertex `{v}`")))?;
            vertex_map[v] = *h_vertices
                .get(w)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown target vertex `{w}`")))?;
        }
        if let Some(v) = vertex_map.iter().position(|&w| w == usize::MAX) {
            return Err(Error::InvalidGraph(format!("vertex `{}` has no image", g.vertex_label(v))));
        }

        let mut arrow_map = vec![None; g.num_arrows()];
        for (a, img) in &self.arrow_map {
            let a = *g_arrows
                .get(a)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown source arrow `{a}`")))?;
            arrow_map[a] = Some(if img == DELETED {
                Image::Deleted
            } else if let Some(&b) = h_arrows.get(img) {
                Image::Arrow(b)
            } else if let Some(&w) = h_vertices.get(img) {
                Image::Vertex(w)
            } else {
                return Err(Error::InvalidGraph(format!("unknown image `{img}`")));
            });
        }
        let arrow_map = arrow_map
            .into_iter()
            .enumerate()
            .map(|(a, img)| img.ok_or_else(|| Error::InvalidGraph(format!("arrow `{}` has no image", g.arrow_label(a)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(MinorMorphism::unchecked(g, h, vertex_map, arrow_map))
    }
}

fn label_index(labels: impl Iterator<Item = String>) -> HashMap<String, usize> {
    labels.enumerate().map(|(i, l)| (l, i)).collect()
}
