//! JSON form of quartets. Arrow images are written `"a3"` (arrow of rank
//! 3), `"v1"` (contracted onto vertex 1) or `"*"` (deleted).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Quartet;
use crate::error::{Error, Result};
use crate::graph::directed::OrderedDirectedGraphJson;
use crate::graph::OrderedDirectedGraph;
use crate::minor::json::DELETED;
use crate::minor::{Image, OrderedMinorMorphism};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedMorphismJson {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuartetJson {
    pub d: OrderedDirectedGraphJson,
    pub d_prime: OrderedDirectedGraphJson,
    /// From `d_prime` to `d`.
    pub phi: OrderedMorphismJson,
    pub m: Vec<u32>,
}

pub fn image_to_string(img: Image) -> String {
    match img {
        Image::Vertex(w) => format!("v{w}"),
        Image::Arrow(b) => format!("a{b}"),
        Image::Deleted => DELETED.to_string(),
    }
}

pub fn image_from_str(s: &str) -> Result<Image> {
    let bad = || Error::InvalidGraph(format!("bad arrow image `{s}`"));
    if s == DELETED {
        return Ok(Image::Deleted);
    }
    let (kind, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(k, _)| k));
    let index: usize = rest.parse().map_err(|_| bad())?;
    match kind {
        "v" => Ok(Image::Vertex(index)),
        "a" => Ok(Image::Arrow(index)),
        _ => Err(bad()),
    }
}

impl From<&OrderedMinorMorphism> for OrderedMorphismJson {
    fn from(m: &OrderedMinorMorphism) -> Self {
        OrderedMorphismJson {
            vertex_map: m.vertex_map().to_vec(),
            arrow_map: m.arrow_map().iter().map(|&img| image_to_string(img)).collect(),
        }
    }
}

impl OrderedMorphismJson {
    pub fn resolve(&self, source: Arc<OrderedDirectedGraph>, target: Arc<OrderedDirectedGraph>) -> Result<OrderedMinorMorphism> {
        let arrow_map = self
            .arrow_map
            .iter()
            .map(|s| image_from_str(s))
            .collect::<Result<Vec<_>>>()?;
        OrderedMinorMorphism::new(source, target, self.vertex_map.clone(), arrow_map)
    }
}

impl From<&Quartet> for QuartetJson {
    fn from(q: &Quartet) -> Self {
        QuartetJson {
            d: OrderedDirectedGraphJson::from(&**q.d()),
            d_prime: OrderedDirectedGraphJson::from(&**q.d_prime()),
            phi: OrderedMorphismJson::from(q.phi()),
            m: q.exponents().to_vec(),
        }
    }
}

impl TryFrom<&QuartetJson> for Quartet {
    type Error = Error;

    fn try_from(j: &QuartetJson) -> Result<Self> {
        let d = Arc::new(OrderedDirectedGraph::try_from(&j.d)?);
        let d_prime = Arc::new(OrderedDirectedGraph::try_from(&j.d_prime)?);
        d.ensure_object()?;
        d_prime.ensure_object()?;
        Quartet::new(j.phi.resolve(d_prime, d)?, j.m.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::od_hom_set;

    #[test]
    fn round_trip() {
        let d = Arc::new(OrderedDirectedGraph::new(1, &[(0, 0)]).unwrap());
        let dp = Arc::new(OrderedDirectedGraph::new(2, &[(1, 0), (0, 0), (0, 1)]).unwrap());
        let homs = od_hom_set(&dp, &d).unwrap();
        assert!(!homs.is_empty());
        for phi in homs {
            let q = Quartet::new(phi, vec![0, 2, 1]).unwrap();
            let text = serde_json::to_string(&QuartetJson::from(&q)).unwrap();
            let back: QuartetJson = serde_json::from_str(&text).unwrap();
            assert_eq!(Quartet::try_from(&back).unwrap(), q);
        }
    }

    #[test]
    fn images_parse() {
        assert_eq!(image_from_str("a12").unwrap(), Image::Arrow(12));
        assert_eq!(image_from_str("v0").unwrap(), Image::Vertex(0));
        assert_eq!(image_from_str("*").unwrap(), Image::Deleted);
        assert!(image_from_str("x1").is_err());
        assert!(image_from_str("a").is_err());
        assert!(image_from_str("").is_err());
    }
}
