//! Line-based text format and JSON form for graphs.
//!
//! ```text
//! graph C2
//! vertex a
//! vertex b
//! edge e a b     # creates arrows e:+ (head a) and e:- (head b)
//! edge f b a
//! ```

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut name = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edge_labels = Vec::new();
    let mut edges = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            ["graph", n] => {
                if name.replace(n.to_string()).is_some() {
                    return Err(Error::parse(line_no, "duplicate `graph` line"));
                }
            }
            ["vertex", v] => {
                if index.insert(v.to_string(), vertices.len()).is_some() {
                    return Err(Error::parse(line_no, format!("duplicate vertex `{v}`")));
                }
                vertices.push(v.to_string());
            }
            ["edge", e, h, t] => {
                let lookup = |v: &str| {
                    index
                        .get(v)
                        .copied()
                        .ok_or_else(|| Error::parse(line_no, format!("unknown vertex `{v}`")))
                };
                edges.push((lookup(h)?, lookup(t)?));
                edge_labels.push(e.to_string());
            }
            [kw, ..] => {
                return Err(Error::parse(line_no, format!("cannot parse `{kw}` line: `{line}`")));
            }
            [] => unreachable!(),
        }
    }

    let g = Graph::from_edges(vertices.len(), &edges)
        .with_labels(vertices, edge_labels)
        .map_err(|e| match e {
            Error::InvalidGraph(msg) => Error::parse(0, msg),
            other => other,
        })?;
    Ok(match name {
        Some(n) => g.with_name(n),
        None => g,
    })
}

/// Text form of a graph. Each edge is written from its representative
/// arrow, so parsing the output of a graph built with
/// [`Graph::from_edges`] reproduces it exactly.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(n) = g.name() {
        out.push_str(&format!("graph {n}\n"));
    }
    for v in 0..g.num_vertices() {
        out.push_str(&format!("vertex {}\n", g.vertex_label(v)));
    }
    for e in 0..g.num_edges() {
        let (h, t) = g.endpoints(e);
        out.push_str(&format!(
            "edge {} {} {}\n",
            g.edge_label(e),
            g.vertex_label(h),
            g.vertex_label(t)
        ));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    /// `[edge, head, tail]` triples.
    pub edges: Vec<[String; 3]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            name: g.name().map(str::to_string),
            vertices: g.vertex_labels().to_vec(),
            edges: (0..g.num_edges())
                .map(|e| {
                    let (h, t) = g.endpoints(e);
                    [
                        g.edge_label(e).to_string(),
                        g.vertex_label(h).to_string(),
                        g.vertex_label(t).to_string(),
                    ]
                })
                .collect(),
        }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: &GraphJson) -> Result<Graph> {
        let index: HashMap<&str, usize> = j.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let lookup = |v: &String| {
            index
                .get(v.as_str())
                .copied()
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex `{v}`")))
        };
        let mut edges = Vec::new();
        for [_, h, t] in &j.edges {
            edges.push((lookup(h)?, lookup(t)?));
        }
        let g = Graph::from_edges(j.vertices.len(), &edges).with_labels(
            j.vertices.clone(),
            j.edges.iter().map(|e| e[0].clone()).collect(),
        )?;
        Ok(match &j.name {
            Some(n) => g.with_name(n.clone()),
            None => g,
        })
    }
}
