//! Batch experiments behind the `minorcat` binary: homology tables, torsion
//! audits, generator searches and growth-bound checks.

mod audit;
mod growth;
mod report;

use std::ops::RangeInclusive;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

pub use audit::{torsion_audit, AuditReport, AuditRow};
pub use growth::{growth_check, GrowthReport, PairRow, RankRow};
pub use report::{render_table, write_json_lines, ReportRow};

use crate::error::{Error, Result};
use crate::graph::format::{parse_graph, GraphJson};
use crate::graph::{builders, enumerate_connected_graphs, Graph};
use crate::homology::abrams_oracle;
use crate::swiatkowski::{SwiatkowskiComplex, DEFAULT_BASIS_LIMIT};

/// Reads a graph from a file (text format, or JSON if the name ends in
/// `.json`) or, failing that, from a builder name such as `K3,3`.
pub fn resolve_graph(spec: &str) -> Result<Graph> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let g = if spec.ends_with(".json") {
            Graph::try_from(&serde_json::from_str::<GraphJson>(&text)?)?
        } else {
            parse_graph(&text)?
        };
        return Ok(match g.name() {
            Some(_) => g,
            None => {
                let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec).to_string();
                g.with_name(stem)
            }
        });
    }
    builders::by_name(spec).ok_or_else(|| Error::UnknownGraphSpec(spec.to_string()))
}

/// An inclusive range written `a..b`, `a..=b` or `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad bound `{t}`: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let n = num(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(NRange(lo..=hi))
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub graphs: Vec<Graph>,
    pub i_max: usize,
    pub n_max: usize,
    pub n_range: Option<NRange>,
    pub max_edges: usize,
    pub oracle: bool,
    pub timing: bool,
    pub basis_limit: u128,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            graphs: Vec::new(),
            i_max: 1,
            n_max: 2,
            n_range: None,
            max_edges: 3,
            oracle: false,
            timing: false,
            basis_limit: DEFAULT_BASIS_LIMIT,
        }
    }
}

impl ExperimentConfig {
    /// Named graphs if any were given, otherwise every connected class with
    /// at most `max_edges` edges.
    pub fn family(&self) -> Vec<Graph> {
        if self.graphs.is_empty() {
            enumerate_connected_graphs(self.max_edges)
        } else {
            self.graphs.clone()
        }
    }

    pub fn n_values(&self) -> RangeInclusive<usize> {
        self.n_range.clone().map_or(0..=self.n_max, |r| r.0)
    }
}

/// Runs `f` on a pool with `jobs` threads, or rayon's default when `jobs` is 0.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidGraph(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// `H_i(U_n(G))` for every graph of the family, `i <= i_max` and `n` in
/// range, with an optional Abrams cross-check. Rows come back sorted by
/// family order, then `i`, then `n`.
pub fn cmd_homology(config: &ExperimentConfig) -> Result<Vec<ReportRow>> {
    let family = config.family();
    let per_graph: Vec<Vec<ReportRow>> = family
        .par_iter()
        .map(|g| homology_rows(g, config))
        .collect::<Result<_>>()?;
    Ok(per_graph.into_iter().flatten().collect())
}

fn homology_rows(g: &Graph, config: &ExperimentConfig) -> Result<Vec<ReportRow>> {
    let name = g.name().unwrap_or("?").to_string();
    let ns = config.n_values();
    let start = Instant::now();
    let cx = match SwiatkowskiComplex::build_with_limit(g.clone().into(), config.i_max, *ns.end(), config.basis_limit) {
        Ok(cx) => Some(cx),
        Err(Error::ResourceLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    let build_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut rows = Vec::new();
    for i in 0..=config.i_max {
        for n in ns.clone() {
            let Some(cx) = &cx else {
                rows.push(ReportRow::skipped(&name, i, n, "size"));
                continue;
            };
            let start = Instant::now();
            let h = cx.homology(i, n)?;
            let mut row = ReportRow::new(&name, i, n, &h);
            if config.timing {
                row.timing_ms = Some(build_ms + start.elapsed().as_secs_f64() * 1e3);
            }
            // H_0 of the single vertex is the documented exception
            if config.oracle && (i > 0 || g.num_edges() > 0) {
                row.oracle_checked = true;
                row.oracle_agrees = match abrams_oracle(g, n, i) {
                    Ok(o) => Some(o == h),
                    Err(Error::ResourceLimit { .. }) => {
                        row.oracle_checked = false;
                        None
                    }
                    Err(e) => return Err(e),
                };
            }
            rows.push(row);
        }
    }
    Ok(rows)
}
