use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::ExperimentConfig;
use crate::error::{Error, Result};
use crate::graph::format::write_graph;
use crate::graph::{is_planar, Graph};
use crate::homology::{ser_divisors, HomologyGroup};
use crate::swiatkowski::SwiatkowskiComplex;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditRow {
    pub graph: String,
    pub n: usize,
    pub planar: bool,
    pub h1: HomologyGroup,
    /// `None` unless degree 2 was requested.
    pub h2: Option<HomologyGroup>,
    /// Torsion is expected in `H_1` exactly when `n >= 2` and the graph is
    /// non-planar, and every divisor should be 2.
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub rows: Vec<AuditRow>,
    pub skipped: Vec<(String, usize)>,
    /// lcm of every torsion divisor seen in `H_2`; recorded, not asserted.
    #[serde(serialize_with = "ser_one")]
    pub epsilon2_candidate: Option<BigInt>,
    pub counterexample: Option<AuditRow>,
}

fn ser_one<S: serde::Serializer>(x: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => ser_divisors(std::slice::from_ref(v), s),
        None => s.serialize_none(),
    }
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Audits torsion in `H_1(U_n(G))` over the family for `n` in range
/// (default `2`). With `i_max >= 2` the `H_2` torsion is collected as well.
/// The first counterexample stops the audit; if `reproducer` is given the
/// offending graph is written there.
pub fn torsion_audit(config: &ExperimentConfig, reproducer: Option<&Path>) -> Result<AuditReport> {
    let family = config.family();
    let ns = config.n_range.clone().map_or(2..=2, |r| r.0);
    let with_h2 = config.i_max >= 2;
    let results: Vec<(Graph, Option<Vec<AuditRow>>)> = family
        .into_par_iter()
        .map(|g| {
            let rows = audit_graph(&g, ns.clone(), with_h2, config.basis_limit)?;
            Ok((g, rows))
        })
        .collect::<Result<_>>()?;

    let mut report = AuditReport {
        rows: Vec::new(),
        skipped: Vec::new(),
        epsilon2_candidate: None,
        counterexample: None,
    };
    for (g, rows) in results {
        let Some(rows) = rows else {
            report.skipped.extend(ns.clone().map(|n| (g.name().unwrap_or("?").to_string(), n)));
            continue;
        };
        for row in rows {
            if let Some(h2) = &row.h2 {
                for d in &h2.torsion {
                    let cur = report.epsilon2_candidate.get_or_insert_with(BigInt::one);
                    *cur = cur.lcm(d);
                }
            }
            if !row.ok {
                if let Some(path) = reproducer {
                    let mut text = write_graph(&g);
                    text.push_str(&format!("# n = {}, H_1 = {}\n", row.n, row.h1));
                    std::fs::write(path, text)?;
                }
                report.counterexample = Some(row.clone());
                report.rows.push(row);
                return Ok(report);
            }
            report.rows.push(row);
        }
    }
    Ok(report)
}

fn audit_graph(
    g: &Graph,
    ns: std::ops::RangeInclusive<usize>,
    with_h2: bool,
    limit: u128,
) -> Result<Option<Vec<AuditRow>>> {
    let i_max = if with_h2 { 2 } else { 1 };
    let cx = match SwiatkowskiComplex::build_with_limit(g.clone().into(), i_max, *ns.end(), limit) {
        Ok(cx) => cx,
        Err(Error::ResourceLimit { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let planar = is_planar(g);
    let two = BigInt::from(2);
    let mut rows = Vec::new();
    for n in ns {
        let h1 = cx.homology(1, n)?;
        let expect_torsion = n >= 2 && !planar;
        let ok = h1.torsion.iter().all(|d| *d == two) && (h1.torsion.is_empty() != expect_torsion);
        rows.push(AuditRow {
            graph: g.name().unwrap_or("?").to_string(),
            n,
            planar,
            h1,
            h2: if with_h2 { Some(cx.homology(2, n)?) } else { None },
            ok,
        });
    }
    Ok(Some(rows))
}
