use std::io::Write;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::homology::{de_divisors, ser_divisors, HomologyGroup};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub graph: String,
    pub i: usize,
    pub n: usize,
    /// `None` when the bidegree was skipped.
    pub rank: Option<usize>,
    #[serde(serialize_with = "ser_divisors", deserialize_with = "de_divisors")]
    pub torsion: Vec<BigInt>,
    pub timing_ms: Option<f64>,
    pub oracle_checked: bool,
    pub oracle_agrees: Option<bool>,
    pub skipped: Option<String>,
}

impl ReportRow {
    pub fn new(graph: &str, i: usize, n: usize, h: &HomologyGroup) -> Self {
        ReportRow {
            graph: graph.to_string(),
            i,
            n,
            rank: Some(h.rank),
            torsion: h.torsion.clone(),
            timing_ms: None,
            oracle_checked: false,
            oracle_agrees: None,
            skipped: None,
        }
    }

    pub fn skipped(graph: &str, i: usize, n: usize, reason: &str) -> Self {
        ReportRow {
            graph: graph.to_string(),
            i,
            n,
            rank: None,
            torsion: Vec::new(),
            timing_ms: None,
            oracle_checked: false,
            oracle_agrees: None,
            skipped: Some(reason.to_string()),
        }
    }

    pub fn group(&self) -> Option<HomologyGroup> {
        self.rank.map(|rank| HomologyGroup {
            rank,
            torsion: self.torsion.clone(),
        })
    }
}

pub fn write_json_lines<T: Serialize>(out: &mut impl Write, rows: &[T]) -> std::io::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut *out, row)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Fixed-width table with one line per row.
pub fn render_table(rows: &[ReportRow]) -> String {
    let width = rows.iter().map(|r| r.graph.len()).max().unwrap_or(0).max(5);
    let mut out = format!("{:<width$}  {:>2}  {:>2}  {:<16}  oracle\n", "graph", "i", "n", "H_i");
    for r in rows {
        let h = match (&r.skipped, r.group()) {
            (Some(reason), _) => format!("skipped ({reason})"),
            (None, Some(g)) => g.to_string(),
            (None, None) => "?".to_string(),
        };
        let oracle = match (r.oracle_checked, r.oracle_agrees) {
            (false, _) => "-",
            (true, Some(true)) => "agrees",
            (true, Some(false)) => "DIFFERS",
            (true, None) => "?",
        };
        out.push_str(&format!("{:<width$}  {:>2}  {:>2}  {:<16}  {oracle}", r.graph, r.i, r.n, h));
        if let Some(t) = r.timing_ms {
            out.push_str(&format!("  {t:.1} ms"));
        }
        out.push('\n');
    }
    out
}
