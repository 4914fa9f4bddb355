use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::ExperimentConfig;
use crate::error::{Error, Result};
use crate::graph::{enumerate_connected_graphs, Graph};
use crate::minor::{automorphisms, hom_count};
use crate::swiatkowski::{generator_search, SwiatkowskiComplex};
use crate::util::binomial;

/// `|hom(G, G_j)| <= |Aut(G_j)| C(e, e_j) C(e - e_j, g - g_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRow {
    pub graph: String,
    pub target: String,
    pub homs: usize,
    pub bound: u128,
    pub ok: bool,
}

/// `rank H_i(U_n(G)) <= α_i e^{i + n + g}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankRow {
    pub graph: String,
    pub i: usize,
    pub n: usize,
    pub rank: Option<usize>,
    pub bound: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub i: usize,
    pub generator_graphs: Vec<String>,
    pub alpha: u128,
    pub pairs: Vec<PairRow>,
    pub ranks: Vec<RankRow>,
}

impl GrowthReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.ok) && self.ranks.iter().all(|r| r.ok)
    }
}

/// Checks the morphism-count inequality for every graph of the family
/// against every class with at most `2i` edges, and the rank bound with
/// `α_i = Σ |Aut(G_j)|` over the graphs carrying degree-`i` generators.
/// Here `i = config.i_max`.
pub fn growth_check(config: &ExperimentConfig) -> Result<GrowthReport> {
    let i = config.i_max;
    let family = config.family();
    let targets = enumerate_connected_graphs(2 * i);
    let aut: Vec<usize> = targets
        .iter()
        .map(|h| automorphisms(h).map(|a| a.len()))
        .collect::<Result<_>>()?;

    let generators = generator_search(i)?;
    let mut alpha = 0u128;
    let mut generator_graphs = Vec::new();
    for row in generators.iter().filter(|r| r.generators > 0) {
        let k = targets
            .iter()
            .position(|h| h.name() == Some(row.graph.as_str()))
            .expect("generator rows come from the same enumeration");
        alpha += aut[k] as u128;
        generator_graphs.push(row.graph.clone());
    }

    let pairs: Vec<PairRow> = family
        .par_iter()
        .map(|g| {
            targets
                .iter()
                .zip(&aut)
                .map(|(h, &a)| pair_row(g, h, a))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let ns = config.n_values();
    let ranks: Vec<RankRow> = family
        .par_iter()
        .map(|g| rank_rows(g, i, ns.clone(), alpha, config.basis_limit))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    Ok(GrowthReport {
        i,
        generator_graphs,
        alpha,
        pairs,
        ranks,
    })
}

fn pair_row(g: &Graph, h: &Graph, aut: usize) -> Result<PairRow> {
    let homs = hom_count(g, h)?;
    let (e, ej) = (g.num_edges() as u64, h.num_edges() as u64);
    let (gg, gj) = (g.genus()? as u64, h.genus()? as u64);
    let bound = if ej > e || gj > gg {
        0
    } else {
        aut as u128 * binomial(e, ej) * binomial(e - ej, gg - gj)
    };
    Ok(PairRow {
        graph: g.name().unwrap_or("?").to_string(),
        target: h.name().unwrap_or("?").to_string(),
        homs,
        bound,
        ok: homs as u128 <= bound,
    })
}

fn rank_rows(
    g: &Graph,
    i: usize,
    ns: std::ops::RangeInclusive<usize>,
    alpha: u128,
    limit: u128,
) -> Result<Vec<RankRow>> {
    let name = g.name().unwrap_or("?").to_string();
    let cx = match SwiatkowskiComplex::build_with_limit(g.clone().into(), i, *ns.end(), limit) {
        Ok(cx) => Some(cx),
        Err(Error::ResourceLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    let (e, genus) = (g.num_edges(), g.genus()?);
    ns.map(|n| {
        let bound = BigUint::from(alpha) * BigUint::from(e).pow((i + n + genus) as u32);
        let rank = match &cx {
            Some(cx) => Some(cx.homology(i, n)?.rank),
            None => None,
        };
        Ok(RankRow {
            graph: name.clone(),
            i,
            n,
            rank,
            ok: rank.is_none_or(|r| BigUint::from(r) <= bound),
            bound: bound.to_string(),
        })
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builders::*;

    #[test]
    fn star_rank_within_bound() {
        let config = ExperimentConfig {
            graphs: vec![star(3), cycle(3), cycle(2)],
            i_max: 1,
            n_range: Some(super::super::NRange(2..=2)),
            ..Default::default()
        };
        let report = growth_check(&config).unwrap();
        assert_eq!(report.alpha, 18);
        assert!(report.passed());
        let star_row = report.ranks.iter().find(|r| r.graph == "K1,3").unwrap();
        assert_eq!(star_row.rank, Some(1));
        assert_eq!(star_row.bound, (18u128 * 27).to_string());
        let c3 = report.pairs.iter().find(|p| p.graph == "C3" && p.target == "*").unwrap();
        assert_eq!((c3.homs, c3.bound), (3, 3));
        let c2 = report.pairs.iter().find(|p| p.graph == "C2" && p.target == "*").unwrap();
        assert_eq!((c2.homs, c2.bound), (2, 2));
    }
}
