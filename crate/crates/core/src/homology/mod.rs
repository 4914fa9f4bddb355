//! Exact integer homology.

pub mod abrams;
pub mod matrix;
pub mod snf;
pub mod sparse;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use abrams::abrams_oracle;
pub use matrix::IntMatrix;
pub use snf::{snf, Snf};
pub use sparse::SparseMatrix;

use crate::error::{Error, Result};

/// `Z^rank` plus `Z/d` for each torsion divisor; divisors are at least 2
/// and each divides the next.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub rank: usize,
    #[serde(serialize_with = "ser_divisors", deserialize_with = "de_divisors")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|d| u64::try_from(d).unwrap_or(u64::MAX)).collect()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub(crate) fn ser_divisors<S: Serializer>(divs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    let values: Vec<serde_json::Value> = divs.iter().map(matrix::bigint_json).collect();
    values.serialize(s)
}

pub(crate) fn de_divisors<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
    let values = Vec::<serde_json::Value>::deserialize(d)?;
    values
        .into_iter()
        .map(|v| match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(BigInt::from)
                .ok_or_else(|| serde::de::Error::custom("torsion divisor must be a positive integer")),
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            _ => Err(serde::de::Error::custom("torsion divisor must be a number or string")),
        })
        .collect()
}

/// `ker(d_i) / im(d_{i+1})` for `d_i: C_i -> C_{i-1}` and
/// `d_{i+1}: C_{i+1} -> C_i`.
///
/// The kernel of an integer matrix is a direct summand, so the torsion of the
/// quotient is the torsion of `coker(d_{i+1})`.
pub fn homology(d_i: &SparseMatrix, d_next: &SparseMatrix) -> Result<HomologyGroup> {
    if d_i.cols() != d_next.rows() {
        return Err(Error::Dimension(format!(
            "d_i has {} columns but d_(i+1) has {} rows",
            d_i.cols(),
            d_next.rows()
        )));
    }
    if !d_i.mul(d_next)?.is_zero() {
        return Err(Error::Composability);
    }
    let rank_i = d_i.rank();
    Ok(from_divisors(d_i.cols() - rank_i, &d_next.elementary_divisors()))
}

/// Dense counterpart of [`homology`].
pub fn homology_dense(d_i: &IntMatrix, d_next: &IntMatrix) -> Result<HomologyGroup> {
    if d_i.cols() != d_next.rows() {
        return Err(Error::Dimension(format!(
            "d_i has {} columns but d_(i+1) has {} rows",
            d_i.cols(),
            d_next.rows()
        )));
    }
    if !d_i.mul(d_next)?.is_zero() {
        return Err(Error::Composability);
    }
    let rank_i = snf::dense_divisors(d_i).len();
    Ok(from_divisors(d_i.cols() - rank_i, &snf::dense_divisors(d_next)))
}

fn from_divisors(nullity: usize, divisors: &[BigInt]) -> HomologyGroup {
    HomologyGroup {
        rank: nullity - divisors.len(),
        torsion: divisors.iter().filter(|d| !d.is_one()).cloned().collect(),
    }
}
