use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Column-sparse integer matrix with machine-size entries, used for chain
/// complexes and chain maps. Columns hold `(row, value)` pairs sorted by row
/// with no zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            columns: (0..n).map(|i| vec![(i, 1)]).collect(),
        }
    }

    /// Each column given as `(row, value)` pairs in any order; repeated rows
    /// are summed and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Result<Self> {
        let mut out = Vec::with_capacity(columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (r, v) in col {
                if r >= rows {
                    return Err(Error::Dimension(format!("row {r} in column {j} exceeds {rows} rows")));
                }
                let slot = acc.entry(r).or_insert(0);
                *slot = slot.checked_add(v).ok_or_else(overflow)?;
            }
            out.push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
        }
        Ok(SparseMatrix { rows, columns: out })
    }

    pub fn from_dense(m: &IntMatrix) -> Result<Self> {
        let mut columns = vec![Vec::new(); m.cols()];
        for i in 0..m.rows() {
            for (j, col) in columns.iter_mut().enumerate() {
                let x = m.get(i, j);
                let v = x.to_i64().ok_or_else(overflow)?;
                if v != 0 {
                    col.push((i, v));
                }
            }
        }
        Ok(SparseMatrix { rows: m.rows(), columns })
    }

    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let m = IntMatrix::from_rows(cols, rows)?;
        Self::from_dense(&m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j]
            .binary_search_by_key(&i, |&(r, _)| r)
            .map_or(0, |k| self.columns[j][k].1)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut columns = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                columns[i].push((j, v));
            }
        }
        SparseMatrix {
            rows: self.cols(),
            columns,
        }
    }

    /// `self * other`, failing on dimension mismatch or `i64` overflow.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let mut columns = Vec::with_capacity(other.cols());
        for col in &other.columns {
            let mut acc: BTreeMap<usize, i128> = BTreeMap::new();
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    *acc.entry(i).or_insert(0) += a as i128 * b as i128;
                }
            }
            let mut out = Vec::with_capacity(acc.len());
            for (i, v) in acc {
                if v != 0 {
                    out.push((i, i64::try_from(v).map_err(|_| overflow())?));
                }
            }
            columns.push(out);
        }
        Ok(SparseMatrix {
            rows: self.rows,
            columns,
        })
    }

    /// Elementary divisors of the nonzero part, in divisibility order.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        super::snf::elementary_divisors(self)
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }
}

fn overflow() -> Error {
    Error::ResourceLimit {
        what: "matrix entry".into(),
        size: u128::from(u64::MAX),
        limit: i64::MAX as u128,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_are_normalized() {
        let m = SparseMatrix::from_columns(3, vec![vec![(2, 1), (0, 4), (2, -1)], vec![]]).unwrap();
        assert_eq!(m.column(0), &[(0, 4)]);
        assert_eq!(m.get(2, 0), 0);
        assert!(SparseMatrix::from_columns(1, vec![vec![(1, 1)]]).is_err());
    }

    #[test]
    fn product_matches_dense() {
        let a = SparseMatrix::from_rows(3, &[vec![1, 0, 2], vec![0, -1, 3]]).unwrap();
        let b = SparseMatrix::from_rows(2, &[vec![1, 1], vec![2, 0], vec![0, -1]]).unwrap();
        let sparse = a.mul(&b).unwrap().to_dense();
        let dense = a.to_dense().mul(&b.to_dense()).unwrap();
        assert_eq!(sparse, dense);
        assert_eq!(a.transpose().transpose(), a);
    }
}
