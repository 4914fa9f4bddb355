//! Smith normal form over the integers.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::sparse::SparseMatrix;

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, its nonzero
/// entries positive and each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries of `d`.
    pub fn divisors(&self) -> Vec<BigInt> {
        diagonal(&self.d)
    }

    /// Checks every postcondition against the factored matrix.
    pub fn verify(&self, m: &IntMatrix) -> Result<(), String> {
        let product = self
            .u
            .mul(m)
            .and_then(|um| um.mul(&self.v))
            .map_err(|e| e.to_string())?;
        if product != self.d {
            return Err("U * M * V differs from D".into());
        }
        if !self.d.is_diagonal() {
            return Err("D is not diagonal".into());
        }
        for (name, t) in [("U", &self.u), ("V", &self.v)] {
            let det = t.determinant().map_err(|e| e.to_string())?;
            if det.abs() != BigInt::one() {
                return Err(format!("{name} has determinant {det}"));
            }
        }
        let n = self.d.rows().min(self.d.cols());
        let diag: Vec<&BigInt> = (0..n).map(|i| self.d.get(i, i)).collect();
        for (i, x) in diag.iter().enumerate() {
            if x.is_negative() {
                return Err(format!("D[{i},{i}] = {x} is negative"));
            }
            if let Some(y) = diag.get(i + 1) {
                let ok = if x.is_zero() { y.is_zero() } else { (*y % *x).is_zero() };
                if !ok {
                    return Err(format!("D[{i},{i}] = {x} does not divide the next entry {y}"));
                }
            }
        }
        Ok(())
    }
}

pub fn snf(m: &IntMatrix) -> Snf {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    diagonalize(&mut d, Some(&mut u), Some(&mut v));
    let out = Snf { u, d, v };
    #[cfg(debug_assertions)]
    if let Err(e) = out.verify(m) {
        panic!("Smith normal form postcondition failed: {e}");
    }
    out
}

/// Elementary divisors of a dense matrix without tracking transforms.
pub fn dense_divisors(m: &IntMatrix) -> Vec<BigInt> {
    let mut d = m.clone();
    diagonalize(&mut d, None, None);
    diagonal(&d)
}

fn diagonal(d: &IntMatrix) -> Vec<BigInt> {
    let n = d.rows().min(d.cols());
    (0..n).map(|i| d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
}

/// Reduces `a` in place; row operations are mirrored on `u`, column
/// operations on `v`. Pivots on an entry of minimal absolute value.
fn diagonalize(a: &mut IntMatrix, mut u: Option<&mut IntMatrix>, mut v: Option<&mut IntMatrix>) {
    let (rows, cols) = (a.rows(), a.cols());
    for t in 0..rows.min(cols) {
        loop {
            let Some((p, q)) = min_abs_entry(a, t) else {
                return;
            };
            a.swap_rows(t, p);
            if let Some(u) = u.as_deref_mut() {
                u.swap_rows(t, p);
            }
            a.swap_cols(t, q);
            if let Some(v) = v.as_deref_mut() {
                v.swap_cols(t, q);
            }

            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let f = -(a.get(i, t) / &pivot);
                if !f.is_zero() {
                    a.add_row(i, t, &f);
                    if let Some(u) = u.as_deref_mut() {
                        u.add_row(i, t, &f);
                    }
                }
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let f = -(a.get(t, j) / &pivot);
                if !f.is_zero() {
                    a.add_col(j, t, &f);
                    if let Some(v) = v.as_deref_mut() {
                        v.add_col(j, t, &f);
                    }
                }
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            if let Some(i) = offender {
                let one = BigInt::one();
                a.add_row(t, i, &one);
                if let Some(u) = u.as_deref_mut() {
                    u.add_row(t, i, &one);
                }
                continue;
            }
            if pivot.is_negative() {
                a.negate_row(t);
                if let Some(u) = u.as_deref_mut() {
                    u.negate_row(t);
                }
            }
            break;
        }
    }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(b, _, _)| ax < *b) {
                let unit = ax.is_one();
                best = Some((ax, i, j));
                if unit {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Elementary divisors of a sparse matrix: unit pivots are eliminated
/// sparsely first, the remainder goes through the dense algorithm. Falls
/// back to the dense algorithm on `i64` overflow.
pub fn elementary_divisors(m: &SparseMatrix) -> Vec<BigInt> {
    match sparse_unit_elimination(m) {
        Some((units, rest)) => {
            let mut out = vec![BigInt::one(); units];
            out.extend(dense_divisors(&rest));
            out
        }
        None => dense_divisors(&m.to_dense()),
    }
}

fn sparse_unit_elimination(m: &SparseMatrix) -> Option<(usize, IntMatrix)> {
    let mut rows: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); m.rows()];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for j in 0..m.cols() {
        for &(i, v) in m.column(j) {
            rows[i].insert(j, v);
            col_rows[j].insert(i);
        }
    }
    let mut units = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        'scan: for (i, row) in rows.iter().enumerate() {
            for (&j, &v) in row {
                if v.abs() != 1 {
                    continue;
                }
                let cost = (row.len() - 1) * (col_rows[j].len() - 1);
                if best.is_none_or(|(c, _, _)| cost < c) {
                    best = Some((cost, i, j));
                    if cost == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((_, p, q)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[p]);
        let pv = pivot_row[&q];
        for &j in pivot_row.keys() {
            col_rows[j].remove(&p);
        }
        let targets: Vec<usize> = col_rows[q].iter().copied().collect();
        for i in targets {
            let f = rows[i][&q].checked_mul(pv)?;
            for (&j, &x) in &pivot_row {
                let cur = rows[i].get(&j).copied().unwrap_or(0);
                let next = cur.checked_sub(f.checked_mul(x)?)?;
                if next == 0 {
                    rows[i].remove(&j);
                    col_rows[j].remove(&i);
                } else {
                    rows[i].insert(j, next);
                    col_rows[j].insert(i);
                }
            }
        }
        units += 1;
    }
    let live_rows: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
    let live_cols: Vec<usize> = (0..col_rows.len()).filter(|&j| !col_rows[j].is_empty()).collect();
    let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let mut rest = IntMatrix::zeros(live_rows.len(), live_cols.len());
    for (k, &i) in live_rows.iter().enumerate() {
        for (&j, &v) in &rows[i] {
            rest.set(k, col_pos[&j], BigInt::from(v));
        }
    }
    Some((units, rest))
}
