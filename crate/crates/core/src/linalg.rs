//! Matrix containers: exact sparse integer matrices for operator assembly and
//! a small dense `f64` matrix for eigensolving and Gershgorin bounds.

use std::fmt::Write as _;

use crate::error::{input, Error, Result};

/// Sparse integer matrix stored as sorted rows of `(col, value)`; no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    /// Sums duplicate positions and drops zeros.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nrows];
        for (i, j, v) in triplets {
            assert!(i < nrows && j < ncols, "triplet ({i}, {j}) out of bounds");
            rows[i].push((j, v));
        }
        for row in rows.iter_mut() {
            row.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
            for &(j, v) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == j => last.1 += v,
                    _ => merged.push((j, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *row = merged;
        }
        IntMatrix { nrows, ncols, rows }
    }

    pub fn diagonal(values: &[i64]) -> Self {
        Self::from_triplets(values.len(), values.len(), values.iter().enumerate().map(|(i, &v)| (i, i, v)))
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            rows.len(),
            ncols,
            rows.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v))),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(p) => self.rows[i][p].1,
            Err(_) => 0,
        }
    }

    /// Non-zero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |&(j, v)| (i, j, v)))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.ncols];
        for (i, j, v) in self.entries() {
            // Row-major traversal appends in increasing i, keeping rows sorted.
            rows[j].push((i, v));
        }
        IntMatrix { nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn matmul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.nrows {
            return input(format!(
                "shape mismatch: {}x{} times {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            ));
        }
        let mut acc = vec![0i64; other.ncols];
        let mut touched: Vec<usize> = Vec::new();
        let mut rows = Vec::with_capacity(self.nrows);
        for row in &self.rows {
            for &(k, a) in row {
                for &(j, b) in &other.rows[k] {
                    if acc[j] == 0 {
                        touched.push(j);
                    }
                    acc[j] += a * b;
                    // A sum can return to zero; `touched` may then hold j twice.
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                if acc[j] != 0 {
                    out.push((j, acc[j]));
                }
                acc[j] = 0;
            }
            touched.clear();
            rows.push(out);
        }
        Ok(IntMatrix { nrows: self.nrows, ncols: other.ncols, rows })
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return input("shape mismatch in addition");
        }
        Ok(Self::from_triplets(self.nrows, self.ncols, self.entries().chain(other.entries())))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// First position where the matrix differs from its transpose.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((self.nrows, self.ncols));
        }
        self.entries().find(|&(i, j, v)| self.get(j, i) != v).map(|(i, j, _)| (i, j))
    }

    pub fn trace(&self) -> i64 {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).sum()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.nrows, self.ncols);
        for (i, j, v) in self.entries() {
            m.set(i, j, v as f64);
        }
        m
    }

    /// Exact Gershgorin lower bound `min_i (a_ii - Σ_{j≠i} |a_ij|)`.
    pub fn gershgorin_lower_bound(&self) -> Result<i64> {
        if !self.is_square() {
            return input(format!("Gershgorin bound needs a square matrix, got {}x{}", self.nrows, self.ncols));
        }
        if self.nrows == 0 {
            return Err(Error::Domain("empty matrix has no eigenvalues".into()));
        }
        Ok((0..self.nrows)
            .map(|i| {
                let mut diag = 0;
                let mut off = 0;
                for &(j, v) in &self.rows[i] {
                    if j == i {
                        diag = v;
                    } else {
                        off += v.abs();
                    }
                }
                diag - off
            })
            .min()
            .expect("non-empty"))
    }

    /// Plain-text dump: `rows cols`, then `i j value` per non-zero, row-major.
    pub fn dump(&self) -> String {
        let mut out = format!("{} {}\n", self.nrows, self.ncols);
        for (i, j, v) in self.entries() {
            writeln!(out, "{i} {j} {v}").expect("writing to a String");
        }
        out
    }
}

/// Row-major dense `f64` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        DenseMatrix { nrows, ncols, data: vec![0.0; nrows * ncols] }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return input("ragged rows");
        }
        Ok(DenseMatrix { nrows: rows.len(), ncols, data: rows.concat() })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    /// Symmetry under a relative tolerance scaled by the largest entry.
    pub fn check_symmetric(&self, rel_tol: f64) -> Result<()> {
        if self.nrows != self.ncols {
            return input(format!("expected a square matrix, got {}x{}", self.nrows, self.ncols));
        }
        let scale = self.data.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
        for i in 0..self.nrows {
            for j in i + 1..self.ncols {
                if (self.get(i, j) - self.get(j, i)).abs() > rel_tol * scale {
                    return Err(Error::Asymmetric { row: i, col: j });
                }
            }
        }
        Ok(())
    }
}

/// Ascending eigenvalues of a symmetric matrix (lower triangle is read).
pub fn symmetric_eigenvalues(m: &DenseMatrix) -> Result<Vec<f64>> {
    m.check_symmetric(1e-12)?;
    let n = m.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mat = faer::Mat::<f64>::from_fn(n, n, |i, j| m.get(i, j));
    let values = mat
        .self_adjoint_eigenvalues(faer::Side::Lower)
        .map_err(|e| Error::Integrity(format!("eigensolver failed: {e:?}")))?;
    let mut values: Vec<f64> = values.into_iter().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_merge_and_drop_zeros() {
        let m = IntMatrix::from_triplets(2, 3, [(0, 1, 2), (0, 1, -2), (1, 2, 5), (1, 0, 1), (1, 2, 1)]);
        assert_eq!(m.nnz(), 2);
        assert_eq!(m.get(1, 2), 6);
        assert_eq!(m.get(0, 1), 0);
        assert_eq!(m.row(1), &[(0, 1), (2, 6)]);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn matmul_against_dense_product() {
        let a = vec![vec![1, -1, 0], vec![0, 2, 3]];
        let b = vec![vec![1, 0], vec![1, 1], vec![-1, 4]];
        let p = IntMatrix::from_dense(&a).matmul(&IntMatrix::from_dense(&b)).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expect: i64 = (0..3).map(|k| a[i][k] * b[k][j]).sum();
                assert_eq!(p.get(i, j), expect);
            }
        }
        // Cancellation to zero must not leave a stored entry.
        assert_eq!(p.get(0, 0), 0);
        assert!(p.row(0).iter().all(|e| e.1 != 0));
        assert!(IntMatrix::zeros(2, 3).matmul(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn transpose_and_symmetry() {
        let m = IntMatrix::from_dense(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.transpose().get(0, 1), 3);
        assert!(m.asymmetry().is_some());
        let s = m.add(&m.transpose()).unwrap();
        assert_eq!(s.asymmetry(), None);
        assert_eq!(s.trace(), 10);
    }

    #[test]
    fn gershgorin_exact() {
        let m = IntMatrix::from_dense(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(m.gershgorin_lower_bound().unwrap(), 1);
        assert!(IntMatrix::zeros(2, 3).gershgorin_lower_bound().is_err());
    }

    #[test]
    fn dump_format() {
        let m = IntMatrix::from_dense(&[vec![0, -1], vec![2, 0]]);
        assert_eq!(m.dump(), "2 2\n0 1 -1\n1 0 2\n");
    }

    #[test]
    fn eigenvalues_small() {
        let m = DenseMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let ev = symmetric_eigenvalues(&m).unwrap();
        assert!((ev[0]).abs() < 1e-12 && (ev[1] - 2.0).abs() < 1e-12);
        let bad = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(symmetric_eigenvalues(&bad), Err(Error::Asymmetric { .. })));
        assert!(symmetric_eigenvalues(&DenseMatrix::zeros(0, 0)).unwrap().is_empty());
    }
}
