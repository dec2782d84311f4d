//! Cochain operators on the canonically oriented basis.
//!
//! Each k-face is taken with its sorted vertex order, and basis positions
//! follow the lexicographic face order stored in the complex. The standard
//! basis is orthonormal for the cochain inner product, so the boundary map is
//! the transpose of the coboundary. Everything here is exact integer
//! arithmetic; floating point only enters at eigensolving.

use crate::complex::SimplicialComplex;
use crate::error::{input, Error, Result};
use crate::linalg::IntMatrix;
use crate::simplex::{sign_unchecked, Simplex};

/// Largest basis the crate will assemble an operator on.
pub const MAX_BASIS: usize = 5000;

/// The ordered basis `{e_σ : σ ∈ X(k)}` of `C^k(X)`.
#[derive(Clone, Copy, Debug)]
pub struct OrientedBasis<'a> {
    pub k: isize,
    simplices: &'a [Simplex],
}

impl<'a> OrientedBasis<'a> {
    pub fn new(x: &'a SimplicialComplex, k: isize) -> Self {
        OrientedBasis { k, simplices: x.faces(k) }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &'a [Simplex] {
        self.simplices
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.simplices.binary_search(s).ok()
    }
}

/// An integer operator between two cochain spaces of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    /// Dimension of the faces indexing the rows.
    pub row_dim: isize,
    /// Dimension of the faces indexing the columns.
    pub col_dim: isize,
    pub entries: IntMatrix,
}

/// `L_k = D_k + K_k` with `K_k = H_k H_kᵀ` the Laplacian of the signed graph `G_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BochnerSplit {
    pub k: isize,
    pub d: IntMatrix,
    pub k_matrix: IntMatrix,
    pub h: IntMatrix,
    /// Edges of `G_k` as basis index pairs `(i, j)`, `i < j`; these index the columns of `h`.
    pub edges: Vec<(usize, usize)>,
}

/// Off-diagonal absolute row sum of `L_k` at `σ`, computed directly and by
/// the degree formula `Σ_{τ∈σ(k-1)} deg(τ) - (k+1)(deg(σ)+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowSumCheck {
    pub direct: i64,
    pub formula: i64,
}

impl RowSumCheck {
    pub fn holds(&self) -> bool {
        self.direct == self.formula
    }
}

fn check_dim(x: &SimplicialComplex, k: isize) -> Result<()> {
    if k < -1 || k > x.dim() {
        return input(format!("dimension {k} outside -1..={}", x.dim()));
    }
    Ok(())
}

fn check_cap(x: &SimplicialComplex, k: isize) -> Result<()> {
    let size = x.face_count(k);
    if size > MAX_BASIS {
        return Err(Error::SizeCap { dim: k, size, cap: MAX_BASIS });
    }
    Ok(())
}

/// `δ_k : C^k → C^{k+1}`; rows are `X(k+1)`, columns `X(k)`.
pub fn coboundary_matrix(x: &SimplicialComplex, k: isize) -> Result<OperatorMatrix> {
    check_dim(x, k)?;
    check_cap(x, k)?;
    check_cap(x, k + 1)?;
    let cols = x.faces(k);
    let rows = x.faces(k + 1);
    let mut triplets = Vec::with_capacity(rows.len() * (k + 2) as usize);
    for (i, sigma) in rows.iter().enumerate() {
        for (pos, tau) in sigma.boundary_faces().enumerate() {
            let j = cols.binary_search(&tau).expect("complex is downward closed");
            triplets.push((i, j, if pos % 2 == 0 { 1 } else { -1 }));
        }
    }
    Ok(OperatorMatrix {
        row_dim: k + 1,
        col_dim: k,
        entries: IntMatrix::from_triplets(rows.len(), cols.len(), triplets),
    })
}

/// `∂_k`, the adjoint of `δ_k`.
pub fn boundary_matrix(x: &SimplicialComplex, k: isize) -> Result<OperatorMatrix> {
    let d = coboundary_matrix(x, k)?;
    Ok(OperatorMatrix { row_dim: d.col_dim, col_dim: d.row_dim, entries: d.entries.transpose() })
}

/// `L_k = δ_{k-1}∂_{k-1} + ∂_kδ_k`, assembled by composing coboundaries.
pub fn laplacian(x: &SimplicialComplex, k: isize) -> Result<OperatorMatrix> {
    check_dim(x, k)?;
    let up = coboundary_matrix(x, k)?.entries;
    let mut l = up.transpose().matmul(&up)?;
    if k >= 0 {
        let down = coboundary_matrix(x, k - 1)?.entries;
        l = l.add(&down.matmul(&down.transpose())?)?;
    }
    Ok(OperatorMatrix { row_dim: k, col_dim: k, entries: l })
}

/// A single entry of `L_k` from the closed form: `deg(σ)+k+1` on the
/// diagonal, `[σ:σ∩τ][τ:σ∩τ]` when `σ, τ` share a `(k-1)`-face and `σ∪τ` is
/// not a face, zero otherwise.
pub fn laplacian_entry(x: &SimplicialComplex, sigma: &Simplex, tau: &Simplex) -> Result<i64> {
    if sigma.dim() != tau.dim() {
        return input(format!("{sigma} and {tau} have different dimensions"));
    }
    if !x.contains(sigma) || !x.contains(tau) {
        return input(format!("{sigma} or {tau} is not a face"));
    }
    let k = sigma.dim();
    if sigma == tau {
        return Ok(x.degree(sigma)? as i64 + k as i64 + 1);
    }
    let common = sigma.intersection(tau);
    if common.dim() == k - 1 && !x.contains(&sigma.union(tau)) {
        return Ok(sign_unchecked(sigma, &common) * sign_unchecked(tau, &common));
    }
    Ok(0)
}

/// For `σ ∈ X(k)`, the faces `η ≠ σ` of `X(k)` adjacent in `G_k`, with the
/// closed-form entry `L_k(σ, η)`. Each `η = τ ∪ {v}` for a unique
/// `τ = σ ∩ η ∈ σ(k-1)` and `v ∉ σ` with `σ ∪ {v} ∉ X`.
fn closed_form_neighbours(x: &SimplicialComplex, sigma: &Simplex) -> Vec<(usize, i64)> {
    let level = x.faces(sigma.dim());
    let mut out = Vec::new();
    for v in 0..x.n() {
        let Some(extended) = sigma.with_vertex(v) else { continue };
        if x.contains(&extended) {
            continue;
        }
        for tau in sigma.boundary_faces() {
            let eta = tau.with_vertex(v).expect("v not in sigma");
            if let Ok(j) = level.binary_search(&eta) {
                out.push((j, sign_unchecked(sigma, &tau) * sign_unchecked(&eta, &tau)));
            }
        }
    }
    out
}

/// `L_k` assembled entry by entry from the closed form, independently of
/// [`laplacian`].
pub fn laplacian_closed_form(x: &SimplicialComplex, k: isize) -> Result<OperatorMatrix> {
    check_dim(x, k)?;
    check_cap(x, k)?;
    let level = x.faces(k);
    let deg = x.degrees(k);
    let mut triplets = Vec::new();
    for (i, sigma) in level.iter().enumerate() {
        triplets.push((i, i, deg[i] as i64 + k as i64 + 1));
        for (j, v) in closed_form_neighbours(x, sigma) {
            triplets.push((i, j, v));
        }
    }
    Ok(OperatorMatrix { row_dim: k, col_dim: k, entries: IntMatrix::from_triplets(level.len(), level.len(), triplets) })
}

/// `Σ_{τ∈σ(k-1)} deg(τ)` for every `σ ∈ X(k)`.
pub(crate) fn boundary_degree_sums(x: &SimplicialComplex, k: isize) -> Vec<i64> {
    let below = x.faces(k - 1);
    let deg_below = x.degrees(k - 1);
    x.faces(k)
        .iter()
        .map(|sigma| {
            sigma
                .boundary_faces()
                .map(|tau| deg_below[below.binary_search(&tau).expect("downward closed")] as i64)
                .sum()
        })
        .collect()
}

/// The diagonal/signed-graph decomposition of `L_k` for `k >= 0`.
pub fn bochner_split(x: &SimplicialComplex, k: isize) -> Result<BochnerSplit> {
    if k == -1 {
        return input("the signed graph G_k is undefined for k = -1");
    }
    check_dim(x, k)?;
    check_cap(x, k)?;
    let level = x.faces(k);
    let deg = x.degrees(k);
    let sums = boundary_degree_sums(x, k);
    let kk = k as i64;
    let diag: Vec<i64> = (0..level.len()).map(|i| 2 * (kk + 1) + (kk + 2) * deg[i] as i64 - sums[i]).collect();

    let mut edges = Vec::new();
    for (i, sigma) in level.iter().enumerate() {
        for (j, _) in closed_form_neighbours(x, sigma) {
            if i < j {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    let mut h_triplets = Vec::with_capacity(2 * edges.len());
    for (e, &(i, j)) in edges.iter().enumerate() {
        let common = level[i].intersection(&level[j]);
        h_triplets.push((i, e, sign_unchecked(&level[i], &common)));
        h_triplets.push((j, e, sign_unchecked(&level[j], &common)));
    }
    let h = IntMatrix::from_triplets(level.len(), edges.len(), h_triplets);
    let k_matrix = h.matmul(&h.transpose())?;
    Ok(BochnerSplit { k, d: IntMatrix::diagonal(&diag), k_matrix, h, edges })
}

impl BochnerSplit {
    /// `D_k + K_k`, to be compared with `L_k`.
    pub fn recombine(&self) -> IntMatrix {
        self.d.add(&self.k_matrix).expect("D and K share a shape")
    }

    /// Signed-graph sign `φ({σ,τ}) = -[σ:σ∩τ][τ:σ∩τ]` of each edge.
    pub fn edge_signs(&self) -> Vec<i64> {
        self.edges.iter().map(|&(i, j)| -self.k_matrix.get(i, j)).collect()
    }
}

/// Compares the directly summed off-diagonal row of `L_k` with the degree formula.
pub fn offdiag_abs_row_sum(x: &SimplicialComplex, k: isize, sigma: &Simplex) -> Result<RowSumCheck> {
    if k < 0 {
        return input("row-sum identity needs k >= 0");
    }
    if sigma.dim() != k || !x.contains(sigma) {
        return input(format!("{sigma} is not a {k}-face"));
    }
    let l = laplacian(x, k)?;
    let i = x.index_of(sigma).expect("checked above");
    let direct: i64 = l.entries.row(i).iter().filter(|e| e.0 != i).map(|e| e.1.abs()).sum();
    let deg = x.degree(sigma)? as i64;
    let sum: i64 = sigma.boundary_faces().map(|tau| x.degree(&tau).map(|d| d as i64)).sum::<Result<i64>>()?;
    Ok(RowSumCheck { direct, formula: sum - (k as i64 + 1) * (deg + 1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::symmetric_eigenvalues;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn c5() -> SimplicialComplex {
        let edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        SimplicialComplex::clique_complex(5, &edges).unwrap()
    }

    #[test]
    fn coboundary_minus_one_is_all_ones() {
        let x = c5();
        let d = coboundary_matrix(&x, -1).unwrap();
        assert_eq!((d.entries.nrows(), d.entries.ncols()), (5, 1));
        assert!((0..5).all(|i| d.entries.get(i, 0) == 1));
    }

    #[test]
    fn coboundary_of_triangle_boundary() {
        let x = SimplicialComplex::skeleton(2, 1).unwrap();
        let d = coboundary_matrix(&x, 0).unwrap().entries;
        // Row {0,1}: +1 at {1}, -1 at {0}.
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.get(0, 0), -1);
        for i in 0..3 {
            let row: Vec<i64> = d.row(i).iter().map(|e| e.1).collect();
            assert_eq!(row.iter().sum::<i64>(), 0);
            assert_eq!(row.len(), 2);
        }
        assert!(coboundary_matrix(&x, 2).is_err());
        assert!(coboundary_matrix(&x, -2).is_err());
    }

    #[test]
    fn laplacian_minus_one_is_n() {
        let x = c5();
        let l = laplacian(&x, -1).unwrap().entries;
        assert_eq!(l.to_dense().row(0), &[5.0]);
        assert_eq!(laplacian_closed_form(&x, -1).unwrap().entries, l);
    }

    #[test]
    fn laplacian_of_two_points() {
        let s0 = SimplicialComplex::skeleton(1, 0).unwrap();
        let l = laplacian(&s0, 0).unwrap().entries;
        assert_eq!(l, IntMatrix::from_dense(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(laplacian_closed_form(&s0, 0).unwrap().entries, l);
    }

    #[test]
    fn laplacian_zero_of_c5() {
        // Graph Laplacian of the 5-cycle plus the all-ones matrix.
        let l = laplacian(&c5(), 0).unwrap().entries;
        for i in 0..5usize {
            for j in 0..5usize {
                let diff = (i as i64 - j as i64).rem_euclid(5);
                let expect = if i == j {
                    3
                } else if diff == 1 || diff == 4 {
                    0
                } else {
                    1
                };
                assert_eq!(l.get(i, j), expect, "({i},{j})");
            }
        }
    }

    #[test]
    fn entry_examples() {
        let d3 = SimplicialComplex::simplex(3);
        assert_eq!(laplacian_entry(&d3, &s(&[0, 1]), &s(&[0, 1])).unwrap(), 4);
        let x = c5();
        assert_eq!(laplacian_entry(&x, &s(&[0]), &s(&[2])).unwrap(), 1);
        assert_eq!(laplacian_entry(&x, &s(&[0]), &s(&[1])).unwrap(), 0);
        assert!(laplacian_entry(&x, &s(&[0]), &s(&[0, 1])).is_err());
    }

    #[test]
    fn bochner_on_c5_edges() {
        let x = c5();
        let b = bochner_split(&x, 1).unwrap();
        assert_eq!(b.edges.len(), 5);
        assert!((0..5).all(|i| b.d.get(i, i) == 0));
        assert_eq!(b.k_matrix, laplacian(&x, 1).unwrap().entries);
        assert_eq!(b.recombine(), laplacian(&x, 1).unwrap().entries);
        assert!(bochner_split(&x, -1).is_err());
    }

    #[test]
    fn bochner_k_is_psd() {
        let x = SimplicialComplex::from_facets(6, &[vec![0, 1, 2], vec![2, 3], vec![3, 4, 5], vec![1, 4]]).unwrap();
        for k in 0..=x.dim() {
            let b = bochner_split(&x, k).unwrap();
            if b.k_matrix.nrows() > 0 {
                let ev = symmetric_eigenvalues(&b.k_matrix.to_dense()).unwrap();
                assert!(ev[0] > -1e-9);
            }
            let deg = x.degrees(k);
            for (i, &g) in deg.iter().enumerate() {
                let g_deg = b.edges.iter().filter(|e| e.0 == i || e.1 == i).count() as i64;
                assert_eq!(b.d.get(i, i) + g_deg, g as i64 + k as i64 + 1);
                assert_eq!(b.k_matrix.get(i, i), g_deg);
            }
        }
    }

    #[test]
    fn row_sum_examples() {
        let x = c5();
        let r = offdiag_abs_row_sum(&x, 1, &s(&[0, 1])).unwrap();
        assert_eq!(r, RowSumCheck { direct: 2, formula: 2 });
        let d3 = SimplicialComplex::simplex(3);
        for sigma in d3.faces(1) {
            assert_eq!(offdiag_abs_row_sum(&d3, 1, sigma).unwrap(), RowSumCheck { direct: 0, formula: 0 });
        }
        assert!(offdiag_abs_row_sum(&x, 1, &s(&[0, 2])).is_err());
    }

    #[test]
    fn size_cap_is_enforced() {
        // 14 vertices, 3-faces: C(14,4) = 1001; 6-faces: C(14,7) = 3432; fine.
        // Δ_15^(7): C(16, 8) = 12870 7-faces, above the cap.
        let big = SimplicialComplex::skeleton(15, 7).unwrap();
        assert!(matches!(laplacian(&big, 7), Err(Error::SizeCap { .. })));
    }
}
