//! Degree-based lower bounds on spectral gaps.
//!
//! For a complex whose missing faces have dimension at most `d`,
//! `μ_k ≥ (d+1)(δ_k+k+1) - dn`. The bound is reached through a chain of
//! exact integer quantities,
//!
//! ```text
//! (d+1)(δ_k+k+1) - dn  ≤  min_σ [(k+2)deg σ + 2(k+1) - Σ_{τ∈σ(k-1)} deg τ]
//!                       =  Gershgorin bound of L_k  ≤  μ_k,
//! ```
//!
//! and every link of that chain is checked by [`gap_bound`].

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{input, Error, Result};
use crate::linalg::DenseMatrix;
use crate::operators::{boundary_degree_sums, laplacian};
use crate::simplex::Simplex;
use crate::spectral::{betti, spectral_gap};

/// Absolute tolerance when comparing the floating `μ_k` with the integer bound.
pub const BOUND_TOL: f64 = 1e-7;
/// Tolerance for `μ_k` against the Gershgorin bound.
pub const GERSHGORIN_TOL: f64 = 1e-9;

/// `min_i (m_ii - Σ_{j≠i} |m_ij|)`, a lower bound for every real eigenvalue.
pub fn gershgorin_lower_bound(m: &DenseMatrix) -> Result<f64> {
    if m.nrows() != m.ncols() {
        return input(format!("Gershgorin bound needs a square matrix, got {}x{}", m.nrows(), m.ncols()));
    }
    if m.nrows() == 0 {
        return Err(Error::Domain("empty matrix has no eigenvalues".into()));
    }
    Ok((0..m.nrows())
        .map(|i| {
            let off: f64 = m.row(i).iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.abs()).sum();
            m.get(i, i) - off
        })
        .fold(f64::INFINITY, f64::min))
}

/// The `d` used for bounds: `h(X)`, or 0 for a complete simplex.
///
/// Returns `(d, convention)` where `convention` is true when no missing face
/// exists and `d = 0` was substituted.
pub fn effective_d(x: &SimplicialComplex) -> (i64, bool) {
    match x.missing_faces().h {
        Some(h) => (h as i64, false),
        None => (0, true),
    }
}

/// Both sides of the degree-sum inequality and of the exact identity it
/// rests on, for one face `σ ∈ X(k)`, `k ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSumRecord {
    pub sigma: Simplex,
    pub k: isize,
    pub d: i64,
    /// `Σ_{τ∈σ(k-1)} deg τ - (k-d+1) deg σ`
    pub inequality_lhs: i64,
    /// `dn - (d-1)(k+1)`
    pub inequality_rhs: i64,
    /// `Σ_{τ∈σ(k-1)} deg τ`
    pub identity_lhs: i64,
    /// `(k+1)(deg σ + 1) + Σ_{v∉σ, v∉lk σ} |{τ ∈ σ(k-1) : v ∈ lk τ}|`
    pub identity_rhs: i64,
}

impl DegreeSumRecord {
    pub fn inequality_holds(&self) -> bool {
        self.inequality_lhs <= self.inequality_rhs
    }

    pub fn identity_holds(&self) -> bool {
        self.identity_lhs == self.identity_rhs
    }
}

pub fn degree_sum_check(x: &SimplicialComplex, sigma: &Simplex, d: i64) -> Result<DegreeSumRecord> {
    let k = sigma.dim();
    if k < 0 {
        return input("degree sums need a face of dimension >= 0");
    }
    let deg = x.degree(sigma)? as i64;
    let n = x.n() as i64;
    let kk = k as i64;
    let faces: Vec<Simplex> = sigma.boundary_faces().collect();
    let mut identity_lhs = 0i64;
    for tau in &faces {
        identity_lhs += x.degree(tau)? as i64;
    }
    // Vertices outside σ and outside its link, each weighted by how many
    // boundary faces of σ it extends.
    let mut extra = 0i64;
    for v in 0..x.n() {
        let Some(extended) = sigma.with_vertex(v) else { continue };
        if x.contains(&extended) {
            continue;
        }
        extra += faces.iter().filter(|tau| tau.with_vertex(v).is_some_and(|t| x.contains(&t))).count() as i64;
    }
    Ok(DegreeSumRecord {
        sigma: sigma.clone(),
        k,
        d,
        inequality_lhs: identity_lhs - (kk - d + 1) * deg,
        inequality_rhs: d * n - (d - 1) * (kk + 1),
        identity_lhs,
        identity_rhs: (kk + 1) * (deg + 1) + extra,
    })
}

/// Per-dimension check of the gap bound and its proof chain.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub k: isize,
    pub d: i64,
    /// True when `X` has no missing faces and `d = 0` was substituted.
    pub d_convention: bool,
    pub delta_k: usize,
    pub mu_k: f64,
    /// `(d+1)(δ_k+k+1) - dn`
    pub degree_bound: i64,
    /// `min_σ [(k+2)deg σ + 2(k+1) - Σ_{τ∈σ(k-1)} deg τ]`
    pub degree_min: i64,
    pub gershgorin_bound: i64,
    pub slack: f64,
    pub tight: bool,
    /// `degree_bound ≤ degree_min = gershgorin_bound ≤ μ_k`, and `μ_k ≥ degree_bound`.
    pub chain_holds: bool,
    /// Degree-sum inequality and identity for every `σ ∈ X(k)`.
    pub inequality_holds: bool,
}

impl BoundReport {
    pub fn ok(&self) -> bool {
        self.chain_holds && self.inequality_holds
    }

    /// Human-readable list of failed checks.
    pub fn failures(&self) -> Vec<String> {
        let mu = self.mu_k;
        let mut out = Vec::new();
        if mu < self.degree_bound as f64 - BOUND_TOL {
            out.push(format!("mu_{} = {mu} below bound {}", self.k, self.degree_bound));
        }
        if self.degree_bound > self.degree_min {
            out.push(format!("bound {} exceeds degree minimum {}", self.degree_bound, self.degree_min));
        }
        if self.degree_min != self.gershgorin_bound {
            out.push(format!("degree minimum {} differs from Gershgorin {}", self.degree_min, self.gershgorin_bound));
        }
        if mu < self.gershgorin_bound as f64 - GERSHGORIN_TOL {
            out.push(format!("mu_{} = {mu} below Gershgorin {}", self.k, self.gershgorin_bound));
        }
        if !self.inequality_holds {
            out.push(format!("degree-sum check failed in dimension {}", self.k));
        }
        out
    }
}

/// Bound report with `d = h(X)` (or the `d = 0` convention).
pub fn gap_bound(x: &SimplicialComplex, k: isize) -> Result<BoundReport> {
    let (d, convention) = effective_d(x);
    gap_bound_with_d(x, k, d, convention)
}

/// Bound report for a caller-supplied `d`. The bound is only guaranteed for
/// `d = h(X)`; other values are for experiments.
pub fn gap_bound_with_d(x: &SimplicialComplex, k: isize, d: i64, convention: bool) -> Result<BoundReport> {
    if k < -1 || k > x.dim() {
        return Err(Error::Domain(format!("undefined (no {k}-faces)")));
    }
    let n = x.n() as i64;
    let kk = k as i64;
    let deg = x.degrees(k);
    let delta_k = *deg.iter().min().expect("k-faces exist");
    let mu_k = spectral_gap(x, k)?;
    let degree_bound = (d + 1) * (delta_k as i64 + kk + 1) - d * n;

    let sums = boundary_degree_sums(x, k);
    let degree_min =
        deg.iter().zip(&sums).map(|(&g, &s)| (kk + 2) * g as i64 + 2 * (kk + 1) - s).min().expect("k-faces exist");
    let gershgorin_bound = laplacian(x, k)?.entries.gershgorin_lower_bound()?;

    let inequality_holds = if k >= 0 {
        let mut ok = true;
        for sigma in x.faces(k) {
            let rec = degree_sum_check(x, sigma, d)?;
            ok &= rec.inequality_holds() && rec.identity_holds();
        }
        ok
    } else {
        true
    };

    let slack = mu_k - degree_bound as f64;
    let chain_holds = mu_k >= degree_bound as f64 - BOUND_TOL
        && degree_bound <= degree_min
        && degree_min == gershgorin_bound
        && mu_k >= gershgorin_bound as f64 - GERSHGORIN_TOL;
    Ok(BoundReport {
        k,
        d,
        d_convention: convention,
        delta_k,
        mu_k,
        degree_bound,
        degree_min,
        gershgorin_bound,
        slack,
        tight: slack.abs() <= BOUND_TOL,
        chain_holds,
        inequality_holds,
    })
}

/// Reports for every `k = -1..=dim X`.
pub fn bound_profile(x: &SimplicialComplex) -> Result<Vec<BoundReport>> {
    let (d, convention) = effective_d(x);
    (-1..=x.dim()).map(|k| gap_bound_with_d(x, k, d, convention)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingCheck {
    pub d: i64,
    /// Smallest `k` with `k > dn/(d+1) - 1`.
    pub k_min: isize,
    /// Every `β_k` with `k_min ≤ k ≤ dim X` vanishes.
    pub verified: bool,
}

/// Smallest integer above the cohomology vanishing threshold `dn/(d+1) - 1`.
pub fn vanishing_k_min(d: i64, n: usize) -> isize {
    // k > dn/(d+1) - 1  <=>  (k+1)(d+1) > dn  <=>  k >= floor(dn/(d+1)).
    (d * n as i64).div_euclid(d + 1) as isize
}

pub fn vanishing_threshold(x: &SimplicialComplex) -> Result<VanishingCheck> {
    let (d, _) = effective_d(x);
    let k_min = vanishing_k_min(d, x.n());
    let mut verified = true;
    for k in k_min.max(-1)..=x.dim() {
        if betti(x, k)? != 0 {
            verified = false;
        }
    }
    Ok(VanishingCheck { d, k_min, verified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn c5() -> SimplicialComplex {
        let edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        SimplicialComplex::clique_complex(5, &edges).unwrap()
    }

    #[test]
    fn gershgorin_examples() {
        assert_eq!(gershgorin_lower_bound(&DenseMatrix::identity(4)).unwrap(), 1.0);
        let m = DenseMatrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 2.0]]).unwrap();
        assert_eq!(gershgorin_lower_bound(&m).unwrap(), 1.0);
        let l = laplacian(&c5(), 0).unwrap().entries.to_dense();
        assert_eq!(gershgorin_lower_bound(&l).unwrap(), 1.0);
        assert!(gershgorin_lower_bound(&DenseMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn degree_sum_on_c5_edge() {
        let rec = degree_sum_check(&c5(), &s(&[0, 1]), 1).unwrap();
        assert_eq!((rec.identity_lhs, rec.identity_rhs), (4, 4));
        assert_eq!((rec.inequality_lhs, rec.inequality_rhs), (4, 5));
        assert!(rec.inequality_holds() && rec.identity_holds());
    }

    #[test]
    fn degree_sum_on_complete_complex_is_tight() {
        for n in 2..7usize {
            let x = SimplicialComplex::simplex(n - 1);
            for k in 0..n as isize {
                for sigma in x.faces(k) {
                    let rec = degree_sum_check(&x, sigma, 0).unwrap();
                    let k1 = (k + 1) as i64;
                    assert_eq!(rec.inequality_lhs, k1);
                    assert_eq!(rec.inequality_rhs, k1);
                    assert!(rec.identity_holds());
                }
            }
        }
    }

    #[test]
    fn c5_vertex_bound() {
        let r = gap_bound(&c5(), 0).unwrap();
        assert_eq!((r.d, r.delta_k, r.degree_bound), (1, 2, 1));
        assert_eq!(r.gershgorin_bound, 1);
        assert_eq!(r.degree_min, 1);
        assert_abs_diff_eq!(r.mu_k, 1.381966011250105, epsilon = 1e-9);
        assert!(r.ok() && !r.tight);
        assert!(r.failures().is_empty());
    }

    #[test]
    fn minus_one_is_always_tight() {
        for x in [c5(), SimplicialComplex::skeleton(3, 1).unwrap(), SimplicialComplex::simplex(2)] {
            let r = gap_bound(&x, -1).unwrap();
            assert_eq!(r.degree_bound, x.n() as i64);
            assert!(r.tight && r.ok());
        }
    }

    #[test]
    fn complete_complex_uses_zero_convention() {
        let x = SimplicialComplex::simplex(3);
        for r in bound_profile(&x).unwrap() {
            assert!(r.d_convention);
            assert_eq!(r.degree_bound, 4);
            assert!(r.tight && r.ok(), "{r:?}");
        }
    }

    #[test]
    fn out_of_range_dimension() {
        assert!(matches!(gap_bound(&c5(), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn vanishing_examples() {
        assert_eq!(vanishing_k_min(1, 5), 2);
        assert_eq!(vanishing_k_min(2, 6), 4);
        let v = vanishing_threshold(&c5()).unwrap();
        assert_eq!((v.d, v.k_min, v.verified), (1, 2, true));
        let v = vanishing_threshold(&SimplicialComplex::simplex(4)).unwrap();
        assert!(v.verified);
        assert_eq!(v.k_min, 0);
    }
}
