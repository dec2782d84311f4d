//! Laplacian spectra, spectral gaps and reduced Betti numbers.
//!
//! Betti numbers are computed twice: as the numerical kernel dimension of
//! `L_k`, and as `|X(k)| - rank δ_k - rank δ_{k-1}` over the prime field
//! `F_p`, `p = 2^31 - 1`. A disagreement is an integrity error.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{input, Error, Result};
use crate::linalg::{symmetric_eigenvalues, IntMatrix};
use crate::operators::{coboundary_matrix, laplacian, OperatorMatrix};

/// Eigenvalues below this are treated as zero when counting kernels.
pub const ZERO_TOL: f64 = 1e-7;
/// Default gap tolerance for grouping eigenvalues into multiplicities.
pub const GROUPING_TOL: f64 = 1e-8;
/// Prime used for exact rank computations.
pub const RANK_PRIME: u64 = (1 << 31) - 1;

/// Sorted multiset of real eigenvalues. Serializes as a plain array.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Serialize for Spectrum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum { values, tol: GROUPING_TOL }
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// `(value, multiplicity)` groups; consecutive values closer than the
    /// tolerance share a group, reported by the group's first value.
    pub fn multiplicities(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut prev: Option<f64> = None;
        for &v in &self.values {
            match (prev, out.last_mut()) {
                (Some(p), Some(last)) if v - p <= self.tol => last.1 += 1,
                _ => out.push((v, 1)),
            }
            prev = Some(v);
        }
        out
    }

    pub fn count_below(&self, threshold: f64) -> usize {
        self.values.iter().take_while(|&&v| v < threshold).count()
    }

    /// Multiset equality: same size and sorted values pairwise within `tol`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(a, b)| (a - b).abs() <= tol)
    }

    pub fn max_abs_diff(&self, other: &Spectrum) -> Option<f64> {
        (self.values.len() == other.values.len())
            .then(|| self.values.iter().zip(&other.values).fold(0.0f64, |m, (a, b)| m.max((a - b).abs())))
    }
}

/// Full spectrum of a symmetric operator.
pub fn eigenvalues(m: &OperatorMatrix) -> Result<Spectrum> {
    if let Some((row, col)) = m.entries.asymmetry() {
        return Err(Error::Asymmetric { row, col });
    }
    Ok(Spectrum::new(symmetric_eigenvalues(&m.entries.to_dense())?))
}

fn check_defined(x: &SimplicialComplex, k: isize) -> Result<()> {
    if k < -1 {
        return input(format!("dimension {k} below -1"));
    }
    if x.face_count(k) == 0 {
        return Err(Error::Domain(format!("undefined (no {k}-faces)")));
    }
    Ok(())
}

/// Spectrum of `L_k(X)`; `k = -1` gives `{n}` without eigensolving.
pub fn laplacian_spectrum(x: &SimplicialComplex, k: isize) -> Result<Spectrum> {
    check_defined(x, k)?;
    if k == -1 {
        return Ok(Spectrum::new(vec![x.n() as f64]));
    }
    eigenvalues(&laplacian(x, k)?)
}

/// `μ_k(X)`, the smallest eigenvalue of `L_k`.
pub fn spectral_gap(x: &SimplicialComplex, k: isize) -> Result<f64> {
    Ok(laplacian_spectrum(x, k)?.min().expect("k-faces exist"))
}

/// Closed-form spectrum of `L_i(Δ_{n-1}^{(k)})`.
pub fn skeleton_spectrum(n: usize, k: isize, i: isize) -> Result<Spectrum> {
    if n == 0 || i < -1 || i > k || k > n as isize - 1 {
        return input(format!("skeleton spectrum needs -1 <= i <= k <= n-1, got n={n}, k={k}, i={i}"));
    }
    let nf = n as f64;
    let values = if i < k {
        vec![nf; binomial(n, (i + 1) as usize)]
    } else {
        let zeros = binomial(n - 1, (k + 1) as usize);
        let full = if k >= 0 { binomial(n - 1, k as usize) } else { 0 };
        let mut v = vec![0.0; zeros];
        v.extend(std::iter::repeat_n(nf, full));
        v
    };
    Ok(Spectrum::new(values))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Rank of an integer matrix over `F_p`, `p = 2^31 - 1`.
pub fn rank_mod_p(m: &IntMatrix) -> usize {
    let p = RANK_PRIME;
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    // Pivot rows keyed by leading column, normalized to a leading 1.
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut rank = 0;
    for i in 0..m.nrows() {
        let mut row: Vec<(usize, u64)> = m.row(i).iter().map(|&(j, v)| (j, reduce(v))).filter(|e| e.1 != 0).collect();
        while let Some(&(lead, coef)) = row.first() {
            match pivots.get(&lead) {
                Some(piv) => row = axpy_mod(&row, piv, p - coef, p),
                None => {
                    let inv = pow_mod(coef, p - 2, p);
                    pivots.insert(lead, row.iter().map(|&(j, v)| (j, v * inv % p)).collect());
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `a + s·b` over sparse sorted rows.
fn axpy_mod(a: &[(usize, u64)], b: &[(usize, u64)], s: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (col, val) = match (a.get(i), b.get(j)) {
            (Some(&(ca, va)), Some(&(cb, _))) if ca < cb => {
                i += 1;
                (ca, va)
            }
            (Some(&(ca, va)), Some(&(cb, vb))) if ca == cb => {
                i += 1;
                j += 1;
                (ca, (va + s * vb % p) % p)
            }
            (_, Some(&(cb, vb))) => {
                j += 1;
                (cb, s * vb % p)
            }
            (Some(&(ca, va)), None) => {
                i += 1;
                (ca, va)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((col, val));
        }
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `β_k = |X(k)| - rank δ_k - rank δ_{k-1}` over `F_p`.
pub fn betti_exact(x: &SimplicialComplex, k: isize) -> Result<usize> {
    check_defined(x, k)?;
    let up = rank_mod_p(&coboundary_matrix(x, k)?.entries);
    let down = if k >= 0 { rank_mod_p(&coboundary_matrix(x, k - 1)?.entries) } else { 0 };
    Ok(x.face_count(k) - up - down)
}

/// Number of eigenvalues of `spectrum` below [`ZERO_TOL`].
pub fn kernel_dimension(spectrum: &Spectrum) -> usize {
    spectrum.count_below(ZERO_TOL)
}

fn hodge_checked(x: &SimplicialComplex, k: isize, spectrum: &Spectrum, tol: f64) -> Result<usize> {
    let numeric = spectrum.count_below(tol);
    let exact = betti_exact(x, k)?;
    if numeric != exact {
        return Err(Error::Integrity(format!(
            "dimension {k}: numerical kernel {numeric} but exact Betti number {exact}"
        )));
    }
    Ok(exact)
}

/// Reduced Betti number `dim ker L_k`, cross-checked against exact rank.
pub fn betti(x: &SimplicialComplex, k: isize) -> Result<usize> {
    betti_with_tolerance(x, k, ZERO_TOL)
}

/// [`betti`] with a caller-chosen zero threshold for the numerical kernel.
pub fn betti_with_tolerance(x: &SimplicialComplex, k: isize, tol: f64) -> Result<usize> {
    if tol.is_nan() || tol <= 0.0 {
        return input(format!("zero tolerance must be positive, got {tol}"));
    }
    let spectrum = laplacian_spectrum(x, k)?;
    hodge_checked(x, k, &spectrum, tol)
}

/// Spectrum of `L_k(X_1 * ... * X_m)` from the factors' spectra.
///
/// `factors[j][i + 1]` is the spectrum of `L_i(X_j)` for `i = -1..=dim X_j`.
/// Each index tuple with `Σ i_j = k - m + 1` contributes the sumset of the
/// chosen spectra. Out of range `k` gives an empty spectrum.
pub fn join_spectrum(factors: &[Vec<Spectrum>], k: isize) -> Spectrum {
    let m = factors.len() as isize;
    let mut out = Vec::new();
    if m == 0 {
        return Spectrum::new(out);
    }
    let target = k - m + 1;
    let mut tuple = vec![-1isize; factors.len()];
    collect_tuples(factors, 0, target, &mut tuple, &mut out);
    Spectrum::new(out)
}

fn collect_tuples(factors: &[Vec<Spectrum>], j: usize, remaining: isize, tuple: &mut Vec<isize>, out: &mut Vec<f64>) {
    if j == factors.len() {
        if remaining == 0 {
            let mut sums = vec![0.0];
            for (f, &i) in factors.iter().zip(tuple.iter()) {
                let spec = &f[(i + 1) as usize];
                sums = sums.iter().flat_map(|&a| spec.values().iter().map(move |&b| a + b)).collect();
            }
            out.extend(sums);
        }
        return;
    }
    let top = factors[j].len() as isize - 2;
    for i in -1..=top {
        tuple[j] = i;
        collect_tuples(factors, j + 1, remaining - i, tuple, out);
    }
}

/// Spectra of `L_i(X)` for every `i = -1..=dim X`, ready for [`join_spectrum`].
pub fn all_spectra(x: &SimplicialComplex) -> Result<Vec<Spectrum>> {
    (-1..=x.dim()).map(|k| laplacian_spectrum(x, k)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProfileRecord {
    pub k: isize,
    pub gap: f64,
    pub betti: usize,
    pub spectrum: Spectrum,
}

/// Per-dimension gap, Betti number and spectrum for `k = -1..=dim X`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralProfile {
    pub n: usize,
    pub dim: isize,
    pub profile: Vec<ProfileRecord>,
}

pub fn spectral_profile(x: &SimplicialComplex) -> Result<SpectralProfile> {
    let profile = (-1..=x.dim()).map(|k| profile_record(x, k)).collect::<Result<Vec<_>>>()?;
    Ok(SpectralProfile { n: x.n(), dim: x.dim(), profile })
}

pub fn profile_record(x: &SimplicialComplex, k: isize) -> Result<ProfileRecord> {
    let spectrum = laplacian_spectrum(x, k)?;
    let betti = hodge_checked(x, k, &spectrum, ZERO_TOL)?;
    Ok(ProfileRecord { k, gap: spectrum.min().expect("k-faces exist"), betti, spectrum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c5() -> SimplicialComplex {
        let edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        SimplicialComplex::clique_complex(5, &edges).unwrap()
    }

    #[test]
    fn c5_vertex_spectrum_matches_circulant_analysis() {
        // Graph Laplacian eigenvalues 2 - 2cos(2πj/5), j = 1..4, plus 5 on
        // the all-ones vector from the rank-one term.
        let spec = laplacian_spectrum(&c5(), 0).unwrap();
        let mut expect: Vec<f64> =
            (1..5).map(|j| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * j as f64 / 5.0).cos()).collect();
        expect.push(5.0);
        let expect = Spectrum::new(expect);
        assert!(spec.approx_eq(&expect, 1e-10), "{spec:?}");
        assert_abs_diff_eq!(spectral_gap(&c5(), 0).unwrap(), 1.381966011250105, epsilon = 1e-9);
        let groups = spec.multiplicities();
        assert_eq!(groups.iter().map(|g| g.1).collect::<Vec<_>>(), vec![2, 2, 1]);
    }

    #[test]
    fn gap_minus_one_is_n_and_undefined_above_dim() {
        assert_eq!(spectral_gap(&c5(), -1).unwrap(), 5.0);
        assert!(matches!(spectral_gap(&c5(), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn skeleton_spectrum_closed_forms() {
        let s = skeleton_spectrum(4, 1, 1).unwrap();
        assert_eq!(s.values(), &[0.0, 0.0, 0.0, 4.0, 4.0, 4.0]);
        assert_eq!(skeleton_spectrum(4, 1, 0).unwrap().values(), &[4.0; 4]);
        assert_eq!(skeleton_spectrum(4, 1, -1).unwrap().values(), &[4.0]);
        assert_eq!(skeleton_spectrum(3, -1, -1).unwrap().values(), &[0.0]);
        assert!(skeleton_spectrum(4, 1, 2).is_err());
    }

    #[test]
    fn betti_examples() {
        let b = SimplicialComplex::skeleton(2, 1).unwrap();
        assert_eq!(betti(&b, 1).unwrap(), 1);
        assert_eq!(betti(&b, 0).unwrap(), 0);
        let s0 = SimplicialComplex::skeleton(1, 0).unwrap();
        assert_eq!(betti(&s0, 0).unwrap(), 1);
        for m in 0..5 {
            let d = SimplicialComplex::simplex(m);
            for k in -1..=m as isize {
                assert_eq!(betti(&d, k).unwrap(), 0);
            }
        }
        let void = SimplicialComplex::simplex(2).induced(&[]).unwrap().complex;
        assert_eq!(betti(&void, -1).unwrap(), 1);
    }

    #[test]
    fn rank_mod_p_small() {
        let m = IntMatrix::from_dense(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank_mod_p(&m), 2);
        assert_eq!(rank_mod_p(&IntMatrix::zeros(3, 3)), 0);
        let id = IntMatrix::diagonal(&[1, -1, 5]);
        assert_eq!(rank_mod_p(&id), 3);
    }

    #[test]
    fn join_of_two_point_complexes() {
        let s0 = SimplicialComplex::skeleton(1, 0).unwrap();
        let f = all_spectra(&s0).unwrap();
        let composed = join_spectrum(&[f.clone(), f], 0);
        assert_eq!(composed.values(), &[2.0, 2.0, 4.0, 4.0]);
        let direct = laplacian_spectrum(&s0.join(&s0), 0).unwrap();
        assert!(composed.approx_eq(&direct, 1e-10));
        assert!(join_spectrum(&[all_spectra(&s0).unwrap()], 5).is_empty());
    }

    #[test]
    fn grouping_respects_tolerance() {
        let s = Spectrum::new(vec![1.0, 1.0 + 1e-9, 2.0, 2.5]);
        assert_eq!(s.multiplicities(), vec![(1.0, 2), (2.0, 1), (2.5, 1)]);
        let s = s.with_tolerance(0.6);
        assert_eq!(s.multiplicities(), vec![(1.0, 2), (2.0, 2)]);
    }
}
