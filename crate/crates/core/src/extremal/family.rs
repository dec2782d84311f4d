//! The join family `(Δ_d^{(d-1)})^{*t} * Δ_{r-1}` and its closed-form profile.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{input, Error, Result};
use crate::operators::MAX_BASIS;
use crate::spectral::{all_spectra, join_spectrum, laplacian_spectrum};

/// Tolerance for closed-form gaps against eigensolved ones.
pub const PROFILE_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZParams {
    pub d: usize,
    pub t: usize,
    pub r: usize,
}

impl ZParams {
    pub fn new(d: usize, t: usize, r: usize) -> Result<Self> {
        if d == 0 || t == 0 || r == 0 {
            return Err(Error::Unsupported(format!("Z({d},{t},{r}) needs d, t, r >= 1")));
        }
        Ok(ZParams { d, t, r })
    }

    pub fn n(&self) -> usize {
        (self.d + 1) * self.t + self.r
    }

    pub fn dim(&self) -> isize {
        (self.d * self.t + self.r) as isize - 1
    }
}

/// `(Δ_d^{(d-1)})^{*t} * Δ_{r-1}` for any `d >= 1`, `t, r >= 0`.
///
/// Copy `i` of the skeleton occupies vertices `i(d+1)..(i+1)(d+1)`; the
/// simplex takes the last `r` ids. `r = 0` contributes the void complex.
pub fn skeleton_join(d: usize, t: usize, r: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return input("skeleton joins need d >= 1");
    }
    if t == 0 && r == 0 {
        return input("empty join has no vertices");
    }
    let factor = SimplicialComplex::skeleton(d, d as isize - 1)?;
    let tail = SimplicialComplex::skeleton(r.saturating_sub(1), r as isize - 1)?;
    let mut acc: Option<SimplicialComplex> = None;
    for _ in 0..t {
        acc = Some(match acc {
            None => factor.clone(),
            Some(x) => x.join(&factor),
        });
    }
    Ok(match acc {
        None => tail,
        Some(x) if r > 0 => x.join(&tail),
        Some(x) => x,
    })
}

/// `Z(d,t,r)`.
pub fn build_z(p: ZParams) -> SimplicialComplex {
    skeleton_join(p.d, p.t, p.r).expect("validated parameters")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedRow {
    pub k: isize,
    pub mu: i64,
    pub delta: i64,
}

/// Closed forms for `μ_k(Z)` and `δ_k(Z)`, `k = -1..=dt+r-1`.
pub fn predicted_profile_z(p: ZParams) -> Vec<PredictedRow> {
    let (d, t, r, n) = (p.d as i64, p.t as i64, p.r as i64, p.n() as i64);
    (-1..=p.dim())
        .map(|k| {
            let kk = k as i64;
            // Number of skeleton factors that can sit in their top dimension.
            let m = if kk < d * t { (kk + 1).div_euclid(d) } else { t };
            PredictedRow { k, mu: (d + 1) * (t - m) + r, delta: n - (kk + 1) - m }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZFamilyRow {
    pub k: isize,
    pub predicted_mu: i64,
    pub actual_mu: f64,
    pub join_mu: f64,
    pub predicted_delta: i64,
    pub actual_delta: usize,
    /// `(d+1)(δ_k+k+1) - dn`, from the enumerated `δ_k`.
    pub bound_from_delta: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZFamilyReport {
    pub params: ZParams,
    pub n: usize,
    pub dim: isize,
    pub rows: Vec<ZFamilyRow>,
}

impl ZFamilyReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }
}

/// Builds `Z`, eigensolves every `L_k`, enumerates every `δ_k`, and compares
/// both with the closed forms. Gaps are also recomposed from the join factors.
pub fn verify_z_family(p: ZParams) -> Result<ZFamilyReport> {
    let z = build_z(p);
    for k in -1..=z.dim() {
        let size = z.face_count(k);
        if size > MAX_BASIS {
            return Err(Error::SizeCap { dim: k, size, cap: MAX_BASIS });
        }
    }
    let skeleton = all_spectra(&SimplicialComplex::skeleton(p.d, p.d as isize - 1)?)?;
    let simplex = all_spectra(&SimplicialComplex::simplex(p.r - 1))?;
    let mut factors = vec![skeleton; p.t];
    factors.push(simplex);

    let (d, n) = (p.d as i64, p.n() as i64);
    let mut rows = Vec::new();
    for pred in predicted_profile_z(p) {
        let k = pred.k;
        let actual_mu = laplacian_spectrum(&z, k)?.min().expect("k-faces exist");
        let join_mu = join_spectrum(&factors, k).min().unwrap_or(f64::NAN);
        let actual_delta = z.min_degree(k)?;
        let bound_from_delta = (d + 1) * (actual_delta as i64 + k as i64 + 1) - d * n;
        let mu = pred.mu as f64;
        let ok = (actual_mu - mu).abs() <= PROFILE_TOL
            && (join_mu - mu).abs() <= PROFILE_TOL
            && actual_delta as i64 == pred.delta
            && bound_from_delta == pred.mu;
        rows.push(ZFamilyRow {
            k,
            predicted_mu: pred.mu,
            actual_mu,
            join_mu,
            predicted_delta: pred.delta,
            actual_delta,
            bound_from_delta,
            ok,
        });
    }
    Ok(ZFamilyReport { params: p, n: z.n(), dim: z.dim(), rows })
}

/// `(Δ_d^{(d-1)})^{*(n-k-1)} * Δ_{(d+1)(k+1)-dn-1}`, the conjectured unique
/// complex with `μ_k = (d+1)(k+1) - dn`. Needs `n-k-1 >= 0` and
/// `(d+1)(k+1) - dn >= 0`.
pub fn canonical_complex(d: usize, n: usize, k: isize) -> Result<SimplicialComplex> {
    let (di, ni, ki) = (d as i64, n as i64, k as i64);
    let t = ni - ki - 1;
    let r = (di + 1) * (ki + 1) - di * ni;
    if d == 0 || t < 0 || r < 0 || n == 0 {
        return input(format!("no canonical complex for d={d}, n={n}, k={k}"));
    }
    skeleton_join(d, t as usize, r as usize)
}

/// `(Δ_1^{(0)})^{*(n-k-1)} * Δ_{2(k+1)-n-1}`.
pub fn canonical_equality_complex(n: usize, k: isize) -> Result<SimplicialComplex> {
    canonical_complex(1, n, k)
}

/// `k` values for which [`canonical_complex`] exists on `n` vertices.
pub fn admissible_dimensions(d: usize, n: usize) -> Vec<isize> {
    (-1..n as isize).filter(|&k| canonical_complex(d, n, k).is_ok()).collect()
}
