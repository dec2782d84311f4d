//! Search for complexes with `h(X) = d` attaining `μ_k = (d+1)(k+1) - dn`.
//!
//! Complexes are given by their missing faces: antichains of 2..=(d+1)-sets
//! containing at least one (d+1)-set. Exhaustive mode walks every labelled
//! antichain; random mode samples a fixed number of them from a seeded RNG.
//! A complex reaches the eigensolver only if its exact Gershgorin bound does
//! not already exceed the target.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::BOUND_TOL;
use crate::complex::SimplicialComplex;
use crate::error::{input, Error, Result};
use crate::operators::laplacian_closed_form;
use crate::simplex::Simplex;
use crate::spectral::{eigenvalues, laplacian_spectrum};

use super::equality::{equality_check, equality_target};
use super::iso::{isomorphic, ISO_MAX_VERTICES};

/// Hits are re-verified at this tolerance through the closed-form operator.
pub const HIT_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProbeMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    pub d: usize,
    pub n: usize,
    pub mode: ProbeMode,
    /// Exhaustive: cap on antichains examined. Random: number of samples.
    pub budget: Option<u64>,
    pub seed: u64,
}

/// Largest vertex count accepted by the exhaustive walk.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 9;

/// Default sample count in random mode.
pub const DEFAULT_RANDOM_BUDGET: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeHit {
    pub n: usize,
    pub d: usize,
    pub k: isize,
    pub mu: f64,
    pub target: i64,
    pub isomorphic_to_canonical: bool,
    pub facets: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<f64>>,
}

/// A complex whose gap falls below the target, i.e. below the lower bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundViolation {
    pub k: isize,
    pub mu: f64,
    pub target: i64,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub d: usize,
    pub n: usize,
    pub mode: ProbeMode,
    pub seed: u64,
    /// Antichains examined.
    pub examined: u64,
    /// Complexes sent to the eigensolver.
    pub eigensolved: u64,
    /// Whether the exhaustive walk finished within budget.
    pub complete: bool,
    /// One representative per isomorphism class and dimension.
    pub hits: Vec<ProbeHit>,
    pub counterexamples: usize,
    pub bound_violations: Vec<BoundViolation>,
    /// Dimensions at which the canonical complex was among the hits.
    pub canonical_found: Vec<isize>,
}

/// Face table over all `2^n` vertex subsets for the complex with the given
/// missing faces.
fn face_table(n: usize, missing: &[u32]) -> Vec<bool> {
    let mut nonface = vec![false; 1 << n];
    for &m in missing {
        nonface[m as usize] = true;
    }
    for s in 0..1usize << n {
        if nonface[s] {
            for v in 0..n {
                nonface[s | 1 << v] = true;
            }
        }
    }
    nonface.iter().map(|&b| !b).collect()
}

/// `min_σ (L_k(σ,σ) - Σ_{τ≠σ} |L_k(σ,τ)|)` over the k-faces, straight from the
/// face table. `None` if there are no k-faces.
fn gershgorin_from_table(n: usize, faces: &[bool], k: isize) -> Option<i64> {
    let size = (k + 1) as u32;
    let full = (1u32 << n) - 1;
    let mut best: Option<i64> = None;
    for s in 0..=full {
        if s.count_ones() != size || !faces[s as usize] {
            continue;
        }
        let outside = full & !s;
        let mut deg = 0i64;
        let mut up = 0u32;
        let mut o = outside;
        while o != 0 {
            let v = o & o.wrapping_neg();
            if faces[(s | v) as usize] {
                deg += 1;
                up |= v;
            }
            o &= o - 1;
        }
        // Neighbours σ - u + v with σ + v missing.
        let mut off = 0i64;
        let mut inner = s;
        while inner != 0 {
            let u = inner & inner.wrapping_neg();
            let mut o = outside & !up;
            while o != 0 {
                let v = o & o.wrapping_neg();
                if faces[((s & !u) | v) as usize] {
                    off += 1;
                }
                o &= o - 1;
            }
            inner &= inner - 1;
        }
        let row = deg + k as i64 + 1 - off;
        best = Some(best.map_or(row, |b| b.min(row)));
    }
    best
}

fn masks_to_simplices(masks: &[u32]) -> Vec<Simplex> {
    masks.iter().map(|&m| Simplex::from_mask(m as u64)).collect()
}

fn facet_lists(x: &SimplicialComplex) -> Vec<Vec<usize>> {
    x.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

struct Evaluator {
    d: usize,
    n: usize,
    dims: Vec<(isize, i64)>,
    eigensolved: u64,
    hits: Vec<(SimplicialComplex, ProbeHit)>,
    violations: Vec<BoundViolation>,
}

impl Evaluator {
    fn new(d: usize, n: usize) -> Self {
        let dims = (0..n as isize).map(|k| (k, equality_target(d, n, k))).filter(|&(_, t)| t >= 0).collect();
        Evaluator { d, n, dims, eigensolved: 0, hits: Vec::new(), violations: Vec::new() }
    }

    fn evaluate(&mut self, missing: &[u32]) -> Result<()> {
        let faces = face_table(self.n, missing);
        let mut complex: Option<SimplicialComplex> = None;
        for &(k, target) in &self.dims {
            let Some(gersh) = gershgorin_from_table(self.n, &faces, k) else { break };
            if gersh > target {
                continue;
            }
            let x = match &complex {
                Some(x) => x,
                None => complex.insert(SimplicialComplex::from_missing_faces(self.n, &masks_to_simplices(missing))?),
            };
            self.eigensolved += 1;
            let spectrum = laplacian_spectrum(x, k)?;
            let mu = spectrum.min().expect("k-faces exist");
            if mu < target as f64 - BOUND_TOL {
                self.violations.push(BoundViolation { k, mu, target, facets: facet_lists(x) });
                continue;
            }
            if (mu - target as f64).abs() > BOUND_TOL {
                continue;
            }
            let check = eigenvalues(&laplacian_closed_form(x, k)?)?.min().expect("k-faces exist");
            if (check - target as f64).abs() > HIT_TOL || (mu - target as f64).abs() > HIT_TOL {
                return Err(Error::Integrity(format!(
                    "near-equality at k = {k} did not survive re-verification: {mu} vs {check}, target {target}"
                )));
            }
            let mut duplicate = false;
            for (y, hit) in &self.hits {
                if hit.k == k && isomorphic(x, y)?.is_some() {
                    duplicate = true;
                    break;
                }
            }
            if duplicate {
                continue;
            }
            let verdict = equality_check(x, k, self.d)?;
            debug_assert!(verdict.holds);
            let canonical = verdict.canonical_iso.is_some();
            let hit = ProbeHit {
                n: self.n,
                d: self.d,
                k,
                mu,
                target,
                isomorphic_to_canonical: canonical,
                facets: facet_lists(x),
                spectrum: (!canonical).then(|| spectrum.values().to_vec()),
            };
            self.hits.push((x.clone(), hit));
        }
        Ok(())
    }
}

/// Candidate missing faces, ordered by size then lexicographically.
fn candidates(n: usize, d: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0..1u32 << n).filter(|m| (2..=d as u32 + 1).contains(&m.count_ones())).collect();
    out.sort_by_key(|&m| (m.count_ones(), Simplex::from_mask(m as u64)));
    out
}

struct Walk<'a> {
    cands: &'a [u32],
    top: u32,
    budget: u64,
    examined: u64,
    chosen: Vec<u32>,
    eval: &'a mut Evaluator,
}

impl Walk<'_> {
    /// Returns `false` once the budget is exhausted.
    fn rec(&mut self, i: usize, has_top: bool) -> Result<bool> {
        if i == self.cands.len() {
            if has_top {
                if self.examined == self.budget {
                    return Ok(false);
                }
                self.examined += 1;
                self.eval.evaluate(&self.chosen)?;
            }
            return Ok(true);
        }
        let c = self.cands[i];
        // Exclude first, then include if no chosen set lies inside `c`.
        if !self.rec(i + 1, has_top)? {
            return Ok(false);
        }
        if self.chosen.iter().all(|&m| m & c != m) {
            self.chosen.push(c);
            let ok = self.rec(i + 1, has_top || c.count_ones() == self.top)?;
            self.chosen.pop();
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn random_antichain(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Vec<u32> {
    loop {
        let count = rng.random_range(1..=n);
        let mut sets: Vec<u32> = (0..count)
            .map(|_| {
                let size = if d == 1 || rng.random_range(0..4) > 0 { d + 1 } else { rng.random_range(2..=d) };
                let mut verts: Vec<usize> = (0..n).collect();
                for i in 0..size {
                    let j = rng.random_range(i..n);
                    verts.swap(i, j);
                }
                verts[..size].iter().fold(0u32, |m, &v| m | 1 << v)
            })
            .collect();
        sets.sort_by_key(|m| (m.count_ones(), *m));
        sets.dedup();
        let minimal: Vec<u32> = sets.iter().copied().filter(|&s| !sets.iter().any(|&m| m != s && m & s == m)).collect();
        if minimal.iter().any(|m| m.count_ones() == d as u32 + 1) {
            return minimal;
        }
    }
}

pub fn conjecture_probe(config: ProbeConfig) -> Result<ProbeReport> {
    let ProbeConfig { d, n, mode, budget, seed } = config;
    if d == 0 {
        return input("probe needs d >= 1");
    }
    if n < d + 1 {
        return input(format!("no (d+1)-subsets of {n} vertices for d = {d}"));
    }
    if n > ISO_MAX_VERTICES {
        return Err(Error::SizeCap { dim: d as isize, size: n, cap: ISO_MAX_VERTICES });
    }
    if mode == ProbeMode::Exhaustive && n > EXHAUSTIVE_MAX_VERTICES {
        return Err(Error::SizeCap { dim: d as isize, size: n, cap: EXHAUSTIVE_MAX_VERTICES });
    }
    let mut eval = Evaluator::new(d, n);
    let (examined, complete) = match mode {
        ProbeMode::Exhaustive => {
            let cands = candidates(n, d);
            let mut walk = Walk {
                cands: &cands,
                top: d as u32 + 1,
                budget: budget.unwrap_or(u64::MAX),
                examined: 0,
                chosen: Vec::new(),
                eval: &mut eval,
            };
            let complete = walk.rec(0, false)?;
            (walk.examined, complete)
        }
        ProbeMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let samples = budget.unwrap_or(DEFAULT_RANDOM_BUDGET);
            for _ in 0..samples {
                let missing = random_antichain(&mut rng, n, d);
                eval.evaluate(&missing)?;
            }
            (samples, false)
        }
    };
    let hits: Vec<ProbeHit> = eval.hits.into_iter().map(|(_, h)| h).collect();
    let counterexamples = hits.iter().filter(|h| !h.isomorphic_to_canonical).count();
    let mut canonical_found: Vec<isize> = hits.iter().filter(|h| h.isomorphic_to_canonical).map(|h| h.k).collect();
    canonical_found.sort_unstable();
    canonical_found.dedup();
    Ok(ProbeReport {
        d,
        n,
        mode,
        seed,
        examined,
        eigensolved: eval.eigensolved,
        complete,
        hits,
        counterexamples,
        bound_violations: eval.violations,
        canonical_found,
    })
}
