//! Complexes attaining `μ_k = (d+1)(k+1) - dn`.

use serde::Serialize;

use crate::bounds::BOUND_TOL;
use crate::complex::SimplicialComplex;
use crate::error::{input, Error, Result};
use crate::spectral::spectral_gap;

use super::family::canonical_complex;
use super::iso::isomorphic;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EqualityVerdict {
    pub k: isize,
    pub d: usize,
    pub mu: f64,
    pub target: i64,
    pub holds: bool,
    /// Witness isomorphism onto the canonical complex, when equality holds.
    pub canonical_iso: Option<Vec<usize>>,
}

impl EqualityVerdict {
    /// Equality holds but the complex is not the canonical one.
    pub fn is_counterexample(&self) -> bool {
        self.holds && self.canonical_iso.is_none()
    }
}

/// `(d+1)(k+1) - dn`.
pub fn equality_target(d: usize, n: usize, k: isize) -> i64 {
    (d as i64 + 1) * (k as i64 + 1) - d as i64 * n as i64
}

/// Tests `μ_k(X) = (d+1)(k+1) - dn` and, when it holds, looks for an
/// isomorphism onto the canonical complex. Never fails on a mismatch.
pub fn equality_check(x: &SimplicialComplex, k: isize, d: usize) -> Result<EqualityVerdict> {
    let n = x.n();
    let target = equality_target(d, n, k);
    let mu = spectral_gap(x, k)?;
    let holds = (mu - target as f64).abs() <= BOUND_TOL;
    let canonical_iso = if holds {
        let canonical = canonical_complex(d, n, k).map_err(|_| {
            Error::Integrity(format!("μ_{k} = {mu} equals target {target} outside the canonical range"))
        })?;
        isomorphic(x, &canonical)?
    } else {
        None
    };
    Ok(EqualityVerdict { k, d, mu, target, holds, canonical_iso })
}

/// The `d = 1` case for clique complexes: equality forces the canonical
/// complex, so a non-isomorphic equality is reported as an integrity error.
pub fn equality_case_check(x: &SimplicialComplex, k: isize) -> Result<EqualityVerdict> {
    if x.missing_faces().h.is_some_and(|h| h > 1) {
        return input("equality check needs a clique complex");
    }
    let verdict = equality_check(x, k, 1)?;
    if verdict.is_counterexample() {
        return Err(Error::Integrity(format!(
            "μ_{k} = {} attains {} but the complex is not canonical",
            verdict.mu, verdict.target
        )));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::family::canonical_equality_complex;

    #[test]
    fn canonical_complexes_attain_equality() {
        for n in 1..=8 {
            for k in -1..n as isize {
                if let Ok(c) = canonical_equality_complex(n, k) {
                    let v = equality_case_check(&c, k).unwrap();
                    assert!(v.holds, "n={n} k={k} mu={}", v.mu);
                    let perm = v.canonical_iso.unwrap();
                    assert_eq!(c.relabel(&perm).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn relabelled_canonical_is_recognised() {
        let c = canonical_equality_complex(6, 3).unwrap();
        let shuffled = c.relabel(&[3, 5, 0, 1, 4, 2]).unwrap();
        let v = equality_case_check(&shuffled, 3).unwrap();
        assert!(v.holds);
        let perm = v.canonical_iso.unwrap();
        assert_eq!(shuffled.relabel(&perm).unwrap(), c);
    }

    #[test]
    fn strict_inequality_and_precondition() {
        let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let x = SimplicialComplex::clique_complex(5, &c5).unwrap();
        let v = equality_case_check(&x, 1).unwrap();
        assert!(!v.holds);
        assert_eq!(v.target, -1);
        let hollow = SimplicialComplex::skeleton(2, 1).unwrap();
        assert!(matches!(equality_case_check(&hollow, 1), Err(Error::Input(_))));
    }
}
