use std::fmt;

use serde::Serialize;

use crate::error::{input, Result};

/// A face handle: a strictly increasing list of vertex ids.
///
/// The sorted order is the canonical orientation used by every operator in
/// this crate. The empty simplex has dimension -1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts and validates; duplicate ids are an input error.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return input(format!("duplicate vertex in simplex {vertices:?}"));
        }
        Ok(Simplex(vertices))
    }

    /// Caller guarantees `vertices` is strictly increasing.
    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertex(v: usize) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// The face obtained by dropping the vertex at sorted position `i`.
    pub fn without_index(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    /// `self ∪ {v}`; `None` if `v` is already present.
    pub fn with_vertex(&self, v: usize) -> Option<Simplex> {
        match self.0.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut w = self.0.clone();
                w.insert(pos, v);
                Some(Simplex(w))
            }
        }
    }

    /// Codimension-one faces, in order of the dropped position.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| self.without_index(i))
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// Bitmask of the vertex set; ids must be below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn from_mask(mask: u64) -> Simplex {
        Simplex((0..64).filter(|v| mask >> v & 1 == 1).collect())
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Result<Simplex> {
        Simplex::new(self.0.iter().map(|&v| f(v)).collect())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Orientation sign `[σ:τ]` for canonically ordered simplices.
///
/// Parity of the permutation taking sorted `sigma` to the concatenation
/// `(sigma \ tau, tau)`, each part kept sorted. That parity is the number of
/// pairs `(x, y)` with `x ∈ tau`, `y ∈ sigma \ tau`, `x < y`.
pub fn sign(sigma: &Simplex, tau: &Simplex) -> Result<i64> {
    if !tau.is_subset_of(sigma) {
        return input(format!("{tau} is not a face of {sigma}"));
    }
    Ok(sign_unchecked(sigma, tau))
}

pub(crate) fn sign_unchecked(sigma: &Simplex, tau: &Simplex) -> i64 {
    let mut inversions = 0usize;
    for &y in sigma.vertices() {
        if !tau.contains(y) {
            inversions += tau.vertices().iter().take_while(|&&x| x < y).count();
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn canonical_order_and_duplicates() {
        assert_eq!(s(&[2, 0, 1]).vertices(), &[0, 1, 2]);
        assert!(Simplex::new(vec![1, 1]).is_err());
        assert_eq!(Simplex::empty().dim(), -1);
        assert_eq!(s(&[4, 7]).dim(), 1);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign(&s(&[0, 1, 2]), &s(&[1, 2])).unwrap(), 1);
        assert_eq!(sign(&s(&[0, 1, 2]), &s(&[0, 2])).unwrap(), -1);
        assert_eq!(sign(&s(&[0, 1, 2]), &s(&[0, 1])).unwrap(), 1);
        for v in [vec![], vec![3], vec![0, 5, 9]] {
            assert_eq!(sign(&s(&v), &Simplex::empty()).unwrap(), 1);
        }
        assert!(sign(&s(&[0, 1]), &s(&[2])).is_err());
    }

    #[test]
    fn codim_one_sign_is_position_parity() {
        let sigma = s(&[1, 3, 4, 8, 9]);
        for i in 0..sigma.len() {
            let expected = if i % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign(&sigma, &sigma.without_index(i)).unwrap(), expected);
        }
    }

    #[test]
    fn sign_matches_explicit_permutation_parity() {
        // Build the permutation (σ∖τ, τ) as positions in σ and count
        // inversions by brute force.
        let sigma = s(&[0, 2, 3, 5, 7]);
        for mask in 0u32..32 {
            let tau: Vec<usize> = (0..5).filter(|i| mask >> i & 1 == 1).map(|i| sigma.vertices()[i]).collect();
            let tau = s(&tau);
            let rest = sigma.difference(&tau);
            let order: Vec<usize> = rest.vertices().iter().chain(tau.vertices()).copied().collect();
            let mut inv = 0;
            for a in 0..order.len() {
                for b in a + 1..order.len() {
                    if order[a] > order[b] {
                        inv += 1;
                    }
                }
            }
            let expected = if inv % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign(&sigma, &tau).unwrap(), expected, "tau = {tau}");
        }
    }

    #[test]
    fn set_operations() {
        let a = s(&[0, 1, 3]);
        let b = s(&[1, 2, 3]);
        assert_eq!(a.intersection(&b), s(&[1, 3]));
        assert_eq!(a.union(&b), s(&[0, 1, 2, 3]));
        assert_eq!(a.difference(&b), s(&[0]));
        assert!(s(&[1, 3]).is_subset_of(&a));
        assert!(!b.is_subset_of(&a));
        assert_eq!(Simplex::from_mask(a.mask()), a);
        assert_eq!(a.with_vertex(2), Some(s(&[0, 1, 2, 3])));
        assert_eq!(a.with_vertex(1), None);
    }
}
