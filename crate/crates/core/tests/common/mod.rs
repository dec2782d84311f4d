//! Seeded random complexes shared by the integration tests.
#![allow(dead_code)]

use lapgap::{Simplex, SimplicialComplex};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, size: usize) -> Vec<usize> {
    let mut verts: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = rng.random_range(i..n);
        verts.swap(i, j);
    }
    let mut out = verts[..size].to_vec();
    out.sort_unstable();
    out
}

/// Clique complex of an Erdős–Rényi graph.
pub fn random_clique_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
    let p = rng.random_range(0.2..0.95);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    SimplicialComplex::clique_complex(n, &edges).expect("valid edges")
}

/// Downward closure of a few random facets.
pub fn random_facet_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
    let count = rng.random_range(1..=2 * n);
    let facets: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            let size = rng.random_range(1..=(n - 1).clamp(1, 5));
            random_subset(rng, n, size)
        })
        .collect();
    SimplicialComplex::from_facets(n, &facets).expect("valid facets")
}

/// Complex with a few random missing faces of mixed sizes.
pub fn random_missing_face_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
    let count = if n < 2 { 0 } else { rng.random_range(1..=n) };
    let missing: Vec<Simplex> = (0..count)
        .map(|_| {
            let size = rng.random_range(2..=n.min(5));
            Simplex::new(random_subset(rng, n, size)).expect("distinct vertices")
        })
        .collect();
    SimplicialComplex::from_missing_faces(n, &missing).expect("valid missing faces")
}

/// One random complex on `1..=max_n` vertices, mixing the three generators.
pub fn random_complex(rng: &mut ChaCha8Rng, max_n: usize) -> SimplicialComplex {
    let n = rng.random_range(1..=max_n);
    match rng.random_range(0..3) {
        0 => random_clique_complex(rng, n),
        1 => random_facet_complex(rng, n),
        _ => random_missing_face_complex(rng, n),
    }
}

pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<SimplicialComplex> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_complex(&mut rng, max_n)).collect()
}

/// A random permutation of `0..n`.
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    random_subset(rng, n, n)
}
