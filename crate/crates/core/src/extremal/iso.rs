//! Isomorphism of small complexes and enumeration of graphs up to isomorphism.

use std::collections::{BTreeSet, HashSet};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Vertex cap for the backtracking isomorphism search.
pub const ISO_MAX_VERTICES: usize = 14;

struct FaceIndex {
    faces: HashSet<u64>,
    /// Faces through each vertex, as masks.
    through: Vec<Vec<u64>>,
    /// Per-vertex count of faces of each size through it.
    profile: Vec<Vec<usize>>,
}

impl FaceIndex {
    fn new(x: &SimplicialComplex) -> Self {
        let n = x.n();
        let sizes = (x.dim() + 2) as usize;
        let mut through = vec![Vec::new(); n];
        let mut profile = vec![vec![0; sizes]; n];
        let mut faces = HashSet::new();
        for s in x.iter() {
            let m = s.mask();
            faces.insert(m);
            for &v in s.vertices() {
                through[v].push(m);
                profile[v][s.len()] += 1;
            }
        }
        FaceIndex { faces, through, profile }
    }
}

/// A vertex bijection `perm` (X id -> Y id) carrying the faces of `x` onto
/// those of `y`, or `None` if the complexes are not isomorphic.
pub fn isomorphic(x: &SimplicialComplex, y: &SimplicialComplex) -> Result<Option<Vec<usize>>> {
    let n = x.n();
    if n.max(y.n()) > ISO_MAX_VERTICES {
        return Err(Error::SizeCap { dim: 0, size: n.max(y.n()), cap: ISO_MAX_VERTICES });
    }
    if n != y.n() || x.f_vector() != y.f_vector() {
        return Ok(None);
    }
    let fx = FaceIndex::new(x);
    let fy = FaceIndex::new(y);
    let mut px = fx.profile.clone();
    let mut py = fy.profile.clone();
    px.sort();
    py.sort();
    if px != py {
        return Ok(None);
    }

    // Place vertices with the rarest profile first, then keep the order
    // connected so that face checks bite early.
    let rarity = |v: usize| fx.profile.iter().filter(|p| **p == fx.profile[v]).count();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let links = fx.through[v].iter().filter(|&&m| m & placed != 0).count();
                (std::cmp::Reverse(links), rarity(v), v)
            })
            .expect("unplaced vertex");
        placed |= 1 << next;
        order.push(next);
    }

    let mut state = Search { fx: &fx, fy: &fy, order, perm: vec![usize::MAX; n], inv: vec![usize::MAX; n] };
    Ok(if state.extend(0, 0, 0) { Some(state.perm) } else { None })
}

struct Search<'a> {
    fx: &'a FaceIndex,
    fy: &'a FaceIndex,
    order: Vec<usize>,
    perm: Vec<usize>,
    inv: Vec<usize>,
}

impl Search<'_> {
    fn image(&self, mask: u64) -> u64 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            out |= 1 << self.perm[v];
            m &= m - 1;
        }
        out
    }

    fn preimage(&self, mask: u64) -> u64 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            out |= 1 << self.inv[v];
            m &= m - 1;
        }
        out
    }

    fn extend(&mut self, depth: usize, dom: u64, img: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.order.len() {
            if img >> w & 1 == 1 || self.fx.profile[v] != self.fy.profile[w] {
                continue;
            }
            self.perm[v] = w;
            self.inv[w] = v;
            let (dom2, img2) = (dom | 1 << v, img | 1 << w);
            let forward =
                self.fx.through[v].iter().filter(|&&m| m & !dom2 == 0).all(|&m| self.fy.faces.contains(&self.image(m)));
            let backward = forward
                && self.fy.through[w]
                    .iter()
                    .filter(|&&m| m & !img2 == 0)
                    .all(|&m| self.fx.faces.contains(&self.preimage(m)));
            if backward && self.extend(depth + 1, dom2, img2) {
                return true;
            }
            self.perm[v] = usize::MAX;
            self.inv[w] = usize::MAX;
        }
        false
    }
}

/// Adjacency bitmasks of a simple graph on at most 16 vertices.
type Adjacency = Vec<u16>;

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Adjacency {
    let mut adj = vec![0u16; n];
    for &(a, b) in edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    adj
}

/// Stable colouring by iterated degree refinement. Colours are ranks of
/// sorted signatures, so they do not depend on the labelling.
fn refine(adj: &Adjacency) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks.binary_search(&s).expect("present")).collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

/// Largest upper-triangle adjacency code over orderings that list colour
/// classes in increasing colour.
fn canonical_code(adj: &Adjacency) -> u128 {
    let n = adj.len();
    let colour = refine(adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by_key(|&v| colour[v]);
    for v in sorted {
        match cells.last_mut() {
            Some(c) if colour[c[0]] == colour[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0u128;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        adj: &Adjacency,
        cells: &[Vec<usize>],
        ci: usize,
        order: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u128,
    ) {
        if ci == cells.len() {
            let n = order.len();
            let mut code = 0u128;
            for i in 0..n {
                for j in i + 1..n {
                    code = code << 1 | (adj[order[i]] >> order[j] & 1) as u128;
                }
            }
            *best = (*best).max(code);
            return;
        }
        let cell = &cells[ci];
        let placed = cell.iter().filter(|&&v| used[v]).count();
        if placed == cell.len() {
            rec(adj, cells, ci + 1, order, used, best);
            return;
        }
        for &v in cell {
            if !used[v] {
                used[v] = true;
                order.push(v);
                rec(adj, cells, ci, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    rec(adj, &cells, 0, &mut order, &mut used, &mut best);
    best
}

/// One edge list per isomorphism class of simple graphs on `n` vertices.
///
/// Built by adding a vertex with every possible neighbourhood to each class
/// on `n - 1` vertices; `n` is capped at 9.
pub fn graphs_up_to_isomorphism(n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if n > 9 {
        return Err(Error::SizeCap { dim: 1, size: n, cap: 9 });
    }
    let mut level: Vec<Adjacency> = vec![Vec::new()];
    for m in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0u16..1 << m {
                let mut adj = g.clone();
                for (u, a) in adj.iter_mut().enumerate() {
                    *a |= (nbrs >> u & 1) << m;
                }
                adj.push(nbrs);
                if seen.insert(canonical_code(&adj)) {
                    next.push(adj);
                }
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|adj| {
            let mut edges = Vec::new();
            for a in 0..adj.len() {
                for b in a + 1..adj.len() {
                    if adj[a] >> b & 1 == 1 {
                        edges.push((a, b));
                    }
                }
            }
            edges
        })
        .collect())
}

/// Whether two graphs on `n` vertices are isomorphic, via canonical codes.
pub fn graphs_isomorphic(n: usize, a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    canonical_code(&adjacency(n, a)) == canonical_code(&adjacency(n, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        // Number of unlabelled graphs on n vertices.
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(graphs_up_to_isomorphism(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn cycle_relabelled_is_isomorphic() {
        let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let star: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 2) % 5)).collect();
        assert!(graphs_isomorphic(5, &c5, &star));
        let x = SimplicialComplex::clique_complex(5, &c5).unwrap();
        let y = SimplicialComplex::clique_complex(5, &star).unwrap();
        let perm = isomorphic(&x, &y).unwrap().expect("isomorphic");
        assert_eq!(x.relabel(&perm).unwrap(), y);
    }

    #[test]
    fn non_isomorphic_with_equal_f_vectors() {
        // Path of length three plus an isolated vertex vs. a star; both have
        // f-vector (1, 5, 3) but different degree profiles.
        let p = SimplicialComplex::clique_complex(5, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = SimplicialComplex::clique_complex(5, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(isomorphic(&p, &s).unwrap(), None);
        // Two triangles sharing a vertex vs. sharing nothing would differ in
        // n; instead compare C6 with two disjoint triangles' boundaries.
        let c6: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let two = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
        let x = SimplicialComplex::from_facets(6, &c6.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>()).unwrap();
        let y = SimplicialComplex::from_facets(6, &two.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>()).unwrap();
        assert_eq!(x.f_vector(), y.f_vector());
        assert_eq!(isomorphic(&x, &y).unwrap(), None);
    }

    #[test]
    fn size_cap() {
        let big = SimplicialComplex::skeleton(14, 0).unwrap();
        assert!(matches!(isomorphic(&big, &big), Err(Error::SizeCap { .. })));
        assert!(graphs_up_to_isomorphism(10).is_err());
    }
}
