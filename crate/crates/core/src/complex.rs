//! Finite simplicial complexes on the vertex set `{0..n-1}`.
//!
//! Faces are stored explicitly, grouped by dimension and sorted
//! lexicographically, so a face's position in its dimension is also its
//! index in the oriented cochain basis. Every vertex id below `n` is a
//! 0-face, isolated or not, and the empty simplex is always present.

use std::collections::HashSet;
use std::fmt;

use crate::error::{input, Error, Result};
use crate::simplex::Simplex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    /// `faces[k + 1]` holds the sorted k-faces.
    faces: Vec<Vec<Simplex>>,
}

/// A complex carved out of a larger one and relabeled onto `{0..m-1}`.
///
/// `vertices[i]` is the original id of new vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedComplex {
    pub complex: SimplicialComplex,
    pub vertices: Vec<usize>,
}

impl InducedComplex {
    /// Faces expressed in the original vertex ids.
    pub fn original_faces(&self, k: isize) -> Vec<Simplex> {
        self.complex
            .faces(k)
            .iter()
            .map(|s| Simplex::from_sorted_unchecked(s.vertices().iter().map(|&v| self.vertices[v]).collect()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingFaceReport {
    pub missing_faces: Vec<Simplex>,
    /// Largest missing-face dimension; `None` for a complete simplex.
    pub h: Option<isize>,
}

impl SimplicialComplex {
    /// Sorts each dimension and fills in singletons and the empty face.
    /// `faces` must already be downward closed apart from those.
    fn assemble(n: usize, set: HashSet<Simplex>) -> Self {
        let mut faces: Vec<Vec<Simplex>> = vec![vec![Simplex::empty()], (0..n).map(Simplex::vertex).collect()];
        for s in set {
            if s.len() < 2 {
                continue;
            }
            while faces.len() <= s.len() {
                faces.push(Vec::new());
            }
            faces[s.len()].push(s);
        }
        for level in faces.iter_mut() {
            level.sort_unstable();
        }
        while faces.len() > 1 && faces.last().is_some_and(|l| l.is_empty()) {
            faces.pop();
        }
        SimplicialComplex { n, faces }
    }

    fn from_levels(n: usize, mut faces: Vec<Vec<Simplex>>) -> Self {
        while faces.len() > 1 && faces.last().is_some_and(|l| l.is_empty()) {
            faces.pop();
        }
        SimplicialComplex { n, faces }
    }

    /// Downward closure of `facets`, together with every vertex in `{0..n-1}`.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return input("a complex needs at least one vertex");
        }
        let mut set = HashSet::new();
        for facet in facets {
            let facet = Simplex::new(facet.clone())?;
            if let Some(&v) = facet.vertices().iter().find(|&&v| v >= n) {
                return input(format!("facet {facet} uses vertex {v}, but n = {n}"));
            }
            if facet.len() > 25 {
                return input(format!("facet {facet} is too large to expand"));
            }
            if !set.contains(&facet) {
                let verts = facet.vertices();
                for mask in 1u32..(1u32 << verts.len()) {
                    let sub: Vec<usize> = (0..verts.len()).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
                    set.insert(Simplex::from_sorted_unchecked(sub));
                }
            }
        }
        Ok(Self::assemble(n, set))
    }

    /// The clique (flag) complex of a simple graph.
    pub fn clique_complex(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return input("a complex needs at least one vertex");
        }
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) out of range for n = {n}"));
            }
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let mut faces = vec![vec![Simplex::empty()], (0..n).map(Simplex::vertex).collect::<Vec<_>>()];
        loop {
            let last = faces.last().expect("non-empty");
            let mut next = Vec::new();
            for s in last {
                let top = *s.vertices().last().expect("non-empty face");
                let extensions = (top + 1..n).filter(|&v| s.vertices().iter().all(|&u| adj[u][v]));
                next.extend(extensions.map(|v| s.with_vertex(v).expect("v above every vertex")));
            }
            if next.is_empty() {
                break;
            }
            // Extending in increasing vertex order keeps each level sorted.
            faces.push(next);
        }
        Ok(Self::from_levels(n, faces))
    }

    /// `Δ_m^{(k)}`: all subsets of `{0..m}` with at most `k+1` elements.
    ///
    /// For `k = -1` this is the void complex `{∅}`, which has no vertices.
    pub fn skeleton(m: usize, k: isize) -> Result<Self> {
        if k < -1 || k > m as isize {
            return input(format!("skeleton({m}, {k}) needs -1 <= k <= m"));
        }
        if k == -1 {
            return Ok(Self::from_levels(0, vec![vec![Simplex::empty()]]));
        }
        let n = m + 1;
        let faces = (0..=(k + 1) as usize).map(|size| combinations(n, size)).collect();
        Ok(Self::from_levels(n, faces))
    }

    /// The full simplex `Δ_m` on `m+1` vertices.
    pub fn simplex(m: usize) -> Self {
        Self::skeleton(m, m as isize).expect("k = m is in range")
    }

    /// `X * Y`; `other`'s vertex ids are shifted up by `self.n()`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.n;
        let dim = self.dim() + other.dim() + 1;
        let mut faces: Vec<Vec<Simplex>> = vec![Vec::new(); (dim + 2) as usize];
        for a in self.faces.iter().flatten() {
            for b in other.faces.iter().flatten() {
                let mut v = a.vertices().to_vec();
                v.extend(b.vertices().iter().map(|&w| w + shift));
                faces[v.len()].push(Simplex::from_sorted_unchecked(v));
            }
        }
        for level in faces.iter_mut() {
            level.sort_unstable();
        }
        Self::from_levels(self.n + other.n, faces)
    }

    /// `X[U]`, relabeled onto `{0..|U|-1}` preserving the order of ids.
    pub fn induced(&self, subset: &[usize]) -> Result<InducedComplex> {
        let mut keep = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return input(format!("vertex {v} out of range for n = {}", self.n));
        }
        Ok(self.restrict(keep, |_| true))
    }

    /// `lk(X, σ) = {τ ∈ X : τ ∪ σ ∈ X, τ ∩ σ = ∅}`, relabeled onto its vertices.
    pub fn link(&self, sigma: &Simplex) -> Result<InducedComplex> {
        if !self.contains(sigma) {
            return input(format!("{sigma} is not a face"));
        }
        let keep: Vec<usize> =
            (0..self.n).filter(|&v| sigma.with_vertex(v).is_some_and(|s| self.contains(&s))).collect();
        Ok(self.restrict(keep, |tau| self.contains(&tau.union(sigma))))
    }

    fn restrict(&self, keep: Vec<usize>, accept: impl Fn(&Simplex) -> bool) -> InducedComplex {
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let mut faces = Vec::new();
        for level in &self.faces {
            let mut out = Vec::new();
            for s in level {
                if s.vertices().iter().all(|&v| relabel[v] != usize::MAX) && accept(s) {
                    // Relabeling is monotone, so order is preserved.
                    out.push(Simplex::from_sorted_unchecked(s.vertices().iter().map(|&v| relabel[v]).collect()));
                }
            }
            faces.push(out);
        }
        InducedComplex { complex: Self::from_levels(keep.len(), faces), vertices: keep }
    }

    /// The complex `{σ ⊆ V : no listed set is contained in σ}`.
    ///
    /// When `missing` is an antichain of sets of size at least two, these are
    /// exactly the missing faces of the result.
    pub fn from_missing_faces(n: usize, missing: &[Simplex]) -> Result<Self> {
        if n == 0 {
            return input("a complex needs at least one vertex");
        }
        for m in missing {
            if m.len() < 2 {
                return input(format!("missing face {m} must have at least two vertices"));
            }
            if m.vertices().iter().any(|&v| v >= n) {
                return input(format!("missing face {m} out of range for n = {n}"));
            }
        }
        let forbidden: HashSet<&Simplex> = missing.iter().collect();
        let mut faces = vec![vec![Simplex::empty()], (0..n).map(Simplex::vertex).collect::<Vec<_>>()];
        loop {
            let last = faces.last().expect("non-empty");
            let mut next = Vec::new();
            for s in last {
                let top = *s.vertices().last().expect("non-empty face");
                for v in top + 1..n {
                    let cand = s.with_vertex(v).expect("v above every vertex");
                    if forbidden.contains(&cand) {
                        continue;
                    }
                    // `s` is a face; the other boundary faces all contain v.
                    let ok = (0..cand.len() - 1).all(|i| last.binary_search(&cand.without_index(i)).is_ok());
                    if ok {
                        next.push(cand);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            faces.push(next);
        }
        Ok(Self::from_levels(n, faces))
    }

    /// Applies the vertex bijection `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        if perm.len() != self.n {
            return input("permutation length differs from vertex count");
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return input("not a permutation");
            }
        }
        let mut faces = Vec::with_capacity(self.faces.len());
        for level in &self.faces {
            let mut out: Vec<Simplex> = level.iter().map(|s| s.map(|v| perm[v])).collect::<Result<_>>()?;
            out.sort_unstable();
            faces.push(out);
        }
        Ok(Self::from_levels(self.n, faces))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the largest face; -1 for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Sorted k-faces; empty outside `-1..=dim`.
    pub fn faces(&self, k: isize) -> &[Simplex] {
        if k < -1 {
            return &[];
        }
        self.faces.get((k + 1) as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn face_count(&self, k: isize) -> usize {
        self.faces(k).len()
    }

    /// Face counts for `k = -1..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn total_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter().flatten()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.faces(s.dim()).binary_search(s).ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    /// Maximal faces, sorted by dimension then lexicographically.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for k in -1..=self.dim() {
            for s in self.faces(k) {
                let maximal = (0..self.n).all(|v| s.with_vertex(v).is_none_or(|t| !self.contains(&t)));
                if maximal {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// `deg_X(σ)`: number of `(dim σ + 1)`-faces containing `σ`.
    pub fn degree(&self, sigma: &Simplex) -> Result<usize> {
        if !self.contains(sigma) {
            return input(format!("{sigma} is not a face"));
        }
        Ok((0..self.n).filter(|&v| sigma.with_vertex(v).is_some_and(|s| self.contains(&s))).count())
    }

    /// Degrees of all k-faces, aligned with `faces(k)`.
    pub fn degrees(&self, k: isize) -> Vec<usize> {
        let level = self.faces(k);
        let mut deg = vec![0usize; level.len()];
        for eta in self.faces(k + 1) {
            for tau in eta.boundary_faces() {
                let i = level.binary_search(&tau).expect("complex is downward closed");
                deg[i] += 1;
            }
        }
        deg
    }

    /// `δ_k`, the minimum degree over k-faces.
    pub fn min_degree(&self, k: isize) -> Result<usize> {
        if self.face_count(k) == 0 {
            return Err(Error::Domain(format!("undefined (no {k}-faces)")));
        }
        Ok(self.degrees(k).into_iter().min().expect("non-empty"))
    }

    /// Minimal non-faces over the vertex set `{0..n-1}`.
    ///
    /// Every minimal non-face `σ` has `σ \ {max σ}` as a face, so the
    /// candidates are the one-vertex extensions of faces past their largest
    /// vertex.
    pub fn missing_faces(&self) -> MissingFaceReport {
        let mut missing = Vec::new();
        for level in self.faces.iter().skip(1) {
            for tau in level {
                let top = *tau.vertices().last().expect("non-empty face");
                for v in top + 1..self.n {
                    let sigma = tau.with_vertex(v).expect("v above every vertex");
                    if self.contains(&sigma) {
                        continue;
                    }
                    if sigma.boundary_faces().all(|f| self.contains(&f)) {
                        missing.push(sigma);
                    }
                }
            }
        }
        missing.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let h = missing.iter().map(Simplex::dim).max();
        MissingFaceReport { missing_faces: missing, h }
    }

    /// Checks downward closure, sortedness and the vertex/empty-face rules.
    pub fn validate(&self) -> Result<()> {
        if self.faces(-1) != [Simplex::empty()] {
            return Err(Error::Integrity("empty face missing".into()));
        }
        if self.faces(0).len() != self.n || self.faces(0).iter().enumerate().any(|(i, s)| s.vertices() != [i]) {
            return Err(Error::Integrity("vertex level is not {0..n-1}".into()));
        }
        for k in 0..=self.dim() {
            let level = self.faces(k);
            if level.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Integrity(format!("level {k} not strictly sorted")));
            }
            for s in level {
                if s.len() != (k + 1) as usize || s.vertices().iter().any(|&v| v >= self.n) {
                    return Err(Error::Integrity(format!("bad face {s} at level {k}")));
                }
                if let Some(f) = s.boundary_faces().find(|f| !self.contains(f)) {
                    return Err(Error::Integrity(format!("{f} missing below {s}")));
                }
            }
        }
        Ok(())
    }

    /// Serializes to the facet file format read by [`parse_facet_file`].
    pub fn to_facet_file(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for f in self.facets() {
            if f.len() < 2 {
                continue;
            }
            let line: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex(n={}, f={:?})", self.n, self.f_vector())
    }
}

/// All `size`-subsets of `{0..n-1}` in lexicographic order.
pub fn combinations(n: usize, size: usize) -> Vec<Simplex> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(Simplex::from_sorted_unchecked(idx.clone()));
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Lines of decimal ids with `#` comments; the first content line is `n <count>`.
fn parse_id_lines(text: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut n = None;
    let mut rows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if n.is_none() {
            let mut parts = line.split_whitespace();
            let count = match (parts.next(), parts.next(), parts.next()) {
                (Some("n"), Some(c), None) => c.parse::<usize>().ok(),
                _ => None,
            };
            match count {
                Some(c) => n = Some(c),
                None => return input(format!("line {}: expected `n <count>`", lineno + 1)),
            }
            continue;
        }
        let ids = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Input(format!("line {}: bad vertex id `{t}`", lineno + 1))))
            .collect::<Result<Vec<_>>>()?;
        rows.push(ids);
    }
    match n {
        Some(n) => Ok((n, rows)),
        None => input("missing `n <count>` header"),
    }
}

/// Parses the facet file format: a `n <count>` header, then one facet per line.
pub fn parse_facet_file(text: &str) -> Result<SimplicialComplex> {
    let (n, facets) = parse_id_lines(text)?;
    SimplicialComplex::from_facets(n, &facets)
}

/// Same layout as the facet format, with exactly two ids per line.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let (n, rows) = parse_id_lines(text)?;
    let edges = rows
        .into_iter()
        .map(|r| match r.as_slice() {
            &[u, v] => Ok((u, v)),
            _ => input(format!("edge line must have two ids, got {r:?}")),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn cycle(n: usize) -> SimplicialComplex {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimplicialComplex::clique_complex(n, &edges).unwrap()
    }

    #[test]
    fn from_facets_examples() {
        let b = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(b.f_vector(), vec![1, 3, 3]);
        let d3 = SimplicialComplex::from_facets(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(d3.f_vector(), vec![1, 4, 6, 4, 1]);
        let c5: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
        let c5 = SimplicialComplex::from_facets(5, &c5).unwrap();
        assert_eq!(c5.f_vector(), vec![1, 5, 5]);
        for x in [&b, &d3, &c5] {
            x.validate().unwrap();
        }
    }

    #[test]
    fn from_facets_errors_and_isolated_vertices() {
        assert!(matches!(SimplicialComplex::from_facets(0, &[]), Err(Error::Input(_))));
        assert!(matches!(SimplicialComplex::from_facets(3, &[vec![0, 3]]), Err(Error::Input(_))));
        let x = SimplicialComplex::from_facets(4, &[vec![0, 1]]).unwrap();
        assert_eq!(x.f_vector(), vec![1, 4, 1]);
        let empty = SimplicialComplex::from_facets(2, &[]).unwrap();
        assert_eq!(empty.dim(), 0);
    }

    #[test]
    fn clique_complex_examples() {
        let tri = SimplicialComplex::clique_complex(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri, SimplicialComplex::simplex(2));
        let c5 = cycle(5);
        assert_eq!(c5.f_vector(), vec![1, 5, 5]);
        let mf = c5.missing_faces();
        assert_eq!(mf.h, Some(1));
        assert_eq!(mf.missing_faces, vec![s(&[0, 2]), s(&[0, 3]), s(&[1, 3]), s(&[1, 4]), s(&[2, 4])]);
        let iso = SimplicialComplex::clique_complex(4, &[]).unwrap();
        let mf = iso.missing_faces();
        assert_eq!(mf.missing_faces.len(), 6);
        assert_eq!(mf.h, Some(1));
        assert!(SimplicialComplex::clique_complex(3, &[(1, 1)]).is_err());
        assert!(SimplicialComplex::clique_complex(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn skeleton_examples() {
        let b = SimplicialComplex::skeleton(2, 1).unwrap();
        assert_eq!(b, SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap());
        let mf = b.missing_faces();
        assert_eq!(mf.missing_faces, vec![s(&[0, 1, 2])]);
        assert_eq!(mf.h, Some(2));
        assert_eq!(SimplicialComplex::skeleton(3, 1).unwrap().f_vector(), vec![1, 4, 6]);
        assert!(SimplicialComplex::skeleton(2, 3).is_err());
        let void = SimplicialComplex::skeleton(3, -1).unwrap();
        assert_eq!((void.n(), void.f_vector()), (0, vec![1]));
    }

    #[test]
    fn join_examples() {
        let s0 = SimplicialComplex::skeleton(1, 0).unwrap();
        let c4 = s0.join(&s0);
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.faces(1), &[s(&[0, 2]), s(&[0, 3]), s(&[1, 2]), s(&[1, 3])]);
        assert_eq!(c4.dim(), 1);
        let cone = cycle(5).join(&SimplicialComplex::simplex(0));
        assert_eq!(cone.dim(), 2);
        cone.validate().unwrap();
        let b = SimplicialComplex::skeleton(2, 1).unwrap();
        let z = b.join(&b).join(&SimplicialComplex::simplex(0));
        assert_eq!(z.n(), 7);
        assert_eq!(z.dim(), 4);
    }

    #[test]
    fn link_examples() {
        let b = SimplicialComplex::skeleton(2, 1).unwrap();
        let l = b.link(&s(&[0])).unwrap();
        assert_eq!(l.vertices, vec![1, 2]);
        assert_eq!(l.complex.f_vector(), vec![1, 2]);

        let d3 = SimplicialComplex::simplex(3);
        let l = d3.link(&s(&[0, 1])).unwrap();
        assert_eq!(l.vertices, vec![2, 3]);
        assert_eq!(l.complex, SimplicialComplex::simplex(1));
        assert_eq!(l.original_faces(1), vec![s(&[2, 3])]);

        let l = cycle(5).link(&s(&[0])).unwrap();
        assert_eq!(l.vertices, vec![1, 4]);
        assert_eq!(l.complex.dim(), 0);
        assert!(cycle(5).link(&s(&[0, 2])).is_err());
    }

    #[test]
    fn induced_examples() {
        let d3 = SimplicialComplex::simplex(3);
        assert_eq!(d3.induced(&[0, 1, 2]).unwrap().complex, SimplicialComplex::simplex(2));
        let p = cycle(5).induced(&[0, 1, 2]).unwrap().complex;
        assert_eq!(p.faces(1), &[s(&[0, 1]), s(&[1, 2])]);
        let e = d3.induced(&[]).unwrap().complex;
        assert_eq!(e.n(), 0);
        assert_eq!(e.f_vector(), vec![1]);
        assert_eq!(e.dim(), -1);
    }

    #[test]
    fn degrees_and_min_degree() {
        let d3 = SimplicialComplex::simplex(3);
        assert_eq!(d3.degree(&s(&[0, 1])).unwrap(), 2);
        let c5 = cycle(5);
        for v in 0..5 {
            assert_eq!(c5.degree(&s(&[v])).unwrap(), 2);
        }
        assert_eq!(c5.degree(&s(&[1, 2])).unwrap(), 0);
        assert!(c5.degree(&s(&[0, 2])).is_err());
        assert_eq!(c5.min_degree(-1).unwrap(), 5);
        assert_eq!(c5.min_degree(0).unwrap(), 2);
        assert_eq!(c5.min_degree(1).unwrap(), 0);
        assert!(matches!(c5.min_degree(2), Err(Error::Domain(_))));
        assert_eq!(c5.degree(&Simplex::empty()).unwrap(), 5);
        assert_eq!(c5.degrees(0), vec![2; 5]);
    }

    #[test]
    fn complete_complex_has_no_missing_faces() {
        let mf = SimplicialComplex::simplex(3).missing_faces();
        assert!(mf.missing_faces.is_empty());
        assert_eq!(mf.h, None);
    }

    #[test]
    fn facet_file_round_trip() {
        let text = "# triangle boundary plus a loose vertex\n\nn 4\n0 1\n1 2 # edge\n0 2\n";
        let x = parse_facet_file(text).unwrap();
        assert_eq!(x.f_vector(), vec![1, 4, 3]);
        assert_eq!(parse_facet_file(&x.to_facet_file()).unwrap(), x);
        let bare = parse_facet_file("n 3\n").unwrap();
        assert_eq!(bare.f_vector(), vec![1, 3]);
        assert!(parse_facet_file("0 1\n").is_err());
        assert!(parse_facet_file("n 2\n0 x\n").is_err());
        assert!(parse_facet_file("n 2\n0 2\n").is_err());
        assert!(parse_facet_file("").is_err());
    }

    #[test]
    fn edge_list_parsing() {
        let (n, e) = parse_edge_list("n 3\n0 1\n1 2\n").unwrap();
        assert_eq!((n, e), (3, vec![(0, 1), (1, 2)]));
        assert!(parse_edge_list("n 3\n0 1 2\n").is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let c = combinations(4, 2);
        let v: Vec<Vec<usize>> = c.iter().map(|s| s.vertices().to_vec()).collect();
        assert_eq!(v, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 0).len(), 1);
        assert_eq!(combinations(2, 3).len(), 0);
        assert_eq!(combinations(6, 6).len(), 1);
    }

    #[test]
    fn relabel_and_missing_reconstruction() {
        let c5 = cycle(5);
        let r = c5.relabel(&[2, 0, 4, 1, 3]).unwrap();
        r.validate().unwrap();
        assert_eq!(r.f_vector(), c5.f_vector());
        let mf = c5.missing_faces().missing_faces;
        assert_eq!(SimplicialComplex::from_missing_faces(5, &mf).unwrap(), c5);
        assert!(c5.relabel(&[0, 0, 1, 2, 3]).is_err());
    }
}
