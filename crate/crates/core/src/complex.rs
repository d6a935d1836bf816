//! Finite abstract simplicial complexes and their constructors.
//!
//! A complex is stored as its full simplex set, grouped by dimension and
//! lexicographically sorted within each dimension, so every matrix built on
//! top of it (boundary operators, induced form maps) has a reproducible
//! row/column order. External vertex labels are remapped to the contiguous
//! range `0..n` at construction; the relabeling table is kept for reporting.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};

/// A simplex: a strictly increasing, non-empty list of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct Simplex {
    vertices: Vec<usize>,
}

impl Simplex {
    /// Builds a simplex from an arbitrary vertex list, sorting and rejecting
    /// duplicates.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyFacet);
        }
        let raw = vertices.clone();
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertexInFacet(raw));
        }
        Ok(Self { vertices })
    }

    /// Vertex ids, strictly increasing.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Dimension: vertex count minus one.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The weight (-1)^dim used in Euler characteristic and fixed-point
    /// index sums.
    pub fn weight(&self) -> i64 {
        if self.dim().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All faces of codimension one, i.e. the simplex minus each vertex.
    /// Empty for a vertex.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.vertices.len() == 1 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|i| {
                let mut v = self.vertices.clone();
                v.remove(i);
                Simplex { vertices: v }
            })
            .collect()
    }

    fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Simplex {
    /// Dimension first, then lexicographic on the sorted vertex list. This is
    /// the canonical order used for all matrix indexing.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite abstract simplicial complex, closed under non-empty faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// `by_dim[k]` lists the k-simplices in lexicographic order.
    by_dim: Vec<Vec<Simplex>>,
    /// Simplex -> position within its dimension's list.
    positions: HashMap<Simplex, usize>,
    /// Internal vertex id -> external label.
    labels: Vec<usize>,
}

impl SimplicialComplex {
    /// Builds the complex generated by the given facets: every non-empty
    /// subset of every facet, deduplicated, with external vertex ids remapped
    /// to `0..n` (the relabeling table is retained in [`labels`]).
    ///
    /// [`labels`]: SimplicialComplex::labels
    pub fn from_facets(facets: &[Vec<usize>]) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyFacet);
        }
        let mut label_set = BTreeSet::new();
        let mut checked = Vec::with_capacity(facets.len());
        for facet in facets {
            let s = Simplex::new(facet.clone())?;
            label_set.extend(s.vertices().iter().copied());
            checked.push(s);
        }
        let labels: Vec<usize> = label_set.into_iter().collect();
        let rank: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

        let mut all = BTreeSet::new();
        for facet in &checked {
            let internal: Vec<usize> = facet.vertices().iter().map(|v| rank[v]).collect();
            insert_subsets(&internal, &mut all);
        }
        Ok(Self::from_simplex_set(all, labels))
    }

    /// The subcomplex of simplices fixed pointwise by every vertex map in
    /// `generators` (each given as a full permutation of `0..n`). `None` when
    /// no simplex survives. Vertex labels of the result name the surviving
    /// vertices of `self`.
    pub fn fixed_subcomplex(
        &self,
        generators: &[crate::lefschetz::Automorphism],
    ) -> Result<Option<SimplicialComplex>> {
        for g in generators {
            g.check_acts_on(self)?;
        }
        let n = self.vertex_count();
        let fixed: BTreeSet<usize> = (0..n)
            .filter(|&v| generators.iter().all(|g| g.image_of(v) == v))
            .collect();
        if fixed.is_empty() {
            return Ok(None);
        }
        let keep: Vec<usize> = fixed.iter().copied().collect();
        let rank: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut survivors = BTreeSet::new();
        for s in self.simplices() {
            if s.vertices().iter().all(|v| fixed.contains(v)) {
                let internal: Vec<usize> = s.vertices().iter().map(|v| rank[v]).collect();
                survivors.insert(Simplex::from_sorted(internal));
            }
        }
        if survivors.is_empty() {
            return Ok(None);
        }
        let labels = keep.iter().map(|&v| self.labels[v]).collect();
        Ok(Some(Self::from_simplex_set(survivors, labels)))
    }

    fn from_simplex_set(all: BTreeSet<Simplex>, labels: Vec<usize>) -> Self {
        let dim = all.iter().map(|s| s.dim()).max().unwrap_or(0);
        let mut by_dim = vec![Vec::new(); dim + 1];
        let mut positions = HashMap::with_capacity(all.len());
        // BTreeSet iteration is (dim, lex) sorted, so pushing preserves the
        // canonical per-dimension order.
        for s in all {
            let k = s.dim();
            positions.insert(s.clone(), by_dim[k].len());
            by_dim[k].push(s);
        }
        Self {
            by_dim,
            positions,
            labels,
        }
    }

    /// Dimension of the complex (largest simplex dimension).
    pub fn dim(&self) -> usize {
        self.by_dim.len() - 1
    }

    /// Simplex counts per dimension, `f[k]` = number of k-simplices.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    /// Euler characteristic: alternating sum of the f-vector.
    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                sign * s.len() as i64
            })
            .sum()
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.by_dim[0].len()
    }

    /// Total number of simplices across all dimensions.
    pub fn simplex_count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// The k-simplices in canonical (lexicographic) order. Empty slice when k
    /// exceeds the dimension.
    pub fn simplices_of_dim(&self, k: usize) -> &[Simplex] {
        self.by_dim.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Iterates all simplices, dimension by dimension, in canonical order.
    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    /// Whether the simplex (given in internal ids) is in the complex.
    pub fn contains(&self, s: &Simplex) -> bool {
        self.positions.contains_key(s)
    }

    /// Position of a simplex within its dimension's canonical list.
    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.positions.get(s).copied()
    }

    /// External label of an internal vertex id.
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Relabeling table: internal vertex id -> external label.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Maximal simplices: those that are not a proper face of any other
    /// simplex. `from_facets` on this list reproduces the complex.
    pub fn maximal_facets(&self) -> Vec<Simplex> {
        let mut non_maximal: BTreeSet<&Simplex> = BTreeSet::new();
        for s in self.simplices() {
            for f in s.facets() {
                if let Some((key, _)) = self.positions.get_key_value(&f) {
                    non_maximal.insert(key);
                }
            }
        }
        self.simplices()
            .filter(|s| !non_maximal.contains(s))
            .cloned()
            .collect()
    }

    /// Maximal simplices expressed in external labels, as plain vertex lists.
    pub fn facets_external(&self) -> Vec<Vec<usize>> {
        self.maximal_facets()
            .iter()
            .map(|s| s.vertices().iter().map(|&v| self.labels[v]).collect())
            .collect()
    }

    /// Per-vertex star profile: `profile[v][k]` counts the k-simplices
    /// containing `v`. Invariant under automorphisms, used to prune the
    /// automorphism search.
    pub(crate) fn star_profiles(&self) -> Vec<Vec<usize>> {
        let mut profiles = vec![vec![0usize; self.dim() + 1]; self.vertex_count()];
        for s in self.simplices() {
            for &v in s.vertices() {
                profiles[v][s.dim()] += 1;
            }
        }
        profiles
    }

    /// Adjacency of the 1-skeleton as a boolean matrix.
    pub(crate) fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for e in self.simplices_of_dim(1) {
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            adj[a][b] = true;
            adj[b][a] = true;
        }
        adj
    }
}

fn insert_subsets(vertices: &[usize], out: &mut BTreeSet<Simplex>) {
    let n = vertices.len();
    for mask in 1u64..(1u64 << n) {
        let subset: Vec<usize> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| vertices[i])
            .collect();
        out.insert(Simplex::from_sorted(subset));
    }
}

/// A finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::VertexlessGraph);
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a, b));
            }
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange(a.max(b), n));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self { n, edges: set })
    }

    /// Cycle graph C_n.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!(
                "cycle graph needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        adj
    }

    /// The Whitney (clique/flag) complex: simplices are exactly the cliques
    /// of the graph, optionally truncated at `max_dim`. Truncation preserves
    /// face closure since every subset of a clique is a clique.
    pub fn whitney_complex(&self, max_dim: Option<usize>) -> SimplicialComplex {
        let adj = self.neighbors();
        let cap = max_dim.map(|d| d + 1).unwrap_or(usize::MAX);
        let mut all: BTreeSet<Simplex> = BTreeSet::new();
        let mut stack: Vec<usize> = Vec::new();
        for v in 0..self.n {
            stack.push(v);
            all.insert(Simplex::from_sorted(stack.clone()));
            if cap > 1 {
                let candidates: Vec<usize> = adj[v].iter().copied().filter(|&u| u > v).collect();
                self.extend_cliques(&adj, &mut stack, &candidates, cap, &mut all);
            }
            stack.pop();
        }
        let labels = (0..self.n).collect();
        SimplicialComplex::from_simplex_set(all, labels)
    }

    fn extend_cliques(
        &self,
        adj: &[Vec<usize>],
        stack: &mut Vec<usize>,
        candidates: &[usize],
        cap: usize,
        all: &mut BTreeSet<Simplex>,
    ) {
        for (i, &u) in candidates.iter().enumerate() {
            stack.push(u);
            all.insert(Simplex::from_sorted(stack.clone()));
            if stack.len() < cap {
                let next: Vec<usize> = candidates[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| adj[u].binary_search(&w).is_ok())
                    .collect();
                if !next.is_empty() {
                    self.extend_cliques(adj, stack, &next, cap, all);
                }
            }
            stack.pop();
        }
    }
}

/// A finite set of points in Euclidean space of a common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointCloud);
        }
        let d = points[0].len();
        for (i, p) in points.iter().enumerate() {
            if p.len() != d {
                return Err(Error::MixedPointDimensions(i, p.len(), d));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFiniteCoordinate(i));
            }
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// The neighborhood graph at scale `h`: vertices are the points, with an
    /// edge whenever the Euclidean distance is at most `h` (inclusive).
    pub fn epsilon_graph(&self, h: f64) -> Result<Graph> {
        if !h.is_finite() || h <= 0.0 {
            return Err(Error::NonPositiveThreshold(h));
        }
        let n = self.points.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.distance(i, j) <= h {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges)
    }
}

/// Convenience: the complex of a single octahedron boundary (6 vertices,
/// poles 0 and 5), used throughout the test suites.
pub fn octahedron() -> SimplicialComplex {
    let facets = vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 1, 4],
        vec![1, 2, 5],
        vec![2, 3, 5],
        vec![3, 4, 5],
        vec![1, 4, 5],
    ];
    SimplicialComplex::from_facets(&facets).expect("octahedron facets are valid")
}

/// Sorted distinct simplex dimensions and counts, for quick reporting.
pub fn f_vector_map(k: &SimplicialComplex) -> BTreeMap<usize, usize> {
    k.f_vector().into_iter().enumerate().collect()
}
