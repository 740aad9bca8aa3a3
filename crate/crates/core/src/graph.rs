//! Dense bitrow graphs on at most 64 vertices.
//!
//! Row `v` of the adjacency is a `u64` whose bit `u` is set iff `uv` is an
//! edge, so neighborhood intersections are single word operations. Vertex
//! sets are passed around as the same kind of mask.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{0} vertices requested, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("cannot replace vertex {0} by a copy of itself")]
    SameVertex(usize),
    #[error("vertex {target} is adjacent to {original}; a copy must lie outside the original's neighborhood")]
    AdjacentCopy { target: usize, original: usize },
}

/// Iterates the set bits of `mask` in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask of every vertex strictly greater than `v`.
#[inline]
pub(crate) fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Builds a vertex mask from a list of ids.
pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | (1u64 << v))
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// Canonical (sorted) vertex triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle([usize; 3]);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        Triangle(v)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    /// The three vertex pairs, each as `(smaller, larger)`.
    pub fn edges(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

/// Degree, triangles through the vertex, and `r0 * degree - triangles`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexStats {
    pub degree: usize,
    /// Edges spanned by the neighborhood, i.e. triangles incident to the vertex.
    pub triangles: usize,
    pub f: i64,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.rows[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list; duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Crate-internal constructor for callers that already hold symmetric rows.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_VERTICES);
        let g = Graph { n: rows.len(), rows };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        (0..self.n).all(|v| {
            self.rows[v] & !full_mask(self.n) == 0
                && self.rows[v] & (1u64 << v) == 0
                && bits(self.rows[v]).all(|u| self.rows[u] & (1u64 << v) != 0)
        })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask holding every vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & (1u64 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] & above(u)).map(move |v| (u, v)))
    }

    /// Every triangle once, sorted lexicographically.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.rows[u] & above(u)) {
                for w in bits(self.rows[u] & self.rows[v] & above(v)) {
                    out.push(Triangle([u, v, w]));
                }
            }
        }
        out
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for u in 0..self.n {
            for v in bits(self.rows[u] & above(u)) {
                t += (self.rows[u] & self.rows[v] & above(v)).count_ones() as usize;
            }
        }
        t
    }

    /// Number of edges inside `N(v)`.
    pub fn triangles_at(&self, v: usize) -> usize {
        let nv = self.rows[v];
        bits(nv)
            .map(|u| (self.rows[u] & nv).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// # Panics
    /// If `v` is not a vertex.
    pub fn vertex_stats(&self, v: usize, r0: usize) -> VertexStats {
        assert!(v < self.n, "vertex {v} out of range");
        let degree = self.degree(v);
        let triangles = self.triangles_at(v);
        VertexStats {
            degree,
            triangles,
            f: r0 as i64 * degree as i64 - triangles as i64,
        }
    }

    pub fn is_clique(&self, set: u64) -> bool {
        bits(set).all(|v| (set & !(1u64 << v)) & !self.rows[v] == 0)
    }

    pub fn is_independent(&self, set: u64) -> bool {
        bits(set).all(|v| self.rows[v] & set == 0)
    }

    /// Whether the subgraph induced by `within` contains a clique on `size` vertices.
    pub fn has_clique(&self, within: u64, size: usize) -> bool {
        fn search(g: &Graph, cand: u64, need: usize) -> bool {
            if need == 0 {
                return true;
            }
            let mut cand = cand;
            while (cand.count_ones() as usize) >= need {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if search(g, cand & g.rows[v], need - 1) {
                    return true;
                }
            }
            false
        }
        search(self, within & self.vertex_mask(), size)
    }

    /// True iff the graph has no complete subgraph on `m + 1` vertices.
    pub fn clique_number_at_most(&self, m: usize) -> bool {
        match m {
            0 => self.n == 0,
            1 => self.rows.iter().all(|&r| r == 0),
            2 => self.triangle_count() == 0,
            _ => !self.has_clique(self.vertex_mask(), m + 1),
        }
    }

    pub fn is_k4_free(&self) -> bool {
        self.clique_number_at_most(3)
    }

    /// Maximum clique of the subgraph induced by `within`; among maximum
    /// cliques the lexicographically smallest sorted vertex list wins.
    pub fn max_clique_in(&self, within: u64) -> u64 {
        fn search(g: &Graph, current: u64, cand: u64, best: &mut u64) {
            let mut cand = cand;
            while cand != 0 {
                if current.count_ones() + cand.count_ones() <= best.count_ones() {
                    return;
                }
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let next = current | (1u64 << v);
                if next.count_ones() > best.count_ones() {
                    *best = next;
                }
                search(g, next, cand & g.rows[v], best);
            }
        }
        let mut best = 0;
        search(self, 0, within & self.vertex_mask(), &mut best);
        best
    }

    pub fn clique_number(&self) -> usize {
        self.max_clique_in(self.vertex_mask()).count_ones() as usize
    }

    /// A new graph in which `target` has exactly the neighborhood of `source`.
    ///
    /// The two vertices must be distinct and non-adjacent, so afterwards they
    /// form an independent pair of twins.
    pub fn replace_by_copy(&self, target: usize, source: usize) -> Result<Graph, GraphError> {
        self.check_vertex(target)?;
        self.check_vertex(source)?;
        if target == source {
            return Err(GraphError::SameVertex(target));
        }
        if self.has_edge(target, source) {
            return Err(GraphError::AdjacentCopy { target, original: source });
        }
        let mut rows = self.rows.clone();
        let tbit = 1u64 << target;
        for u in bits(rows[target]) {
            rows[u] &= !tbit;
        }
        rows[target] = rows[source];
        for u in bits(rows[source]) {
            rows[u] |= tbit;
        }
        Ok(Graph { n: self.n, rows })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ n: {}, edges: [", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "] }}")
    }
}

/// Graphs serialize as their graph6 string.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&crate::graph6::to_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        crate::graph6::parse_graph6(&s).map_err(serde::de::Error::custom)
    }
}
