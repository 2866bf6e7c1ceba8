//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`. Adjacency is one [`VertexSet`] per vertex, so
//! neighborhood algebra (common neighbors, private neighbors, chord tests)
//! is a handful of word operations.

use std::collections::VecDeque;

use crate::bitset::{VertexSet, MAX_VERTICES};

/// A graph distance: a hop count, or unreachable.
///
/// A dedicated enum rather than a sentinel integer, so that "infinite" can
/// never be confused with a large finite distance. The derived `Ord` places
/// `Infinite` above every `Finite` value, which is exactly the order
/// eccentricity and diameter computations need.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(&self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// The hop count, if finite.
    pub fn finite(&self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(*d),
            Distance::Infinite => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Connected components of a graph, labeled in discovery order: component 0
/// is the one containing vertex 0, component 1 the one containing the
/// smallest vertex not in component 0, and so on.
#[derive(Clone, Debug)]
pub struct ComponentStructure {
    labels: Vec<usize>,
    members: Vec<VertexSet>,
}

impl ComponentStructure {
    /// Number of components.
    pub fn count(&self) -> usize {
        self.members.len()
    }

    /// Component label of `v`.
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Vertex set of component `i`.
    pub fn members(&self, i: usize) -> VertexSet {
        self.members[i]
    }

    /// Orders of the components, in label order.
    pub fn orders(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.len()).collect()
    }

    /// Number of trivial (single-vertex) components.
    pub fn trivial_count(&self) -> usize {
        self.members.iter().filter(|m| m.len() == 1).count()
    }

    /// Order of the smallest component. Zero only for the empty graph.
    pub fn min_order(&self) -> usize {
        self.members.iter().map(|m| m.len()).min().unwrap_or(0)
    }

    /// Indices of the trivial components, ascending.
    pub fn trivial_components(&self) -> Vec<usize> {
        (0..self.count())
            .filter(|&i| self.members[i].len() == 1)
            .collect()
    }

    /// Index of the first component with at least two vertices, if any.
    pub fn first_nontrivial(&self) -> Option<usize> {
        (0..self.count()).find(|&i| self.members[i].len() >= 2)
    }
}

/// An undirected simple graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`]; inputs that may be oversized
    /// are range-checked by the parsers and generators before reaching here.
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "graph order {n} exceeds the {MAX_VERTICES}-vertex cap"
        );
        Graph {
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are idempotent;
    /// self-loops and out-of-range endpoints panic.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(
            u < self.order() && v < self.order(),
            "edge ({u}, {v}) out of range for order {}",
            self.order()
        );
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood of `v` as a set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Checks representation invariants: adjacency symmetry, irreflexivity,
    /// and per-vertex sets sized to the graph order. The representation
    /// maintains these by construction; tests run this over every graph they
    /// build as a belt-and-braces check.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.order();
        for u in 0..n {
            if self.adj[u].capacity() != n {
                return Err(format!("adjacency set of {u} sized for a different order"));
            }
            if self.adj[u].contains(u) {
                return Err(format!("self-loop at {u}"));
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return Err(format!("edge ({u}, {v}) lacks its reverse"));
                }
            }
        }
        Ok(())
    }

    /// The complement graph: same vertices, edges exactly where `self` has
    /// none.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph { adj }
    }

    /// The complementary prism: a copy of the graph on `0..n`, a copy of its
    /// complement on `n..2n`, and a perfect matching joining `v` to `v + n`.
    ///
    /// Panics if the result would exceed the vertex cap (so the base graph
    /// must have at most 32 vertices) or if the graph is empty.
    pub fn complementary_prism(&self) -> Graph {
        let n = self.order();
        assert!(n >= 1, "complementary prism of the empty graph");
        assert!(
            2 * n <= MAX_VERTICES,
            "complementary prism of order {} exceeds the {MAX_VERTICES}-vertex cap",
            2 * n
        );
        let comp = self.complement();
        let mut g = Graph::empty(2 * n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in comp.edges() {
            g.add_edge(u + n, v + n);
        }
        for v in 0..n {
            g.add_edge(v, v + n);
        }
        g
    }

    /// Disjoint union, with `other`'s vertices relabeled to start at
    /// `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n + other.order());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n, v + n);
        }
        g
    }

    /// The graph relabeled by `perm`: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// The subgraph induced by `keep`, with vertices renumbered to
    /// `0..keep.len()` in ascending original order. Also returns the original
    /// index of each new vertex.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old_of_new: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(old_of_new.len());
        for (a, &u) in old_of_new.iter().enumerate() {
            for (b, &v) in old_of_new.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        (g, old_of_new)
    }

    /// Breadth-first distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        assert!(source < self.order(), "vertex {source} out of range");
        let mut dist = vec![Distance::Infinite; self.order()];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = match dist[u] {
                Distance::Finite(d) => d,
                Distance::Infinite => unreachable!("queued vertex has a distance"),
            };
            for v in self.adj[u].iter() {
                if dist[v] == Distance::Infinite {
                    dist[v] = Distance::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Distance {
        self.distances_from(u)[v]
    }

    /// Largest distance from `v` to any vertex.
    pub fn eccentricity(&self, v: usize) -> Distance {
        self.distances_from(v)
            .into_iter()
            .max()
            .expect("eccentricity of a vertex in an empty graph")
    }

    /// Largest eccentricity; `Infinite` when disconnected. Panics on the
    /// empty graph.
    pub fn diameter(&self) -> Distance {
        assert!(self.order() >= 1, "diameter of the empty graph");
        self.vertices()
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap()
    }

    pub fn components(&self) -> ComponentStructure {
        let n = self.order();
        let mut labels = vec![usize::MAX; n];
        let mut members = Vec::new();
        for start in 0..n {
            if labels[start] != usize::MAX {
                continue;
            }
            let id = members.len();
            let mut seen = VertexSet::singleton(n, start);
            labels[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        labels[v] = id;
                        queue.push_back(v);
                    }
                }
            }
            members.push(seen);
        }
        ComponentStructure { labels, members }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count() <= 1
    }

    /// A vertex is simplicial when its open neighborhood induces a clique.
    /// Isolated and pendant vertices are simplicial vacuously.
    pub fn is_simplicial(&self, v: usize) -> bool {
        let nbrs = self.adj[v];
        nbrs.iter().all(|u| {
            // Every other neighbor of v must be adjacent to u.
            let mut required = nbrs;
            required.remove(u);
            required.is_subset_of(&self.adj[u])
        })
    }

    /// All simplicial vertices as a set.
    pub fn simplicial_vertices(&self) -> VertexSet {
        VertexSet::from_indices(
            self.order(),
            self.vertices().filter(|&v| self.is_simplicial(v)),
        )
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Index arithmetic for a complementary prism over a base graph of order
/// `base_n`: base copy on `0..n`, complement copy on `n..2n`, matching
/// partner `v <-> v + n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrismLayout {
    base_n: usize,
}

impl PrismLayout {
    pub fn new(base_n: usize) -> Self {
        assert!(base_n >= 1, "prism layout over an empty base");
        assert!(2 * base_n <= MAX_VERTICES, "prism order exceeds the vertex cap");
        PrismLayout { base_n }
    }

    /// Order of the base graph.
    pub fn base_order(&self) -> usize {
        self.base_n
    }

    /// Order of the prism.
    pub fn order(&self) -> usize {
        2 * self.base_n
    }

    /// The matched partner of a prism vertex.
    pub fn partner(&self, v: usize) -> usize {
        assert!(v < self.order(), "prism vertex {v} out of range");
        if v < self.base_n {
            v + self.base_n
        } else {
            v - self.base_n
        }
    }

    /// Does this prism vertex live on the base-graph copy?
    pub fn on_base_side(&self, v: usize) -> bool {
        assert!(v < self.order(), "prism vertex {v} out of range");
        v < self.base_n
    }

    /// Base-graph index of a prism vertex (strips the side).
    pub fn base_index(&self, v: usize) -> usize {
        if self.on_base_side(v) {
            v
        } else {
            v - self.base_n
        }
    }

    /// Prism vertices of the base copy.
    pub fn base_side(&self) -> VertexSet {
        VertexSet::from_indices(self.order(), 0..self.base_n)
    }

    /// Prism vertices of the complement copy.
    pub fn complement_side(&self) -> VertexSet {
        self.base_side().complement()
    }

    /// The permutation that swaps every vertex with its partner.
    pub fn partner_permutation(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.partner(v)).collect()
    }
}
