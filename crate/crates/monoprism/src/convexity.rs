//! Monophonic (induced-path) convexity machinery.
//!
//! The monophonic interval `J[u, v]` is the set of vertices lying on some
//! chordless u,v-path. A set is monophonically convex when it contains the
//! interval of each of its vertex pairs; the hull of a set is the smallest
//! convex superset, reached by iterating the interval operator.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// All vertices on some chordless path between `u` and `v`, including the
/// endpoints. `J[v, v] = {v}`, and for vertices with no connecting path the
/// interval is just the endpoint pair.
///
/// The search walks induced-path extensions depth first: a partial path may
/// grow by a neighbor `w` of its last vertex only if `w` is adjacent to no
/// earlier path vertex. Appending the target is subject to the same rule, so
/// chords into `v` are handled uniformly. No memoization: at the supported
/// scales the plain search is fast, and its states are trivially auditable
/// against the naive enumerate-all-paths oracle.
///
/// Panics if `u` or `v` is out of range.
pub fn interval(g: &Graph, u: usize, v: usize) -> VertexSet {
    let n = g.order();
    assert!(u < n && v < n, "interval endpoints ({u}, {v}) out of range");
    let mut result = VertexSet::empty(n);
    result.insert(u);
    result.insert(v);
    if u == v {
        return result;
    }
    let mut path = VertexSet::singleton(n, u);
    extend_paths(g, u, v, &mut path, VertexSet::empty(n), &mut result);
    result
}

/// Depth-first growth of the induced path `path` (whose last vertex is
/// `last`; `earlier` is the path minus `last`) toward `target`, recording
/// every completed path's vertices in `result`.
fn extend_paths(
    g: &Graph,
    last: usize,
    target: usize,
    path: &mut VertexSet,
    earlier: VertexSet,
    result: &mut VertexSet,
) {
    for w in g.neighbors(last).iter() {
        if path.contains(w) || !g.neighbors(w).is_disjoint_from(&earlier) {
            continue; // revisit or chord to an earlier path vertex
        }
        if w == target {
            *result = result.union(path);
        } else {
            let mut earlier = earlier;
            earlier.insert(last);
            path.insert(w);
            extend_paths(g, w, target, path, earlier, result);
            path.remove(w);
        }
    }
}

/// The intervals of every vertex pair of one graph, computed once and shared
/// by the convexity predicates and the exact searches.
pub struct IntervalTable {
    n: usize,
    cells: Vec<VertexSet>,
}

impl IntervalTable {
    pub fn build(g: &Graph) -> Self {
        let n = g.order();
        let mut cells = Vec::with_capacity(n * (n + 1) / 2);
        for v in 0..n {
            for u in 0..=v {
                cells.push(interval(g, u, v));
            }
        }
        IntervalTable { n, cells }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `J[u, v]`; order of the endpoints does not matter.
    pub fn get(&self, u: usize, v: usize) -> VertexSet {
        let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
        self.cells[hi * (hi + 1) / 2 + lo]
    }
}

/// Union of the intervals of all vertex pairs of `s` (the one-step closure).
/// Always a superset of `s`; empty input yields the empty set.
pub fn interval_of_set(table: &IntervalTable, s: &VertexSet) -> VertexSet {
    let mut out = *s;
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out = out.union(&table.get(u, v));
        }
    }
    out
}

/// Is `s` monophonically convex, i.e. `J[s] = s`?
pub fn is_convex(table: &IntervalTable, s: &VertexSet) -> bool {
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !table.get(u, v).is_subset_of(s) {
                return false;
            }
        }
    }
    true
}

/// The monophonic hull: iterate the interval operator to its fixpoint, the
/// smallest convex set containing `s`.
pub fn hull(table: &IntervalTable, s: &VertexSet) -> VertexSet {
    let mut current = *s;
    // Each round either reaches the fixpoint or adds a vertex, so n + 1
    // rounds always suffice; the assert would only fire on a broken
    // interval operator.
    for _ in 0..=table.order() {
        let next = interval_of_set(table, &current);
        if next == current {
            return current;
        }
        current = next;
    }
    unreachable!("hull failed to stabilize within {} rounds", table.order() + 1);
}

/// Is `s` a monophonic set: does one interval step already cover the graph?
pub fn is_monophonic_set(table: &IntervalTable, s: &VertexSet) -> bool {
    interval_of_set(table, s).is_full()
}

/// Is `s` a hull set: does iterating intervals cover the graph?
pub fn is_hull_set(table: &IntervalTable, s: &VertexSet) -> bool {
    hull(table, s).is_full()
}
