//! Shared helpers for the integration suites.
//!
//! Each test binary compiles this module separately and uses a different
//! subset of it, so dead-code warnings are suppressed here.
//!
//! The reference implementations here are deliberately naive and independent
//! of the library's pruned algorithms: the interval enumerator walks every
//! simple path and filters by chordlessness afterwards, and the minimum-set
//! search sweeps all subsets without forcing any vertex in. Agreement
//! between these and the library is what several suites assert.
#![allow(dead_code)]

use monoprism::bitset::VertexSet;
use monoprism::codec::colex_pairs;
use monoprism::convexity::{is_hull_set, is_monophonic_set, IntervalTable};
use monoprism::families::{generate, random_gnp, Family};
use monoprism::graph::Graph;

/// True when no two non-consecutive path vertices are adjacent.
fn is_chordless(g: &Graph, path: &[usize]) -> bool {
    for i in 0..path.len() {
        for j in i + 2..path.len() {
            if g.has_edge(path[i], path[j]) {
                return false;
            }
        }
    }
    true
}

fn walk_simple_paths(
    g: &Graph,
    target: usize,
    path: &mut Vec<usize>,
    visited: &mut VertexSet,
    result: &mut VertexSet,
) {
    let last = *path.last().unwrap();
    if last == target {
        if is_chordless(g, path) {
            for &v in path.iter() {
                result.insert(v);
            }
        }
        return;
    }
    for w in g.neighbors(last).iter() {
        if visited.contains(w) {
            continue;
        }
        path.push(w);
        visited.insert(w);
        walk_simple_paths(g, target, path, visited, result);
        visited.remove(w);
        path.pop();
    }
}

/// Reference monophonic interval: vertices on chordless `u`,`v`-paths, found
/// by enumerating all simple paths and filtering.
pub fn naive_interval(g: &Graph, u: usize, v: usize) -> VertexSet {
    let mut result = VertexSet::empty(g.order());
    result.insert(u);
    result.insert(v);
    if u == v {
        return result;
    }
    let mut path = vec![u];
    let mut visited = VertexSet::singleton(g.order(), u);
    walk_simple_paths(g, v, &mut path, &mut visited, &mut result);
    result
}

/// All subsets satisfying `pred` at the smallest satisfiable size, with no
/// forcing or pruning. Returns the empty list only if nothing satisfies.
pub fn minimum_sets_with(
    n: usize,
    pred: impl Fn(&VertexSet) -> bool,
) -> Vec<VertexSet> {
    assert!(n <= 20, "unpruned sweep is for tiny graphs");
    for k in 1..=n {
        let hits: Vec<VertexSet> = (0u64..1 << n)
            .filter(|mask| mask.count_ones() as usize == k)
            .map(|mask| VertexSet::from_bits(n, mask))
            .filter(|s| pred(s))
            .collect();
        if !hits.is_empty() {
            return hits;
        }
    }
    Vec::new()
}

/// Every minimum monophonic set of `g`, by unpruned sweep.
pub fn all_minimum_monophonic_sets(g: &Graph) -> Vec<VertexSet> {
    let table = IntervalTable::build(g);
    minimum_sets_with(g.order(), |s| is_monophonic_set(&table, s))
}

/// Every minimum hull set of `g`, by unpruned sweep.
pub fn all_minimum_hull_sets(g: &Graph) -> Vec<VertexSet> {
    let table = IntervalTable::build(g);
    minimum_sets_with(g.order(), |s| is_hull_set(&table, s))
}

/// The labeled graph selected by `mask` over the colexicographic pair order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    Graph::from_edges(
        n,
        colex_pairs(n)
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e),
    )
}

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let bits = n * (n - 1) / 2;
    assert!(bits < 63);
    (0u64..1 << bits).map(move |mask| graph_from_mask(n, mask))
}

/// The named base graphs the targeted and structural checks run on:
/// connected, co-connected, and disconnected shapes of every dispatch case.
pub fn named_bases() -> Vec<(&'static str, Graph)> {
    let f = |fam| generate(fam).unwrap();
    vec![
        ("K1", Graph::empty(1)),
        ("2K1", Graph::empty(2)),
        ("3K1", Graph::empty(3)),
        ("K2", f(Family::Complete(2))),
        ("K3", f(Family::Complete(3))),
        ("K4", f(Family::Complete(4))),
        ("P3", f(Family::Path(3))),
        ("P4", f(Family::Path(4))),
        ("P5", f(Family::Path(5))),
        ("C4", f(Family::Cycle(4))),
        ("C5", f(Family::Cycle(5))),
        ("C6", f(Family::Cycle(6))),
        ("C7", f(Family::Cycle(7))),
        ("K1,4", f(Family::Star(5))),
        ("K2,3", f(Family::CompleteBipartite(2, 3))),
        ("K3,3", f(Family::CompleteBipartite(3, 3))),
        ("2K2", f(Family::Complete(2)).disjoint_union(&f(Family::Complete(2)))),
        ("K3+K1", f(Family::Complete(3)).disjoint_union(&Graph::empty(1))),
        ("K2+P3", f(Family::Complete(2)).disjoint_union(&f(Family::Path(3)))),
        ("2P3", f(Family::Path(3)).disjoint_union(&f(Family::Path(3)))),
        (
            "K2+P3+K1",
            f(Family::Complete(2))
                .disjoint_union(&f(Family::Path(3)))
                .disjoint_union(&Graph::empty(1)),
        ),
        ("C4+K2", f(Family::Cycle(4)).disjoint_union(&f(Family::Complete(2)))),
        ("G(8,0.5)", random_gnp(8, 0.5, 424242).unwrap()),
    ]
}

/// Deterministic random bases for the sampled suites: `count` draws at each
/// (order, probability) pair, every draw from its own derived seed.
pub fn gnp_bases(orders: &[usize], ps: &[f64], count: usize, seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut stream = 0u64;
    for &n in orders {
        for &p in ps {
            for _ in 0..count {
                let s = seed.wrapping_add(stream.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                stream += 1;
                out.push(random_gnp(n, p, s).unwrap());
            }
        }
    }
    out
}
