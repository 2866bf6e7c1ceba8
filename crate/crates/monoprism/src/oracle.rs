//! Exact brute-force invariants with witnesses.
//!
//! Clique and independence numbers use a pivoted branch-and-bound over
//! bitsets and work on any graph within the vertex cap. The convexity
//! number, monophonic number and hull number enumerate candidate vertex
//! sets against a precomputed [`IntervalTable`]; they are gated by an
//! explicit cap on the graph order because the convexity search walks all
//! `2^n` subsets.

use itertools::Itertools;

use crate::bitset::VertexSet;
use crate::convexity::{hull, interval_of_set, is_convex, IntervalTable};
use crate::graph::Graph;

/// Default largest order accepted by the subset-enumeration searches.
/// `2^16` convexity checks per graph keeps exhaustive sweeps comfortable;
/// callers may raise the cap explicitly when they can afford it.
pub const DEFAULT_ORACLE_CAP: usize = 16;

/// An exact invariant value, a set attaining it, and how many candidates the
/// search examined (for performance regression tracking, not correctness).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("the empty graph has no convexity invariants")]
    EmptyGraph,
    #[error("graph order {n} exceeds the oracle cap {cap}")]
    AboveCap { n: usize, cap: usize },
}

fn check_order(n: usize, cap: usize) -> Result<(), OracleError> {
    if n == 0 {
        return Err(OracleError::EmptyGraph);
    }
    if n > cap {
        return Err(OracleError::AboveCap { n, cap });
    }
    Ok(())
}

/// Largest clique, by pivoted branch and bound. Deterministic: candidates
/// are expanded in ascending vertex order, so reruns return the same
/// witness. Errors only on the empty graph.
pub fn clique_number(g: &Graph) -> Result<OracleResult, OracleError> {
    if g.order() == 0 {
        return Err(OracleError::EmptyGraph);
    }
    let mut best = VertexSet::empty(g.order());
    let mut nodes = 0u64;
    expand_clique(
        g,
        VertexSet::empty(g.order()),
        g.vertex_set(),
        &mut best,
        &mut nodes,
    );
    Ok(OracleResult {
        value: best.len(),
        witness: best,
        nodes_explored: nodes,
    })
}

fn expand_clique(
    g: &Graph,
    current: VertexSet,
    mut candidates: VertexSet,
    best: &mut VertexSet,
    nodes: &mut u64,
) {
    *nodes += 1;
    if current.len() + candidates.len() <= best.len() {
        return; // cannot beat the incumbent
    }
    if candidates.is_empty() {
        *best = current; // strictly larger by the bound above
        return;
    }
    // Branch only on candidates outside the pivot's neighborhood; cliques
    // skipping all of those lie inside N(pivot) and are found recursively.
    let pivot = candidates
        .iter()
        .max_by_key(|&p| g.neighbors(p).intersection(&candidates).len())
        .unwrap();
    let branches = candidates.difference(&g.neighbors(pivot));
    for v in branches.iter() {
        let mut with_v = current;
        with_v.insert(v);
        expand_clique(
            g,
            with_v,
            candidates.intersection(&g.neighbors(v)),
            best,
            nodes,
        );
        candidates.remove(v);
    }
}

/// Largest independent set: the clique number of the complement. The
/// witness is checked to be independent in `g` before it is returned.
pub fn independence_number(g: &Graph) -> Result<OracleResult, OracleError> {
    let result = clique_number(&g.complement())?;
    debug_assert!(
        result
            .witness
            .iter()
            .all(|u| g.neighbors(u).is_disjoint_from(&result.witness)),
        "independence witness has an internal edge"
    );
    Ok(result)
}

/// Largest proper monophonically convex set, by scanning all `2^n - 1`
/// proper subsets. Among maximum witnesses the lexicographically least (as
/// an ascending vertex list) is returned, so results are reproducible.
pub fn convexity_number(table: &IntervalTable, cap: usize) -> Result<OracleResult, OracleError> {
    let n = table.order();
    check_order(n, cap)?;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = VertexSet::empty(n); // the empty set is convex and proper
    let mut nodes = 0u64;
    for bits in 1..full {
        nodes += 1;
        let s = VertexSet::from_bits(n, bits);
        if s.len() < best.len() || !is_convex(table, &s) {
            continue;
        }
        if s.len() > best.len() || s.lex_precedes(&best) {
            best = s;
        }
    }
    Ok(OracleResult {
        value: best.len(),
        witness: best,
        nodes_explored: nodes,
    })
}

/// Smallest set whose one-step interval closure covers the graph.
pub fn monophonic_number(
    g: &Graph,
    table: &IntervalTable,
    cap: usize,
) -> Result<OracleResult, OracleError> {
    smallest_covering_set(g, table, cap, |table, s| {
        interval_of_set(table, s).is_full()
    })
}

/// Smallest set whose hull covers the graph.
pub fn hull_number(
    g: &Graph,
    table: &IntervalTable,
    cap: usize,
) -> Result<OracleResult, OracleError> {
    smallest_covering_set(g, table, cap, |table, s| hull(table, s).is_full())
}

/// Shared search for the monophonic and hull numbers: try candidate sets of
/// ascending size until `covers` accepts one.
///
/// Every monophonic set and every hull set must contain all simplicial
/// vertices (a simplicial vertex is never interior to a chordless path, so
/// nothing else can generate it). The search therefore fixes the simplicial
/// vertices in every candidate and chooses only the remainder; the
/// acceptance suite re-validates this pruning against an unpruned search on
/// small graphs. Candidates of each size are tried in lexicographic order
/// of their vertex lists, so the first hit is the canonical witness.
fn smallest_covering_set(
    g: &Graph,
    table: &IntervalTable,
    cap: usize,
    covers: impl Fn(&IntervalTable, &VertexSet) -> bool,
) -> Result<OracleResult, OracleError> {
    let n = table.order();
    check_order(n, cap)?;
    assert_eq!(g.order(), n, "graph does not match the interval table");
    let forced = g.simplicial_vertices();
    let free: Vec<usize> = forced.complement().iter().collect();
    let mut nodes = 0u64;
    for k in forced.len().max(1)..=n {
        let picks = k - forced.len();
        // `Itertools::combinations` emits index subsets in lexicographic
        // order; `free` is ascending, and prepending the fixed simplicial
        // set preserves list order between same-size candidates.
        for extra in free.iter().combinations(picks) {
            nodes += 1;
            let mut s = forced;
            for &&v in &extra {
                s.insert(v);
            }
            if covers(table, &s) {
                return Ok(OracleResult {
                    value: k,
                    witness: s,
                    nodes_explored: nodes,
                });
            }
        }
    }
    unreachable!("the full vertex set always covers the graph");
}
