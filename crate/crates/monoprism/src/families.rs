//! Deterministic graph families and seeded Erdos-Renyi sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::MAX_VERTICES;
use crate::codec::colex_pairs;
use crate::graph::Graph;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum FamilyError {
    #[error("{family} on {n} vertices is not defined (need at least {min})")]
    TooSmall {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("graph order {0} exceeds the {MAX_VERTICES}-vertex cap")]
    TooLarge(usize),
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
}

/// A named graph family with its order parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path on `n` vertices, edges `i - (i+1)`.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Complete graph.
    Complete(usize),
    /// Edgeless graph.
    Edgeless(usize),
    /// Star: vertex 0 joined to each of the other `n - 1` vertices.
    Star(usize),
    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
}

fn check_order(family: &'static str, n: usize, min: usize) -> Result<(), FamilyError> {
    if n < min {
        return Err(FamilyError::TooSmall { family, n, min });
    }
    if n > MAX_VERTICES {
        return Err(FamilyError::TooLarge(n));
    }
    Ok(())
}

/// Builds a member of a named family.
pub fn generate(family: Family) -> Result<Graph, FamilyError> {
    match family {
        Family::Path(n) => {
            check_order("path", n, 1)?;
            Ok(Graph::from_edges(n, (1..n).map(|v| (v - 1, v))))
        }
        Family::Cycle(n) => {
            check_order("cycle", n, 3)?;
            Ok(Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))))
        }
        Family::Complete(n) => {
            check_order("complete", n, 1)?;
            Ok(Graph::from_edges(n, colex_pairs(n)))
        }
        Family::Edgeless(n) => {
            check_order("edgeless", n, 1)?;
            Ok(Graph::empty(n))
        }
        Family::Star(n) => {
            check_order("star", n, 2)?;
            Ok(Graph::from_edges(n, (1..n).map(|v| (0, v))))
        }
        Family::CompleteBipartite(a, b) => {
            check_order("complete bipartite (first part)", a, 1)?;
            check_order("complete bipartite (second part)", b, 1)?;
            check_order("complete bipartite", a + b, 2)?;
            Ok(Graph::from_edges(
                a + b,
                (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
            ))
        }
    }
}

/// A reproducible G(n, p) source: every graph is drawn from a ChaCha stream
/// keyed by the seed, so a (seed, draw index) pair always denotes the same
/// graph, on every platform.
pub struct GnpSource {
    n: usize,
    p: f64,
    rng: ChaCha8Rng,
}

impl GnpSource {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self, FamilyError> {
        check_order("gnp", n, 1)?;
        if !(0.0..=1.0).contains(&p) {
            return Err(FamilyError::BadProbability(p));
        }
        Ok(GnpSource {
            n,
            p,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    /// Draws the next graph: each vertex pair becomes an edge independently
    /// with probability `p`, pairs visited in colex order.
    pub fn draw(&mut self) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in colex_pairs(self.n) {
            if self.rng.random_bool(self.p) {
                g.add_edge(u, v);
            }
        }
        g
    }
}

/// Single-draw convenience for `GnpSource`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    Ok(GnpSource::new(n, p, seed)?.draw())
}
