//! Exact monophonic-convexity invariants for small graphs, with closed-form
//! evaluation on complementary prisms.
//!
//! The crate has two independent routes to every invariant:
//!
//! * [`oracle`] — brute-force searches over the monophonic interval
//!   structure, exact on any graph that fits the configured cap;
//! * [`prism`] — case-dispatched closed forms for complementary prisms,
//!   each returning a constructive witness.
//!
//! [`verify`] runs both routes and compares them; the command-line harness
//! and the acceptance suite are built on that comparison.

pub mod bitset;
pub mod codec;
pub mod convexity;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod prism;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use graph::{ComponentStructure, Distance, Graph, PrismLayout};
