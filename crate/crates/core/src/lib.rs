//! r-neighbor bootstrap percolation on finite graphs.
//!
//! An uninfected vertex becomes infected once at least `r` of its neighbors
//! are infected; infections are permanent and rounds are synchronous. On a
//! d-degenerate graph with r > d the final infected set can exceed the
//! initial one by at most a factor 1 + d/(r-d), and this crate ships both
//! the machinery behind that bound and the tooling to check it exactly:
//!
//! - [`graph`]: simple undirected graphs, the edge-list text format, and
//!   vertex sets over a fixed universe;
//! - [`generate`]: seeded graph generators and initial-set sampling;
//! - [`degeneracy`]: minimum-degree-peeling orderings witnessing the exact
//!   degeneracy, plus a factorial-search oracle;
//! - [`percolation`]: the round-by-round infection engine with full traces;
//! - [`potential`]: the left-neighborhood potential along a run and its
//!   per-step drop guarantee;
//! - [`extremal`]: the tightness construction and its certification;
//! - [`bounds`]: exact integer verdicts for the size, runtime, and forest
//!   bounds;
//! - [`minperc`]: exhaustive search for smallest and inclusion-minimal
//!   percolating sets, with the tree bounds as an oracle;
//! - [`corpus`]: seeded corpora and the randomized checking sweep.

pub mod bounds;
pub mod corpus;
pub mod degeneracy;
mod error;
pub mod extremal;
pub mod generate;
pub mod graph;
pub mod minperc;
pub mod percolation;
pub mod potential;
pub mod ratio;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId, VertexSet};
pub use ratio::Rational;
