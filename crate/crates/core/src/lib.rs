//! Semiplanar graphs with explicit faces, exact combinatorial curvature, generators for
//! the nonnegatively curved tiling families and their quotients, and the discrete
//! analysis probes (volume growth, Poincaré, Harnack, recurrence, oscillation decay)
//! that go with them.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command-line
//! interface live in the companion `curvaplane` crate.
//!
//! Infinite graphs are handled through finite *windows*: a [`graph::HalfEdgeMap`]
//! tracks which vertices sit on the window boundary, and every curvature or analysis
//! query is only meaningful at interior vertices or on complete balls.

#![no_std]

extern crate alloc;

pub mod curvature;
pub mod graph;
pub mod harmonic;
pub mod metrics;
mod rng;
pub mod tilings;

pub use curvature::{Curvature, Pattern, PatternClass, Sign};
pub use graph::{Adjacency, BallSubgraph, HalfEdgeMap, SimpleGraph, VertexId};
pub use rng::task_rng;
