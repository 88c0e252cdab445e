//! Finite windows of semiplanar graphs: the face-defined combinatorial map, its
//! structural validation, and the graph metric `d^G` with geodesic balls.

mod map;
mod metric;
mod simple;
mod validate;

pub use map::{Edge, EdgeId, HalfEdge, HalfEdgeId, HalfEdgeMap, Rotation};
pub use metric::{ball, ball_around_set, bfs_distances, graph_distance, BallSubgraph, UNREACHED};
pub use simple::SimpleGraph;
pub use validate::{validate, Location, ValidationReport, Violation};

use thiserror::Error;

pub type VertexId = usize;
pub type FaceId = usize;

/// Locally finite graph with an explicit window boundary.
///
/// Everything downstream of the face structure (balls, volumes, the Laplacian and
/// its probes) only needs this view, so trees and other non-semiplanar test graphs
/// can be analysed with the same code.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;

    fn neighbors(&self, v: VertexId) -> &[VertexId];

    /// True when `v` may be missing neighbours that exist in the underlying infinite graph.
    fn is_window_boundary(&self, v: VertexId) -> bool;

    fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Conductance of the edge from `v` to `neighbors(v)[i]`; 1 unless the graph is a
    /// weighted network.
    fn conductance(&self, v: VertexId, i: usize) -> f64 {
        let _ = (v, i);
        1.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("edge {a}-{b} is traversed {uses} times (at most 2 allowed)")]
    EdgeOveruse { a: VertexId, b: VertexId, uses: usize },
    #[error("face {face} repeats vertex {vertex} consecutively (loop edge)")]
    LoopEdge { face: FaceId, vertex: VertexId },
    #[error("face {face} traverses edge {a}-{b} twice")]
    DuplicateEdge { face: FaceId, a: VertexId, b: VertexId },
    #[error("face {face} has fewer than 3 vertices or repeats a vertex")]
    DegenerateFace { face: FaceId },
    #[error("face {face} uses vertex {vertex} but the map has {vertex_count} vertices")]
    VertexOutOfRange { face: FaceId, vertex: VertexId, vertex_count: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

pub(crate) fn check_vertex<G: Adjacency + ?Sized>(g: &G, v: VertexId) -> Result<(), QueryError> {
    if v < g.vertex_count() {
        Ok(())
    } else {
        Err(QueryError::UnknownVertex(v))
    }
}

#[cfg(test)]
mod tests;
