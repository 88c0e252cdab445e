//! Volume growth of geodesic balls, chord geometry of unit-side regular polygons,
//! and the comparison between graph distance and distance through faces.

mod chord;
mod surrogate;
mod volume;

pub use chord::{chord_ratio, chord_sweep, ChordReport, ChordSweep};
pub use surrogate::{bilipschitz_estimate, face_chord_distances, BiLipschitzReport};
pub use volume::{ball_volume_profile, volume_axioms, BallProfile, VolumeAxiomReport};

use crate::graph::VertexId;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum MetricsError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("only radii up to {complete_up_to:?} give complete balls, need at least {needed}")]
    WindowTooSmall { complete_up_to: Option<usize>, needed: usize },
    #[error("invalid boundary positions s={s}, t={t} on a {n}-gon")]
    InvalidPosition { n: usize, s: f64, t: f64 },
    #[error("need at least two interior vertices to sample pairs")]
    TooFewVertices,
}

#[cfg(test)]
mod tests;
