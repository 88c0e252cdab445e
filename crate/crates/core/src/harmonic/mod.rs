//! The normalized graph Laplacian `Lf(x) = (1/d_x) Σ_{y~x} (f(y) - f(x))`, Dirichlet
//! problems on balls, and probes for the Harnack, mean-value, Poincaré, spectral,
//! recurrence and oscillation behaviour of harmonic functions.
//!
//! Everything here works on any [`Adjacency`] graph, not only semiplanar maps. Edge
//! conductances, when present, weight the Laplacian.

#![allow(clippy::needless_range_loop)]

mod probes;
mod solver;
mod spectrum;

pub use probes::{
    escape_probability, gradient_estimate_check, harnack_ratio, harnack_samples, mean_value_check, oscillation_profile,
    oscillation_samples, poincare_constant, poincare_ratio, solve_dirichlet, solve_on, FieldModel, GradientEstimate,
    HarmonicField, OscillationProfile,
};
pub use solver::{DirichletSolver, DIRECT_LIMIT};
pub use spectrum::{lambda1_check, normalized_laplacian_spectrum, symmetric_eigenvalues, Lambda1Report};

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Adjacency, VertexId};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum HarmonicError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {vertex} has a neighbour without a value")]
    MissingNeighborValue { vertex: VertexId },
    #[error("the Dirichlet boundary is empty")]
    EmptyBoundary,
    #[error("the component of vertex {vertex} does not touch the boundary")]
    FloatingComponent { vertex: VertexId },
    #[error("the ball of radius {radius} is not complete in this window")]
    WindowTooSmall { radius: usize },
    #[error("the window is too shallow for radius {radius} around the set")]
    WindowTooShallow { radius: usize },
    #[error("boundary value {value} at vertex {vertex} is not positive")]
    NonpositiveBoundary { vertex: VertexId, value: f64 },
    #[error("the field vanishes on the whole domain")]
    ZeroField,
    #[error("the induced subgraph is disconnected")]
    Disconnected,
    #[error("need at least two vertices")]
    TooSmall,
    #[error("radius must be at least 1")]
    ZeroRadius,
    #[error("conjugate gradients did not converge in {iterations} iterations")]
    NoConvergence { iterations: usize },
}

/// Real values on some of the vertices of a graph.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarField {
    values: Vec<Option<f64>>,
}

impl ScalarField {
    pub fn empty(vertex_count: usize) -> Self {
        ScalarField { values: vec![None; vertex_count] }
    }

    pub fn from_fn(vertex_count: usize, f: impl Fn(VertexId) -> f64) -> Self {
        ScalarField { values: (0..vertex_count).map(|v| Some(f(v))).collect() }
    }

    pub fn on(vertex_count: usize, vertices: &[VertexId], f: impl Fn(VertexId) -> f64) -> Self {
        let mut field = Self::empty(vertex_count);
        for &v in vertices {
            field.values[v] = Some(f(v));
        }
        field
    }

    pub fn get(&self, v: VertexId) -> Option<f64> {
        self.values.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: VertexId, value: f64) {
        self.values[v] = Some(value);
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Defined `(vertex, value)` pairs in id order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, f64)> + '_ {
        self.values.iter().enumerate().filter_map(|(v, x)| x.map(|x| (v, x)))
    }
}

fn neighbor_differences<G: Adjacency + ?Sized>(
    g: &G,
    f: &ScalarField,
    x: VertexId,
) -> Result<Vec<(f64, f64)>, HarmonicError> {
    if x >= g.vertex_count() {
        return Err(HarmonicError::UnknownVertex(x));
    }
    let fx = f.get(x).ok_or(HarmonicError::MissingNeighborValue { vertex: x })?;
    g.neighbors(x)
        .iter()
        .enumerate()
        .map(|(i, &y)| {
            let fy = f.get(y).ok_or(HarmonicError::MissingNeighborValue { vertex: x })?;
            Ok((g.conductance(x, i), fy - fx))
        })
        .collect()
}

/// `Lf(x)`.
pub fn laplacian<G: Adjacency + ?Sized>(g: &G, f: &ScalarField, x: VertexId) -> Result<f64, HarmonicError> {
    let diffs = neighbor_differences(g, f, x)?;
    let mu: f64 = diffs.iter().map(|d| d.0).sum();
    Ok(diffs.iter().map(|(c, d)| c * d).sum::<f64>() / mu)
}

/// `|∇f|²(x) = Σ_{y~x} (f(y) - f(x))²`.
pub fn gradient_norm_sq<G: Adjacency + ?Sized>(g: &G, f: &ScalarField, x: VertexId) -> Result<f64, HarmonicError> {
    Ok(neighbor_differences(g, f, x)?.iter().map(|(c, d)| c * d * d).sum())
}
