use alloc::vec::Vec;

use super::MetricsError;
use crate::graph::{bfs_distances, Adjacency, VertexId, UNREACHED};
#[allow(unused_imports)]
use num_traits::Float;

/// `|B_R(p)| = Σ_{x ∈ B_R(p)} d_x` for `R = 0..=r_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallProfile {
    pub center: VertexId,
    pub volumes: Vec<u64>,
    /// Number of vertices in each ball.
    pub counts: Vec<usize>,
    /// Largest radius whose ball avoids the window boundary.
    pub complete_up_to: Option<usize>,
}

pub fn ball_volume_profile<G: Adjacency + ?Sized>(
    g: &G,
    p: VertexId,
    r_max: usize,
) -> Result<BallProfile, MetricsError> {
    if p >= g.vertex_count() {
        return Err(MetricsError::UnknownVertex(p));
    }
    let d = bfs_distances(g, &[p], Some(r_max + 1));
    let mut volumes = alloc::vec![0u64; r_max + 1];
    let mut counts = alloc::vec![0usize; r_max + 1];
    let mut first_boundary = usize::MAX;
    for (v, &dv) in d.iter().enumerate() {
        if dv == UNREACHED {
            continue;
        }
        if g.is_window_boundary(v) {
            first_boundary = first_boundary.min(dv);
        }
        if dv <= r_max {
            volumes[dv] += g.degree(v) as u64;
            counts[dv] += 1;
        }
    }
    for r in 1..=r_max {
        volumes[r] += volumes[r - 1];
        counts[r] += counts[r - 1];
    }
    let complete_up_to = first_boundary.checked_sub(1).map(|c| c.min(r_max));
    Ok(BallProfile { center: p, volumes, counts, complete_up_to })
}

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeAxiomReport {
    /// Radii `1..=valid_radius` enter the statistics.
    pub valid_radius: usize,
    /// `max |B_{2R}| / |B_R|` over `2R <= valid_radius`.
    pub doubling_constant: f64,
    /// `max (|B_R| / |B_r|)·(r/R)²` over `1 <= r < R <= valid_radius`.
    pub relative_constant: f64,
    /// Least-squares slope of `ln |B_R|` against `ln R` over the top half of the radii.
    pub growth_exponent: f64,
    /// `max |B_R| / R²`.
    pub quadratic_coefficient: f64,
}

pub fn volume_axioms(profile: &BallProfile) -> Result<VolumeAxiomReport, MetricsError> {
    let rc = match profile.complete_up_to {
        Some(rc) if rc >= 4 => rc,
        other => return Err(MetricsError::WindowTooSmall { complete_up_to: other, needed: 4 }),
    };
    let v = |r: usize| profile.volumes[r] as f64;

    let doubling_constant = (1..=rc / 2).map(|r| v(2 * r) / v(r)).fold(0.0, f64::max);
    let mut relative_constant: f64 = 0.0;
    for big in 2..=rc {
        for small in 1..big {
            let s = small as f64 / big as f64;
            relative_constant = relative_constant.max(v(big) / v(small) * s * s);
        }
    }
    let quadratic_coefficient = (1..=rc).map(|r| v(r) / (r * r) as f64).fold(0.0, f64::max);

    let pts: Vec<(f64, f64)> = (rc.div_ceil(2)..=rc).map(|r| ((r as f64).ln(), v(r).ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();

    Ok(VolumeAxiomReport {
        valid_radius: rc,
        doubling_constant,
        relative_constant,
        growth_exponent: sxy / sxx,
        quadratic_coefficient,
    })
}
