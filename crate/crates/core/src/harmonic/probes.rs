use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_distr::StandardNormal;

use super::{gradient_norm_sq, laplacian, DirichletSolver, HarmonicError, ScalarField};
use crate::graph::{ball, ball_around_set, bfs_distances, Adjacency, BallSubgraph, VertexId};
use crate::rng::task_rng;
#[allow(unused_imports)]
use num_traits::Float;

/// A solved Dirichlet problem.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicField {
    pub interior: Vec<VertexId>,
    pub boundary: Vec<VertexId>,
    /// Defined exactly on `interior ∪ boundary`.
    pub values: ScalarField,
    /// `max |Lu|` over the interior.
    pub residual: f64,
}

impl HarmonicField {
    pub fn value(&self, v: VertexId) -> Option<f64> {
        self.values.get(v)
    }

    pub fn boundary_range(&self) -> (f64, f64) {
        range(self.boundary.iter().filter_map(|&v| self.values.get(v)))
    }

    pub fn interior_range(&self) -> (f64, f64) {
        range(self.interior.iter().filter_map(|&v| self.values.get(v)))
    }
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

/// Harmonic on `interior`, equal to `data` on `boundary`.
pub fn solve_on<G: Adjacency + ?Sized>(
    g: &G,
    interior: &[VertexId],
    boundary: &[VertexId],
    data: impl Fn(VertexId) -> f64,
) -> Result<HarmonicField, HarmonicError> {
    let solver = DirichletSolver::new(g, interior, boundary)?;
    let values: Vec<f64> = boundary.iter().map(|&z| data(z)).collect();
    field_from(g, &solver, &values)
}

fn field_from<G: Adjacency + ?Sized>(
    g: &G,
    solver: &DirichletSolver,
    values: &[f64],
) -> Result<HarmonicField, HarmonicError> {
    let u = solver.solve(values)?;
    let mut field = ScalarField::empty(g.vertex_count());
    for (&z, &x) in solver.fixed().iter().zip(values) {
        field.set(z, x);
    }
    for (&x, &ux) in solver.unknowns().iter().zip(&u) {
        field.set(x, ux);
    }
    let mut residual: f64 = 0.0;
    for &x in solver.unknowns() {
        residual = residual.max(laplacian(g, &field, x)?.abs());
    }
    Ok(HarmonicField {
        interior: solver.unknowns().to_vec(),
        boundary: solver.fixed().to_vec(),
        values: field,
        residual,
    })
}

fn complete_ball<G: Adjacency + ?Sized>(g: &G, p: VertexId, radius: usize) -> Result<BallSubgraph, HarmonicError> {
    let b = ball(g, p, radius).map_err(|_| HarmonicError::UnknownVertex(p))?;
    if b.complete {
        Ok(b)
    } else {
        Err(HarmonicError::WindowTooSmall { radius })
    }
}

/// Harmonic extension of `data` from the sphere `∂B_R` into the ball.
pub fn solve_dirichlet<G: Adjacency + ?Sized>(
    g: &G,
    ball: &BallSubgraph,
    data: impl Fn(VertexId) -> f64,
) -> Result<HarmonicField, HarmonicError> {
    if !ball.complete {
        return Err(HarmonicError::WindowTooSmall { radius: ball.radius });
    }
    let interior: Vec<VertexId> = ball.inner().collect();
    let boundary: Vec<VertexId> = ball.sphere().collect();
    if ball.radius == 0 {
        return Err(HarmonicError::EmptyBoundary);
    }
    solve_on(g, &interior, &boundary, data)
}

/// `max u / min u` over `B_R(p)` for `u` harmonic on `B_{C1·R}(p)` with positive
/// boundary data.
pub fn harnack_ratio<G: Adjacency + ?Sized>(
    g: &G,
    p: VertexId,
    radius: usize,
    c1: usize,
    data: impl Fn(VertexId) -> f64,
) -> Result<f64, HarmonicError> {
    let outer = complete_ball(g, p, c1 * radius)?;
    for v in outer.sphere() {
        let value = data(v);
        if value.is_nan() || value <= 0.0 {
            return Err(HarmonicError::NonpositiveBoundary { vertex: v, value });
        }
    }
    let u = solve_dirichlet(g, &outer, data)?;
    let (lo, hi) = range(outer.members_at_most(radius).filter_map(|v| u.value(v)));
    Ok(hi / lo)
}

/// Harnack ratios for `samples` random boundary data `exp(ξ)`, `ξ` standard Gaussian per
/// sphere vertex in id order; sample `i` draws from the stream `(seed, i)`. The ball
/// is factored once.
pub fn harnack_samples<G: Adjacency + ?Sized>(
    g: &G,
    p: VertexId,
    radius: usize,
    c1: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<f64>, HarmonicError> {
    let outer = complete_ball(g, p, c1 * radius)?;
    let interior: Vec<VertexId> = outer.inner().collect();
    let mut boundary: Vec<VertexId> = outer.sphere().collect();
    boundary.sort_unstable();
    let solver = DirichletSolver::new(g, &interior, &boundary)?;
    let inner: Vec<VertexId> = outer.members_at_most(radius).collect();
    (0..samples)
        .map(|task| {
            let mut rng = task_rng(seed, task as u64);
            let data: Vec<f64> = boundary.iter().map(|_| rng.sample::<f64, _>(StandardNormal).exp()).collect();
            let u = field_from(g, &solver, &data)?;
            let (lo, hi) = range(inner.iter().filter_map(|&v| u.value(v)));
            Ok(hi / lo)
        })
        .collect()
}

/// `u(p)² |B| / Σ_{x ∈ B} u(x)² d_x` over the domain `B` of the field.
pub fn mean_value_check<G: Adjacency + ?Sized>(
    g: &G,
    p: VertexId,
    field: &HarmonicField,
) -> Result<f64, HarmonicError> {
    let up = field.value(p).ok_or(HarmonicError::MissingNeighborValue { vertex: p })?;
    let mut volume = 0.0;
    let mut energy = 0.0;
    for &x in field.interior.iter().chain(&field.boundary) {
        let d = g.degree(x) as f64;
        let u = field.value(x).unwrap_or(0.0);
        volume += d;
        energy += u * u * d;
    }
    if energy == 0.0 {
        return Err(HarmonicError::ZeroField);
    }
    Ok(up * up * volume / energy)
}

/// Random test functions for the Poincaré probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldModel {
    /// Independent standard Gaussians at every vertex.
    WhiteNoise,
    /// `Σ_j ξ_j d(x, a_j) / R` with standard Gaussian `ξ_j` and uniformly chosen
    /// anchors `a_j` in the enlarged ball.
    DistanceMixture { anchors: usize },
}

/// `Σ_{B_R} (f - f_B)² d_x / (R² Σ_{x,y ∈ B_{CR}, x~y} (f(x) - f(y))²)`, each edge
/// counted in both directions; `0/0` counts as 0.
pub fn poincare_ratio<G: Adjacency + ?Sized>(
    g: &G,
    p: VertexId,
    radius: usize,
    enlargement: usize,
    f: &ScalarField,
) -> Result<f64, HarmonicError> {
    let outer = complete_ball(g, p, enlargement * radius)?;
    poincare_on(g, &outer, radius, f)
}

fn poincare_on<G: Adjacency + ?Sized>(
    g: &G,
    outer: &BallSubgraph,
    radius: usize,
    f: &ScalarField,
) -> Result<f64, HarmonicError> {
    let value = |v: VertexId| f.get(v).ok_or(HarmonicError::MissingNeighborValue { vertex: v });
    let inner: Vec<VertexId> = outer.members_at_most(radius).collect();
    let mut volume = 0.0;
    let mut weighted = 0.0;
    for &x in &inner {
        let d = g.degree(x) as f64;
        volume += d;
        weighted += value(x)? * d;
    }
    let mean = weighted / volume;
    let mut lhs = 0.0;
    for &x in &inner {
        let dev = value(x)? - mean;
        lhs += dev * dev * g.degree(x) as f64;
    }
    let mut rhs = 0.0;
    for &(a, b) in &outer.edges {
        let jump = value(a)? - value(b)?;
        rhs += 2.0 * jump * jump;
    }
    if rhs == 0.0 {
        return Ok(0.0);
    }
    Ok(lhs / ((radius * radius) as f64 * rhs))
}

/// Largest `poincare_ratio` over `samples` random functions on `B_{CR}(p)`; sample `i`
/// draws from the stream `(seed, i)`.
pub fn poincare_constant<G: Adjacency + ?Sized>(
    g: &G,
    p: VertexId,
    radius: usize,
    enlargement: usize,
    samples: usize,
    seed: u64,
    model: FieldModel,
) -> Result<f64, HarmonicError> {
    if radius == 0 {
        return Err(HarmonicError::ZeroRadius);
    }
    let outer = complete_ball(g, p, enlargement * radius)?;
    let mut best: f64 = 0.0;
    for task in 0..samples {
        let mut rng = task_rng(seed, task as u64);
        let f = match model {
            FieldModel::WhiteNoise => {
                ScalarField::on(g.vertex_count(), &outer.vertices, |_| 0.0).map_values(|_| rng.sample(StandardNormal))
            }
            FieldModel::DistanceMixture { anchors } => {
                let mut f = ScalarField::on(g.vertex_count(), &outer.vertices, |_| 0.0);
                for _ in 0..anchors {
                    let a = outer.vertices[rng.random_range(0..outer.vertices.len())];
                    let xi: f64 = rng.sample(StandardNormal);
                    let d = bfs_distances(g, &[a], None);
                    for &x in &outer.vertices {
                        let cur = f.get(x).unwrap_or(0.0);
                        f.set(x, cur + xi * d[x] as f64 / radius as f64);
                    }
                }
                f
            }
        };
        best = best.max(poincare_on(g, &outer, radius, &f)?);
    }
    Ok(best)
}

/// Probability that the walk from `p` reaches `∂B_R(p)` before returning to `p`.
pub fn escape_probability<G: Adjacency + ?Sized>(g: &G, p: VertexId, radius: usize) -> Result<f64, HarmonicError> {
    if radius == 0 {
        return Err(HarmonicError::ZeroRadius);
    }
    let b = complete_ball(g, p, radius)?;
    let interior: Vec<VertexId> =
        b.vertices.iter().zip(&b.distances).filter(|(_, &d)| d > 0 && d < radius).map(|(&v, _)| v).collect();
    let mut fixed: Vec<VertexId> = vec![p];
    fixed.extend(b.sphere());
    let h = solve_on(g, &interior, &fixed, |v| if v == p { 0.0 } else { 1.0 })?;
    let mut flow = 0.0;
    let mut mu = 0.0;
    for (i, &y) in g.neighbors(p).iter().enumerate() {
        let c = g.conductance(p, i);
        mu += c;
        flow += c * h.value(y).unwrap_or(1.0);
    }
    Ok(flow / mu)
}

#[derive(Clone, Debug, PartialEq)]
pub struct OscillationProfile {
    pub radii: Vec<usize>,
    /// `M(r) = max - min` of `u` on the sphere `∂B_r(A)`.
    pub oscillation: Vec<f64>,
    /// `(r, M(r) / M(9r))` for every `r` with `9r` also requested and `M(9r) > 0`.
    pub decay: Vec<(usize, f64)>,
    pub residual: f64,
}

/// Solves on `B_{R}(A)` with `data` on its sphere and measures the oscillation of the
/// solution on the spheres of the requested radii.
pub fn oscillation_profile<G: Adjacency + ?Sized>(
    g: &G,
    set: &[VertexId],
    domain_radius: usize,
    data: impl Fn(VertexId) -> f64,
    radii: &[usize],
) -> Result<OscillationProfile, HarmonicError> {
    let field = oscillation_field(g, set, domain_radius, data)?;
    profile_of(g, set, &field, radii, domain_radius)
}

/// Oscillation profiles for `samples` random boundary data: uniform values per sphere
/// vertex in id order, rescaled to span exactly `[0, 1]`; sample `i` draws from the
/// stream `(seed, i)`. The domain is factored once.
pub fn oscillation_samples<G: Adjacency + ?Sized>(
    g: &G,
    set: &[VertexId],
    domain_radius: usize,
    radii: &[usize],
    samples: usize,
    seed: u64,
) -> Result<Vec<OscillationProfile>, HarmonicError> {
    let shallow = HarmonicError::WindowTooShallow { radius: domain_radius };
    let b = ball_around_set(g, set, domain_radius).map_err(|_| shallow.clone())?;
    if !b.complete || domain_radius == 0 {
        return Err(shallow);
    }
    let interior: Vec<VertexId> = b.inner().collect();
    let mut boundary: Vec<VertexId> = b.sphere().collect();
    boundary.sort_unstable();
    let solver = DirichletSolver::new(g, &interior, &boundary)?;
    (0..samples)
        .map(|task| {
            let mut rng = task_rng(seed, task as u64);
            let mut data: Vec<f64> = boundary.iter().map(|_| rng.random::<f64>()).collect();
            let (lo, hi) = range(data.iter().copied());
            if hi > lo {
                data.iter_mut().for_each(|x| *x = (*x - lo) / (hi - lo));
            }
            let field = field_from(g, &solver, &data)?;
            profile_of(g, set, &field, radii, domain_radius)
        })
        .collect()
}

/// The harmonic function behind [`oscillation_profile`].
pub(crate) fn oscillation_field<G: Adjacency + ?Sized>(
    g: &G,
    set: &[VertexId],
    domain_radius: usize,
    data: impl Fn(VertexId) -> f64,
) -> Result<HarmonicField, HarmonicError> {
    let shallow = HarmonicError::WindowTooShallow { radius: domain_radius };
    let b = ball_around_set(g, set, domain_radius).map_err(|_| shallow.clone())?;
    if !b.complete || domain_radius == 0 {
        return Err(shallow);
    }
    let interior: Vec<VertexId> = b.inner().collect();
    let boundary: Vec<VertexId> = b.sphere().collect();
    solve_on(g, &interior, &boundary, data)
}

fn profile_of<G: Adjacency + ?Sized>(
    g: &G,
    set: &[VertexId],
    field: &HarmonicField,
    radii: &[usize],
    domain_radius: usize,
) -> Result<OscillationProfile, HarmonicError> {
    if let Some(&r) = radii.iter().find(|&&r| r > domain_radius) {
        return Err(HarmonicError::WindowTooShallow { radius: r });
    }
    let d = bfs_distances(g, set, Some(domain_radius));
    let oscillation: Vec<f64> = radii
        .iter()
        .map(|&r| {
            let (lo, hi) = range((0..d.len()).filter(|&v| d[v] == r).filter_map(|v| field.value(v)));
            if hi >= lo {
                hi - lo
            } else {
                0.0
            }
        })
        .collect();
    let mut decay = Vec::new();
    for (i, &r) in radii.iter().enumerate() {
        if let Some(j) = radii.iter().position(|&s| s == 9 * r) {
            if oscillation[j] > 0.0 {
                decay.push((r, oscillation[i] / oscillation[j]));
            }
        }
    }
    Ok(OscillationProfile { radii: radii.to_vec(), oscillation, decay, residual: field.residual })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GradientEstimate {
    /// `|∇u|(x)`.
    pub lhs: f64,
    /// `osc_{B_{6r}(x)} u / √r`.
    pub rhs_scale: f64,
}

pub fn gradient_estimate_check<G: Adjacency + ?Sized>(
    g: &G,
    field: &HarmonicField,
    x: VertexId,
    r: usize,
) -> Result<GradientEstimate, HarmonicError> {
    if r == 0 {
        return Err(HarmonicError::ZeroRadius);
    }
    let b = complete_ball(g, x, 6 * r)?;
    let mut values = Vec::with_capacity(b.len());
    for &v in &b.vertices {
        values.push(field.value(v).ok_or(HarmonicError::WindowTooSmall { radius: 6 * r })?);
    }
    let lhs = gradient_norm_sq(g, &field.values, x)?.sqrt();
    let (lo, hi) = range(values.into_iter());
    Ok(GradientEstimate { lhs, rhs_scale: (hi - lo) / (r as f64).sqrt() })
}

impl ScalarField {
    fn map_values(mut self, mut f: impl FnMut(f64) -> f64) -> Self {
        for v in self.values.iter_mut().flatten() {
            *v = f(*v);
        }
        self
    }
}
