//! Serializable report bodies. Rationals are written as `"num/den"` strings so that
//! exact values survive JSON.

use curvaplane_core::curvature::{CurvatureReport, LayerDecomposition, LayerKind, Sign};
use curvaplane_core::graph::{Location, ValidationReport};
use curvaplane_core::harmonic::{HarmonicField, Lambda1Report, OscillationProfile};
use curvaplane_core::metrics::{BallProfile, BiLipschitzReport, ChordReport, ChordSweep, VolumeAxiomReport};
use num_rational::BigRational;
use serde::Serialize;

pub const TOOL: &str = "curvaplane";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Common wrapper: what ran, with which resolved settings, on which input.
#[derive(Debug, Serialize)]
pub struct Envelope<T> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<String>,
    pub result: T,
}

pub fn rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn sign_name(s: Sign) -> &'static str {
    match s {
        Sign::Negative => "negative",
        Sign::Zero => "zero",
        Sign::Positive => "positive",
    }
}

#[derive(Debug, Serialize)]
pub struct ViolationDto {
    pub rule: String,
    pub location: String,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct ValidationDto {
    pub ok: bool,
    pub orientable: Option<bool>,
    pub interior_vertex_count: Option<usize>,
    pub boundary_vertex_count: Option<usize>,
    pub violations: Vec<ViolationDto>,
}

impl ValidationDto {
    pub fn from_report(r: &ValidationReport) -> Self {
        let violations = r
            .violations
            .iter()
            .map(|v| ViolationDto {
                rule: v.rule.to_string(),
                location: match v.location {
                    Location::Vertex(x) => format!("vertex {x}"),
                    Location::Face(f) => format!("face {f}"),
                    Location::Edge(a, b) => format!("edge {a}-{b}"),
                },
                message: v.message.clone(),
            })
            .collect();
        ValidationDto {
            ok: r.ok,
            orientable: Some(r.orientable),
            interior_vertex_count: Some(r.interior_vertex_count),
            boundary_vertex_count: Some(r.boundary_vertex_count),
            violations,
        }
    }

    /// A file that could not even be built into a map.
    pub fn unreadable(rule: &str, message: String) -> Self {
        ValidationDto {
            ok: false,
            orientable: None,
            interior_vertex_count: None,
            boundary_vertex_count: None,
            violations: vec![ViolationDto { rule: rule.to_string(), location: "file".to_string(), message }],
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VertexCurvatureDto {
    pub vertex: usize,
    pub degree: usize,
    pub pattern: String,
    pub curvature: String,
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table_row: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_bound: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct CurvatureDto {
    pub max_face_degree: usize,
    pub interior_vertex_count: usize,
    pub total: String,
    pub nonnegative_everywhere: bool,
    pub gauss_bonnet_ok: bool,
    pub degree_bound_violations: Vec<usize>,
    pub vertices: Vec<VertexCurvatureDto>,
}

impl CurvatureDto {
    pub fn from_report(r: &CurvatureReport) -> Self {
        CurvatureDto {
            max_face_degree: r.max_face_degree,
            interior_vertex_count: r.vertices.len(),
            total: rational(&r.total),
            nonnegative_everywhere: r.nonnegative_everywhere,
            gauss_bonnet_ok: r.gauss_bonnet_ok,
            degree_bound_violations: r.degree_bound_violations.clone(),
            vertices: r
                .vertices
                .iter()
                .map(|v| VertexCurvatureDto {
                    vertex: v.vertex,
                    degree: v.degree,
                    pattern: v.pattern.to_string(),
                    curvature: v.curvature.to_string(),
                    class: sign_name(v.class.sign),
                    table_row: v.class.table_row.map(|row| row.to_string()),
                    certified_bound: v.class.certified_bound.as_ref().map(rational),
                })
                .collect(),
        }
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["vertex", "degree", "pattern", "curvature", "class"])?;
        for v in &self.vertices {
            w.write_record([&v.vertex.to_string(), &v.degree.to_string(), &v.pattern, &v.curvature, v.class])?;
        }
        w.into_inner().map_err(|e| e.into_error().into())
    }
}

#[derive(Debug, Serialize)]
pub struct LayerDto {
    pub index: usize,
    pub kind: &'static str,
    pub faces: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct LayersDto {
    pub big_face: usize,
    pub big_face_degree: usize,
    pub hexagon_preimage: bool,
    /// Exact curvature summed over the vertices of the big face.
    pub big_face_curvature: String,
    pub layers: Vec<LayerDto>,
    pub covered_vertices: Vec<usize>,
}

impl LayersDto {
    pub fn new(d: &LayerDecomposition, big_face_curvature: &BigRational) -> Self {
        LayersDto {
            big_face: d.big_face,
            big_face_degree: d.big_face_degree,
            hexagon_preimage: d.hexagon_preimage,
            big_face_curvature: rational(big_face_curvature),
            layers: d
                .layers
                .iter()
                .enumerate()
                .map(|(i, l)| LayerDto {
                    index: i + 1,
                    kind: match l.kind {
                        LayerKind::Triangle => "triangle",
                        LayerKind::Square => "square",
                    },
                    faces: l.faces.clone(),
                })
                .collect(),
            covered_vertices: d.covered_vertices.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VolumeRow {
    pub radius: usize,
    pub vertices: usize,
    pub volume: u64,
}

#[derive(Debug, Serialize)]
pub struct AxiomsDto {
    pub valid_radius: usize,
    pub doubling_constant: f64,
    pub relative_constant: f64,
    pub growth_exponent: f64,
    pub quadratic_coefficient: f64,
}

impl From<&VolumeAxiomReport> for AxiomsDto {
    fn from(r: &VolumeAxiomReport) -> Self {
        AxiomsDto {
            valid_radius: r.valid_radius,
            doubling_constant: r.doubling_constant,
            relative_constant: r.relative_constant,
            growth_exponent: r.growth_exponent,
            quadratic_coefficient: r.quadratic_coefficient,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VolumeDto {
    pub center: usize,
    pub complete_up_to: Option<usize>,
    pub profile: Vec<VolumeRow>,
    pub axioms: Option<AxiomsDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms_error: Option<String>,
}

impl VolumeDto {
    pub fn new(p: &BallProfile, axioms: Result<VolumeAxiomReport, String>) -> Self {
        let (axioms, axioms_error) = match axioms {
            Ok(a) => (Some(AxiomsDto::from(&a)), None),
            Err(e) => (None, Some(e)),
        };
        VolumeDto {
            center: p.center,
            complete_up_to: p.complete_up_to,
            profile: p
                .volumes
                .iter()
                .zip(&p.counts)
                .enumerate()
                .map(|(radius, (&volume, &vertices))| VolumeRow { radius, vertices, volume })
                .collect(),
            axioms,
            axioms_error,
        }
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["radius", "volume"])?;
        for row in &self.profile {
            w.write_record([row.radius.to_string(), row.volume.to_string()])?;
        }
        w.into_inner().map_err(|e| e.into_error().into())
    }
}

#[derive(Debug, Serialize)]
pub struct ChordDto {
    pub n: usize,
    pub s: f64,
    pub t: f64,
    pub d: f64,
    pub l1: f64,
    pub l2: f64,
    pub ratio: f64,
}

impl From<&ChordReport> for ChordDto {
    fn from(r: &ChordReport) -> Self {
        ChordDto { n: r.n, s: r.s, t: r.t, d: r.d, l1: r.l1, l2: r.l2, ratio: r.ratio }
    }
}

#[derive(Debug, Serialize)]
pub struct ChordSweepRow {
    pub n: usize,
    pub adjacent_min: f64,
    pub adjacent_argmin: (f64, f64),
    pub global_min: f64,
    pub global_argmin: (f64, f64),
}

impl From<&ChordSweep> for ChordSweepRow {
    fn from(s: &ChordSweep) -> Self {
        ChordSweepRow {
            n: s.n,
            adjacent_min: s.adjacent_min,
            adjacent_argmin: s.adjacent_argmin,
            global_min: s.global_min,
            global_argmin: s.global_argmin,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ChordSweepDto {
    pub points: usize,
    pub adjacent_min: f64,
    pub global_min: f64,
    pub rows: Vec<ChordSweepRow>,
}

#[derive(Debug, Serialize)]
pub struct BiLipschitzDto {
    pub pairs: usize,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub mean_ratio: f64,
    pub argmin: (usize, usize),
}

impl From<&BiLipschitzReport> for BiLipschitzDto {
    fn from(r: &BiLipschitzReport) -> Self {
        BiLipschitzDto {
            pairs: r.pairs,
            min_ratio: r.min_ratio,
            max_ratio: r.max_ratio,
            mean_ratio: r.mean_ratio,
            argmin: r.argmin,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ValueRow {
    pub vertex: usize,
    pub value: f64,
}

#[derive(Debug, Serialize)]
pub struct SolveDto {
    pub interior_count: usize,
    pub boundary_count: usize,
    pub residual: f64,
    pub boundary_range: (f64, f64),
    pub interior_range: (f64, f64),
    pub values: Vec<ValueRow>,
}

impl From<&HarmonicField> for SolveDto {
    fn from(u: &HarmonicField) -> Self {
        SolveDto {
            interior_count: u.interior.len(),
            boundary_count: u.boundary.len(),
            residual: u.residual,
            boundary_range: u.boundary_range(),
            interior_range: u.interior_range(),
            values: u.values.iter().map(|(vertex, value)| ValueRow { vertex, value }).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RatioRow {
    pub radius: usize,
    pub max: f64,
    pub ratios: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct Lambda1Row {
    pub radius: usize,
    pub lambda1: f64,
    pub bound: f64,
    pub diameter: usize,
    pub volume: usize,
    pub ok: bool,
}

impl Lambda1Row {
    pub fn new(radius: usize, r: &Lambda1Report) -> Self {
        Lambda1Row { radius, lambda1: r.lambda1, bound: r.bound, diameter: r.diameter, volume: r.volume, ok: r.ok }
    }
}

#[derive(Debug, Serialize)]
pub struct EscapeRow {
    pub radius: usize,
    pub escape: f64,
}

#[derive(Debug, Serialize)]
pub struct OscillationDto {
    pub set_size: usize,
    pub domain_radius: usize,
    pub radii: Vec<usize>,
    /// `oscillation[i][j]` is `M(radii[j])` for sample `i`.
    pub oscillation: Vec<Vec<f64>>,
    /// Median of `M(r) / M(9r)` over the samples, per `r` with `9r` also requested.
    pub median_decay: Vec<(usize, f64)>,
    pub max_residual: f64,
}

impl OscillationDto {
    pub fn new(set_size: usize, domain_radius: usize, radii: &[usize], profiles: &[OscillationProfile]) -> Self {
        let mut median_decay = Vec::new();
        for &r in radii {
            if radii.contains(&(9 * r)) {
                let mut xs: Vec<f64> =
                    profiles.iter().flat_map(|p| p.decay.iter().filter(|d| d.0 == r).map(|d| d.1)).collect();
                if !xs.is_empty() {
                    median_decay.push((r, median(&mut xs)));
                }
            }
        }
        OscillationDto {
            set_size,
            domain_radius,
            radii: radii.to_vec(),
            oscillation: profiles.iter().map(|p| p.oscillation.clone()).collect(),
            median_decay,
            max_residual: profiles.iter().map(|p| p.residual).fold(0.0, f64::max),
        }
    }
}

/// Median with the mean of the two middle values for even counts; NaN when empty.
pub fn median(xs: &mut [f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        0.5 * (xs[m - 1] + xs[m])
    }
}
