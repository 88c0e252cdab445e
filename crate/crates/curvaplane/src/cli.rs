//! Command-line front end. Every command writes one report (JSON unless a CSV or DOT
//! format is requested) to `--out` or standard output.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use curvaplane_core::curvature::{curvature_report, large_face_structure};
use curvaplane_core::graph::ball;
use curvaplane_core::graph::validate;
use curvaplane_core::harmonic::{
    escape_probability, harnack_ratio, harnack_samples, lambda1_check, oscillation_samples, poincare_constant,
    solve_dirichlet, FieldModel,
};
use curvaplane_core::metrics::{ball_volume_profile, bilipschitz_estimate, chord_ratio, chord_sweep, volume_axioms};
use curvaplane_core::tilings::{
    generate, op_p, op_p_coordinates, op_p_inv, Embedding, EmbeddingKind, GeneratedTiling, TilingSpec,
};
use curvaplane_core::{Adjacency, HalfEdgeMap, SimpleGraph, VertexId};
use serde::Serialize;
use thiserror::Error;

use crate::format::{self, FormatError, GraphFile};
use crate::report::{self, Envelope};

#[derive(Debug, Parser, Serialize)]
#[command(name = "curvaplane", version, about = "Semiplanar graphs, exact curvature and discrete analysis probes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Generate a tiling window from a spec string such as `archimedean:4.8.8`.
    Generate(GenerateArgs),
    /// Check the structural assumptions on a graph file.
    Validate(ValidateArgs),
    /// Exact curvature at every interior vertex.
    Curvature(CurvatureArgs),
    /// Big face and the layers of faces around it.
    Layers(ValidateArgs),
    /// Ball volumes around a vertex and the volume-growth statistics.
    Volume(VolumeArgs),
    /// Chords of unit-side regular polygons.
    Chord(ChordArgs),
    /// Distance through faces against graph distance over random vertex pairs.
    Bilipschitz(BilipschitzArgs),
    /// Harmonic functions and their probes.
    #[command(subcommand)]
    Harmonic(HarmonicCommand),
    /// Split hexagons into six triangles around a new centre vertex.
    OpP(OpPArgs),
    /// Merge every six-triangle star back into a hexagon.
    OpPinv(ValidateArgs),
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HarmonicCommand {
    /// Solve the Dirichlet problem on a ball.
    Solve(SolveArgs),
    /// Harnack ratios max/min on `B_R` for positive data on the sphere of radius `c1·R`.
    Harnack(HarnackArgs),
    /// Largest Poincaré quotient over random fields.
    Poincare(PoincareArgs),
    /// First nonzero eigenvalue of balls against `1/(diam·vol)`.
    Lambda1(RadiiArgs),
    /// Escape probability from the centre to the sphere.
    Escape(RadiiArgs),
    /// Oscillation on spheres around the big face (or the centre) for random data.
    Oscillation(OscillationArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
}

/// Where the graph comes from: a `semiplanar-v1` file or a generator spec.
#[derive(Debug, Args, Serialize)]
pub struct SourceArgs {
    /// Graph file in `semiplanar-v1` format.
    #[arg(short, long)]
    pub input: Option<PathBuf>,
    /// Tiling spec, or `tree:degree=D,depth=N[,radial]` for a regular tree window.
    #[arg(long)]
    pub spec: Option<String>,
    /// Window radius used with `--spec`.
    #[arg(long, default_value_t = 10)]
    pub window_radius: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct OutArgs {
    /// Report path; standard output when omitted.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct GenerateArgs {
    pub spec: String,
    #[arg(long, default_value_t = 10)]
    pub radius: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct ValidateArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct CurvatureArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct VolumeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    /// Defaults to the generator's centre, or vertex 0 for files.
    #[arg(long)]
    pub center: Option<VertexId>,
    #[arg(long, default_value_t = 20)]
    pub rmax: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct ChordArgs {
    /// Polygon degree for a single chord.
    #[arg(long, requires_all = ["s", "t"])]
    pub n: Option<usize>,
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long)]
    pub t: Option<f64>,
    /// Sweep every `n` from 3 up to this value.
    #[arg(long, default_value_t = 60)]
    pub sweep_max: usize,
    /// Boundary grid points per polygon in the sweep.
    #[arg(long, default_value_t = 1000)]
    pub points: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct BilipschitzArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coordinate {
    X,
    Y,
}

#[derive(Debug, Args, Serialize)]
pub struct SolveArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub center: Option<VertexId>,
    #[arg(long)]
    pub radius: usize,
    /// JSON object mapping vertex ids on the sphere to values.
    #[arg(long, conflicts_with = "coordinate")]
    pub boundary: Option<PathBuf>,
    /// Use a coordinate of the embedding as boundary data.
    #[arg(long, value_enum)]
    pub coordinate: Option<Coordinate>,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct HarnackArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub center: Option<VertexId>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub radius: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub c1: usize,
    /// Fixed positive boundary data instead of random samples.
    #[arg(long)]
    pub boundary: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelArg {
    WhiteNoise,
    DistanceMixture,
}

#[derive(Debug, Args, Serialize)]
pub struct PoincareArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub center: Option<VertexId>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub radius: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    pub enlargement: usize,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ModelArg::WhiteNoise)]
    pub model: ModelArg,
    /// Anchors per field for the distance-mixture model.
    #[arg(long, default_value_t = 4)]
    pub anchors: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct RadiiArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub center: Option<VertexId>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub radius: Vec<usize>,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct OscillationArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    /// Measure around this vertex instead of the big face.
    #[arg(long)]
    pub center: Option<VertexId>,
    #[arg(long)]
    pub domain_radius: usize,
    #[arg(long, value_delimiter = ',', required = true)]
    pub radii: Vec<usize>,
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct OpPArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    /// Hexagonal faces to split; all hexagons when omitted.
    #[arg(long, value_delimiter = ',')]
    pub faces: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or unreadable inputs: exit code 2.
    #[error("{0}")]
    Usage(String),
    /// The computation could not be carried out on this input: exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Read { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

/// Successful run; `findings` turns into exit code 1.
pub struct Outcome {
    pub findings: bool,
}

enum Graph {
    Map(HalfEdgeMap),
    Simple(SimpleGraph),
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        match self {
            Graph::Map(m) => m.vertex_count(),
            Graph::Simple(g) => Adjacency::vertex_count(g),
        }
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        match self {
            Graph::Map(m) => m.neighbors(v),
            Graph::Simple(g) => Adjacency::neighbors(g, v),
        }
    }

    fn is_window_boundary(&self, v: VertexId) -> bool {
        match self {
            Graph::Map(m) => m.is_window_boundary(v),
            Graph::Simple(g) => Adjacency::is_window_boundary(g, v),
        }
    }

    fn conductance(&self, v: VertexId, i: usize) -> f64 {
        match self {
            Graph::Map(m) => m.conductance(v, i),
            Graph::Simple(g) => g.conductance(v, i),
        }
    }
}

struct Source {
    graph: Graph,
    embedding: Option<Embedding>,
    center: VertexId,
    sha256: Option<String>,
}

impl Source {
    fn map(&self) -> Result<&HalfEdgeMap, CliError> {
        match &self.graph {
            Graph::Map(m) => Ok(m),
            Graph::Simple(_) => Err(CliError::Usage("this command needs a graph with faces".into())),
        }
    }

    fn center(&self, requested: Option<VertexId>) -> Result<VertexId, CliError> {
        let c = requested.unwrap_or(self.center);
        if c < self.graph.vertex_count() {
            Ok(c)
        } else {
            Err(CliError::Usage(format!("center {c} is not a vertex")))
        }
    }
}

fn parse_tree(rest: &str) -> Result<SimpleGraph, CliError> {
    let usage = || CliError::Usage(format!("tree spec must look like tree:degree=3,depth=20[,radial], got {rest:?}"));
    let (mut degree, mut depth, mut radial) = (None, None, false);
    for part in rest.split(',').map(str::trim) {
        match part.split_once('=') {
            Some(("degree", v)) => degree = Some(v.parse::<usize>().map_err(|_| usage())?),
            Some(("depth", v)) => depth = Some(v.parse::<usize>().map_err(|_| usage())?),
            None if part == "radial" => radial = true,
            _ => return Err(usage()),
        }
    }
    let (degree, depth) = (degree.ok_or_else(usage)?, depth.ok_or_else(usage)?);
    if degree < 2 {
        return Err(usage());
    }
    Ok(if radial { SimpleGraph::radial_tree(degree, depth) } else { SimpleGraph::regular_tree(degree, depth) })
}

fn parse_spec(spec: &str, radius: usize) -> Result<TilingSpec, CliError> {
    let mut parsed: TilingSpec = spec.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    parsed.window_radius = radius;
    Ok(parsed)
}

fn generate_spec(spec: &str, radius: usize) -> Result<GeneratedTiling, CliError> {
    generate(&parse_spec(spec, radius)?).map_err(failed)
}

fn load(args: &SourceArgs) -> Result<Source, CliError> {
    match (&args.input, &args.spec) {
        (Some(path), None) => {
            let g = format::read_graph(path)?;
            Ok(Source { graph: Graph::Map(g.map), embedding: g.embedding, center: 0, sha256: Some(g.sha256) })
        }
        (None, Some(spec)) => {
            if let Some(rest) = spec.strip_prefix("tree:") {
                return Ok(Source {
                    graph: Graph::Simple(parse_tree(rest)?),
                    embedding: None,
                    center: 0,
                    sha256: None,
                });
            }
            let t = generate_spec(spec, args.window_radius)?;
            Ok(Source { graph: Graph::Map(t.map), embedding: t.embedding, center: t.center, sha256: None })
        }
        _ => Err(CliError::Usage("give exactly one of --input and --spec".into())),
    }
}

fn emit(out: &OutArgs, bytes: &[u8]) -> Result<(), CliError> {
    match &out.out {
        Some(path) => format::write_atomic(path, bytes).map_err(|e| CliError::Usage(e.to_string())),
        None => std::io::stdout().write_all(bytes).map_err(failed),
    }
}

fn emit_json<T: Serialize>(
    out: &OutArgs,
    command: &str,
    config: &impl Serialize,
    sha256: Option<String>,
    result: T,
) -> Result<(), CliError> {
    let envelope = Envelope {
        tool: report::TOOL,
        version: report::VERSION,
        command: command.to_string(),
        config: serde_json::to_value(config).map_err(failed)?,
        input_sha256: sha256,
        result,
    };
    let mut text = serde_json::to_string_pretty(&envelope).map_err(failed)?;
    text.push('\n');
    emit(out, text.as_bytes())
}

fn emit_graph(
    out: &OutArgs,
    fmt: OutputFormat,
    map: &HalfEdgeMap,
    embedding: Option<&Embedding>,
) -> Result<(), CliError> {
    match fmt {
        OutputFormat::Json => emit(out, GraphFile::new(map, embedding).to_json().as_bytes()),
        OutputFormat::Dot => emit(out, format::to_dot(map, embedding).as_bytes()),
        OutputFormat::Csv => Err(CliError::Usage("graphs are written as json or dot".into())),
    }
}

fn ok() -> Result<Outcome, CliError> {
    Ok(Outcome { findings: false })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Generate(a) => {
            let t = generate_spec(&a.spec, a.radius)?;
            emit_graph(&a.out, a.format, &t.map, t.embedding.as_ref())?;
            ok()
        }
        Command::Validate(a) => {
            let (dto, sha) = validation(&a.source)?;
            let findings = !dto.ok;
            emit_json(&a.out, "validate", a, sha, dto)?;
            Ok(Outcome { findings })
        }
        Command::Curvature(a) => curvature_cmd(a),
        Command::Layers(a) => {
            let src = load(&a.source)?;
            let map = src.map()?;
            let dto = match large_face_structure(map).map_err(failed)? {
                None => None,
                Some(d) => {
                    let report = curvature_report(map).map_err(failed)?;
                    let sigma = if d.hexagon_preimage {
                        op_p(map, &hexagons(map)).map_err(failed)?.face(d.big_face).to_vec()
                    } else {
                        map.face(d.big_face).to_vec()
                    };
                    Some(report::LayersDto::new(&d, &report.sum_over(sigma)))
                }
            };
            emit_json(&a.out, "layers", a, src.sha256, dto)?;
            ok()
        }
        Command::Volume(a) => {
            let src = load(&a.source)?;
            let c = src.center(a.center)?;
            let profile = ball_volume_profile(&src.graph, c, a.rmax).map_err(failed)?;
            let dto = report::VolumeDto::new(&profile, volume_axioms(&profile).map_err(|e| e.to_string()));
            match a.format {
                OutputFormat::Csv => emit(&a.out, &dto.to_csv().map_err(failed)?)?,
                OutputFormat::Json => emit_json(&a.out, "volume", a, src.sha256, dto)?,
                OutputFormat::Dot => return Err(CliError::Usage("volume reports are json or csv".into())),
            }
            ok()
        }
        Command::Chord(a) => {
            if let (Some(n), Some(s), Some(t)) = (a.n, a.s, a.t) {
                let r = chord_ratio(n, s, t).map_err(|e| CliError::Usage(e.to_string()))?;
                emit_json(&a.out, "chord", a, None, report::ChordDto::from(&r))?;
            } else {
                let mut rows = Vec::new();
                for n in 3..=a.sweep_max.max(3) {
                    rows.push(report::ChordSweepRow::from(&chord_sweep(n, a.points).map_err(failed)?));
                }
                let dto = report::ChordSweepDto {
                    points: a.points,
                    adjacent_min: rows.iter().map(|r| r.adjacent_min).fold(f64::INFINITY, f64::min),
                    global_min: rows.iter().map(|r| r.global_min).fold(f64::INFINITY, f64::min),
                    rows,
                };
                emit_json(&a.out, "chord", a, None, dto)?;
            }
            ok()
        }
        Command::Bilipschitz(a) => {
            let src = load(&a.source)?;
            let r = bilipschitz_estimate(src.map()?, a.samples, a.seed).map_err(failed)?;
            emit_json(&a.out, "bilipschitz", a, src.sha256, report::BiLipschitzDto::from(&r))?;
            ok()
        }
        Command::Harmonic(h) => harmonic_cmd(h),
        Command::OpP(a) => {
            let src = load(&a.source)?;
            let map = src.map()?;
            let selection = a.faces.clone().unwrap_or_else(|| hexagons(map));
            let split = op_p(map, &selection).map_err(failed)?;
            let embedding = src
                .embedding
                .as_ref()
                .filter(|e| e.kind == EmbeddingKind::Planar)
                .map(|e| Embedding { kind: e.kind, coordinates: op_p_coordinates(map, &e.coordinates, &selection) });
            emit_graph(&a.out, a.format, &split, embedding.as_ref())?;
            ok()
        }
        Command::OpPinv(a) => {
            let src = load(&a.source)?;
            let inv = op_p_inv(src.map()?);
            let embedding = src.embedding.as_ref().map(|e| Embedding {
                kind: e.kind,
                coordinates: inv
                    .remap
                    .iter()
                    .zip(&e.coordinates)
                    .filter(|(r, _)| r.is_some())
                    .map(|(_, c)| *c)
                    .collect(),
            });
            emit_graph(&a.out, OutputFormat::Json, &inv.map, embedding.as_ref())?;
            ok()
        }
    }
}

fn hexagons(map: &HalfEdgeMap) -> Vec<usize> {
    (0..map.face_count()).filter(|&f| map.face_degree(f) == 6).collect()
}

fn validation(source: &SourceArgs) -> Result<(report::ValidationDto, Option<String>), CliError> {
    let Some(path) = &source.input else {
        let src = load(source)?;
        return Ok((report::ValidationDto::from_report(&validate(src.map()?)), None));
    };
    let bytes = format::read_bytes(path)?;
    let sha = Some(format::sha256_hex(&bytes));
    let built = format::parse_bytes(&bytes).and_then(|f| f.build());
    Ok(match built {
        Ok((map, _)) => (report::ValidationDto::from_report(&validate(&map)), sha),
        Err(FormatError::Map(e)) => (report::ValidationDto::unreadable("map", e.to_string()), sha),
        Err(e) => (report::ValidationDto::unreadable("format", e.to_string()), sha),
    })
}

fn curvature_cmd(a: &CurvatureArgs) -> Result<Outcome, CliError> {
    let (check, sha) = validation(&a.source)?;
    if !check.ok {
        for v in &check.violations {
            eprintln!("{} at {}: {}", v.rule, v.location, v.message);
        }
        emit_json(&a.out, "curvature", a, sha, check)?;
        return Ok(Outcome { findings: true });
    }
    let src = load(&a.source)?;
    let report = curvature_report(src.map()?).map_err(failed)?;
    let dto = report::CurvatureDto::from_report(&report);
    match a.format {
        OutputFormat::Csv => emit(&a.out, &dto.to_csv().map_err(failed)?)?,
        OutputFormat::Json => emit_json(&a.out, "curvature", a, sha, dto)?,
        OutputFormat::Dot => return Err(CliError::Usage("curvature reports are json or csv".into())),
    }
    ok()
}

fn boundary_values(path: &Path, sha: &mut Option<String>) -> Result<std::collections::BTreeMap<usize, f64>, CliError> {
    let (values, hash) = format::read_boundary(path)?;
    *sha = Some(match sha.take() {
        Some(h) => format!("{h}+{hash}"),
        None => hash,
    });
    Ok(values)
}

fn lookup(
    values: &std::collections::BTreeMap<usize, f64>,
    vertices: impl Iterator<Item = VertexId>,
) -> Result<(), CliError> {
    for v in vertices {
        if !values.contains_key(&v) {
            return Err(CliError::Failed(format!("boundary data has no value for vertex {v}")));
        }
    }
    Ok(())
}

fn harmonic_cmd(h: &HarmonicCommand) -> Result<Outcome, CliError> {
    match h {
        HarmonicCommand::Solve(a) => {
            let src = load(&a.source)?;
            let c = src.center(a.center)?;
            let b = ball(&src.graph, c, a.radius).map_err(failed)?;
            let mut sha = src.sha256.clone();
            let field = match (&a.boundary, a.coordinate) {
                (Some(path), _) => {
                    let values = boundary_values(path, &mut sha)?;
                    lookup(&values, b.sphere())?;
                    solve_dirichlet(&src.graph, &b, |v| values[&v])
                }
                (None, Some(axis)) => {
                    let e =
                        src.embedding.as_ref().ok_or_else(|| CliError::Usage("the graph has no coordinates".into()))?;
                    let k = match axis {
                        Coordinate::X => 0,
                        Coordinate::Y => 1,
                    };
                    solve_dirichlet(&src.graph, &b, |v| e.coordinates[v][k])
                }
                (None, None) => return Err(CliError::Usage("give --boundary or --coordinate".into())),
            }
            .map_err(failed)?;
            emit_json(&a.out, "harmonic solve", a, sha, report::SolveDto::from(&field))?;
            ok()
        }
        HarmonicCommand::Harnack(a) => {
            let src = load(&a.source)?;
            let c = src.center(a.center)?;
            let mut sha = src.sha256.clone();
            let fixed = a.boundary.as_ref().map(|p| boundary_values(p, &mut sha)).transpose()?;
            let mut rows = Vec::new();
            for &r in &a.radius {
                let ratios = match &fixed {
                    Some(values) => {
                        let outer = ball(&src.graph, c, a.c1 * r).map_err(failed)?;
                        lookup(values, outer.sphere())?;
                        vec![harnack_ratio(&src.graph, c, r, a.c1, |v| values[&v]).map_err(failed)?]
                    }
                    None => harnack_samples(&src.graph, c, r, a.c1, a.samples, a.seed).map_err(failed)?,
                };
                let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                rows.push(report::RatioRow { radius: r, max, ratios });
            }
            emit_json(&a.out, "harmonic harnack", a, sha, rows)?;
            ok()
        }
        HarmonicCommand::Poincare(a) => {
            let src = load(&a.source)?;
            let c = src.center(a.center)?;
            let model = match a.model {
                ModelArg::WhiteNoise => FieldModel::WhiteNoise,
                ModelArg::DistanceMixture => FieldModel::DistanceMixture { anchors: a.anchors },
            };
            let mut rows = Vec::new();
            for &r in &a.radius {
                let max =
                    poincare_constant(&src.graph, c, r, a.enlargement, a.samples, a.seed, model).map_err(failed)?;
                rows.push(report::RatioRow { radius: r, max, ratios: Vec::new() });
            }
            emit_json(&a.out, "harmonic poincare", a, src.sha256, rows)?;
            ok()
        }
        HarmonicCommand::Lambda1(a) => {
            let src = load(&a.source)?;
            let c = src.center(a.center)?;
            let mut rows = Vec::new();
            for &r in &a.radius {
                let b = ball(&src.graph, c, r).map_err(failed)?;
                rows.push(report::Lambda1Row::new(r, &lambda1_check(&b).map_err(failed)?));
            }
            let findings = rows.iter().any(|r| !r.ok);
            emit_json(&a.out, "harmonic lambda1", a, src.sha256, rows)?;
            Ok(Outcome { findings })
        }
        HarmonicCommand::Escape(a) => {
            let src = load(&a.source)?;
            let c = src.center(a.center)?;
            let mut rows = Vec::new();
            for &r in &a.radius {
                rows.push(report::EscapeRow {
                    radius: r,
                    escape: escape_probability(&src.graph, c, r).map_err(failed)?,
                });
            }
            emit_json(&a.out, "harmonic escape", a, src.sha256, rows)?;
            ok()
        }
        HarmonicCommand::Oscillation(a) => {
            let src = load(&a.source)?;
            let set: Vec<VertexId> = match a.center {
                Some(c) => vec![src.center(Some(c))?],
                None => {
                    let map = src.map()?;
                    let d = large_face_structure(map)
                        .map_err(failed)?
                        .ok_or_else(|| CliError::Failed("no face of degree >= 43; pass --center".into()))?;
                    let mut s = map.face(d.big_face).to_vec();
                    s.sort_unstable();
                    s
                }
            };
            let profiles =
                oscillation_samples(&src.graph, &set, a.domain_radius, &a.radii, a.samples, a.seed).map_err(failed)?;
            let dto = report::OscillationDto::new(set.len(), a.domain_radius, &a.radii, &profiles);
            emit_json(&a.out, "harmonic oscillation", a, src.sha256, dto)?;
            ok()
        }
    }
}

/// Parses `args`, runs the command and maps the outcome to an exit code: 0 on
/// success, 1 on findings or failed analyses, 2 on usage errors.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(Outcome { findings: false }) => ExitCode::SUCCESS,
        Ok(Outcome { findings: true }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                CliError::Failed(_) => 1,
            })
        }
    }
}
