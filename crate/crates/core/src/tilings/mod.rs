//! Generators for finite windows of tilings with nonnegative curvature: the
//! Archimedean tilings, a big face wrapped in flat layers, cylinder and glide
//! quotients, and the hexagon operations `P` and `P⁻¹`.

mod archimedean;
mod large_face;
mod ops;
mod periodic;

pub use archimedean::ArchimedeanCode;
pub use ops::{op_p, op_p_coordinates, op_p_inv, op_p_inv_ordered, PInverse};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::graph::{HalfEdgeMap, MapError, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("invalid tiling spec: {0}")]
    InvalidSpec(String),
    #[error("quotient too narrow: {0}")]
    QuotientTooNarrow(String),
    #[error("face {0} is not a hexagon")]
    NotAHexagon(usize),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Faces around each vertex of the big face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingPattern {
    /// `(4,4,k)`
    Squares,
    /// `(3,3,3,k)`
    Triangles,
    /// `(3,6,k)`
    TriangleHexagon,
}

impl RingPattern {
    pub fn name(self) -> &'static str {
        match self {
            RingPattern::Squares => "44k",
            RingPattern::Triangles => "333k",
            RingPattern::TriangleHexagon => "36k",
        }
    }
}

impl FromStr for RingPattern {
    type Err = TilingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !matches!(c, '(' | ')' | ',' | '.' | ' ')).collect();
        match compact.as_str() {
            "44k" => Ok(RingPattern::Squares),
            "333k" => Ok(RingPattern::Triangles),
            "36k" => Ok(RingPattern::TriangleHexagon),
            _ => Err(TilingError::InvalidSpec(alloc::format!("unknown ring pattern {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Archimedean(ArchimedeanCode),
    LargeFace {
        k: usize,
        ring: RingPattern,
        depth: usize,
        capped: bool,
    },
    /// Quotient by the translation of `circumference` horizontal periods.
    Cylinder {
        base: ArchimedeanCode,
        circumference: usize,
        length: usize,
    },
    /// Quotient by the glide reflection along the horizontal axis whose translation
    /// part spans `width` horizontal periods past the tiling's own glide offset.
    Projective {
        base: ArchimedeanCode,
        width: usize,
        length: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TilingSpec {
    pub family: Family,
    /// Graph radius of the window for planar families.
    pub window_radius: usize,
}

impl TilingSpec {
    pub fn archimedean(code: ArchimedeanCode, window_radius: usize) -> Self {
        TilingSpec { family: Family::Archimedean(code), window_radius }
    }

    pub fn large_face(k: usize, ring: RingPattern, depth: usize) -> Self {
        TilingSpec { family: Family::LargeFace { k, ring, depth, capped: false }, window_radius: 0 }
    }
}

/// Parses `archimedean:4.8.8`, `monohedral:6`, `largeface:k=50,ring=44k,depth=6[,capped]`,
/// `cylinder:base=666,circumference=6,length=20` and `projective:base=666,width=6,length=30`.
/// The window radius defaults to 10.
impl FromStr for TilingSpec {
    type Err = TilingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = |m: String| TilingError::InvalidSpec(m);
        let (kind, rest) = s.split_once(':').ok_or_else(|| invalid(alloc::format!("missing ':' in {s:?}")))?;
        let mut params: Vec<(&str, &str)> = Vec::new();
        let mut flags: Vec<&str> = Vec::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                Some((k, v)) => params.push((k.trim(), v.trim())),
                None => flags.push(part),
            }
        }
        let get = |name: &str| params.iter().find(|(k, _)| *k == name).map(|(_, v)| *v);
        let num = |name: &str| -> Result<usize, TilingError> {
            get(name)
                .ok_or_else(|| invalid(alloc::format!("missing {name}=")))?
                .parse()
                .map_err(|_| invalid(alloc::format!("{name} must be a nonnegative integer")))
        };
        let family = match kind.trim() {
            "archimedean" => Family::Archimedean(rest.trim().parse()?),
            "monohedral" => {
                let d: usize =
                    rest.trim().parse().map_err(|_| invalid("monohedral degree must be 3, 4 or 6".into()))?;
                Family::Archimedean(
                    ArchimedeanCode::monohedral(d)
                        .ok_or_else(|| invalid(alloc::format!("no monohedral tiling by {d}-gons")))?,
                )
            }
            "largeface" => Family::LargeFace {
                k: num("k")?,
                ring: get("ring").unwrap_or("44k").parse()?,
                depth: num("depth")?,
                capped: flags.contains(&"capped"),
            },
            "cylinder" => Family::Cylinder {
                base: get("base").ok_or_else(|| invalid("missing base=".into()))?.parse()?,
                circumference: num("circumference")?,
                length: num("length")?,
            },
            "projective" => Family::Projective {
                base: get("base").ok_or_else(|| invalid("missing base=".into()))?.parse()?,
                width: num("width")?,
                length: num("length")?,
            },
            other => return Err(invalid(alloc::format!("unknown family {other:?}"))),
        };
        Ok(TilingSpec { family, window_radius: 10 })
    }
}

impl fmt::Display for TilingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Archimedean(c) => write!(f, "archimedean:{c}"),
            Family::LargeFace { k, ring, depth, capped } => {
                write!(f, "largeface:k={k},ring={},depth={depth}", ring.name())?;
                if *capped {
                    f.write_str(",capped")?;
                }
                Ok(())
            }
            Family::Cylinder { base, circumference, length } => {
                write!(f, "cylinder:base={base},circumference={circumference},length={length}")
            }
            Family::Projective { base, width, length } => {
                write!(f, "projective:base={base},width={width},length={length}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingKind {
    Planar,
    /// Coordinates in the fundamental strip of a cylinder quotient.
    CylinderQuotient,
    /// Coordinates in the fundamental strip of a glide quotient.
    GlideQuotient,
}

impl EmbeddingKind {
    pub fn name(self) -> &'static str {
        match self {
            EmbeddingKind::Planar => "planar",
            EmbeddingKind::CylinderQuotient => "cylinder-quotient",
            EmbeddingKind::GlideQuotient => "glide-quotient",
        }
    }
}

impl FromStr for EmbeddingKind {
    type Err = TilingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [EmbeddingKind::Planar, EmbeddingKind::CylinderQuotient, EmbeddingKind::GlideQuotient]
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| TilingError::InvalidSpec(alloc::format!("unknown embedding kind {s:?}")))
    }
}

/// Unit-edge coordinates of a generated window.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    pub kind: EmbeddingKind,
    pub coordinates: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedTiling {
    pub map: HalfEdgeMap,
    /// The vertex the window is built around (the first vertex of the big face for
    /// the large-face family).
    pub center: VertexId,
    pub embedding: Option<Embedding>,
}

pub fn generate(spec: &TilingSpec) -> Result<GeneratedTiling, TilingError> {
    match spec.family {
        Family::Archimedean(code) => periodic::planar_window(&code.lattice(), spec.window_radius),
        Family::LargeFace { k, ring, depth, capped } => large_face::large_face(k, ring, depth, capped),
        Family::Cylinder { base, circumference, length } => {
            let lat = base.lattice();
            periodic::quotient_window(&lat, circumference as f64 * lat.period, false, length as f64 / 2.0)
        }
        Family::Projective { base, width, length } => {
            let lat = base.lattice();
            let offset = lat.glide.ok_or_else(|| {
                TilingError::InvalidSpec(alloc::format!("{base} is chiral and has no glide reflection"))
            })?;
            periodic::quotient_window(&lat, offset + width as f64 * lat.period, true, length as f64 / 2.0)
        }
    }
}

/// Each face rotated to start at its smallest id (direction kept), then sorted.
pub fn canonical_faces(mut faces: Vec<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
    for f in &mut faces {
        if let Some(i) = f.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) {
            f.rotate_left(i);
        }
    }
    faces.sort();
    faces
}

/// Equality up to reordering faces and rotating each face's vertex list.
pub fn same_up_to_face_order(a: &HalfEdgeMap, b: &HalfEdgeMap) -> bool {
    a.vertex_count() == b.vertex_count() && canonical_faces(a.faces().to_vec()) == canonical_faces(b.faces().to_vec())
}

impl ArchimedeanCode {
    pub fn spec(self, window_radius: usize) -> TilingSpec {
        TilingSpec::archimedean(self, window_radius)
    }
}
