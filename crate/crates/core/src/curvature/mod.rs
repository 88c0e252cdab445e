//! Exact combinatorial curvature `Φ(x) = 1 - d_x/2 + Σ 1/deg(σ)` and the pattern
//! classification built on it.

mod layers;
mod table;

pub use layers::{large_face_structure, Layer, LayerDecomposition, LayerKind, BIG_FACE_DEGREE};
pub use table::{table_row, RowValue, TableRow, POSITIVE_TABLE, VANISHING_PATTERNS};

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{FaceId, HalfEdgeMap, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CurvatureError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} lies on the window boundary")]
    BoundaryVertex(VertexId),
    #[error("the map has no interior vertices")]
    NoInteriorVertices,
    #[error("faces {faces:?} all have degree >= 43")]
    MultipleBigFaces { faces: Vec<FaceId> },
    #[error("layer {layer} mixes face types")]
    MixedLayer { layer: usize },
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("a pattern needs at least 3 faces, got {0}")]
    TooShort(usize),
    #[error("face degree {0} is below 3")]
    DegreeTooSmall(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Sorted face degrees around a vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Vec<usize>);

impl Pattern {
    /// Sorts `degrees`; rejects fewer than three faces or a face of degree below 3.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self, PatternError> {
        if degrees.len() < 3 {
            return Err(PatternError::TooShort(degrees.len()));
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 3) {
            return Err(PatternError::DegreeTooSmall(d));
        }
        degrees.sort_unstable();
        Ok(Pattern(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Curvature of a vertex whose `d_x` equals the number of faces.
    pub fn curvature(&self) -> Curvature {
        Curvature::from_degrees(self.0.len(), &self.0)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Exact rational curvature value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Curvature {
    pub value: BigRational,
}

impl Curvature {
    pub fn from_degrees(vertex_degree: usize, face_degrees: &[usize]) -> Self {
        let mut value = BigRational::one() - BigRational::new(BigInt::from(vertex_degree), BigInt::from(2));
        for &k in face_degrees {
            value += BigRational::new(BigInt::one(), BigInt::from(k));
        }
        Curvature { value }
    }

    pub fn sign(&self) -> Sign {
        if self.value.is_zero() {
            Sign::Zero
        } else if self.value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

/// Formats as `num/den` in lowest terms, zero as `0/1`.
impl fmt::Display for Curvature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.value.numer(), self.value.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternClass {
    pub sign: Sign,
    pub table_row: Option<&'static TableRow>,
    /// Lower bound for `Φ` certified by the matched row.
    pub certified_bound: Option<BigRational>,
}

pub fn classify_pattern(p: &Pattern) -> PatternClass {
    let sign = p.curvature().sign();
    let table_row = if sign == Sign::Positive { table_row(p.degrees()) } else { None };
    let certified_bound = table_row.map(|r| r.bound(*p.degrees().last().unwrap_or(&0)));
    PatternClass { sign, table_row, certified_bound }
}

fn interior(map: &HalfEdgeMap, x: VertexId) -> Result<(), CurvatureError> {
    if x >= map.vertex_count() {
        Err(CurvatureError::UnknownVertex(x))
    } else if map.is_window_boundary(x) {
        Err(CurvatureError::BoundaryVertex(x))
    } else {
        Ok(())
    }
}

fn incident_degrees(map: &HalfEdgeMap, x: VertexId) -> Vec<usize> {
    map.incident_faces(x).map(|f| map.face_degree(f)).collect()
}

pub fn vertex_pattern(map: &HalfEdgeMap, x: VertexId) -> Result<Pattern, CurvatureError> {
    interior(map, x)?;
    Ok(Pattern::new(incident_degrees(map, x))?)
}

pub fn curvature(map: &HalfEdgeMap, x: VertexId) -> Result<Curvature, CurvatureError> {
    interior(map, x)?;
    Ok(Curvature::from_degrees(map.degree(x), &incident_degrees(map, x)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCurvature {
    pub vertex: VertexId,
    pub degree: usize,
    pub pattern: Pattern,
    pub curvature: Curvature,
    pub class: PatternClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureReport {
    /// One entry per interior vertex, in id order.
    pub vertices: Vec<VertexCurvature>,
    pub max_face_degree: usize,
    pub total: BigRational,
    pub nonnegative_everywhere: bool,
    /// `total <= 1`.
    pub gauss_bonnet_ok: bool,
    /// Interior vertices with `d_x > 6` although no curvature is negative.
    pub degree_bound_violations: Vec<VertexId>,
}

impl CurvatureReport {
    pub fn get(&self, x: VertexId) -> Option<&VertexCurvature> {
        self.vertices.binary_search_by_key(&x, |v| v.vertex).ok().map(|i| &self.vertices[i])
    }

    /// Exact sum of `Φ` over the interior vertices among `set`.
    pub fn sum_over(&self, set: impl IntoIterator<Item = VertexId>) -> BigRational {
        let mut ids: Vec<VertexId> = set.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        ids.iter().filter_map(|&x| self.get(x)).fold(BigRational::zero(), |acc, v| acc + &v.curvature.value)
    }
}

pub fn curvature_report(map: &HalfEdgeMap) -> Result<CurvatureReport, CurvatureError> {
    let mut vertices = Vec::new();
    let mut total = BigRational::zero();
    for x in map.interior_vertices() {
        let faces = incident_degrees(map, x);
        let curvature = Curvature::from_degrees(map.degree(x), &faces);
        let pattern = Pattern::new(faces)?;
        let class = classify_pattern(&pattern);
        total += &curvature.value;
        vertices.push(VertexCurvature { vertex: x, degree: map.degree(x), pattern, curvature, class });
    }
    if vertices.is_empty() {
        return Err(CurvatureError::NoInteriorVertices);
    }
    let nonnegative_everywhere = vertices.iter().all(|v| v.curvature.sign() != Sign::Negative);
    let degree_bound_violations = if nonnegative_everywhere {
        vertices.iter().filter(|v| v.degree > 6).map(|v| v.vertex).collect()
    } else {
        Vec::new()
    };
    let gauss_bonnet_ok = total <= BigRational::one();
    Ok(CurvatureReport {
        vertices,
        max_face_degree: map.max_face_degree(),
        total,
        nonnegative_everywhere,
        gauss_bonnet_ok,
        degree_bound_violations,
    })
}
