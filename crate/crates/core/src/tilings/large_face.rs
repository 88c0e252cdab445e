use alloc::vec::Vec;

use super::{canonical_faces, op_p_inv_ordered, GeneratedTiling, RingPattern, TilingError};
use crate::curvature::BIG_FACE_DEGREE;
use crate::graph::HalfEdgeMap;

/// A `k`-gon surrounded by `depth` annuli of squares or triangles.
///
/// Ring `m` holds vertices `m·k .. (m+1)·k`. With `capped`, a second `k`-gon closes
/// the outermost ring, producing a sphere.
pub(crate) fn large_face(
    k: usize,
    ring: RingPattern,
    depth: usize,
    capped: bool,
) -> Result<GeneratedTiling, TilingError> {
    if k < BIG_FACE_DEGREE {
        return Err(TilingError::InvalidSpec(alloc::format!("large face needs k >= 43, got {k}")));
    }
    if depth == 0 {
        return Err(TilingError::InvalidSpec("large face needs depth >= 1".into()));
    }
    if ring == RingPattern::TriangleHexagon && !k.is_multiple_of(2) {
        return Err(TilingError::InvalidSpec(alloc::format!(
            "a (3,6,k) ring alternates triangles and hexagons, so k must be even, got {k}"
        )));
    }
    let v = |m: usize, i: usize| m * k + i % k;
    let mut faces: Vec<Vec<usize>> = Vec::new();
    faces.push((0..k).rev().map(|i| v(0, i)).collect());
    for m in 0..depth {
        for i in 0..k {
            match ring {
                RingPattern::Squares => faces.push(alloc::vec![v(m, i), v(m, i + 1), v(m + 1, i + 1), v(m + 1, i)]),
                RingPattern::Triangles | RingPattern::TriangleHexagon => {
                    faces.push(alloc::vec![v(m, i), v(m, i + 1), v(m + 1, i)]);
                    faces.push(alloc::vec![v(m, i + 1), v(m + 1, i + 1), v(m + 1, i)]);
                }
            }
        }
    }
    if capped {
        faces.push((0..k).map(|i| v(depth, i)).collect());
    }
    let vertex_count = (depth + 1) * k;
    let map = HalfEdgeMap::new(vertex_count, canonical_faces(faces))?;
    let map = if ring == RingPattern::TriangleHexagon {
        // Merge the stars of every other vertex on the odd rings, lowest ids first.
        op_p_inv_ordered(&map, &(0..vertex_count).collect::<Vec<_>>()).map
    } else {
        map
    };
    Ok(GeneratedTiling { map, center: 0, embedding: None })
}
