use alloc::vec;
use alloc::vec::Vec;

use super::TilingError;
use crate::graph::{FaceId, HalfEdgeMap, VertexId};

/// `P`: replaces each selected hexagon by six triangles around a new vertex.
///
/// Input vertex ids are kept and the new centres get ids `n, n+1, ...` in selection
/// order. Unselected faces keep their ids; a split hexagon's first triangle takes
/// the hexagon's id and the other five are appended.
pub fn op_p(map: &HalfEdgeMap, selection: &[FaceId]) -> Result<HalfEdgeMap, TilingError> {
    let mut selection = selection.to_vec();
    selection.sort_unstable();
    selection.dedup();
    for &f in &selection {
        if f >= map.face_count() || map.face_degree(f) != 6 {
            return Err(TilingError::NotAHexagon(f));
        }
    }
    let mut faces: Vec<Vec<VertexId>> = map.faces().to_vec();
    let mut extra = Vec::new();
    for (i, &f) in selection.iter().enumerate() {
        let c = map.vertex_count() + i;
        let h = map.face(f);
        faces[f] = vec![h[0], h[1], c];
        for j in 1..6 {
            extra.push(vec![h[j], h[(j + 1) % 6], c]);
        }
    }
    faces.extend(extra);
    Ok(HalfEdgeMap::new(map.vertex_count() + selection.len(), faces)?)
}

/// Barycentres of the selected faces, appended in the order `op_p` numbers them.
pub fn op_p_coordinates(map: &HalfEdgeMap, coords: &[[f64; 2]], selection: &[FaceId]) -> Vec<[f64; 2]> {
    let mut selection = selection.to_vec();
    selection.sort_unstable();
    selection.dedup();
    let mut out = coords.to_vec();
    for f in selection {
        let face = map.face(f);
        let n = face.len() as f64;
        let (x, y) = face.iter().fold((0.0, 0.0), |(x, y), &v| (x + coords[v][0], y + coords[v][1]));
        out.push([x / n, y / n]);
    }
    out
}

/// Result of `P⁻¹` with the surviving vertices' new ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PInverse {
    pub map: HalfEdgeMap,
    /// `remap[old]` is the new id, `None` for a removed star centre.
    pub remap: Vec<Option<VertexId>>,
    pub removed: Vec<VertexId>,
}

/// `P⁻¹` scanning vertices from the highest id down, so centres added by `op_p` are
/// merged before the original vertices.
pub fn op_p_inv(map: &HalfEdgeMap) -> PInverse {
    let order: Vec<VertexId> = (0..map.vertex_count()).rev().collect();
    op_p_inv_ordered(map, &order)
}

/// `P⁻¹` with an explicit scan order: each interior vertex whose six faces are all
/// triangles, none already merged, has its star replaced by one hexagon.
pub fn op_p_inv_ordered(map: &HalfEdgeMap, order: &[VertexId]) -> PInverse {
    let mut merged = vec![false; map.face_count()];
    let mut hexagon_at: Vec<Option<Vec<VertexId>>> = vec![None; map.face_count()];
    let mut removed = Vec::new();
    for &x in order {
        if !map.is_interior(x) || map.degree(x) != 6 {
            continue;
        }
        let Some(rot) = map.rotation(x) else { continue };
        if rot.faces.len() != 6 || rot.faces.iter().any(|&f| map.face_degree(f) != 3 || merged[f]) {
            continue;
        }
        let mut ring = rot.neighbors.clone();
        // Follow the direction in which the first triangle traverses its outer edge.
        let t = map.face(rot.faces[0]);
        let at = t.iter().position(|&v| v == x).unwrap_or(0);
        let outer_from = t[(at + 1) % 3];
        let outer_to = t[(at + 2) % 3];
        let i = ring.iter().position(|&v| v == outer_from).unwrap_or(0);
        if ring[(i + 1) % 6] != outer_to {
            ring.reverse();
        }
        for &f in &rot.faces {
            merged[f] = true;
        }
        let slot = *rot.faces.iter().min().unwrap_or(&0);
        hexagon_at[slot] = Some(ring);
        removed.push(x);
    }

    removed.sort_unstable();
    let mut remap = vec![None; map.vertex_count()];
    let mut next = 0;
    for (v, r) in remap.iter_mut().enumerate() {
        if removed.binary_search(&v).is_err() {
            *r = Some(next);
            next += 1;
        }
    }
    let relabel = |face: &[VertexId]| -> Vec<VertexId> { face.iter().filter_map(|&v| remap[v]).collect() };
    let mut faces = Vec::with_capacity(map.face_count());
    for f in 0..map.face_count() {
        if let Some(h) = &hexagon_at[f] {
            faces.push(relabel(h));
        } else if !merged[f] {
            faces.push(relabel(map.face(f)));
        }
    }
    let map = HalfEdgeMap::new(next, faces).expect("merging triangle stars keeps the map simple");
    PInverse { map, remap, removed }
}
