use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{FaceId, HalfEdgeMap, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Location {
    Vertex(VertexId),
    Face(FaceId),
    Edge(VertexId, VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub location: Location,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    /// Whether the faces admit a globally consistent orientation.
    pub orientable: bool,
    pub interior_vertex_count: usize,
    pub boundary_vertex_count: usize,
}

/// Checks the standing assumptions on a built map.
///
/// Rules: `interior-degree` (interior `d_x < 3`), `face-degree` (`deg < 3`),
/// `local-disk` (faces around an interior vertex do not form one cycle) and
/// `isolated-vertex` (a vertex on no face). Orientability is reported, not required.
pub fn validate(map: &HalfEdgeMap) -> ValidationReport {
    let mut violations = Vec::new();

    for (f, face) in map.faces().iter().enumerate() {
        if face.len() < 3 {
            violations.push(Violation {
                rule: "face-degree",
                location: Location::Face(f),
                message: format!("face {f} has degree {}", face.len()),
            });
        }
    }

    let mut interior = 0;
    for v in 0..map.vertex_count() {
        if map.incident_faces(v).next().is_none() {
            violations.push(Violation {
                rule: "isolated-vertex",
                location: Location::Vertex(v),
                message: format!("vertex {v} lies on no face"),
            });
            continue;
        }
        if map.is_window_boundary(v) {
            continue;
        }
        interior += 1;
        let d = map.degree(v);
        if d < 3 {
            violations.push(Violation {
                rule: "interior-degree",
                location: Location::Vertex(v),
                message: format!("interior vertex {v} has degree {d} < 3"),
            });
        }
        if map.rotation(v).is_none() {
            violations.push(Violation {
                rule: "local-disk",
                location: Location::Vertex(v),
                message: format!("faces around vertex {v} do not form a single cycle"),
            });
        }
    }

    ValidationReport {
        ok: violations.is_empty(),
        violations,
        orientable: is_orientable(map),
        interior_vertex_count: interior,
        boundary_vertex_count: map.vertex_count() - interior,
    }
}

/// Two-colours faces by "keep" / "flip" so that every shared edge is traversed in
/// opposite directions; a conflict means no consistent orientation exists.
fn is_orientable(map: &HalfEdgeMap) -> bool {
    let mut flip: Vec<Option<bool>> = vec![None; map.face_count()];
    let mut queue = VecDeque::new();
    for root in 0..map.face_count() {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(false);
        queue.push_back(root);
        while let Some(f) = queue.pop_front() {
            let here = flip[f].unwrap_or(false);
            for h in map.face_half_edges(f) {
                let Some(t) = map.twin(h) else { continue };
                let (a, b) = (map.half_edge(h), map.half_edge(t));
                // Opposite traversal means the two faces agree.
                let want = if a.from == b.to { here } else { !here };
                match flip[b.face] {
                    None => {
                        flip[b.face] = Some(want);
                        queue.push_back(b.face);
                    }
                    Some(got) if got != want => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}
