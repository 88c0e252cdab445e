use alloc::vec;
use alloc::vec::Vec;

use super::{Adjacency, FaceId, MapError, VertexId};

pub type HalfEdgeId = usize;
pub type EdgeId = usize;

/// One traversal of an edge by a face boundary walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfEdge {
    pub face: FaceId,
    /// Position of `from` inside the face's vertex list.
    pub index: usize,
    pub from: VertexId,
    pub to: VertexId,
    pub edge: EdgeId,
}

/// Undirected edge with the (one or two) half-edges that traverse it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Endpoints with `endpoints.0 < endpoints.1`.
    pub endpoints: (VertexId, VertexId),
    pub first: HalfEdgeId,
    /// `None` for a window-boundary edge.
    pub second: Option<HalfEdgeId>,
}

impl Edge {
    pub fn is_window_boundary(&self) -> bool {
        self.second.is_none()
    }

    pub fn other(&self, v: VertexId) -> VertexId {
        if self.endpoints.0 == v {
            self.endpoints.1
        } else {
            self.endpoints.0
        }
    }
}

/// Cyclic arrangement of faces around an interior vertex.
///
/// `faces[i]` is the face spanned between `neighbors[i]` and `neighbors[i + 1]`
/// (indices taken cyclically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    pub faces: Vec<FaceId>,
    pub neighbors: Vec<VertexId>,
}

/// Combinatorial map `G = (V, E, F)` given by its face boundary walks.
///
/// Faces are the single source of truth: edges, vertex degrees, the window boundary
/// and the per-vertex rotations are all derived at build time and the map is
/// immutable afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfEdgeMap {
    vertex_count: usize,
    faces: Vec<Vec<VertexId>>,
    face_offsets: Vec<usize>,
    half_edges: Vec<HalfEdge>,
    edges: Vec<Edge>,
    neighbors: Vec<Vec<VertexId>>,
    corners: Vec<Vec<HalfEdgeId>>,
    window_boundary: Vec<bool>,
    rotations: Vec<Option<Rotation>>,
}

impl HalfEdgeMap {
    /// Builds a map whose vertex count is one more than the largest id used.
    pub fn from_faces(faces: Vec<Vec<VertexId>>) -> Result<Self, MapError> {
        let vertex_count = faces.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
        Self::new(vertex_count, faces)
    }

    pub fn new(vertex_count: usize, faces: Vec<Vec<VertexId>>) -> Result<Self, MapError> {
        for (f, face) in faces.iter().enumerate() {
            check_face(f, face, vertex_count)?;
        }

        let mut face_offsets = Vec::with_capacity(faces.len());
        let mut half_edges = Vec::with_capacity(faces.iter().map(Vec::len).sum());
        for (f, face) in faces.iter().enumerate() {
            face_offsets.push(half_edges.len());
            for (i, &from) in face.iter().enumerate() {
                let to = face[(i + 1) % face.len()];
                half_edges.push(HalfEdge { face: f, index: i, from, to, edge: usize::MAX });
            }
        }

        let mut keyed: Vec<(VertexId, VertexId, HalfEdgeId)> =
            half_edges.iter().enumerate().map(|(h, he)| (he.from.min(he.to), he.from.max(he.to), h)).collect();
        keyed.sort_unstable();

        let mut edges: Vec<Edge> = Vec::new();
        let mut start = 0;
        while start < keyed.len() {
            let (a, b, _) = keyed[start];
            let mut end = start;
            while end < keyed.len() && keyed[end].0 == a && keyed[end].1 == b {
                end += 1;
            }
            let uses = end - start;
            if uses > 2 {
                return Err(MapError::EdgeOveruse { a, b, uses });
            }
            let id = edges.len();
            let first = keyed[start].2;
            let second = (uses == 2).then(|| keyed[start + 1].2);
            half_edges[first].edge = id;
            if let Some(s) = second {
                half_edges[s].edge = id;
            }
            edges.push(Edge { endpoints: (a, b), first, second });
            start = end;
        }

        let mut neighbors = vec![Vec::new(); vertex_count];
        let mut window_boundary = vec![false; vertex_count];
        for e in &edges {
            let (a, b) = e.endpoints;
            neighbors[a].push(b);
            neighbors[b].push(a);
            if e.is_window_boundary() {
                window_boundary[a] = true;
                window_boundary[b] = true;
            }
        }
        for n in &mut neighbors {
            n.sort_unstable();
        }

        let mut corners = vec![Vec::new(); vertex_count];
        for (h, he) in half_edges.iter().enumerate() {
            corners[he.from].push(h);
        }
        for (v, c) in corners.iter().enumerate() {
            if c.is_empty() {
                window_boundary[v] = true;
            }
        }

        let mut map = HalfEdgeMap {
            vertex_count,
            faces,
            face_offsets,
            half_edges,
            edges,
            neighbors,
            corners,
            window_boundary,
            rotations: Vec::new(),
        };
        map.rotations =
            (0..vertex_count).map(|v| if map.window_boundary[v] { None } else { map.walk_rotation(v) }).collect();
        Ok(map)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn faces(&self) -> &[Vec<VertexId>] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &[VertexId] {
        &self.faces[f]
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    /// `D_G`: the largest face degree, 0 for an empty map.
    pub fn max_face_degree(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn half_edge(&self, h: HalfEdgeId) -> &HalfEdge {
        &self.half_edges[h]
    }

    pub fn face_half_edges(&self, f: FaceId) -> core::ops::Range<HalfEdgeId> {
        let start = self.face_offsets[f];
        start..start + self.faces[f].len()
    }

    /// Half-edge following `h` along its face.
    pub fn next(&self, h: HalfEdgeId) -> HalfEdgeId {
        let he = &self.half_edges[h];
        self.face_offsets[he.face] + (he.index + 1) % self.faces[he.face].len()
    }

    pub fn prev(&self, h: HalfEdgeId) -> HalfEdgeId {
        let he = &self.half_edges[h];
        let n = self.faces[he.face].len();
        self.face_offsets[he.face] + (he.index + n - 1) % n
    }

    /// The other traversal of the edge under `h`, if the edge is not on the window boundary.
    pub fn twin(&self, h: HalfEdgeId) -> Option<HalfEdgeId> {
        let e = &self.edges[self.half_edges[h].edge];
        if e.first == h {
            e.second
        } else {
            Some(e.first)
        }
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search_by(|e| e.endpoints.cmp(&key)).ok()
    }

    /// `d_x`: number of edges at `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v]
    }

    /// Faces incident to `v`, one entry per corner, in face-id order.
    pub fn incident_faces(&self, v: VertexId) -> impl Iterator<Item = FaceId> + '_ {
        self.corners[v].iter().map(move |&h| self.half_edges[h].face)
    }

    pub fn is_window_boundary(&self, v: VertexId) -> bool {
        self.window_boundary[v]
    }

    pub fn is_interior(&self, v: VertexId) -> bool {
        !self.window_boundary[v]
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count).filter(move |&v| !self.window_boundary[v])
    }

    pub fn window_boundary_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count).filter(move |&v| self.window_boundary[v])
    }

    /// Cyclic face order around `v`; `None` on the window boundary or when the incident
    /// faces do not close up into a single disk.
    pub fn rotation(&self, v: VertexId) -> Option<&Rotation> {
        self.rotations[v].as_ref()
    }

    fn walk_rotation(&self, v: VertexId) -> Option<Rotation> {
        let corners = &self.corners[v];
        let start = *corners.first()?;
        let mut faces = Vec::with_capacity(corners.len());
        let mut neighbors = Vec::with_capacity(corners.len());

        // Each corner of `v` touches two edges; enter through one, leave through the other.
        let mut corner = start;
        let mut entry = self.half_edges[self.prev(start)].edge;
        loop {
            let out_edge = self.half_edges[corner].edge;
            let in_edge = self.half_edges[self.prev(corner)].edge;
            let exit = if entry == in_edge { out_edge } else { in_edge };
            neighbors.push(self.edges[entry].other(v));
            faces.push(self.half_edges[corner].face);

            let e = &self.edges[exit];
            let here = if exit == out_edge { corner } else { self.prev(corner) };
            let across = if e.first == here { e.second? } else { e.first };
            let he = &self.half_edges[across];
            corner = if he.from == v { across } else { self.next(across) };
            entry = exit;
            if corner == start {
                break;
            }
            if faces.len() > corners.len() {
                return None;
            }
        }
        (faces.len() == corners.len()).then_some(Rotation { faces, neighbors })
    }
}

fn check_face(f: FaceId, face: &[VertexId], vertex_count: usize) -> Result<(), MapError> {
    let n = face.len();
    if n < 3 {
        return Err(MapError::DegenerateFace { face: f });
    }
    if let Some(&v) = face.iter().find(|&&v| v >= vertex_count) {
        return Err(MapError::VertexOutOfRange { face: f, vertex: v, vertex_count });
    }
    for i in 0..n {
        if face[i] == face[(i + 1) % n] {
            return Err(MapError::LoopEdge { face: f, vertex: face[i] });
        }
    }
    let mut sides: Vec<(VertexId, VertexId)> = (0..n)
        .map(|i| {
            let (a, b) = (face[i], face[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
        .collect();
    sides.sort_unstable();
    if let Some(w) = sides.windows(2).find(|w| w[0] == w[1]) {
        return Err(MapError::DuplicateEdge { face: f, a: w[0].0, b: w[0].1 });
    }
    let mut sorted = face.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(MapError::DegenerateFace { face: f });
    }
    Ok(())
}

impl Adjacency for HalfEdgeMap {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v]
    }

    fn is_window_boundary(&self, v: VertexId) -> bool {
        self.window_boundary[v]
    }
}
