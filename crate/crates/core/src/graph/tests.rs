use alloc::vec;
use alloc::vec::Vec;

use super::*;

/// Six triangles around hub 0, rim 1..=6.
fn hexagon_fan() -> HalfEdgeMap {
    let faces = (0..6).map(|i| vec![0, 1 + i, 1 + (i + 1) % 6]).collect();
    HalfEdgeMap::from_faces(faces).unwrap()
}

/// `n x n` block of unit squares, vertex `(x, y)` has id `y * (n + 1) + x`.
fn square_block(n: usize) -> HalfEdgeMap {
    let id = |x: usize, y: usize| y * (n + 1) + x;
    let mut faces = Vec::new();
    for y in 0..n {
        for x in 0..n {
            faces.push(vec![id(x, y), id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)]);
        }
    }
    HalfEdgeMap::from_faces(faces).unwrap()
}

#[test]
fn single_triangle() {
    let m = HalfEdgeMap::from_faces(vec![vec![0, 1, 2]]).unwrap();
    assert_eq!(m.vertex_count(), 3);
    assert_eq!(m.edge_count(), 3);
    assert_eq!(m.face_count(), 1);
    assert!((0..3).all(|v| m.is_window_boundary(v)));
}

#[test]
fn fan_hub_is_the_only_interior_vertex() {
    let m = hexagon_fan();
    let interior: Vec<_> = m.interior_vertices().collect();
    assert_eq!(interior, vec![0]);
    assert_eq!(m.degree(0), 6);
    let rot = m.rotation(0).unwrap();
    assert_eq!(rot.faces.len(), 6);
    let mut rim = rot.neighbors.clone();
    rim.sort_unstable();
    assert_eq!(rim, vec![1, 2, 3, 4, 5, 6]);
}

#[test]
fn doubled_triangle_closes_every_edge() {
    let m = HalfEdgeMap::from_faces(vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
    assert_eq!(m.edge_count(), 3);
    assert!(m.edges().iter().all(|e| e.second.is_some()));
    // No window-boundary edge, so all three vertices count as interior; validate
    // then flags their degree 2.
    assert_eq!(m.interior_vertices().count(), 3);
    let report = validate(&m);
    assert!(!report.ok);
    assert_eq!(report.violations.iter().filter(|v| v.rule == "interior-degree").count(), 3);
}

#[test]
fn build_errors() {
    assert_eq!(HalfEdgeMap::from_faces(vec![vec![0, 1]]), Err(MapError::DegenerateFace { face: 0 }));
    assert_eq!(HalfEdgeMap::from_faces(vec![vec![0, 0, 1]]), Err(MapError::LoopEdge { face: 0, vertex: 0 }));
    assert_eq!(HalfEdgeMap::from_faces(vec![vec![0, 1, 0, 2]]), Err(MapError::DuplicateEdge { face: 0, a: 0, b: 1 }));
    assert_eq!(HalfEdgeMap::from_faces(vec![vec![0, 1, 2, 0, 3, 4]]), Err(MapError::DegenerateFace { face: 0 }));
    assert_eq!(
        HalfEdgeMap::from_faces(vec![vec![0, 1, 2], vec![1, 0, 3], vec![0, 1, 4]]),
        Err(MapError::EdgeOveruse { a: 0, b: 1, uses: 3 })
    );
    assert!(matches!(HalfEdgeMap::new(2, vec![vec![0, 1, 2]]), Err(MapError::VertexOutOfRange { vertex: 2, .. })));
}

#[test]
fn validate_fan() {
    let r = validate(&hexagon_fan());
    assert!(r.ok);
    assert!(r.orientable);
    assert_eq!(r.interior_vertex_count, 1);
    assert_eq!(r.boundary_vertex_count, 6);
}

#[test]
fn interior_degree_two_is_flagged() {
    // Two triangles glued along two edges around vertex 0: 0 is interior with d = 2.
    let m = HalfEdgeMap::from_faces(vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    let r = validate(&m);
    assert!(r.violations.iter().any(|v| v.rule == "interior-degree" && v.location == Location::Vertex(0)));
}

#[test]
fn pinched_vertex_violates_local_disk() {
    // Two closed triangle fans sharing vertex 0 (a pinch point): every edge at 0 is
    // used twice but the faces form two cycles.
    let mut faces = Vec::new();
    for (lo, n) in [(1usize, 3usize), (4, 3)] {
        for i in 0..n {
            faces.push(vec![0, lo + i, lo + (i + 1) % n]);
        }
        // cap the outside so the rim is interior as well
        faces.push((0..n).rev().map(|i| lo + i).collect());
    }
    let m = HalfEdgeMap::from_faces(faces).unwrap();
    assert!(m.is_interior(0));
    assert!(m.rotation(0).is_none());
    let r = validate(&m);
    assert!(r.violations.iter().any(|v| v.rule == "local-disk"));
}

#[test]
fn isolated_vertex_is_flagged() {
    let m = HalfEdgeMap::new(4, vec![vec![0, 1, 2]]).unwrap();
    let r = validate(&m);
    assert!(r.violations.iter().any(|v| v.rule == "isolated-vertex" && v.location == Location::Vertex(3)));
}

#[test]
fn validate_is_pure() {
    let m = square_block(3);
    assert_eq!(validate(&m), validate(&m));
}

#[test]
fn handshake_and_face_edge_incidence() {
    let m = square_block(4);
    let degree_sum: usize = (0..m.vertex_count()).map(|v| m.degree(v)).sum();
    assert_eq!(degree_sum, 2 * m.edge_count());
    let face_sum: usize = m.faces().iter().map(Vec::len).sum();
    let boundary = m.edges().iter().filter(|e| e.is_window_boundary()).count();
    assert_eq!(face_sum, 2 * (m.edge_count() - boundary) + boundary);
}

#[test]
fn distances() {
    let sq = HalfEdgeMap::from_faces(vec![vec![0, 1, 2, 3]]).unwrap();
    assert_eq!(graph_distance(&sq, 2, 2), Ok(Some(0)));
    assert_eq!(graph_distance(&sq, 0, 1), Ok(Some(1)));
    assert_eq!(graph_distance(&sq, 0, 2), Ok(Some(2)));
    assert_eq!(graph_distance(&sq, 0, 9), Err(QueryError::UnknownVertex(9)));

    let two = HalfEdgeMap::from_faces(vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    assert_eq!(graph_distance(&two, 0, 4), Ok(None));
}

#[test]
fn balls() {
    let m = square_block(6);
    let center = 3 * 7 + 3;
    let b0 = ball(&m, center, 0).unwrap();
    assert_eq!(b0.vertices, vec![center]);
    assert!(b0.edges.is_empty());

    let b1 = ball(&m, center, 1).unwrap();
    assert_eq!(b1.len(), 5);
    assert_eq!(b1.edges.len(), 4);
    assert!(b1.complete);

    let b9 = ball(&m, center, 9).unwrap();
    assert!(!b9.complete);
    assert!(matches!(ball(&m, 1000, 1), Err(QueryError::UnknownVertex(1000))));
}

#[test]
fn orientation_conflict_is_detected() {
    // Möbius strip of five triangles: the gluing flips orientation.
    let faces = vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 0], vec![4, 0, 1]];
    let m = HalfEdgeMap::from_faces(faces).unwrap();
    assert!(!validate(&m).orientable);
}

#[test]
fn tree_window() {
    let t = SimpleGraph::regular_tree(3, 3);
    assert_eq!(t.vertex_count(), 1 + 3 + 6 + 12);
    assert_eq!(t.degree(0), 3);
    assert_eq!(t.degree(1), 3);
    assert!(t.is_window_boundary(21));
    assert!(!t.is_window_boundary(4));
}
