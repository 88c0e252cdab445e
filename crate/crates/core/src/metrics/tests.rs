use alloc::vec::Vec;

use super::*;
use crate::graph::{graph_distance, HalfEdgeMap, SimpleGraph};
use crate::tilings::{generate, ArchimedeanCode, RingPattern, TilingSpec};

fn grid(radius: usize) -> (HalfEdgeMap, usize) {
    let g = generate(&ArchimedeanCode::Square.spec(radius)).unwrap();
    (g.map, g.center)
}

#[test]
fn grid_volumes_match_closed_form() {
    let (m, c) = grid(12);
    let p = ball_volume_profile(&m, c, 10).unwrap();
    assert_eq!(p.volumes[0], 4);
    assert_eq!(p.volumes[1], 20);
    assert_eq!(p.volumes[2], 52);
    for r in 0..=10u64 {
        assert_eq!(p.volumes[r as usize], 4 * (2 * r * r + 2 * r + 1));
    }
    assert_eq!(p.complete_up_to, Some(10));
}

#[test]
fn complete_radius_stops_at_the_window() {
    let (m, c) = grid(6);
    let p = ball_volume_profile(&m, c, 20).unwrap();
    assert_eq!(p.complete_up_to, Some(6));
    assert!(volume_axioms(&ball_volume_profile(&m, c, 3).unwrap()).is_err());
}

#[test]
fn grid_axioms() {
    let (m, c) = grid(30);
    let r = volume_axioms(&ball_volume_profile(&m, c, 30).unwrap()).unwrap();
    assert!((1.85..=2.15).contains(&r.growth_exponent), "{r:?}");
    assert!(r.doubling_constant <= 4.5);
    assert!(r.quadratic_coefficient <= 20.0 + 1e-9);
}

#[test]
fn large_face_grows_linearly() {
    let g = generate(&TilingSpec::large_face(50, RingPattern::Squares, 200)).unwrap();
    let p = ball_volume_profile(&g.map, g.center, 160).unwrap();
    // Once the ball wraps around the big face each radius adds one ring of 50
    // degree-4 vertices.
    for r in 100..=160 {
        let step = p.volumes[r] - p.volumes[r - 1];
        assert_eq!(step, 200, "step {step} at {r}");
    }
    let r = volume_axioms(&p).unwrap();
    assert!((0.8..=1.2).contains(&r.growth_exponent), "{r:?}");
}

#[test]
fn relabeling_keeps_statistics() {
    let (m, c) = grid(12);
    let n = m.vertex_count();
    let perm = |v: usize| (v * 7 + 3) % n;
    assert_ne!(n % 7, 0);
    let faces: Vec<Vec<usize>> = m.faces().iter().map(|f| f.iter().map(|&v| perm(v)).collect()).collect();
    let relabeled = HalfEdgeMap::new(n, faces).unwrap();
    let a = volume_axioms(&ball_volume_profile(&m, c, 12).unwrap()).unwrap();
    let b = volume_axioms(&ball_volume_profile(&relabeled, perm(c), 12).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn chord_examples() {
    let r = chord_ratio(3, 0.0, 1.0).unwrap();
    assert!((r.d - 1.0).abs() < 1e-12 && (r.ratio - 1.0).abs() < 1e-12);
    let r = chord_ratio(4, 0.5, 2.5).unwrap();
    assert!((r.d - 1.0).abs() < 1e-12);
    assert_eq!((r.l1, r.l2), (2.0, 2.0));
    assert!((r.ratio - 0.5).abs() < 1e-12);
    assert_eq!(r.l1 + r.l2, 4.0);
    assert!(chord_ratio(4, 1.0, 1.0).is_err());
    assert!(chord_ratio(4, 4.0, 1.0).is_err());
    assert!(chord_ratio(2, 0.0, 1.0).is_err());
}

#[test]
fn chord_is_a_law_of_cosines_oracle() {
    // Points on adjacent sides at distances a, b from their shared vertex meet at the
    // interior angle (1 - 2/n)π.
    for n in 3..=12 {
        let angle = core::f64::consts::PI * (1.0 - 2.0 / n as f64);
        for (a, b) in [(0.25, 0.5), (0.9, 0.1), (0.5, 0.5)] {
            let r = chord_ratio(n, 1.0 - a, 1.0 + b).unwrap();
            let d = (a * a + b * b - 2.0 * a * b * angle.cos()).sqrt();
            assert!((r.d - d).abs() < 1e-12, "n={n}");
        }
    }
}

#[test]
fn surrogate_on_grid() {
    let (m, c) = grid(8);
    let d = face_chord_distances(&m, c);
    let diag = (0..m.vertex_count()).find(|&v| graph_distance(&m, c, v) == Ok(Some(2)) && d[v] < 1.5).unwrap();
    assert!((d[diag] - 2f64.sqrt()).abs() < 1e-12);
    for &w in m.neighbors(c) {
        assert!((d[w] - 1.0).abs() < 1e-12);
    }
    let r = bilipschitz_estimate(&m, 2000, 7).unwrap();
    assert!(r.max_ratio <= 1.0 + 1e-12);
    assert!(r.min_ratio >= 1.0 / 2f64.sqrt() - 0.01);
    assert_eq!(r, bilipschitz_estimate(&m, 2000, 7).unwrap());
}

#[test]
fn surrogate_equals_hops_on_triangles() {
    let g = generate(&ArchimedeanCode::Triangular.spec(6)).unwrap();
    let r = bilipschitz_estimate(&g.map, 500, 1).unwrap();
    assert!((r.min_ratio - 1.0).abs() < 1e-12 && (r.max_ratio - 1.0).abs() < 1e-12);
}

#[test]
fn tree_profile_has_no_faces_needed() {
    let t = SimpleGraph::regular_tree(3, 5);
    let p = ball_volume_profile(&t, 0, 5).unwrap();
    assert_eq!(p.counts, [1, 4, 10, 22, 46, 94]);
    assert_eq!(p.complete_up_to, Some(4));
}

#[test]
fn chord_sweep_of_the_triangle() {
    let s = chord_sweep(3, 30).unwrap();
    // Adjacent sides of the triangle meet at 60°, so the worst split is a = b.
    assert!((s.adjacent_min - 0.5).abs() < 1e-12);
    assert!(s.global_min <= s.adjacent_min + 1e-12);
    assert!(s.global_min > 0.4);
    assert!(chord_sweep(2, 10).is_err());
}
