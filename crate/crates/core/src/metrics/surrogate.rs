use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use rand::Rng;

use super::MetricsError;
use crate::graph::{bfs_distances, HalfEdgeMap, VertexId, UNREACHED};
use crate::rng::task_rng;
#[allow(unused_imports)]
use num_traits::Float;

#[derive(PartialEq)]
struct Entry(f64, VertexId);

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Each face contributes a straight chord between every pair of its vertices, with
/// the length it has in the unit-side regular polygon.
fn chord_graph(map: &HalfEdgeMap) -> Vec<Vec<(VertexId, f64)>> {
    let mut adj: Vec<Vec<(VertexId, f64)>> = vec![Vec::new(); map.vertex_count()];
    for face in map.faces() {
        let n = face.len();
        let side = (PI / n as f64).sin();
        for i in 0..n {
            for j in i + 1..n {
                let len = (PI * (j - i) as f64 / n as f64).sin() / side;
                adj[face[i]].push((face[j], len));
                adj[face[j]].push((face[i], len));
            }
        }
    }
    adj
}

fn dijkstra(adj: &[Vec<(VertexId, f64)>], source: VertexId) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; adj.len()];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Entry(0.0, source));
    while let Some(Entry(d, v)) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &(w, len) in &adj[v] {
            let nd = d + len;
            if nd < dist[w] {
                dist[w] = nd;
                heap.push(Entry(nd, w));
            }
        }
    }
    dist
}

/// Shortest distances from `source` when paths may cut straight across faces.
pub fn face_chord_distances(map: &HalfEdgeMap, source: VertexId) -> Vec<f64> {
    dijkstra(&chord_graph(map), source)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BiLipschitzReport {
    pub pairs: usize,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub mean_ratio: f64,
    /// A pair attaining `min_ratio`.
    pub argmin: (VertexId, VertexId),
}

/// Ratio of the face-chord distance to `d^G` over `samples` random pairs of interior
/// vertices.
pub fn bilipschitz_estimate(map: &HalfEdgeMap, samples: usize, seed: u64) -> Result<BiLipschitzReport, MetricsError> {
    let candidates: Vec<VertexId> = map.interior_vertices().collect();
    if candidates.len() < 2 {
        return Err(MetricsError::TooFewVertices);
    }
    let mut rng = task_rng(seed, 0);
    let mut pairs: Vec<(VertexId, VertexId)> = (0..samples)
        .map(|_| {
            let x = candidates[rng.random_range(0..candidates.len())];
            let mut y = x;
            while y == x {
                y = candidates[rng.random_range(0..candidates.len())];
            }
            (x, y)
        })
        .collect();
    pairs.sort_unstable();

    let adj = chord_graph(map);
    let mut report =
        BiLipschitzReport { pairs: 0, min_ratio: f64::INFINITY, max_ratio: 0.0, mean_ratio: 0.0, argmin: (0, 0) };
    let mut sum = 0.0;
    let mut i = 0;
    while i < pairs.len() {
        let x = pairs[i].0;
        let chord = dijkstra(&adj, x);
        let hops = bfs_distances(map, &[x], None);
        while i < pairs.len() && pairs[i].0 == x {
            let y = pairs[i].1;
            i += 1;
            if hops[y] == UNREACHED {
                continue;
            }
            let ratio = chord[y] / hops[y] as f64;
            report.pairs += 1;
            sum += ratio;
            report.max_ratio = report.max_ratio.max(ratio);
            if ratio < report.min_ratio {
                report.min_ratio = ratio;
                report.argmin = (x, y);
            }
        }
    }
    if report.pairs > 0 {
        report.mean_ratio = sum / report.pairs as f64;
    }
    Ok(report)
}
