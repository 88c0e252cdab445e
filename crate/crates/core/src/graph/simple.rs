use alloc::vec;
use alloc::vec::Vec;

use super::{Adjacency, VertexId};
#[allow(unused_imports)]
use num_traits::Float;

/// Plain adjacency-list graph, for analysis inputs that carry no face structure.
#[derive(Clone, Debug, PartialEq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<VertexId>>,
    boundary: Vec<bool>,
    conductances: Option<Vec<Vec<f64>>>,
}

impl SimpleGraph {
    /// Builds an undirected graph; duplicate edges and loops are dropped.
    pub fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in edges {
            if a != b {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
        for n in &mut adjacency {
            n.sort_unstable();
            n.dedup();
        }
        SimpleGraph { adjacency, boundary: vec![false; vertex_count], conductances: None }
    }

    /// Network with edge conductances; parallel edges add up, loops are dropped.
    pub fn from_weighted_edges(vertex_count: usize, edges: &[(VertexId, VertexId, f64)]) -> Self {
        let mut lists: Vec<Vec<(VertexId, f64)>> = vec![Vec::new(); vertex_count];
        for &(a, b, c) in edges {
            if a != b {
                lists[a].push((b, c));
                lists[b].push((a, c));
            }
        }
        let mut adjacency = Vec::with_capacity(vertex_count);
        let mut conductances = Vec::with_capacity(vertex_count);
        for mut l in lists {
            l.sort_unstable_by_key(|&(w, _)| w);
            let mut ids: Vec<VertexId> = Vec::with_capacity(l.len());
            let mut cs: Vec<f64> = Vec::with_capacity(l.len());
            for (w, c) in l {
                if ids.last() == Some(&w) {
                    *cs.last_mut().unwrap() += c;
                } else {
                    ids.push(w);
                    cs.push(c);
                }
            }
            adjacency.push(ids);
            conductances.push(cs);
        }
        SimpleGraph { adjacency, boundary: vec![false; vertex_count], conductances: Some(conductances) }
    }

    pub fn with_window_boundary(mut self, boundary: impl IntoIterator<Item = VertexId>) -> Self {
        for v in boundary {
            self.boundary[v] = true;
        }
        self
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Self::from_edges(n, &edges)
    }

    /// Window of radius `depth` around the root of the infinite `degree`-regular tree.
    ///
    /// Vertices are numbered level by level; the leaves at distance `depth` form the
    /// window boundary.
    pub fn regular_tree(degree: usize, depth: usize) -> Self {
        assert!(degree >= 2, "tree degree must be at least 2");
        let mut edges = Vec::new();
        let mut level = vec![0usize];
        let mut next_id = 1;
        for d in 0..depth {
            let children = if d == 0 { degree } else { degree - 1 };
            let mut next_level = Vec::with_capacity(level.len() * children);
            for &parent in &level {
                for _ in 0..children {
                    edges.push((parent, next_id));
                    next_level.push(next_id);
                    next_id += 1;
                }
            }
            level = next_level;
        }
        let leaves = if depth == 0 { Vec::new() } else { level };
        Self::from_edges(next_id, &edges).with_window_boundary(leaves)
    }

    /// The same tree window collapsed onto its levels: vertex `m` stands for level `m`
    /// and the edge `m - (m + 1)` carries the conductance of all tree edges between
    /// the two levels. Walks from the root see the same level process.
    pub fn radial_tree(degree: usize, depth: usize) -> Self {
        assert!(degree >= 2, "tree degree must be at least 2");
        let edges: Vec<_> =
            (0..depth).map(|m| (m, m + 1, degree as f64 * ((degree - 1) as f64).powi(m as i32))).collect();
        let g = Self::from_weighted_edges(depth + 1, &edges);
        if depth == 0 {
            g
        } else {
            g.with_window_boundary([depth])
        }
    }
}

impl Adjacency for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    fn is_window_boundary(&self, v: VertexId) -> bool {
        self.boundary[v]
    }

    fn conductance(&self, v: VertexId, i: usize) -> f64 {
        self.conductances.as_ref().map_or(1.0, |c| c[v][i])
    }
}
