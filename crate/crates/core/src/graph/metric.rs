use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{check_vertex, Adjacency, QueryError, VertexId};

pub const UNREACHED: usize = usize::MAX;

/// Multi-source BFS hop counts, stopping after `limit` hops when given.
pub fn bfs_distances<G: Adjacency + ?Sized>(g: &G, sources: &[VertexId], limit: Option<usize>) -> Vec<usize> {
    let mut dist = vec![UNREACHED; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v];
        if limit.is_some_and(|l| d >= l) {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHED {
                dist[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `d^G(x, y)`, or `None` when `y` is not reachable from `x` inside the window.
pub fn graph_distance<G: Adjacency + ?Sized>(g: &G, x: VertexId, y: VertexId) -> Result<Option<usize>, QueryError> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Ok(Some(0));
    }
    let mut dist = vec![UNREACHED; g.vertex_count()];
    let mut queue = VecDeque::from([x]);
    dist[x] = 0;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHED {
                dist[w] = dist[v] + 1;
                if w == y {
                    return Ok(Some(dist[w]));
                }
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

/// Closed geodesic ball `B_R(p)` as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallSubgraph {
    pub center: VertexId,
    pub radius: usize,
    /// Members ordered by (distance from the center, id).
    pub vertices: Vec<VertexId>,
    /// `distances[i]` is the distance of `vertices[i]` from the center.
    pub distances: Vec<usize>,
    /// Induced edges `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(VertexId, VertexId)>,
    /// True iff no member lies on the window boundary, so the ball agrees with the
    /// ball of the same radius in the infinite graph.
    pub complete: bool,
}

impl BallSubgraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Members at distance exactly `radius`.
    pub fn sphere(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members_at(self.radius)
    }

    /// Members at distance strictly less than `radius`.
    pub fn inner(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().zip(&self.distances).filter(move |(_, &d)| d < self.radius).map(|(&v, _)| v)
    }

    pub fn members_at(&self, r: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().zip(&self.distances).filter(move |(_, &d)| d == r).map(|(&v, _)| v)
    }

    /// Members at distance at most `r`.
    pub fn members_at_most(&self, r: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().zip(&self.distances).filter(move |(_, &d)| d <= r).map(|(&v, _)| v)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

pub fn ball<G: Adjacency + ?Sized>(g: &G, p: VertexId, radius: usize) -> Result<BallSubgraph, QueryError> {
    check_vertex(g, p)?;
    Ok(ball_from(g, &[p], p, radius))
}

/// `B_r(A) = {x : d^G(x, A) <= r}` for a vertex set `A`; `center` is reported as `A[0]`.
pub fn ball_around_set<G: Adjacency + ?Sized>(
    g: &G,
    set: &[VertexId],
    radius: usize,
) -> Result<BallSubgraph, QueryError> {
    for &v in set {
        check_vertex(g, v)?;
    }
    let center = set.first().copied().unwrap_or(0);
    Ok(ball_from(g, set, center, radius))
}

fn ball_from<G: Adjacency + ?Sized>(g: &G, sources: &[VertexId], center: VertexId, radius: usize) -> BallSubgraph {
    let dist = bfs_distances(g, sources, Some(radius));
    let mut members: Vec<(usize, VertexId)> =
        dist.iter().enumerate().filter(|(_, &d)| d != UNREACHED).map(|(v, &d)| (d, v)).collect();
    members.sort_unstable();
    let mut edges = Vec::new();
    for &(_, v) in &members {
        for &w in g.neighbors(v) {
            if v < w && dist[w] != UNREACHED {
                edges.push((v, w));
            }
        }
    }
    edges.sort_unstable();
    let complete = members.iter().all(|&(_, v)| !g.is_window_boundary(v));
    BallSubgraph {
        center,
        radius,
        vertices: members.iter().map(|&(_, v)| v).collect(),
        distances: members.iter().map(|&(d, _)| d).collect(),
        edges,
        complete,
    }
}
