use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::archimedean::Lattice;
use super::{canonical_faces, Embedding, EmbeddingKind, GeneratedTiling, TilingError};
use crate::graph::{HalfEdgeMap, VertexId};
#[allow(unused_imports)]
use num_traits::Float;

const TOL: f64 = 1e-6;
const MAX_FACE: usize = 12;

/// Unit-edge planar graph with faces traced from the angular rotation system.
struct PlaneGraph {
    pts: Vec<[f64; 2]>,
    faces: Vec<Vec<usize>>,
    nbrs: Vec<Vec<usize>>,
}

struct PointIndex {
    cells: BTreeMap<(i64, i64), Vec<usize>>,
}

fn cell(p: [f64; 2]) -> (i64, i64) {
    (p[0].floor() as i64, p[1].floor() as i64)
}

impl PointIndex {
    fn new() -> Self {
        PointIndex { cells: BTreeMap::new() }
    }

    fn near<'a>(&'a self, pts: &'a [[f64; 2]], p: [f64; 2], r: f64) -> impl Iterator<Item = usize> + 'a {
        let (cx, cy) = cell(p);
        let span = r.ceil() as i64;
        (cx - span..=cx + span)
            .flat_map(move |x| (cy - span..=cy + span).map(move |y| (x, y)))
            .filter_map(move |k| self.cells.get(&k))
            .flatten()
            .copied()
            .filter(move |&i| dist(pts[i], p) <= r)
    }

    fn insert(&mut self, pts: &mut Vec<[f64; 2]>, p: [f64; 2]) {
        if self.near(pts, p, TOL).next().is_none() {
            self.cells.entry(cell(p)).or_default().push(pts.len());
            pts.push(p);
        }
    }
}

fn dist(p: [f64; 2], q: [f64; 2]) -> f64 {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

/// Lattice points within `reach` of the origin that satisfy `inside`.
fn stamp(lat: &Lattice, reach: f64, inside: impl Fn([f64; 2]) -> bool) -> Vec<[f64; 2]> {
    let extent = lat.motif.iter().map(|m| m[0].hypot(m[1])).fold(0.0, f64::max);
    let r = reach + extent + 1.0;
    let jmax = (r / lat.b[1]).ceil() as i64 + 1;
    let mut pts = Vec::new();
    let mut index = PointIndex::new();
    for j in -jmax..=jmax {
        let bx = j as f64 * lat.b[0];
        let ilo = ((-r - bx) / lat.a[0]).floor() as i64 - 1;
        let ihi = ((r - bx) / lat.a[0]).ceil() as i64 + 1;
        for i in ilo..=ihi {
            if !(lat.keep)(i, j) {
                continue;
            }
            let o = [i as f64 * lat.a[0] + bx, j as f64 * lat.b[1]];
            for m in &lat.motif {
                let p = [o[0] + m[0], o[1] + m[1]];
                if p[0].hypot(p[1]) <= reach && inside(p) {
                    index.insert(&mut pts, p);
                }
            }
        }
    }
    pts
}

impl PlaneGraph {
    fn build(pts: Vec<[f64; 2]>) -> Self {
        let mut index = PointIndex::new();
        for (i, &p) in pts.iter().enumerate() {
            index.cells.entry(cell(p)).or_default().push(i);
        }
        let mut nbrs: Vec<Vec<usize>> = (0..pts.len())
            .map(|u| {
                index.near(&pts, pts[u], 1.0 + TOL).filter(|&v| (dist(pts[u], pts[v]) - 1.0).abs() < TOL).collect()
            })
            .collect();
        for (u, n) in nbrs.iter_mut().enumerate() {
            let p = pts[u];
            n.sort_by(|&a, &b| {
                let ta = (pts[a][1] - p[1]).atan2(pts[a][0] - p[0]);
                let tb = (pts[b][1] - p[1]).atan2(pts[b][0] - p[0]);
                ta.total_cmp(&tb)
            });
        }
        let faces = trace_faces(&pts, &nbrs);
        PlaneGraph { pts, faces, nbrs }
    }

    fn bfs(&self, source: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.pts.len()];
        d[source] = 0;
        let mut q = VecDeque::from([source]);
        while let Some(u) = q.pop_front() {
            for &v in &self.nbrs[u] {
                if d[v] == usize::MAX {
                    d[v] = d[u] + 1;
                    q.push_back(v);
                }
            }
        }
        d
    }
}

/// Walks every directed edge once; the face left of `u -> v` continues with the
/// neighbour of `v` just before `u` in counter-clockwise order. Only bounded,
/// counter-clockwise, regular faces are kept.
fn trace_faces(pts: &[[f64; 2]], nbrs: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: Vec<Vec<bool>> = nbrs.iter().map(|n| vec![false; n.len()]).collect();
    let mut faces = Vec::new();
    for u0 in 0..pts.len() {
        for k0 in 0..nbrs[u0].len() {
            if seen[u0][k0] {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut k) = (u0, k0);
            let closed = loop {
                if seen[u][k] {
                    break u == u0 && k == k0;
                }
                seen[u][k] = true;
                face.push(u);
                if face.len() > MAX_FACE {
                    break false;
                }
                let v = nbrs[u][k];
                let n = &nbrs[v];
                let Some(back) = n.iter().position(|&w| w == u) else { break false };
                let next = (back + n.len() - 1) % n.len();
                (u, k) = (v, next);
            };
            if closed && is_regular_ccw(pts, &face) {
                faces.push(face);
            }
        }
    }
    faces
}

fn is_regular_ccw(pts: &[[f64; 2]], face: &[usize]) -> bool {
    let n = face.len();
    if n < 3 {
        return false;
    }
    let c = centroid(pts, face);
    let mut area = 0.0;
    for i in 0..n {
        let (p, q) = (pts[face[i]], pts[face[(i + 1) % n]]);
        area += p[0] * q[1] - q[0] * p[1];
    }
    let r0 = dist(c, pts[face[0]]);
    area > 0.0 && face.iter().all(|&v| (dist(c, pts[v]) - r0).abs() < TOL)
}

fn centroid(pts: &[[f64; 2]], face: &[usize]) -> [f64; 2] {
    let n = face.len() as f64;
    let (sx, sy) = face.iter().fold((0.0, 0.0), |(x, y), &v| (x + pts[v][0], y + pts[v][1]));
    [sx / n, sy / n]
}

fn finish(
    faces: Vec<Vec<VertexId>>,
    coords: Vec<[f64; 2]>,
    center: VertexId,
    kind: EmbeddingKind,
) -> Result<GeneratedTiling, TilingError> {
    let map = HalfEdgeMap::new(coords.len(), canonical_faces(faces))?;
    Ok(GeneratedTiling { map, center, embedding: Some(Embedding { kind, coordinates: coords }) })
}

/// Window of radius `radius` around the vertex nearest the origin: every face with a
/// vertex at graph distance `<= radius`. Vertices are numbered by (distance, stamp order).
pub(crate) fn planar_window(lat: &Lattice, radius: usize) -> Result<GeneratedTiling, TilingError> {
    let reach = radius as f64 + 6.0;
    let g = PlaneGraph::build(stamp(lat, reach, |_| true));
    let origin = (0..g.pts.len())
        .min_by(|&a, &b| g.pts[a][0].hypot(g.pts[a][1]).total_cmp(&g.pts[b][0].hypot(g.pts[b][1])))
        .ok_or_else(|| TilingError::InvalidSpec("empty stamp".into()))?;
    let d = g.bfs(origin);
    let kept: Vec<&Vec<usize>> =
        g.faces.iter().filter(|f| f.iter().map(|&v| d[v]).min().is_some_and(|m| m <= radius)).collect();

    let mut used: Vec<usize> = kept.iter().flat_map(|f| f.iter().copied()).collect();
    used.sort_unstable_by_key(|&v| (d[v], v));
    used.dedup();
    let mut id = vec![usize::MAX; g.pts.len()];
    for (new, &old) in used.iter().enumerate() {
        id[old] = new;
    }
    let faces = kept.iter().map(|f| f.iter().map(|&v| id[v]).collect()).collect();
    let coords = used.iter().map(|&v| g.pts[v]).collect();
    finish(faces, coords, id[origin], EmbeddingKind::Planar)
}

/// Quotient of the strip `|y| <= half_length` by `(x, y) -> (x + shift, ±y)`.
pub(crate) fn quotient_window(
    lat: &Lattice,
    shift: f64,
    flip: bool,
    half_length: f64,
) -> Result<GeneratedTiling, TilingError> {
    if shift < 3.0 - TOL {
        return Err(TilingError::QuotientTooNarrow(alloc::format!("translation {shift:.3} is shorter than 3 edges")));
    }
    let reach = (shift + 6.0).hypot(half_length + 6.0);
    let g =
        PlaneGraph::build(stamp(lat, reach, |p| p[0] > -6.0 && p[0] < shift + 6.0 && p[1].abs() < half_length + 6.0));
    let canon = |p: [f64; 2]| -> [f64; 2] {
        let n = ((p[0] + 1e-7) / shift).floor();
        let y = if flip && (n as i64).rem_euclid(2) == 1 { -p[1] } else { p[1] };
        [p[0] - n * shift, y]
    };
    let key = |p: [f64; 2]| ((p[1] * 1e5).round() as i64, (p[0] * 1e5).round() as i64);

    let kept: Vec<&Vec<usize>> = g
        .faces
        .iter()
        .filter(|f| {
            let c = centroid(&g.pts, f);
            c[0] >= -1e-7 && c[0] < shift - 1e-7 && c[1].abs() <= half_length
        })
        .collect();

    let mut orbits: BTreeMap<(i64, i64), [f64; 2]> = BTreeMap::new();
    for f in &kept {
        for &v in f.iter() {
            let c = canon(g.pts[v]);
            orbits.entry(key(c)).or_insert(c);
        }
    }
    let ids: BTreeMap<(i64, i64), usize> = orbits.keys().enumerate().map(|(i, &k)| (k, i)).collect();
    let coords: Vec<[f64; 2]> = orbits.values().copied().collect();

    let narrow = |what: &str| TilingError::QuotientTooNarrow(alloc::format!("identification {what}"));
    let mut edge_orbits: BTreeMap<(usize, usize), (i64, i64)> = BTreeMap::new();
    let mut faces = Vec::with_capacity(kept.len());
    for f in &kept {
        let face: Vec<usize> = f.iter().map(|&v| ids[&key(canon(g.pts[v]))]).collect();
        let n = f.len();
        for i in 0..n {
            let (a, b) = (face[i], face[(i + 1) % n]);
            if a == b {
                return Err(narrow("creates a loop"));
            }
            let (p, q) = (g.pts[f[i]], g.pts[f[(i + 1) % n]]);
            let mid = key(canon([(p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0]));
            let pair = (a.min(b), a.max(b));
            if *edge_orbits.entry(pair).or_insert(mid) != mid {
                return Err(narrow("creates a multi-edge"));
            }
        }
        let mut sorted = face.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(narrow("folds a face onto itself"));
        }
        faces.push(face);
    }

    let center = (0..coords.len())
        .min_by(|&a, &b| coords[a][0].hypot(coords[a][1]).total_cmp(&coords[b][0].hypot(coords[b][1])))
        .ok_or_else(|| TilingError::InvalidSpec("empty quotient".into()))?;
    let kind = if flip { EmbeddingKind::GlideQuotient } else { EmbeddingKind::CylinderQuotient };
    finish(faces, coords, center, kind)
}
