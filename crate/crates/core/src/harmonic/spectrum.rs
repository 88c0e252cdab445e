use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::HarmonicError;
use crate::graph::{BallSubgraph, VertexId};
#[allow(unused_imports)]
use num_traits::Float;

/// Eigenvalues of a dense symmetric matrix, ascending.
///
/// Householder reduction to tridiagonal form followed by the implicit QL iteration;
/// only the lower triangle of `a` is read.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[i][k].abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
    }
    for i in 0..n {
        d[i] = a[i][i];
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 200 {
                break;
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    d
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Lambda1Report {
    pub lambda1: f64,
    /// `1 / (diam · vol)` of the induced subgraph.
    pub bound: f64,
    pub diameter: usize,
    pub volume: usize,
    pub ok: bool,
}

/// Spectrum of `I - D^{-1/2} A D^{-1/2}` for the graph on `0..n` with `edges`, which
/// must have no isolated vertex.
pub fn normalized_laplacian_spectrum(n: usize, edges: &[(usize, usize)]) -> Vec<f64> {
    let mut deg = vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut m = vec![vec![0.0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for &(a, b) in edges {
        let w = -1.0 / ((deg[a] * deg[b]) as f64).sqrt();
        m[a][b] = w;
        m[b][a] = w;
    }
    symmetric_eigenvalues(m)
}

/// First nonzero eigenvalue of the normalized Laplacian of the ball's induced subgraph
/// against `1 / (diam · vol)`, degrees taken inside the subgraph.
pub fn lambda1_check(ball: &BallSubgraph) -> Result<Lambda1Report, HarmonicError> {
    let n = ball.vertices.len();
    if n < 2 {
        return Err(HarmonicError::TooSmall);
    }
    let mut local: Vec<(VertexId, usize)> = ball.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    local.sort_unstable();
    let id = |v: VertexId| local[local.binary_search_by_key(&v, |p| p.0).unwrap()].1;
    let edges: Vec<(usize, usize)> = ball.edges.iter().map(|&(a, b)| (id(a), id(b))).collect();

    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut diameter = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    diameter = diameter.max(dist[w]);
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached < n {
            return Err(HarmonicError::Disconnected);
        }
    }
    let volume = 2 * edges.len();
    let spectrum = normalized_laplacian_spectrum(n, &edges);
    let lambda1 = spectrum[1];
    let bound = 1.0 / (diameter as f64 * volume as f64);
    Ok(Lambda1Report { lambda1, bound, diameter, volume, ok: lambda1 >= bound })
}
