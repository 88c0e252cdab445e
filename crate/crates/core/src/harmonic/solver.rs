use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::HarmonicError;
use crate::graph::{Adjacency, VertexId};
#[allow(unused_imports)]
use num_traits::Float;

/// Systems at least this large are solved iteratively.
pub const DIRECT_LIMIT: usize = 100_000;
/// Envelope entries above which the direct factor is abandoned for iteration.
const ENVELOPE_LIMIT: usize = 50_000_000;
/// Target for `max |Lu|` in the iterative solver.
const CG_TARGET: f64 = 1e-13;

/// The Dirichlet problem `Lu = 0` on `unknowns` with `u` prescribed on `fixed`,
/// assembled and factored once for many right-hand sides.
///
/// Rows are `μ_x u_x - Σ c_xy u_y = Σ c_xz g_z` with `y` unknown and `z` fixed; the
/// matrix is symmetric and positive definite once every component of the unknowns
/// touches `fixed`.
#[derive(Clone, Debug)]
pub struct DirichletSolver {
    unknowns: Vec<VertexId>,
    fixed: Vec<VertexId>,
    mu: Vec<f64>,
    off: Vec<Vec<(usize, f64)>>,
    coupling: Vec<Vec<(usize, f64)>>,
    factor: Option<Skyline>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Outside,
    Unknown(usize),
    Fixed(usize),
}

impl DirichletSolver {
    pub fn new<G: Adjacency + ?Sized>(g: &G, unknowns: &[VertexId], fixed: &[VertexId]) -> Result<Self, HarmonicError> {
        if fixed.is_empty() {
            return Err(HarmonicError::EmptyBoundary);
        }
        let mut role = vec![Role::Outside; g.vertex_count()];
        for (k, &z) in fixed.iter().enumerate() {
            *role.get_mut(z).ok_or(HarmonicError::UnknownVertex(z))? = Role::Fixed(k);
        }
        for (i, &x) in unknowns.iter().enumerate() {
            *role.get_mut(x).ok_or(HarmonicError::UnknownVertex(x))? = Role::Unknown(i);
        }
        let n = unknowns.len();
        let mut mu = vec![0.0; n];
        let mut off = vec![Vec::new(); n];
        let mut coupling = vec![Vec::new(); n];
        for (i, &x) in unknowns.iter().enumerate() {
            for (j, &y) in g.neighbors(x).iter().enumerate() {
                let c = g.conductance(x, j);
                mu[i] += c;
                match role[y] {
                    Role::Unknown(k) => off[i].push((k, c)),
                    Role::Fixed(k) => coupling[i].push((k, c)),
                    Role::Outside => return Err(HarmonicError::MissingNeighborValue { vertex: x }),
                }
            }
        }

        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut anchored = false;
            let mut queue = VecDeque::from([s]);
            while let Some(i) = queue.pop_front() {
                anchored |= !coupling[i].is_empty();
                for &(k, _) in &off[i] {
                    if !seen[k] {
                        seen[k] = true;
                        queue.push_back(k);
                    }
                }
            }
            if !anchored {
                return Err(HarmonicError::FloatingComponent { vertex: unknowns[s] });
            }
        }

        let factor = if n < DIRECT_LIMIT { Skyline::factor(&mu, &off) } else { None };
        Ok(DirichletSolver { unknowns: unknowns.to_vec(), fixed: fixed.to_vec(), mu, off, coupling, factor })
    }

    pub fn unknowns(&self) -> &[VertexId] {
        &self.unknowns
    }

    pub fn fixed(&self) -> &[VertexId] {
        &self.fixed
    }

    /// Drops the direct factor so that every solve goes through conjugate gradients.
    pub fn iterative(mut self) -> Self {
        self.factor = None;
        self
    }

    pub fn is_direct(&self) -> bool {
        self.factor.is_some()
    }

    /// Values on `unknowns` for the data `values[k]` on `fixed[k]`.
    pub fn solve(&self, values: &[f64]) -> Result<Vec<f64>, HarmonicError> {
        assert_eq!(values.len(), self.fixed.len(), "one value per fixed vertex");
        let b: Vec<f64> = self.coupling.iter().map(|c| c.iter().map(|&(k, w)| w * values[k]).sum()).collect();
        match &self.factor {
            Some(f) => Ok(f.solve(&b)),
            None => self.conjugate_gradient(&b),
        }
    }

    fn apply(&self, x: &[f64], out: &mut [f64]) {
        for i in 0..x.len() {
            out[i] = self.mu[i] * x[i] - self.off[i].iter().map(|&(k, c)| c * x[k]).sum::<f64>();
        }
    }

    fn conjugate_gradient(&self, b: &[f64]) -> Result<Vec<f64>, HarmonicError> {
        let n = b.len();
        let mut x = vec![0.0; n];
        let mut r = b.to_vec();
        let mut z: Vec<f64> = r.iter().zip(&self.mu).map(|(r, m)| r / m).collect();
        let mut p = z.clone();
        let mut ap = vec![0.0; n];
        let mut rz: f64 = r.iter().zip(&z).map(|(a, b)| a * b).sum();
        let max_iter = 20 * n + 1000;
        for _ in 0..max_iter {
            let worst = r.iter().zip(&self.mu).map(|(r, m)| (r / m).abs()).fold(0.0, f64::max);
            if worst <= CG_TARGET {
                return Ok(x);
            }
            self.apply(&p, &mut ap);
            let alpha = rz / p.iter().zip(&ap).map(|(a, b)| a * b).sum::<f64>();
            for i in 0..n {
                x[i] += alpha * p[i];
                r[i] -= alpha * ap[i];
                z[i] = r[i] / self.mu[i];
            }
            let next: f64 = r.iter().zip(&z).map(|(a, b)| a * b).sum();
            let beta = next / rz;
            rz = next;
            for i in 0..n {
                p[i] = z[i] + beta * p[i];
            }
        }
        Err(HarmonicError::NoConvergence { iterations: max_iter })
    }
}

/// Envelope Cholesky factor `A = L Lᵀ` in reverse Cuthill-McKee order.
#[derive(Clone, Debug)]
struct Skyline {
    /// `perm[new] = old`.
    perm: Vec<usize>,
    first: Vec<usize>,
    start: Vec<usize>,
    values: Vec<f64>,
}

impl Skyline {
    fn factor(diag: &[f64], off: &[Vec<(usize, f64)>]) -> Option<Self> {
        let n = diag.len();
        let perm = reverse_cuthill_mckee(off);
        let mut inv = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let first: Vec<usize> =
            (0..n).map(|r| off[perm[r]].iter().map(|&(k, _)| inv[k]).filter(|&c| c < r).min().unwrap_or(r)).collect();
        let mut start = Vec::with_capacity(n + 1);
        let mut total = 0usize;
        for r in 0..n {
            start.push(total);
            total += r - first[r] + 1;
        }
        start.push(total);
        if total > ENVELOPE_LIMIT {
            return None;
        }
        let mut values = vec![0.0; total];
        for r in 0..n {
            values[start[r] + r - first[r]] = diag[perm[r]];
            for &(k, c) in &off[perm[r]] {
                let col = inv[k];
                if col < r {
                    values[start[r] + col - first[r]] -= c;
                }
            }
        }
        for r in 0..n {
            for c in first[r]..=r {
                let lo = first[r].max(first[c]);
                let mut sum = values[start[r] + c - first[r]];
                for k in lo..c {
                    sum -= values[start[r] + k - first[r]] * values[start[c] + k - first[c]];
                }
                if c < r {
                    values[start[r] + c - first[r]] = sum / values[start[c] + c - first[c]];
                } else {
                    if sum <= 0.0 {
                        return None;
                    }
                    values[start[r] + r - first[r]] = sum.sqrt();
                }
            }
        }
        Some(Skyline { perm, first, start, values })
    }

    fn at(&self, r: usize, c: usize) -> f64 {
        self.values[self.start[r] + c - self.first[r]]
    }

    fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = b.len();
        let mut y: Vec<f64> = self.perm.iter().map(|&old| b[old]).collect();
        for r in 0..n {
            let mut s = y[r];
            for k in self.first[r]..r {
                s -= self.at(r, k) * y[k];
            }
            y[r] = s / self.at(r, r);
        }
        for r in (0..n).rev() {
            y[r] /= self.at(r, r);
            let xr = y[r];
            for k in self.first[r]..r {
                y[k] -= self.at(r, k) * xr;
            }
        }
        let mut x = vec![0.0; n];
        for (new, &old) in self.perm.iter().enumerate() {
            x[old] = y[new];
        }
        x
    }
}

fn reverse_cuthill_mckee(off: &[Vec<(usize, f64)>]) -> Vec<usize> {
    let n = off.len();
    let bfs_last = |s: usize| -> usize {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        let mut last = s;
        while let Some(v) = queue.pop_front() {
            last = v;
            for &(w, _) in &off[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        last
    };
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in 0..n {
        if placed[s] {
            continue;
        }
        let root = bfs_last(bfs_last(s));
        placed[root] = true;
        let begin = order.len();
        order.push(root);
        let mut head = begin;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut next: Vec<usize> = off[v].iter().map(|&(w, _)| w).filter(|&w| !placed[w]).collect();
            next.sort_unstable_by_key(|&w| (off[w].len(), w));
            next.dedup();
            for w in next {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    order.reverse();
    order
}
