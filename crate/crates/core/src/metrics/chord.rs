use core::f64::consts::PI;

use super::MetricsError;
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChordReport {
    pub n: usize,
    pub s: f64,
    pub t: f64,
    /// Straight-line distance between the two boundary points.
    pub d: f64,
    /// Boundary length from `s` forward to `t`.
    pub l1: f64,
    /// Boundary length the other way round, `n - l1`.
    pub l2: f64,
    /// `d / min(l1, l2)`.
    pub ratio: f64,
}

/// Chord between the points at arc lengths `s` and `t` along the boundary of the
/// regular `n`-gon with unit sides, measured from a vertex.
pub fn chord_ratio(n: usize, s: f64, t: f64) -> Result<ChordReport, MetricsError> {
    let nf = n as f64;
    let ok = |x: f64| x.is_finite() && (0.0..nf).contains(&x);
    if n < 3 || !ok(s) || !ok(t) || s == t {
        return Err(MetricsError::InvalidPosition { n, s, t });
    }
    let p = boundary_point(n, s);
    let q = boundary_point(n, t);
    let d = (p[0] - q[0]).hypot(p[1] - q[1]);
    let l1 = if t > s { t - s } else { nf - (s - t) };
    let l2 = nf - l1;
    Ok(ChordReport { n, s, t, d, l1, l2, ratio: d / l1.min(l2) })
}

fn boundary_point(n: usize, s: f64) -> [f64; 2] {
    let radius = 0.5 / (PI / n as f64).sin();
    let vertex = |j: usize| {
        let a = 2.0 * PI * (j % n) as f64 / n as f64;
        [radius * a.cos(), radius * a.sin()]
    };
    let j = s.floor() as usize;
    let f = s - j as f64;
    let (a, b) = (vertex(j), vertex(j + 1));
    [a[0] + f * (b[0] - a[0]), a[1] + f * (b[1] - a[1])]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChordSweep {
    pub n: usize,
    pub points: usize,
    /// Smallest `d / (a + b)` over `s = 1 - a`, `t = 1 + b` on the two sides meeting at
    /// vertex 1, with `a, b` on a `⌈√points⌉`-step grid of `(0, 1]`.
    pub adjacent_min: f64,
    pub adjacent_argmin: (f64, f64),
    /// Smallest `ratio` over all pairs of `points` equally spaced boundary positions.
    pub global_min: f64,
    pub global_argmin: (f64, f64),
}

pub fn chord_sweep(n: usize, points: usize) -> Result<ChordSweep, MetricsError> {
    if n < 3 || points < 2 {
        return Err(MetricsError::InvalidPosition { n, s: 0.0, t: 0.0 });
    }
    let m = (1..).find(|m| m * m >= points).unwrap_or(1);
    let mut adjacent = (f64::INFINITY, (0.0, 0.0));
    for i in 1..=m {
        for j in 1..=m {
            let (a, b) = (i as f64 / m as f64, j as f64 / m as f64);
            let r = chord_ratio(n, 1.0 - a, 1.0 + b)?;
            let ratio = r.d / (a + b);
            if ratio < adjacent.0 {
                adjacent = (ratio, (r.s, r.t));
            }
        }
    }
    let step = n as f64 / points as f64;
    let mut global = (f64::INFINITY, (0.0, 0.0));
    for i in 0..points {
        for j in i + 1..points {
            let r = chord_ratio(n, i as f64 * step, j as f64 * step)?;
            if r.ratio < global.0 {
                global = (r.ratio, (r.s, r.t));
            }
        }
    }
    Ok(ChordSweep {
        n,
        points,
        adjacent_min: adjacent.0,
        adjacent_argmin: adjacent.1,
        global_min: global.0,
        global_argmin: global.1,
    })
}
