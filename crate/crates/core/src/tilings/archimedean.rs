use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::TilingError;
#[allow(unused_imports)]
use num_traits::Float;

/// The eleven edge-to-edge tilings by regular polygons with a single vertex type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArchimedeanCode {
    /// 3⁶
    Triangular,
    /// 3⁴.6
    SnubHexagonal,
    /// 3³.4²
    ElongatedTriangular,
    /// 3².4.3.4
    SnubSquare,
    /// 3.4.6.4
    Rhombitrihexagonal,
    /// 3.6.3.6
    Trihexagonal,
    /// 3.12²
    TruncatedHexagonal,
    /// 4⁴
    Square,
    /// 4.6.12
    TruncatedTrihexagonal,
    /// 4.8²
    TruncatedSquare,
    /// 6³
    Hexagonal,
}

use ArchimedeanCode::*;

impl ArchimedeanCode {
    pub const ALL: [ArchimedeanCode; 11] = [
        Triangular,
        SnubHexagonal,
        ElongatedTriangular,
        SnubSquare,
        Rhombitrihexagonal,
        Trihexagonal,
        TruncatedHexagonal,
        Square,
        TruncatedTrihexagonal,
        TruncatedSquare,
        Hexagonal,
    ];

    /// Face degrees around a vertex in cyclic order.
    pub fn vertex_configuration(self) -> &'static [usize] {
        match self {
            Triangular => &[3, 3, 3, 3, 3, 3],
            SnubHexagonal => &[3, 3, 3, 3, 6],
            ElongatedTriangular => &[3, 3, 3, 4, 4],
            SnubSquare => &[3, 3, 4, 3, 4],
            Rhombitrihexagonal => &[3, 4, 6, 4],
            Trihexagonal => &[3, 6, 3, 6],
            TruncatedHexagonal => &[3, 12, 12],
            Square => &[4, 4, 4, 4],
            TruncatedTrihexagonal => &[4, 6, 12],
            TruncatedSquare => &[4, 8, 8],
            Hexagonal => &[6, 6, 6],
        }
    }

    pub fn pattern(self) -> Vec<usize> {
        let mut p = self.vertex_configuration().to_vec();
        p.sort_unstable();
        p
    }

    pub fn name(self) -> &'static str {
        match self {
            Triangular => "3^6",
            SnubHexagonal => "3^4.6",
            ElongatedTriangular => "3^3.4^2",
            SnubSquare => "3^2.4.3.4",
            Rhombitrihexagonal => "3.4.6.4",
            Trihexagonal => "3.6.3.6",
            TruncatedHexagonal => "3.12^2",
            Square => "4^4",
            TruncatedTrihexagonal => "4.6.12",
            TruncatedSquare => "4.8^2",
            Hexagonal => "6^3",
        }
    }

    pub fn monohedral(degree: usize) -> Option<Self> {
        match degree {
            3 => Some(Triangular),
            4 => Some(Square),
            6 => Some(Hexagonal),
            _ => None,
        }
    }

    pub(crate) fn lattice(self) -> Lattice {
        let s3 = 3f64.sqrt();
        let s2 = 2f64.sqrt();
        let tri = |spacing: f64| ([spacing, 0.0], [spacing / 2.0, spacing * s3 / 2.0]);
        let (a, b) = match self {
            Triangular | Hexagonal | Trihexagonal | SnubHexagonal => tri(1.0),
            ElongatedTriangular => ([1.0, 0.0], [0.5, 1.0 + s3 / 2.0]),
            Square => ([1.0, 0.0], [0.0, 1.0]),
            TruncatedSquare => ([1.0 + s2, 0.0], [0.0, 1.0 + s2]),
            SnubSquare => {
                let side = (2.0 + s3).sqrt();
                ([side, 0.0], [0.0, side])
            }
            Rhombitrihexagonal => tri(1.0 + s3),
            TruncatedHexagonal => tri(2.0 + s3),
            TruncatedTrihexagonal => tri(3.0 + s3),
        };
        let ring = |n: usize, start_deg: f64, radius: f64, center: [f64; 2]| -> Vec<[f64; 2]> {
            (0..n)
                .map(|i| {
                    let t = (start_deg + 360.0 * i as f64 / n as f64).to_radians();
                    [center[0] + radius * t.cos(), center[1] + radius * t.sin()]
                })
                .collect()
        };
        let motif = match self {
            Triangular | Hexagonal | Trihexagonal | SnubHexagonal | Square => vec![[0.0, 0.0]],
            ElongatedTriangular => vec![[0.0, -0.5], [0.0, 0.5]],
            TruncatedSquare => ring(4, 0.0, 1.0 / s2, [0.0, 0.0]),
            SnubSquare => {
                let side = a[0];
                let mut m = ring(4, 60.0, 1.0 / s2, [0.0, -side / 4.0]);
                m.extend(ring(4, 30.0, 1.0 / s2, [side / 2.0, side / 4.0]));
                m
            }
            Rhombitrihexagonal => ring(6, 30.0, 1.0, [0.0, 0.0]),
            TruncatedHexagonal | TruncatedTrihexagonal => {
                ring(12, 15.0, 1.0 / (2.0 * 15f64.to_radians().sin()), [0.0, 0.0])
            }
        };
        let keep: fn(i64, i64) -> bool = match self {
            Hexagonal => |i, j| (i - j).rem_euclid(3) != 1,
            Trihexagonal => |i, j| !(i.rem_euclid(2) == 1 && j.rem_euclid(2) == 0),
            SnubHexagonal => |i, j| (3 * i + j).rem_euclid(7) != 1,
            _ => |_, _| true,
        };
        let period = match self {
            Hexagonal => 3.0 * a[0],
            Trihexagonal => 2.0 * a[0],
            SnubHexagonal => 7.0 * a[0],
            _ => a[0],
        };
        let glide = match self {
            SnubHexagonal => None,
            SnubSquare => Some(a[0] / 2.0),
            _ => Some(0.0),
        };
        Lattice { a, b, motif, keep, period, glide }
    }
}

/// Periodic point set `motif + i·a + j·b`, filtered by `keep(i, j)`.
#[derive(Clone, Debug)]
pub(crate) struct Lattice {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub motif: Vec<[f64; 2]>,
    pub keep: fn(i64, i64) -> bool,
    /// Smallest horizontal translation symmetry.
    pub period: f64,
    /// Offset `g` such that `(x, y) -> (x + g, -y)` is a symmetry; `None` if the tiling
    /// has no orientation-reversing symmetry with a horizontal axis.
    pub glide: Option<f64>,
}

impl fmt::Display for ArchimedeanCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ArchimedeanCode {
    type Err = TilingError;

    /// Accepts `4.8.8`, `4.8^2`, `4.8²` and the compact `488` for single-digit codes.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TilingError::InvalidSpec(alloc::format!("unknown tiling code {s:?}"));
        let config = parse_configuration(s).ok_or_else(bad)?;
        ArchimedeanCode::ALL.into_iter().find(|c| same_cycle(c.vertex_configuration(), &config)).ok_or_else(bad)
    }
}

fn parse_configuration(s: &str) -> Option<Vec<usize>> {
    const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut plain = String::new();
    let mut in_power = false;
    for ch in s.trim().chars() {
        match SUPERSCRIPTS.iter().position(|&c| c == ch) {
            Some(d) => {
                if !in_power {
                    plain.push('^');
                }
                plain.push(char::from(b'0' + d as u8));
                in_power = true;
            }
            None => {
                plain.push(ch);
                in_power = false;
            }
        }
    }
    let mut out = Vec::new();
    if !plain.contains(['.', '^']) {
        for ch in plain.chars() {
            out.push(ch.to_digit(10)? as usize);
        }
        return (out.len() >= 3).then_some(out);
    }
    for token in plain.split('.') {
        let (base, power) = match token.split_once('^') {
            Some((b, p)) => (b, p.parse::<usize>().ok()?),
            None => (token, 1),
        };
        let base: usize = base.parse().ok()?;
        out.extend(core::iter::repeat_n(base, power));
    }
    (out.len() >= 3).then_some(out)
}

fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let reversed: Vec<usize> = b.iter().rev().copied().collect();
    (0..n).any(|r| (0..n).all(|i| a[i] == b[(i + r) % n]) || (0..n).all(|i| a[i] == reversed[(i + r) % n]))
}
