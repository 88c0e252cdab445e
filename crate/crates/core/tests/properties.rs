use curvaplane_core::curvature::{classify_pattern, curvature_report, Pattern, Sign, VANISHING_PATTERNS};
use curvaplane_core::graph::{ball, bfs_distances, graph_distance, SimpleGraph};
use curvaplane_core::harmonic::{escape_probability, harnack_ratio, solve_on, DirichletSolver};
use curvaplane_core::metrics::ball_volume_profile;
use curvaplane_core::tilings::{generate, op_p, op_p_inv, ArchimedeanCode, GeneratedTiling};
use curvaplane_core::Adjacency;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn window(code: usize, radius: usize) -> GeneratedTiling {
    generate(&ArchimedeanCode::ALL[code].spec(radius)).unwrap()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `1 - d/2 + Σ 1/k` over a common denominator, reduced.
fn phi_fraction(degrees: &[usize]) -> (i128, i128) {
    let den: i128 = 2 * degrees.iter().map(|&k| k as i128).product::<i128>();
    let mut num = den - degrees.len() as i128 * den / 2;
    for &k in degrees {
        num += den / k as i128;
    }
    let g = gcd(num, den);
    (num / g, den / g)
}

/// Nondecreasing patterns of `len` entries in `3..=hi` with `Φ >= 0` (`Φ > 0` when
/// `strict`). Φ only drops as entries grow, so the best completion of a prefix repeats
/// its last entry; once that fails, larger entries are skipped.
fn sweep(len: usize, hi: usize, strict: bool, out: &mut dyn FnMut(&[usize])) {
    fn go(len: usize, hi: usize, strict: bool, prefix: &mut Vec<usize>, out: &mut dyn FnMut(&[usize])) {
        if prefix.len() == len {
            out(prefix);
            return;
        }
        let start = prefix.last().copied().unwrap_or(3);
        for k in start..=hi {
            prefix.push(k);
            let mut best = prefix.clone();
            best.resize(len, k);
            let num = phi_fraction(&best).0;
            if num < 0 || (strict && num == 0) {
                prefix.pop();
                break;
            }
            go(len, hi, strict, prefix, out);
            prefix.pop();
        }
    }
    go(len, hi, strict, &mut Vec::with_capacity(len), out);
}

fn same_multiset(a: &[usize], b: &[usize]) -> bool {
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_unstable();
    sb.sort_unstable();
    sa == sb
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn curvature_matches_integer_arithmetic(degrees in prop::collection::vec(3usize..60, 3..7)) {
        let (num, den) = phi_fraction(&degrees);
        let phi = Pattern::new(degrees).unwrap().curvature();
        prop_assert_eq!(phi.value, BigRational::new(BigInt::from(num), BigInt::from(den)));
    }

    #[test]
    fn graph_distance_is_a_metric(code in 0usize..11, seed in any::<u64>()) {
        let t = window(code, 5);
        let n = t.map.vertex_count();
        let pick = |k: u64| (seed.rotate_left(k as u32 * 17) % n as u64) as usize;
        let (x, y, z) = (pick(0), pick(1), pick(2));
        let d = |a, b| graph_distance(&t.map, a, b).unwrap().unwrap();
        prop_assert_eq!(d(x, x), 0);
        prop_assert_eq!(d(x, y), d(y, x));
        prop_assert!(d(x, z) <= d(x, y) + d(y, z));
        prop_assert_eq!(d(x, y) == 0, x == y);
        prop_assert_eq!(bfs_distances(&t.map, &[x], None)[y], d(x, y));
    }

    #[test]
    fn balls_grow_and_do_not_depend_on_the_window(code in 0usize..11, r in 0usize..5) {
        let small = window(code, 6);
        let large = window(code, 9);
        let a = ball(&small.map, small.center, r).unwrap();
        let b = ball(&small.map, small.center, r + 1).unwrap();
        prop_assert!(a.len() <= b.len());
        prop_assert!(a.vertices.iter().all(|v| b.contains(*v)));
        let pa = ball_volume_profile(&small.map, small.center, r).unwrap();
        let pb = ball_volume_profile(&large.map, large.center, r).unwrap();
        prop_assert_eq!(pa.volumes, pb.volumes);
    }

    #[test]
    fn gauss_bonnet_partial_sums(code in 0usize..11, radius in 4usize..8) {
        let t = window(code, radius);
        let report = curvature_report(&t.map).unwrap();
        prop_assert!(report.nonnegative_everywhere);
        prop_assert!(report.gauss_bonnet_ok);
    }

    #[test]
    fn p_and_p_inverse_keep_curvature(code in prop::sample::select(vec![10usize, 5, 8]), radius in 3usize..7) {
        let t = window(code, radius);
        let hexagons: Vec<usize> = (0..t.map.face_count()).filter(|&f| t.map.face_degree(f) == 6).collect();
        let split = op_p(&t.map, &hexagons).unwrap();
        let before = curvature_report(&t.map).unwrap();
        let after = curvature_report(&split).unwrap();
        for v in t.map.interior_vertices() {
            prop_assert_eq!(&before.get(v).unwrap().curvature, &after.get(v).unwrap().curvature);
        }
        let back = op_p_inv(&split);
        let restored = curvature_report(&back.map).unwrap();
        for v in back.map.interior_vertices() {
            let old = back.remap.iter().position(|m| *m == Some(v));
            if let Some(old) = old {
                if let Some(c) = after.get(old) {
                    prop_assert_eq!(&restored.get(v).unwrap().curvature, &c.curvature);
                }
            }
        }
    }

    #[test]
    fn dirichlet_is_linear_and_obeys_the_maximum_principle(
        a in -3.0f64..3.0,
        b in -3.0f64..3.0,
        seed in any::<u64>(),
    ) {
        let t = window(7, 10);
        let bl = ball(&t.map, t.center, 7).unwrap();
        let interior: Vec<_> = bl.inner().collect();
        let boundary: Vec<_> = bl.sphere().collect();
        let solver = DirichletSolver::new(&t.map, &interior, &boundary).unwrap();
        let g1: Vec<f64> = boundary.iter().map(|&v| ((v as u64 ^ seed) % 97) as f64 / 97.0).collect();
        let g2: Vec<f64> = boundary.iter().map(|&v| ((v as u64).wrapping_mul(seed | 1) % 89) as f64 / 89.0).collect();
        let mix: Vec<f64> = g1.iter().zip(&g2).map(|(x, y)| a * x + b * y).collect();
        let (u1, u2, u) = (solver.solve(&g1).unwrap(), solver.solve(&g2).unwrap(), solver.solve(&mix).unwrap());
        for i in 0..u.len() {
            prop_assert!((u[i] - (a * u1[i] + b * u2[i])).abs() < 1e-8);
        }
        let lo = g1.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = g1.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(u1.iter().all(|&x| x >= lo - 1e-12 && x <= hi + 1e-12));
    }

    #[test]
    fn harnack_is_scale_invariant(lambda in 0.01f64..100.0, shift in 1.0f64..20.0) {
        let t = window(7, 14);
        let data = |v: usize| shift + (v % 7) as f64;
        let r1 = harnack_ratio(&t.map, t.center, 3, 3, data).unwrap();
        let r2 = harnack_ratio(&t.map, t.center, 3, 3, |v| lambda * data(v)).unwrap();
        prop_assert!((r1 - r2).abs() < 1e-9);
        prop_assert!(r1 >= 1.0);
    }
}

#[test]
fn vanishing_list_is_complete_up_to_degree_42() {
    let mut zeros: Vec<Vec<usize>> = Vec::new();
    for len in 3..=6 {
        sweep(len, 42, false, &mut |p| {
            if phi_fraction(p).0 == 0 {
                zeros.push(p.to_vec());
            }
        });
    }
    for z in &zeros {
        assert!(VANISHING_PATTERNS.iter().any(|v| same_multiset(v, z)), "{z:?} vanishes but is not listed");
    }
    let mut listed: Vec<Vec<usize>> = VANISHING_PATTERNS
        .iter()
        .map(|v| {
            let mut s = v.to_vec();
            s.sort_unstable();
            s
        })
        .collect();
    listed.sort();
    listed.dedup();
    zeros.sort();
    assert_eq!(listed, zeros);
}

#[test]
fn positive_patterns_are_tabulated() {
    for len in 3..=5 {
        sweep(len, 200, true, &mut |p| {
            let pattern = Pattern::new(p.to_vec()).unwrap();
            let class = classify_pattern(&pattern);
            if class.sign == Sign::Positive {
                let row = class.table_row.unwrap_or_else(|| panic!("{p:?} is positive but not tabulated"));
                assert!(pattern.curvature().value >= class.certified_bound.unwrap(), "{p:?} below {row}");
            }
        });
    }
    // Six or more faces of degree at least 3 never give positive curvature.
    assert_ne!(classify_pattern(&Pattern::new(vec![3; 6]).unwrap()).sign, Sign::Positive);
}

#[test]
fn escape_never_increases_with_the_radius() {
    let t = window(7, 20);
    let mut last = f64::INFINITY;
    for r in 1..=18 {
        let e = escape_probability(&t.map, t.center, r).unwrap();
        assert!(e <= last + 1e-12 && e > 0.0, "r={r}: {e} after {last}");
        last = e;
    }
    let tree = SimpleGraph::regular_tree(4, 9);
    let mut last = f64::INFINITY;
    for r in 1..=8 {
        let e = escape_probability(&tree, 0, r).unwrap();
        assert!(e <= last + 1e-12);
        last = e;
    }
}

#[test]
fn solve_on_a_weighted_network_matches_unit_weights() {
    let path = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
    let weighted = SimpleGraph::from_weighted_edges(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]);
    let a = solve_on(&path, &[1, 2], &[0, 3], |v| v as f64).unwrap();
    let b = solve_on(&weighted, &[1, 2], &[0, 3], |v| v as f64).unwrap();
    assert_eq!(a.values, b.values);
    assert_eq!(path.degree(1), weighted.degree(1));
}
