use std::f64::consts::PI;

use super::*;
use crate::circle::canonical_sequence;
use crate::special::lambda2_potential;
use crate::specfun::continuous_energy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn energy(points: &[SpherePoint], lambda: f64) -> f64 {
    let mut h = 0.0;
    for i in 0..points.len() {
        for j in 0..i {
            h += points[i].distance(&points[j]).powf(lambda);
        }
    }
    2.0 * h
}

fn turn(p: &SpherePoint) -> f64 {
    (p.angle() / (2.0 * PI)).rem_euclid(1.0)
}

fn random_point(d: usize, rng: &mut impl Rng) -> SpherePoint {
    SpherePoint::new((0..=d).map(|_| rng.random_range(-1.0..1.0)).collect()).unwrap()
}

#[test]
fn sphere_point_basics() {
    let p = SpherePoint::new(vec![3.0, 4.0]).unwrap();
    assert_eq!(p.coords(), &[0.6, 0.8]);
    assert!(SpherePoint::new(vec![0.0, 0.0]).is_err());
    assert!(SpherePoint::new(vec![1.0]).is_err());
    assert!(SpherePoint::from_unit(vec![1.0, 1.0]).is_err());
    assert_eq!(SpherePoint::north(3).d(), 3);
    assert_eq!(p.antipode().antipode(), p);
}

#[test]
fn potential_examples() {
    let a = SpherePoint::north(2);
    for l in [0.5, 1.0, 2.5] {
        assert!((potential(std::slice::from_ref(&a), l, &a.antipode()).unwrap() - 2f64.powf(l)).abs() < 1e-14);
        assert_eq!(potential(std::slice::from_ref(&a), l, &a).unwrap(), 0.0);
    }
    assert!(potential(&[], 1.0, &a).is_err());
    assert!(potential(std::slice::from_ref(&a), 1.0, &SpherePoint::north(1)).is_err());
    let roots: Vec<SpherePoint> = (0..16).map(|k| SpherePoint::from_angle(2.0 * PI * k as f64 / 16.0)).collect();
    let mid = SpherePoint::from_angle(PI / 16.0);
    let u = potential(&roots, 0.7, &mid).unwrap();
    assert!((u - crate::circle::midpoint_potential(0.7, 16).unwrap()).abs() < 1e-12);
}

#[test]
fn config_validation() {
    assert!(GreedyConfig::new(0, 1.0, 4).is_err());
    assert!(GreedyConfig::new(1, 0.0, 4).is_err());
    let cfg = GreedyConfig::new(2, 1.0, 4).unwrap();
    assert!(cfg.clone().with_grid_size(63).is_err());
    assert!(cfg.clone().with_tolerance(0.0).is_err());
    assert!(cfg.clone().with_seed(SpherePoint::north(1)).is_err());
    assert_eq!(cfg.coarse_grid_size, 1024);
    assert_eq!(GreedyConfig::new(1, 1.0, 10).unwrap().coarse_grid_size, 40960);
}

#[test]
fn first_successor_is_antipode() {
    for d in [1, 2, 3] {
        let cfg = GreedyConfig::new(d, 0.8, 8).unwrap();
        let a = SpherePoint::north(d);
        assert_eq!(next_point(std::slice::from_ref(&a), &cfg).unwrap(), a.antipode());
    }
    let cfg = GreedyConfig::new(1, 0.8, 8).unwrap();
    assert!(next_point(&[], &cfg).is_err());
}

#[test]
fn circle_reproduces_canonical_sequence() {
    for l in [0.5, 1.0, 1.5] {
        let cfg = GreedyConfig::new(1, l, 32).unwrap();
        let pts = generate(&cfg).unwrap();
        let exact = canonical_sequence(32).unwrap();
        for (p, a) in pts.iter().zip(&exact) {
            let diff = (turn(p) - a.turn()).abs();
            assert!(diff.min(1.0 - diff) < 1e-9, "lambda {l}: {} vs {}", turn(p), a);
        }
    }
}

#[test]
fn stolarsky_midpoints() {
    let cfg = GreedyConfig::new(1, 1.5, 5).unwrap();
    let pts = generate(&cfg).unwrap();
    let t = turn(&pts[4]) * 8.0;
    assert!((t - t.round()).abs() < 1e-9 && t.round() as i64 % 2 == 1);
}

#[test]
fn next_point_agrees_with_generate() {
    for (d, l) in [(1, 0.7), (2, 1.2), (3, 0.5)] {
        let cfg = GreedyConfig::new(d, l, 10).unwrap();
        let pts = generate(&cfg).unwrap();
        for n in 1..10 {
            assert_eq!(next_point(&pts[..n], &cfg).unwrap(), pts[n], "d {d}, n {n}");
        }
    }
}

#[test]
fn deterministic_across_exec_modes() {
    for d in [1, 2] {
        let cfg = GreedyConfig::new(d, 0.9, 20).unwrap();
        let a = generate(&cfg.clone().with_exec(Exec::Sequential)).unwrap();
        let b = generate(&cfg.with_exec(Exec::Parallel)).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn symmetry_is_exact() {
    for d in [1, 2, 3] {
        for l in [0.5, 1.5, 2.0, 3.0] {
            let pts = generate(&GreedyConfig::new(d, l, 24).unwrap()).unwrap();
            for k in 0..12 {
                assert_eq!(pts[2 * k + 1], pts[2 * k].antipode());
            }
        }
    }
}

#[test]
fn collapse_above_two() {
    for d in [1, 2, 3] {
        for l in [2.5, 3.0] {
            let cfg = GreedyConfig::new(d, l, 20).unwrap();
            let pts = generate(&cfg).unwrap();
            let a0 = &pts[0];
            for p in &pts {
                let gap = p.distance(a0).min(p.distance(&a0.antipode()));
                assert!(gap < cfg.refine_tolerance, "d {d}, lambda {l}: {gap}");
            }
        }
    }
    let pts = generate(&GreedyConfig::new(1, 3.0, 10).unwrap()).unwrap();
    for (k, p) in pts.iter().enumerate() {
        let target = if k % 2 == 0 { 1.0 } else { -1.0 };
        assert!((p.coords()[0] - target).abs() < 1e-12);
    }
}

#[test]
fn lambda2_potential_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in [1, 2, 3] {
        let pts = generate(&GreedyConfig::new(d, 2.0, 15).unwrap()).unwrap();
        let coords: Vec<Vec<f64>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        for _ in 0..100 {
            let x = random_point(d, &mut rng);
            let direct = potential(&pts, 2.0, &x).unwrap();
            assert!((direct - lambda2_potential(&coords, x.coords())).abs() < 1e-10);
        }
    }
}

#[test]
fn sandwich_and_potential_bounds() {
    for (d, n) in [(1usize, 256usize), (2, 128)] {
        for l in [0.5, 1.0, 1.5] {
            let pts = generate(&GreedyConfig::new(d, l, n).unwrap()).unwrap();
            let i = continuous_energy(l, d as u32).unwrap();
            let mut h = 0.0;
            for k in 1..n {
                let u = potential(&pts[..k], l, &pts[k]).unwrap();
                let kf = k as f64;
                assert!(kf * i < u && u <= kf * 2f64.powf(l) * (1.0 + 1e-12), "d {d}, lambda {l}, n {k}");
                h += 2.0 * u;
                let nf = (k + 1) as f64;
                assert!(nf * (nf - 1.0) * i < h && h < nf * nf * i, "d {d}, lambda {l}, N {}", k + 1);
            }
            assert!((h - energy(&pts, l)).abs() < 1e-9 * h);
        }
    }
}

#[test]
fn circle_power_prefix_is_roots() {
    for l in [0.3, 1.9] {
        let pts = generate(&GreedyConfig::new(1, l, 64).unwrap()).unwrap();
        for m in 1..=6 {
            let mut t: Vec<f64> = pts[..1 << m].iter().map(|p| turn(p) * (1 << m) as f64).collect();
            t.sort_by(f64::total_cmp);
            for (k, x) in t.iter().enumerate() {
                assert!((x - k as f64).abs() < 1e-8 * (1 << m) as f64 || (k == 0 && (x - (1 << m) as f64).abs() < 1e-6));
            }
        }
    }
}
