//! Quasi-uniform point sets on `S^d`.

use std::f64::consts::PI;

use statrs::distribution::{ContinuousCDF, Normal};

/// Golden-type ratio `φ_k`, the positive root of `x^{k+1} = x + 1`.
fn harmonious(k: usize) -> f64 {
    let mut x = 2.0_f64;
    for _ in 0..64 {
        x = (1.0 + x).powf(1.0 / (k as f64 + 1.0));
    }
    x
}

/// Flat coordinates of `count` quasi-uniform points on `S^d` (`d >= 2`).
pub(crate) fn sphere_points(d: usize, count: usize) -> Vec<f64> {
    let dim = d + 1;
    let mut out = Vec::with_capacity(count * dim);
    if d == 2 {
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        for i in 0..count {
            let z = 1.0 - (2 * i + 1) as f64 / count as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = 2.0 * PI * ((i as f64 * golden).fract());
            out.extend_from_slice(&[z, r * phi.cos(), r * phi.sin()]);
        }
        return out;
    }
    let normal = Normal::standard();
    let g = harmonious(dim);
    let alpha: Vec<f64> = (1..=dim).map(|j| g.powi(-(j as i32))).collect();
    let mut v = vec![0.0; dim];
    for i in 0..count {
        for (j, a) in alpha.iter().enumerate() {
            let u = (0.5 + (i as f64 + 1.0) * a).fract().clamp(1e-12, 1.0 - 1e-12);
            v[j] = normal.inverse_cdf(u);
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        out.extend(v.iter().map(|x| x / norm));
    }
    out
}

/// Points of [`sphere_points`] folded into the closed hemisphere `x_0 <= 0`,
/// dropping the ones with `x_0 > 0` for the Fibonacci lattice (which is
/// itself nearly antipodal) and negating them otherwise.
pub(crate) fn hemisphere_points(d: usize, count: usize) -> Vec<f64> {
    let dim = d + 1;
    let pts = sphere_points(d, count);
    let mut out = Vec::with_capacity(pts.len() / 2 + dim);
    for p in pts.chunks_exact(dim) {
        if p[0] <= 0.0 {
            out.extend_from_slice(p);
        } else if d != 2 {
            out.extend(p.iter().map(|x| -x));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_unit() {
        for d in [2, 3, 5] {
            let pts = sphere_points(d, 1000);
            for p in pts.chunks_exact(d + 1) {
                let n: f64 = p.iter().map(|x| x * x).sum();
                assert!((n - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn hemisphere_folds() {
        for d in [2, 3] {
            let pts = hemisphere_points(d, 1024);
            assert!(pts.chunks_exact(d + 1).all(|p| p[0] <= 0.0));
            assert!(pts.len() / (d + 1) >= 500);
        }
    }

    #[test]
    fn roughly_uniform_mean() {
        let pts = sphere_points(3, 4096);
        for j in 0..4 {
            let m: f64 = pts.chunks_exact(4).map(|p| p[j]).sum::<f64>() / 4096.0;
            assert!(m.abs() < 0.02);
        }
        assert!((harmonious(1) - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-14);
    }
}
