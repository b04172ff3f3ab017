//! Spherical cap discrepancy over a deterministic family of caps.

use std::f64::consts::PI;

use statrs::function::beta::beta_reg;

use super::SpherePoint;
use crate::circle::DyadicAngle;
use crate::error::{invalid, Error, Result};
use crate::exec::Exec;

/// Normalized surface measure of the cap `{x : <x, c> >= h}` on `S^d`.
pub fn cap_measure(d: usize, h: f64) -> f64 {
    let h = h.clamp(-1.0, 1.0);
    match d {
        1 => h.acos() / PI,
        2 => (1.0 - h) / 2.0,
        _ => {
            let half = 0.5 * beta_reg(d as f64 / 2.0, 0.5, 1.0 - h * h);
            if h >= 0.0 {
                half
            } else {
                1.0 - half
            }
        }
    }
}

/// Height `h` of a cap with measure `t`.
fn cap_height(d: usize, t: f64) -> f64 {
    match d {
        1 => (PI * t).cos(),
        2 => 1.0 - 2.0 * t,
        _ => {
            let (mut lo, mut hi) = (-1.0, 1.0);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if cap_measure(d, mid) > t {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        }
    }
}

fn circle_center(j: usize) -> [f64; 2] {
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let (s, c) = (2.0 * PI * (j as f64 * golden).fract()).sin_cos();
    [c, s]
}

/// `sup` over `num_caps` caps of `|#{points in cap}/N - σ_d(cap)|`.
///
/// Cap `j` has measure equal to the `(j+1)`-th van der Corput number and a
/// center from a fixed low-discrepancy point set.
pub fn cap_discrepancy(points: &[SpherePoint], num_caps: usize) -> Result<f64> {
    cap_discrepancy_with(points, num_caps, Exec::default())
}

pub fn cap_discrepancy_with(points: &[SpherePoint], num_caps: usize, exec: Exec) -> Result<f64> {
    if points.is_empty() {
        return Err(invalid("points", 0, "must be non-empty"));
    }
    if num_caps < 1 {
        return Err(invalid("num_caps", num_caps, "must be at least 1"));
    }
    let d = points[0].d();
    if let Some(p) = points.iter().find(|p| p.d() != d) {
        return Err(Error::DimensionMismatch {
            got: p.coords().len(),
            expected: d + 1,
        });
    }
    let centers: Vec<f64> = if d == 1 {
        (0..num_caps).flat_map(circle_center).collect()
    } else {
        super::grid::sphere_points(d, num_caps)
    };
    let n = points.len() as f64;
    let gaps = exec.map(num_caps, |j| {
        let t = DyadicAngle::van_der_corput(j as u64 + 1).turn();
        let h = cap_height(d, t);
        let c = &centers[j * (d + 1)..(j + 1) * (d + 1)];
        let inside = points
            .iter()
            .filter(|p| p.coords().iter().zip(c).map(|(x, y)| x * y).sum::<f64>() >= h - 1e-12)
            .count();
        (inside as f64 / n - t).abs()
    });
    Ok(gaps.into_iter().fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measures_invert() {
        for d in [1, 2, 3, 4, 7] {
            assert!((cap_measure(d, 1.0)).abs() < 1e-15);
            assert!((cap_measure(d, -1.0) - 1.0).abs() < 1e-15);
            assert!((cap_measure(d, 0.0) - 0.5).abs() < 1e-12);
            for t in [0.01, 0.3, 0.77] {
                assert!((cap_measure(d, cap_height(d, t)) - t).abs() < 1e-12, "d = {d}");
            }
        }
        // S^3: σ(h) = (acos h - h sqrt(1-h²)) / π
        let h: f64 = 0.3;
        let exact = (h.acos() - h * (1.0 - h * h).sqrt()) / PI;
        assert!((cap_measure(3, h) - exact).abs() < 1e-13);
    }

    #[test]
    fn roots_of_unity_bound() {
        for m in 1..10 {
            let pts: Vec<SpherePoint> = (0..1 << m)
                .map(|k| SpherePoint::from_angle(2.0 * PI * k as f64 / (1 << m) as f64))
                .collect();
            let disc = cap_discrepancy(&pts, 2000).unwrap();
            assert!(disc <= (1.0 - m as f64).exp2() + 1e-12, "m = {m}: {disc}");
        }
    }

    #[test]
    fn repeated_point_tends_to_one() {
        for d in [1, 2, 3] {
            let pts = vec![SpherePoint::north(d); 10];
            let disc = cap_discrepancy(&pts, 4096).unwrap();
            assert!(disc > 0.95, "d = {d}: {disc}");
        }
        assert!(cap_discrepancy(&[], 10).is_err());
        assert!(cap_discrepancy(&[SpherePoint::north(2)], 0).is_err());
    }
}
