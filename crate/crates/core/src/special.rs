//! Closed forms for `λ >= 2`.
//!
//! At `λ = 2` every greedy sequence has energy `8n²` (even `N = 2n`) or
//! `8(n² + n)` (odd `N = 2n + 1`). For `λ > 2` the points alternate between
//! `a_0` and `-a_0`, which gives the same formulas with `8` replaced by
//! `2^{λ+1}`.

use crate::error::{invalid, Error, Result};

fn check(lambda: f64) -> Result<()> {
    if lambda >= 2.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::LambdaOutOfRange {
            lambda,
            range: "[2, inf)",
        })
    }
}

/// `H_λ(α_N)` for `λ >= 2`.
pub fn energy_ge2(lambda: f64, n: u64) -> Result<f64> {
    check(lambda)?;
    let k = (n / 2) as f64;
    let scale = (lambda + 1.0).exp2();
    Ok(if n.is_multiple_of(2) { scale * k * k } else { scale * (k * k + k) })
}

/// `H_λ(α_N) - N² 2^{λ-1}`: zero for even `N`, `-2^{λ-1}` for odd `N`.
pub fn energy_deficit_ge2(lambda: f64, n: u64) -> Result<f64> {
    check(lambda)?;
    Ok(if n.is_multiple_of(2) { 0.0 } else { -(lambda - 1.0).exp2() })
}

/// `U_n(a_n) = ⌈n/2⌉ 2^λ` for `λ >= 2`, `n >= 1`.
pub fn potential_ge2(lambda: f64, n: u64) -> Result<f64> {
    check(lambda)?;
    if n < 1 {
        return Err(invalid("n", n, "must be at least 1"));
    }
    Ok(n.div_ceil(2) as f64 * lambda.exp2())
}

/// `U_n(x) = 2n - 2<x, Σ a_k>` at `λ = 2`, for unit vectors.
pub fn lambda2_potential(points: &[Vec<f64>], x: &[f64]) -> f64 {
    let n = points.len() as f64;
    let dot: f64 = points.iter().map(|a| a.iter().zip(x).map(|(u, v)| u * v).sum::<f64>()).sum();
    2.0 * n - 2.0 * dot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda2_values() {
        for n in 0..=100u64 {
            assert_eq!(energy_ge2(2.0, 2 * n).unwrap(), (8 * n * n) as f64);
            assert_eq!(energy_ge2(2.0, 2 * n + 1).unwrap(), (8 * (n * n + n)) as f64);
        }
        assert_eq!(potential_ge2(2.0, 10).unwrap(), 20.0);
        assert_eq!(energy_deficit_ge2(2.0, 7).unwrap(), -2.0);
        assert!(energy_ge2(1.9, 4).is_err());
        assert!(potential_ge2(3.0, 0).is_err());
    }

    #[test]
    fn collapse_values() {
        // points alternate a_0, -a_0: H = 2 * 2^λ * #antipodal pairs
        for l in [2.5f64, 3.0, 4.0] {
            for n in 1..60u64 {
                let pairs = (n / 2) * n.div_ceil(2);
                let h = 2.0 * l.exp2() * pairs as f64;
                assert!((energy_ge2(l, n).unwrap() - h).abs() < 1e-12 * h.max(1.0));
                let nf = n as f64;
                let d = energy_ge2(l, n).unwrap() - nf * nf * (l - 1.0).exp2();
                assert!((d - energy_deficit_ge2(l, n).unwrap()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn lambda2_identity_on_axis_points() {
        let pts = vec![vec![1.0, 0.0, 0.0], vec![-1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
        let x = [0.0, 0.6, 0.8];
        let direct: f64 = pts
            .iter()
            .map(|a| a.iter().zip(&x).map(|(u, v)| (u - v) * (u - v)).sum::<f64>())
            .sum();
        assert!((lambda2_potential(&pts, &x) - direct).abs() < 1e-14);
    }
}
