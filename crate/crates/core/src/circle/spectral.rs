//! Cancellation-free evaluation of `R_λ(N) = (L_λ(N) - N² I_λ(σ_1)) / N^{1-λ}`.
//!
//! Poisson summation of the Fourier series of `|2 sin πt|^λ` gives
//!
//! ```text
//! R_λ(N) = -(2 Γ(1+λ) sin(πλ/2) / π) · N^{1+λ} Σ_{j≥1} q(jN),
//! q(m)   = Γ(m - λ/2) / Γ(m + 1 + λ/2),
//! ```
//!
//! a sum of same-sign terms. Small `m` use the exact recurrence of `q`, large
//! `m` the asymptotic expansion of the gamma ratio summed with Hurwitz zeta.

use std::f64::consts::PI;

use crate::specfun::{gamma_pos, gamma_ratio_series, hurwitz_pos};

const DIRECT: usize = 64;
const TERMS: usize = 14;

#[derive(Debug, Clone)]
pub(crate) struct Spectral {
    lambda: f64,
    prefactor: f64,
    /// q(m) for m = 1..DIRECT-1 at index m
    q: Vec<f64>,
    series: Vec<f64>,
}

impl Spectral {
    /// Requires `0 < lambda < 2`.
    pub(crate) fn new(lambda: f64) -> Self {
        let h = lambda / 2.0;
        let mut q = vec![0.0; DIRECT];
        q[1] = gamma_pos(1.0 - h) / gamma_pos(2.0 + h);
        for m in 1..DIRECT - 1 {
            q[m + 1] = q[m] * (m as f64 - h) / (m as f64 + 1.0 + h);
        }
        Spectral {
            lambda,
            prefactor: -2.0 * gamma_pos(1.0 + lambda) * (PI * h).sin() / PI,
            q,
            series: gamma_ratio_series(-h, 1.0 + h, TERMS),
        }
    }

    /// `R_λ(N)` for real `N >= 1` (integer or large power of two).
    pub(crate) fn r(&self, n: f64) -> f64 {
        let s = 1.0 + self.lambda;
        let direct_terms = if n < DIRECT as f64 { (DIRECT as f64 - 1.0) / n } else { 0.0 };
        let j_max = direct_terms.floor() as usize;
        let mut head = 0.0;
        if j_max > 0 {
            for j in 1..=j_max {
                head += self.q[j * n as usize];
            }
            head *= n.powf(s);
        }
        let mut tail = 0.0;
        let mut npow = 1.0;
        for (i, e) in self.series.iter().enumerate() {
            tail += e * npow * hurwitz_pos(s + i as f64, (j_max + 1) as f64);
            npow /= n;
        }
        self.prefactor * (head + tail)
    }

    /// Deficit `L(2^k) - 4^k I` for the exponent `k`.
    pub(crate) fn deficit_pow2(&self, k: u32) -> f64 {
        let n = (k as f64).exp2();
        n.powf(1.0 - self.lambda) * self.r(n)
    }
}
