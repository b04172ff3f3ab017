//! Second-order limits of the greedy circle energy.
//!
//! The limit points of `(H_λ(α_N) - N² I) / κ_λ(N)` are governed by the
//! ratios `θ_i = lim 2^{n_i}/N`. Every admissible ratio vector comes from an
//! odd integer `M`, so the supremum `ḡ(λ)` of the functional `G` is searched
//! by enumerating odd `M`.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::circle::Spectral;
use crate::error::{invalid, Error, Result};
use crate::exec::Exec;
use crate::specfun::{circle_energy, maximal_energy, second_order_constant, Lambda, Regime};

/// Limit ratios `(2^{t_1}/M, ..., 1/M, 0, ..., 0)` generated by an odd `M`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaVector {
    generator: u64,
    thetas: Vec<f64>,
}

impl ThetaVector {
    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn p(&self) -> usize {
        self.thetas.len()
    }
}

pub fn theta_from_odd(m: u64, p: usize) -> Result<ThetaVector> {
    if m.is_multiple_of(2) {
        return Err(invalid("M", m, "must be odd"));
    }
    if m.count_ones() as usize > p {
        return Err(invalid("p", p, "must be at least the number of ones of M"));
    }
    let mf = m as f64;
    let mut thetas: Vec<f64> = (0..64)
        .rev()
        .filter(|&b| m >> b & 1 == 1)
        .map(|b| (b as f64).exp2() / mf)
        .collect();
    thetas.resize(p, 0.0);
    Ok(ThetaVector { generator: m, thetas })
}

fn check_unit(lambda: f64) -> Result<()> {
    if (0.0..1.0).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::LambdaOutOfRange {
            lambda,
            range: "[0, 1)",
        })
    }
}

/// `2 (2^{-λ} - 1)`
fn two_c(lambda: f64) -> f64 {
    2.0 * (-lambda * LN_2).exp_m1()
}

/// `G(θ; λ) = Σ_k θ_k^{-λ} (2(2^{-λ} - 1) Σ_{j>k} θ_j + θ_k)`, zero entries contributing nothing.
pub fn g_function(theta: &ThetaVector, lambda: f64) -> Result<f64> {
    check_unit(lambda)?;
    let c = two_c(lambda);
    let mut suffix = 0.0;
    let mut g = 0.0;
    for &t in theta.thetas.iter().rev() {
        if t > 0.0 {
            g += t.powf(-lambda) * (c * suffix + t);
        }
        suffix += t;
    }
    Ok(g)
}

/// `∂G/∂λ`.
pub fn g_function_dlambda(theta: &ThetaVector, lambda: f64) -> Result<f64> {
    check_unit(lambda)?;
    let c = two_c(lambda);
    let dc = -2.0 * LN_2 * (-lambda * LN_2).exp();
    let mut suffix = 0.0;
    let mut dg = 0.0;
    for &t in theta.thetas.iter().rev() {
        if t > 0.0 {
            let w = t.powf(-lambda);
            dg += -t.ln() * w * (c * suffix + t) + w * dc * suffix;
        }
        suffix += t;
    }
    Ok(dg)
}

/// `G` for the vector generated by odd `m`, using integer bit arithmetic.
fn g_of_odd(m: u64, c: f64, lambda: f64, pow: &[f64; 64]) -> f64 {
    let mut acc = 0.0;
    let mut bits = m;
    while bits != 0 {
        let t = 63 - bits.leading_zeros();
        bits &= !(1u64 << t);
        // θ_t^{-λ} (c S + θ_t) with θ = 2^t/M, S = (M mod 2^t)/M
        acc += pow[t as usize] * (c * bits as f64 + (t as f64).exp2());
    }
    (m as f64).powf(lambda - 1.0) * acc
}

/// Enumerated supremum of `G` over odd `M <= m_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GBar {
    pub value: f64,
    /// Smallest maximizing odd `M`.
    pub witness: u64,
    pub m_bound: u64,
}

pub fn g_bar(lambda: f64, m_bound: u64) -> Result<GBar> {
    g_bar_with(lambda, m_bound, Exec::default())
}

pub fn g_bar_with(lambda: f64, m_bound: u64, exec: Exec) -> Result<GBar> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::LambdaOutOfRange {
            lambda,
            range: "(0, 1)",
        });
    }
    if m_bound < 3 {
        return Err(invalid("M_bound", m_bound, "must be at least 3"));
    }
    let c = two_c(lambda);
    let mut pow = [0.0; 64];
    for (t, p) in pow.iter_mut().enumerate() {
        *p = (-(t as f64) * lambda).exp2();
    }
    let count = m_bound.div_ceil(2) as usize;
    let (i, value) = exec
        .argmax(count, |i| g_of_odd(2 * i as u64 + 1, c, lambda, &pow))
        .expect("at least two candidates");
    Ok(GBar {
        value,
        witness: 2 * i as u64 + 1,
        m_bound,
    })
}

/// Partial sum of the series for `s_λ` with its truncation bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SLambda {
    pub value: f64,
    /// Number of exact terms summed.
    pub terms: u32,
    /// Bound on the neglected remainder.
    pub remainder_bound: f64,
}

const S_MAX_TERMS: u32 = 1000;

/// `s_λ = (1/3) Σ_{k≥0} (1 + (-1)^k / 2^{k-1}) (L_λ(2^k) - 4^k I_λ(σ_1))` for `λ ∈ (1, 2)`.
pub fn s_lambda(lambda: f64, tolerance: f64) -> Result<SLambda> {
    if !(lambda > 1.0 && lambda < 2.0) {
        return Err(Error::LambdaOutOfRange {
            lambda,
            range: "(1, 2)",
        });
    }
    if !(tolerance > 0.0) {
        return Err(invalid("tolerance", tolerance, "must be positive"));
    }
    let sp = Spectral::new(lambda);
    let rho = (1.0 - lambda).exp2();
    let c = second_order_constant(lambda)?;
    let mut sum = 0.0;
    let mut k = 0u32;
    loop {
        sum += s_term(&sp, k);
        let r = sp.r((k as f64).exp2());
        // |R(2^j)| increases monotonically towards |C| for large j
        let bound_r = 1.001 * r.abs().max(c.abs());
        let tail = (1.0 + (-(k as f64)).exp2()) * bound_r * rho.powi(k as i32 + 1) / (3.0 * (1.0 - rho));
        if (k >= 2 && tail < tolerance) || k + 1 == S_MAX_TERMS {
            if tail < tolerance {
                return Ok(SLambda {
                    value: sum,
                    terms: k + 1,
                    remainder_bound: tail,
                });
            }
            // replace R(2^j) by its limit C beyond the last exact term
            let q = rho.powi(k as i32 + 1);
            let alt = (-rho / 2.0).powi(k as i32 + 1);
            let analytic = c * (q / (1.0 - rho) + 2.0 * alt / (1.0 + rho / 2.0)) / 3.0;
            let residual = (r - c).abs() * 2.0 * q / (3.0 * (1.0 - rho));
            return Ok(SLambda {
                value: sum + analytic,
                terms: k + 1,
                remainder_bound: residual,
            });
        }
        k += 1;
    }
}

fn s_term(sp: &Spectral, k: u32) -> f64 {
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    (1.0 + sign * (1.0 - k as f64).exp2()) * sp.deficit_pow2(k) / 3.0
}

/// The `k`-th term of the `s_λ` series.
pub fn s_lambda_term(lambda: f64, k: u32) -> Result<f64> {
    if !(lambda > 1.0 && lambda < 2.0) {
        return Err(Error::LambdaOutOfRange {
            lambda,
            range: "(1, 2)",
        });
    }
    if k > S_MAX_TERMS {
        return Err(invalid("k", k, "must not exceed 1000"));
    }
    Ok(s_term(&Spectral::new(lambda), k))
}

/// Limit of `(H_1 - N² I)/log N` along `N_r(p) = (2^{rp} - 1)/(2^r - 1)`.
pub fn subsequence_limit_lambda1(r: u32) -> Result<f64> {
    if !(1..=1000).contains(&r) {
        return Err(invalid("r", r, "must lie in 1..=1000"));
    }
    let two_r = (r as f64).exp2();
    Ok(-(two_r - 2.0) / (r as f64 * (two_r - 1.0)) * PI / (3.0 * LN_2))
}

/// A one-sided or two-sided statement about a limit value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Limit {
    Exact(f64),
    AtMost(f64),
}

impl Limit {
    pub fn value(self) -> f64 {
        match self {
            Limit::Exact(v) | Limit::AtMost(v) => v,
        }
    }
}

/// Predicted second-order behaviour for one `λ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitReport {
    pub lambda: f64,
    pub regime: Regime,
    /// `N^(1-lambda)`, `log N` or `1`
    pub normalization: String,
    /// Continuous energy of the maximal distribution on the circle.
    pub continuous_energy: f64,
    /// limsup of `(H - N² I)/κ_λ(N)`
    pub limsup: Limit,
    /// liminf of `(H - N² I)/κ_λ(N)`
    pub liminf: Limit,
    /// Enumerated `ḡ(λ)` when `λ < 1`.
    pub g_bar: Option<GBar>,
    /// Sharp bounds for `U_N(a_N) - N I`: open interval when `attained` is false,
    /// the two attained values otherwise.
    pub potential_excess: (f64, f64),
    pub attained: bool,
}

/// Default enumeration bound for `ḡ`.
pub const G_BAR_BOUND: u64 = 1 << 20;

pub fn limit_report(lambda: f64) -> Result<LimitReport> {
    let regime = Lambda::new(lambda)?.regime();
    let report = |normalization: &str, energy, limsup, liminf, g_bar, potential_excess, attained| LimitReport {
        lambda,
        regime,
        normalization: normalization.to_string(),
        continuous_energy: energy,
        limsup,
        liminf,
        g_bar,
        potential_excess,
        attained,
    };
    Ok(match regime {
        Regime::Below1 => {
            let c = second_order_constant(lambda)?;
            let g = g_bar(lambda, G_BAR_BOUND)?;
            let i = circle_energy(lambda);
            report("N^(1-lambda)", i, Limit::Exact(c), Limit::AtMost(g.value * c), Some(g), (0.0, i), false)
        }
        Regime::One => {
            let i = circle_energy(lambda);
            let liminf = Limit::AtMost(subsequence_limit_lambda1(2)?);
            report("log N", i, Limit::Exact(0.0), liminf, None, (0.0, i), false)
        }
        Regime::Between1And2 => {
            let i = circle_energy(lambda);
            let s = s_lambda(lambda, 1e-10)?.value;
            report("1", i, Limit::Exact(0.0), Limit::AtMost(s), None, (0.0, i), false)
        }
        Regime::Two | Regime::Above2 => {
            let m = maximal_energy(lambda)?;
            report("1", m, Limit::Exact(0.0), Limit::Exact(-m), None, (0.0, m), true)
        }
    })
}
