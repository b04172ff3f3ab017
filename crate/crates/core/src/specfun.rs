//! Gamma and zeta evaluations and the energy constants built from them.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};

/// The energy exponent lambda > 0.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, serde::Serialize, serde::Deserialize)]
pub struct Lambda(f64);

/// Asymptotic regime of the second-order energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Regime {
    /// 0 < lambda < 1
    Below1,
    /// lambda = 1
    One,
    /// 1 < lambda < 2
    Between1And2,
    /// lambda = 2
    Two,
    /// lambda > 2
    Above2,
}

impl Lambda {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Lambda(value))
        } else {
            Err(Error::LambdaOutOfRange {
                lambda: value,
                range: "(0, inf)",
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn regime(self) -> Regime {
        match self.0 {
            l if l < 1.0 => Regime::Below1,
            1.0 => Regime::One,
            l if l < 2.0 => Regime::Between1And2,
            2.0 => Regime::Two,
            _ => Regime::Above2,
        }
    }
}

/// Rejects lambda outside the open interval `(0, 2)`.
pub(crate) fn check_below_two(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda < 2.0 {
        Ok(())
    } else {
        Err(Error::LambdaOutOfRange {
            lambda,
            range: "(0, 2)",
        })
    }
}

const LANCZOS_G: f64 = 6.024_680_040_776_73;
const LANCZOS_G_MINUS_HALF: f64 = 5.524_680_040_776_73;
const LANCZOS_NUM: [f64; 13] = [
    23_531_376_880.410_76,
    42_919_803_642.649_1,
    35_711_959_237.355_67,
    17_921_034_426.037_21,
    6_039_542_586.352_028,
    1_439_720_407.311_721_6,
    248_874_557.862_054_17,
    31_426_415.585_400_194,
    2_876_370.628_935_372_5,
    186_056.265_395_223_48,
    8_071.672_002_365_816,
    210.824_277_751_579_36,
    2.506_628_274_631_000_2,
];
const LANCZOS_DEN: [f64; 13] = [
    0.0,
    39_916_800.0,
    120_543_840.0,
    150_917_976.0,
    105_258_076.0,
    45_995_730.0,
    13_339_535.0,
    2_637_558.0,
    357_423.0,
    32_670.0,
    1_925.0,
    66.0,
    1.0,
];

fn lanczos_sum(x: f64) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    if x < 5.0 {
        for i in (0..13).rev() {
            num = num * x + LANCZOS_NUM[i];
            den = den * x + LANCZOS_DEN[i];
        }
    } else {
        for i in 0..13 {
            num = num / x + LANCZOS_NUM[i];
            den = den / x + LANCZOS_DEN[i];
        }
    }
    num / den
}

/// Gamma function for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_infinite() {
        return Err(crate::error::invalid("x", x, "gamma needs a positive finite argument"));
    }
    Ok(gamma_pos(x))
}

pub(crate) fn gamma_pos(x: f64) -> f64 {
    if x < 1e-20 {
        return 1.0 / x;
    }
    if x == x.floor() && x <= 23.0 {
        let mut f = 1.0;
        for k in 2..(x as u32) {
            f *= k as f64;
        }
        return f;
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    let y = x + LANCZOS_G_MINUS_HALF;
    let z = if x > LANCZOS_G_MINUS_HALF {
        (y - x) - LANCZOS_G_MINUS_HALF
    } else {
        (y - LANCZOS_G_MINUS_HALF) - x
    };
    let z = z * LANCZOS_G / y;
    let mut r = lanczos_sum(x) / y.exp();
    r += z * r;
    if x < 140.0 {
        r * y.powf(x - 0.5)
    } else {
        let s = y.powf(x / 2.0 - 0.25);
        r * s * s
    }
}

/// Natural log of the gamma function for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_infinite() {
        return Err(crate::error::invalid("x", x, "ln_gamma needs a positive finite argument"));
    }
    Ok(ln_gamma_pos(x))
}

pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    if x < 30.0 {
        return gamma_pos(x).ln();
    }
    // Stirling series
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    for j in (1..=8).rev() {
        let b = BERNOULLI[2 * j];
        corr = corr * inv2 + b / ((2 * j) as f64 * (2 * j - 1) as f64);
    }
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + corr * inv
}

/// Bernoulli numbers B_0..B_30 with B_1 = -1/2.
pub(crate) const BERNOULLI: [f64; 31] = [
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
    8553103.0 / 6.0,
    0.0,
    -23749461029.0 / 870.0,
    0.0,
    8615841276005.0 / 14322.0,
];

const ETA_TERMS: usize = 28;

/// Dirichlet eta function for real `s > 0` (Borwein's acceleration).
pub(crate) fn eta(s: f64) -> f64 {
    let n = ETA_TERMS;
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    let mut acc = 1.0;
    d.push(acc);
    for i in 0..n {
        term *= 4.0 * ((n + i) as f64) * ((n - i) as f64) / (((2 * i + 1) * (2 * i + 2)) as f64);
        acc += term;
        d.push(acc);
    }
    let dn = d[n];
    let mut sum = 0.0;
    for k in (0..n).rev() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * (dn - d[k]) / ((k + 1) as f64).powf(s);
    }
    sum / dn
}

/// Riemann zeta for real `s > 1`.
pub fn zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(crate::error::invalid("s", s, "zeta is evaluated only for s > 1"));
    }
    Ok(eta(s) / -(((1.0 - s) * LN_2).exp_m1()))
}

/// zeta(-lambda) for lambda in (0, 2), via the functional equation.
pub fn zeta_neg(lambda: f64) -> Result<f64> {
    check_below_two(lambda)?;
    // zeta(1+l) (1 - 2^-l) = eta(1+l), and sin(pi l/2)/(1 - 2^-l) stays finite as l -> 0
    let ratio = (PI * lambda / 2.0).sin() / -((-lambda * LN_2).exp_m1());
    Ok(-(2.0 * PI).powf(-lambda) / PI * gamma_pos(1.0 + lambda) * eta(1.0 + lambda) * ratio)
}

/// Hurwitz zeta `sum_{k>=0} (k+a)^-s` for `s > 1`, `a > 0` (Euler-Maclaurin).
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0) || !(a > 0.0) {
        return Err(crate::error::invalid("s", s, "hurwitz_zeta needs s > 1 and a > 0"));
    }
    Ok(hurwitz_pos(s, a))
}

pub(crate) fn hurwitz_pos(s: f64, a: f64) -> f64 {
    const P: usize = 16;
    let mut head = 0.0;
    for k in (0..P).rev() {
        head += (a + k as f64).powf(-s);
    }
    let x = a + P as f64;
    let mut tail = x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);
    // s(s+1)...(s+2j-2) x^{-s-2j+1} / (2j)!
    let mut rising = s * x.powf(-s - 1.0);
    let mut fact = 2.0;
    for j in 1..=12 {
        tail += BERNOULLI[2 * j] / fact * rising;
        rising *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64) / (x * x);
        fact *= ((2 * j + 1) * (2 * j + 2)) as f64;
    }
    head + tail
}

/// Continuous energy of the normalized surface measure on S^d, lambda in (0, 2).
pub fn continuous_energy(lambda: f64, d: u32) -> Result<f64> {
    check_below_two(lambda)?;
    if d == 0 {
        return Err(crate::error::invalid("d", d, "dimension must be at least 1"));
    }
    let d = d as f64;
    let (a, b, c, e) = ((d + 1.0) / 2.0, d + lambda, (d + lambda + 1.0) / 2.0, d + lambda / 2.0);
    if b < 150.0 {
        Ok(gamma_pos(a) * gamma_pos(b) / (gamma_pos(c) * gamma_pos(e)))
    } else {
        Ok((ln_gamma_pos(a) + ln_gamma_pos(b) - ln_gamma_pos(c) - ln_gamma_pos(e)).exp())
    }
}

/// Second closed form of the continuous energy, obtained from the duplication formula.
pub fn continuous_energy_duplication(lambda: f64, d: u32) -> Result<f64> {
    check_below_two(lambda)?;
    if d == 0 {
        return Err(crate::error::invalid("d", d, "dimension must be at least 1"));
    }
    let d = d as f64;
    let lg = ln_gamma_pos((d + 1.0) / 2.0) + ln_gamma_pos((d + lambda) / 2.0)
        - ln_gamma_pos(d + lambda / 2.0);
    if d + lambda < 150.0 {
        Ok(2f64.powf(d + lambda - 1.0) / PI.sqrt() * gamma_pos((d + 1.0) / 2.0)
            * gamma_pos((d + lambda) / 2.0)
            / gamma_pos(d + lambda / 2.0))
    } else {
        Ok(((d + lambda - 1.0) * LN_2 - 0.5 * PI.ln() + lg).exp())
    }
}

/// Continuous energy on the circle, `Gamma(1+l)/Gamma(1+l/2)^2`; valid up to lambda = 2.
pub(crate) fn circle_energy(lambda: f64) -> f64 {
    let g = gamma_pos(1.0 + lambda / 2.0);
    gamma_pos(1.0 + lambda) / (g * g)
}

/// Maximal continuous energy `2^(lambda-1)` for lambda >= 2.
pub fn maximal_energy(lambda: f64) -> Result<f64> {
    if lambda >= 2.0 && lambda.is_finite() {
        Ok(2f64.powf(lambda - 1.0))
    } else {
        Err(Error::LambdaOutOfRange {
            lambda,
            range: "[2, inf)",
        })
    }
}

/// Limit `(2 pi)^lambda 2 zeta(-lambda)` of the normalized energy deficit of roots of unity.
pub fn second_order_constant(lambda: f64) -> Result<f64> {
    Ok((2.0 * PI).powf(lambda) * 2.0 * zeta_neg(lambda)?)
}

/// Coefficients `e_i` with `Gamma(m+a)/Gamma(m+b) ~ m^(a-b) sum_i e_i m^-i`.
pub(crate) fn gamma_ratio_series(a: f64, b: f64, terms: usize) -> Vec<f64> {
    // log-ratio: sum_{n>=2} (-1)^n (B_n(a) - B_n(b)) / (n (n-1)) m^{-(n-1)}
    let mut log_c = vec![0.0; terms];
    for (i, c) in log_c.iter_mut().enumerate().skip(1) {
        let n = i + 1;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        *c = sign * (bernoulli_poly(n, a) - bernoulli_poly(n, b)) / ((n * (n - 1)) as f64);
    }
    // exp of a power series: e' = c' e
    let mut e = vec![0.0; terms];
    e[0] = 1.0;
    for k in 1..terms {
        let mut s = 0.0;
        for j in 1..=k {
            s += j as f64 * log_c[j] * e[k - j];
        }
        e[k] = s / k as f64;
    }
    e
}

fn bernoulli_poly(n: usize, x: f64) -> f64 {
    let mut binom = 1.0;
    let mut sum = 0.0;
    for (k, b) in BERNOULLI.iter().enumerate().take(n + 1) {
        sum += binom * b * x.powi((n - k) as i32);
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    sum
}
