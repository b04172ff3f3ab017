//! Exact greedy machinery on the circle `S^1`.
//!
//! Every greedy point on the circle is a dyadic fraction of a full turn. With
//! the smallest-positive-turn tie-break the sequence is the base-2
//! van der Corput sequence `0, 1/2, 1/4, 3/4, 1/8, 5/8, ...`.

mod spectral;

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binary::decompose;
use crate::error::{invalid, Result};
use crate::exec::Exec;
use crate::specfun::{check_below_two, circle_energy};

pub(crate) use spectral::Spectral;

/// The point `exp(2πi · numerator / 2^level)`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyadicAngle {
    numerator: u64,
    level: u32,
}

impl DyadicAngle {
    pub fn new(numerator: u64, level: u32) -> Result<Self> {
        if level > 63 || numerator >= 1u64 << level {
            return Err(invalid("numerator", numerator, "must be below 2^level with level <= 63"));
        }
        if numerator == 0 {
            return Ok(DyadicAngle { numerator: 0, level: 0 });
        }
        let tz = numerator.trailing_zeros();
        Ok(DyadicAngle {
            numerator: numerator >> tz,
            level: level - tz,
        })
    }

    /// The `n`-th term of the base-2 van der Corput sequence, `n < 2^63`.
    pub fn van_der_corput(n: u64) -> Self {
        assert!(n < 1 << 63, "index must be below 2^63");
        if n == 0 {
            return DyadicAngle { numerator: 0, level: 0 };
        }
        let level = 64 - n.leading_zeros();
        DyadicAngle {
            numerator: n.reverse_bits() >> (64 - level),
            level,
        }
    }

    pub fn numerator(self) -> u64 {
        self.numerator
    }

    pub fn level(self) -> u32 {
        self.level
    }

    /// Fraction of a full turn in `[0, 1)`.
    pub fn turn(self) -> f64 {
        self.numerator as f64 / (self.level as f64).exp2()
    }

    /// `(cos, sin)` of the angle.
    pub fn coords(self) -> [f64; 2] {
        let (s, c) = (2.0 * PI * self.turn()).sin_cos();
        [c, s]
    }

    pub fn antipode(self) -> Self {
        match self.level {
            0 => DyadicAngle { numerator: 1, level: 1 },
            l => DyadicAngle::new((self.numerator + (1u64 << (l - 1))) % (1u64 << l), l)
                .expect("reduced by construction"),
        }
    }
}

impl fmt::Display for DyadicAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.level)
        }
    }
}

/// The first `count` points of the canonical greedy sequence on the circle.
pub fn canonical_sequence(count: usize) -> Result<Vec<DyadicAngle>> {
    if count < 1 {
        return Err(invalid("count", count, "must be at least 1"));
    }
    Ok((0..count as u64).map(DyadicAngle::van_der_corput).collect())
}

/// Chord length `2|sin(πΔt)|` with the turn difference taken exactly.
pub fn chord(a: DyadicAngle, b: DyadicAngle) -> f64 {
    let level = a.level.max(b.level);
    let modulus = 1u128 << level;
    let ta = (a.numerator as u128) << (level - a.level);
    let tb = (b.numerator as u128) << (level - b.level);
    let diff = (ta + modulus - tb) % modulus;
    let m = diff.min(modulus - diff);
    2.0 * (PI * (m as f64 / modulus as f64)).sin()
}

fn check_n(n: u64, min: u64) -> Result<()> {
    if n < min {
        Err(invalid("N", n, if min == 1 { "must be at least 1" } else { "must be at least 2" }))
    } else {
        Ok(())
    }
}

fn check_up_to_two(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda <= 2.0 {
        Ok(())
    } else {
        Err(crate::Error::LambdaOutOfRange {
            lambda,
            range: "(0, 2]",
        })
    }
}

/// `(2 sin(π m / den))^λ` with the argument folded into `[0, π/2]`.
fn chord_pow(lambda: f64, m: u64, den: u64) -> f64 {
    let m = m.min(den - m);
    (2.0 * (PI * m as f64 / den as f64).sin()).powf(lambda)
}

/// Energy `L_λ(N)` of the `N`-th roots of unity, `λ ∈ (0, 2]`.
pub fn roots_energy(lambda: f64, n: u64) -> Result<f64> {
    roots_energy_with(lambda, n, Exec::default())
}

pub fn roots_energy_with(lambda: f64, n: u64, exec: Exec) -> Result<f64> {
    check_up_to_two(lambda)?;
    check_n(n, 1)?;
    let s = exec.sum((n - 1) as usize, |k| chord_pow(lambda, k as u64 + 1, n));
    Ok(n as f64 * s)
}

/// Potential `U_λ(N)` of the `N`-th roots of unity at an arc midpoint, by direct summation.
pub fn midpoint_potential(lambda: f64, n: u64) -> Result<f64> {
    midpoint_potential_with(lambda, n, Exec::default())
}

pub fn midpoint_potential_with(lambda: f64, n: u64, exec: Exec) -> Result<f64> {
    check_up_to_two(lambda)?;
    check_n(n, 1)?;
    Ok(exec.sum(n as usize, |k| chord_pow(lambda, 2 * k as u64 + 1, 2 * n)))
}

/// `U_λ(N) = L_λ(2N)/(2N) - L_λ(N)/N`.
pub fn midpoint_potential_from_roots(lambda: f64, n: u64) -> Result<f64> {
    check_n(n, 1)?;
    Ok(roots_energy(lambda, 2 * n)? / (2 * n) as f64 - roots_energy(lambda, n)? / n as f64)
}

/// `R_λ(N) = (L_λ(N) - N² I_λ(σ_1)) / N^{1-λ}`, evaluated without cancellation.
pub fn r_lambda(lambda: f64, n: u64) -> Result<f64> {
    check_below_two(lambda)?;
    check_n(n, 1)?;
    Ok(Spectral::new(lambda).r(n as f64))
}

/// `R_λ(N)` straight from its definition, in double precision.
pub fn r_lambda_direct(lambda: f64, n: u64) -> Result<f64> {
    check_below_two(lambda)?;
    let nf = n as f64;
    Ok((roots_energy(lambda, n)? - nf * nf * circle_energy(lambda)) / nf.powf(1.0 - lambda))
}

/// `L_λ(N) - N² I_λ(σ_1)`.
pub fn roots_deficit(lambda: f64, n: u64) -> Result<f64> {
    Ok(r_lambda(lambda, n)? * (n as f64).powf(1.0 - lambda))
}

/// `U_λ(N) - N I_λ(σ_1)`.
pub fn midpoint_excess(lambda: f64, n: u64) -> Result<f64> {
    check_below_two(lambda)?;
    check_n(n, 1)?;
    let sp = Spectral::new(lambda);
    let nf = n as f64;
    Ok((2.0 * nf).powf(-lambda) * sp.r(2.0 * nf) - nf.powf(-lambda) * sp.r(nf))
}

/// Coefficients `(c_k, c'_k)` of `f(2^{n_k+1})` and `f(2^{n_k})` in the binary energy formula.
fn binary_weights(exponents: &[u32]) -> Vec<(u32, f64, f64)> {
    (0..exponents.len())
        .map(|k| {
            let nk = exponents[k] as i32;
            let s: f64 = exponents[k + 1..].iter().map(|&nj| (nj as i32 - nk) as f64).map(f64::exp2).sum();
            (exponents[k], s, 1.0 - 2.0 * s)
        })
        .collect()
}

/// Energy `H_λ(α_N)` of the first `N` greedy points, from the binary expansion of `N`.
pub fn greedy_energy_exact(lambda: f64, n: u64) -> Result<f64> {
    check_up_to_two(lambda)?;
    check_n(n, 2)?;
    let rep = decompose(n)?;
    let mut h = 0.0;
    for (e, upper, lower) in binary_weights(rep.exponents()) {
        if upper != 0.0 {
            h += upper * roots_energy(lambda, 1u64 << (e + 1))?;
        }
        h += lower * roots_energy(lambda, 1u64 << e)?;
    }
    Ok(h)
}

/// `U_N(a_N) = Σ_k U_λ(2^{n_k})`.
pub fn greedy_extremal_potential(lambda: f64, n: u64) -> Result<f64> {
    check_below_two(lambda)?;
    check_n(n, 1)?;
    decompose(n)?
        .exponents()
        .iter()
        .map(|&e| midpoint_potential(lambda, 1u64 << e))
        .sum()
}

/// Deficits `D(2^k) = L_λ(2^k) - 4^k I` and excesses `U_λ(2^k) - 2^k I` for `k <= max_exp`.
#[derive(Debug, Clone)]
pub struct PowerTable {
    lambda: f64,
    deficit: Vec<f64>,
    excess: Vec<f64>,
}

impl PowerTable {
    pub fn new(lambda: f64, max_exp: u32) -> Result<Self> {
        check_below_two(lambda)?;
        if max_exp > 1000 {
            return Err(invalid("max_exp", max_exp, "must not exceed 1000"));
        }
        let sp = Spectral::new(lambda);
        let deficit: Vec<f64> = (0..=max_exp + 1).map(|k| sp.deficit_pow2(k)).collect();
        let excess = (0..=max_exp as usize)
            .map(|k| {
                let m = (k as f64).exp2();
                deficit[k + 1] / (2.0 * m) - deficit[k] / m
            })
            .collect();
        Ok(PowerTable { lambda, deficit, excess })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn max_exp(&self) -> u32 {
        self.excess.len() as u32 - 1
    }

    /// `L_λ(2^k) - 4^k I`.
    pub fn deficit(&self, k: u32) -> f64 {
        self.deficit[k as usize]
    }

    /// `U_λ(2^k) - 2^k I`.
    pub fn excess(&self, k: u32) -> f64 {
        self.excess[k as usize]
    }

    /// `H_λ(α_N) - N² I`.
    pub fn energy_deficit(&self, n: u64) -> Result<f64> {
        check_n(n, 1)?;
        let rep = decompose(n)?;
        if rep.exponents()[0] > self.max_exp() {
            return Err(invalid("N", n, "exceeds the table range"));
        }
        Ok(binary_weights(rep.exponents())
            .into_iter()
            .map(|(e, upper, lower)| upper * self.deficit(e + 1) + lower * self.deficit(e))
            .sum())
    }

    /// `U_N(a_N) - N I`.
    pub fn potential_excess(&self, n: u64) -> Result<f64> {
        check_n(n, 1)?;
        let rep = decompose(n)?;
        if rep.exponents()[0] > self.max_exp() {
            return Err(invalid("N", n, "exceeds the table range"));
        }
        Ok(rep.exponents().iter().map(|&e| self.excess(e)).sum())
    }
}

fn table_for(lambda: f64, n: u64) -> Result<PowerTable> {
    PowerTable::new(lambda, 63 - n.max(1).leading_zeros())
}

/// `H_λ(α_N) - N² I_λ(σ_1)`, free of cancellation.
pub fn greedy_energy_deficit(lambda: f64, n: u64) -> Result<f64> {
    table_for(lambda, n)?.energy_deficit(n)
}

/// `U_N(a_N) - N I_λ(σ_1)`, free of cancellation.
pub fn greedy_potential_excess(lambda: f64, n: u64) -> Result<f64> {
    table_for(lambda, n)?.potential_excess(n)
}

/// Normalization `κ_λ(N)` of the second-order energy term.
pub fn kappa(lambda: f64, n: u64) -> f64 {
    let nf = n as f64;
    if lambda < 1.0 {
        nf.powf(1.0 - lambda)
    } else if lambda == 1.0 {
        nf.ln()
    } else {
        1.0
    }
}

/// One row of the exact greedy circle sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub index: u64,
    /// The point `a_n`.
    pub angle: DyadicAngle,
    /// `U_n(a_n)`
    pub potential_value: f64,
    /// `H_λ(α_n)`
    pub energy: f64,
    /// `(H_λ(α_n) - n² I) / κ_λ(n)`
    pub second_order: f64,
    /// `H_λ(α_n) - n² I`
    pub energy_deficit: f64,
    /// `U_n(a_n) - n I`
    pub potential_excess: f64,
}

/// Rows for `2 <= N <= n_max`.
pub fn second_order_series(lambda: f64, n_max: u64) -> Result<Vec<SequenceRecord>> {
    second_order_series_with(lambda, n_max, Exec::default())
}

pub fn second_order_series_with(lambda: f64, n_max: u64, exec: Exec) -> Result<Vec<SequenceRecord>> {
    check_below_two(lambda)?;
    check_n(n_max, 2)?;
    let table = table_for(lambda, n_max)?;
    let i = circle_energy(lambda);
    let rows = exec.map((n_max - 1) as usize, |k| {
        let n = k as u64 + 2;
        let nf = n as f64;
        let energy_deficit = table.energy_deficit(n).expect("n within table");
        let potential_excess = table.potential_excess(n).expect("n within table");
        SequenceRecord {
            index: n,
            angle: DyadicAngle::van_der_corput(n),
            potential_value: nf * i + potential_excess,
            energy: nf * nf * i + energy_deficit,
            second_order: energy_deficit / kappa(lambda, n),
            energy_deficit,
            potential_excess,
        }
    });
    Ok(rows)
}

#[cfg(test)]
mod tests;
