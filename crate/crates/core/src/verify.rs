//! Invariant suites with a pass/fail row per check.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::asymptotics::{g_bar, g_function, s_lambda, theta_from_odd};
use crate::circle::{
    canonical_sequence, chord, greedy_energy_exact, greedy_extremal_potential, r_lambda, r_lambda_direct,
    second_order_series, PowerTable,
};
use crate::error::{invalid, Result};
use crate::numeric::{generate, potential, GreedyConfig, SpherePoint};
use crate::special::{energy_ge2, potential_ge2};
use crate::specfun::{continuous_energy, second_order_constant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Symmetry,
    Formulas,
    Bounds,
    Limits,
    Special,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Symmetry, Suite::Formulas, Suite::Bounds, Suite::Limits, Suite::Special];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Symmetry => "symmetry",
            Suite::Formulas => "formulas",
            Suite::Bounds => "bounds",
            Suite::Limits => "limits",
            Suite::Special => "special",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::All]
            .into_iter()
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| invalid("suite", s, "expected symmetry, formulas, bounds, limits, special or all"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    #[default]
    Quick,
    Full,
}

impl Profile {
    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Profile::Quick => quick,
            Profile::Full => full,
        }
    }
}

impl FromStr for Profile {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(invalid("profile", s, "expected quick or full")),
        }
    }
}

/// One measured quantity. `passed` iff `measured` is within `tolerance` of
/// `expected`, or for one-sided checks on the right side of it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub passed: bool,
}

struct Rows {
    suite: Suite,
    rows: Vec<Check>,
}

impl Rows {
    fn near(&mut self, name: String, measured: f64, expected: f64, tolerance: f64) {
        let passed = (measured - expected).abs() <= tolerance;
        self.push(name, measured, expected, tolerance, passed);
    }

    fn at_most(&mut self, name: String, measured: f64, bound: f64) {
        self.push(name, measured, bound, 0.0, measured <= bound);
    }

    fn push(&mut self, name: String, measured: f64, expected: f64, tolerance: f64, passed: bool) {
        self.rows.push(Check { suite: self.suite, name, measured, expected, tolerance, passed });
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn pair_energy(pts: &[SpherePoint], lambda: f64) -> f64 {
    let mut h = 0.0;
    for i in 0..pts.len() {
        for j in 0..i {
            h += pts[i].distance(&pts[j]).powf(lambda);
        }
    }
    2.0 * h
}

fn symmetry(p: Profile, r: &mut Rows) -> Result<()> {
    let n = p.pick(32, 64);
    let dims: &[usize] = p.pick(&[1, 2], &[1, 2, 3]);
    for &d in dims {
        for l in [0.5, 1.5, 2.0, 3.0] {
            let pts = generate(&GreedyConfig::new(d, l, n)?)?;
            let broken = (0..n / 2).filter(|&k| pts[2 * k + 1] != pts[2 * k].antipode()).count();
            r.near(format!("S^{d} lambda={l} n={n} non-antipodal pairs"), broken as f64, 0.0, 0.0);
        }
    }
    let exact = canonical_sequence(n)?;
    for l in [0.5, 1.0, 1.5] {
        let pts = generate(&GreedyConfig::new(1, l, n)?)?;
        let worst = pts
            .iter()
            .zip(&exact)
            .map(|(q, a)| {
                let t = (q.angle() / std::f64::consts::TAU).rem_euclid(1.0);
                let diff = (t - a.turn()).abs();
                diff.min(1.0 - diff) * std::f64::consts::TAU
            })
            .fold(0.0, f64::max);
        r.near(format!("S^1 lambda={l} n={n} angle deviation from van der Corput"), worst, 0.0, 1e-8);
    }
    Ok(())
}

fn formulas(p: Profile, r: &mut Rows) -> Result<()> {
    let n_max = p.pick(256, 512);
    let seq = canonical_sequence(n_max + 1)?;
    for l in [0.3, 0.5, 1.0, 1.5, 1.9] {
        let (mut worst_h, mut worst_u, mut h) = (0.0f64, 0.0f64, 0.0);
        for n in 1..=n_max {
            let u: f64 = (0..n).map(|k| chord(seq[n], seq[k]).powf(l)).sum();
            worst_u = worst_u.max(rel(greedy_extremal_potential(l, n as u64)?, u));
            // H(α_{n+1}) = H(α_n) + 2 U_n(a_n)
            h += 2.0 * u;
            worst_h = worst_h.max(rel(greedy_energy_exact(l, n as u64 + 1)?, h));
        }
        r.near(format!("lambda={l} N<={n_max} energy vs brute force (rel)"), worst_h, 0.0, 1e-10);
        r.near(format!("lambda={l} N<={n_max} potential vs brute force (rel)"), worst_u, 0.0, 1e-10);
        for n in [3u64, 100, 1000] {
            let a = r_lambda(l, n)?;
            let b = r_lambda_direct(l, n)?;
            let cancellation = 16.0 * f64::EPSILON * (n as f64).powf(2.0 * l);
            r.near(format!("lambda={l} R({n}) spectral vs direct sum"), a, b, 1e-9 + cancellation);
        }
    }
    Ok(())
}

fn bounds(p: Profile, r: &mut Rows) -> Result<()> {
    let n_max = p.pick(2000, 1 << 14);
    for l in [0.1, 0.5, 1.0, 1.3, 1.5, 1.9] {
        let i = continuous_energy(l, 1)?;
        let rows = second_order_series(l, n_max)?;
        let low = rows.iter().map(|x| x.potential_excess).fold(f64::INFINITY, f64::min);
        let high = rows.iter().map(|x| x.potential_excess).fold(f64::NEG_INFINITY, f64::max);
        r.push(format!("lambda={l} N<={n_max} min U_N(a_N) - N I > 0"), low, 0.0, 0.0, low > 0.0);
        r.push(format!("lambda={l} N<={n_max} max U_N(a_N) - N I < I"), high, i, 0.0, high < i);
        let top = rows.iter().map(|x| x.energy_deficit).fold(f64::NEG_INFINITY, f64::max);
        r.at_most(format!("lambda={l} N<={n_max} max H - N^2 I <= 0"), top, 0.0);
        if l > 1.0 {
            let s = s_lambda(l, 1e-8)?.value;
            let bottom = rows.iter().map(|x| x.energy_deficit).fold(f64::INFINITY, f64::min);
            r.push(format!("lambda={l} N<={n_max} min H - N^2 I >= s - 1e-6"), bottom, s, 1e-6, bottom >= s - 1e-6);
        }
    }
    Ok(())
}

fn limits(p: Profile, r: &mut Rows) -> Result<()> {
    let k = p.pick(14, 20);
    for l in [0.3, 0.5, 1.0, 1.5] {
        let c = second_order_constant(l)?;
        r.near(format!("lambda={l} R(2^{k}) vs (2 pi)^lambda 2 zeta(-lambda)"), r_lambda(l, 1 << k)?, c, 1e-6);
    }
    for l in [0.1, 0.5, 0.9] {
        let c = second_order_constant(l)?;
        let table = PowerTable::new(l, k)?;
        let norm = |n: u64| -> Result<f64> { Ok(table.energy_deficit(n)? / (n as f64).powf(1.0 - l)) };
        r.near(format!("lambda={l} normalized value at N=2^{k}"), norm(1 << k)?, c, 1e-3);
        let g = g_function(&theta_from_odd(3, 2)?, l)?;
        r.near(format!("lambda={l} normalized value at N=3*2^{}", k - 2), norm(3 << (k - 2))?, g * c, 1e-2);
        let bar = g_bar(l, p.pick(1 << 10, 1 << 16))?;
        r.push(format!("lambda={l} g_bar > 1"), bar.value, 1.0, 0.0, bar.value > 1.0);
    }
    let table = PowerTable::new(1.0, 2 * k)?;
    let seq: Vec<f64> = (1..=k)
        .map(|q| {
            let n = ((1u64 << (2 * q)) - 1) / 3;
            table.energy_deficit(n).map(|h| h / (n as f64).ln())
        })
        .collect::<Result<_>>()?;
    let drops = seq.windows(2).skip(1).filter(|w| w[1] < w[0]).count();
    r.near(format!("lambda=1 normalized values along N=(4^p-1)/3, 2<=p<={k}: decreases"), drops as f64, 0.0, 0.0);
    for l in [1.7, 1.9] {
        let s = s_lambda(l, 1e-8)?.value;
        let t = PowerTable::new(l, 16)?;
        r.near(format!("lambda={l} H - N^2 I at N=(4^7-1)/3 vs s"), t.energy_deficit(5461)?, s, 1e-3);
    }
    Ok(())
}

fn special(p: Profile, r: &mut Rows) -> Result<()> {
    let n_max = p.pick(100, 400) as u64;
    let worst = (2..=n_max)
        .map(|n| Ok(rel(greedy_energy_exact(2.0, n)?, energy_ge2(2.0, n)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    r.near(format!("lambda=2 circle energy vs 8n^2, 8(n^2+n), N<={n_max}"), worst, 0.0, 1e-12);
    let n = p.pick(41, 101);
    for (d, l) in [(2, 2.0), (2, 3.0), (3, 2.5), (1, 4.0)] {
        let pts = generate(&GreedyConfig::new(d, l, n)?)?;
        let mut we = 0.0f64;
        let mut wu = 0.0f64;
        let mut h = 0.0;
        for m in 1..n {
            let u = potential(&pts[..m], l, &pts[m])?;
            wu = wu.max(rel(u, potential_ge2(l, m as u64)?));
            h += 2.0 * u;
            we = we.max(rel(h, energy_ge2(l, m as u64 + 1)?));
        }
        r.near(format!("S^{d} lambda={l} n={n} energy vs closed form (rel)"), we, 0.0, 1e-10);
        r.near(format!("S^{d} lambda={l} n={n} potential vs closed form (rel)"), wu, 0.0, 1e-10);
        if l > 2.0 {
            let direct = pair_energy(&pts, l);
            r.near(format!("S^{d} lambda={l} pairwise energy vs closed form"), direct, energy_ge2(l, n as u64)?, 1e-9 * direct);
        }
    }
    Ok(())
}

/// Runs the suite (every suite for [`Suite::All`]).
pub fn run(suite: Suite, profile: Profile) -> Result<Vec<Check>> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut out = Vec::new();
    for s in suites {
        let mut rows = Rows { suite: s, rows: Vec::new() };
        match s {
            Suite::Symmetry => symmetry(profile, &mut rows)?,
            Suite::Formulas => formulas(profile, &mut rows)?,
            Suite::Bounds => bounds(profile, &mut rows)?,
            Suite::Limits => limits(profile, &mut rows)?,
            Suite::Special => special(profile, &mut rows)?,
            Suite::All => unreachable!(),
        }
        out.extend(rows.rows);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse() {
        assert_eq!("limits".parse::<Suite>().unwrap(), Suite::Limits);
        assert_eq!("full".parse::<Profile>().unwrap(), Profile::Full);
        assert!("everything".parse::<Suite>().is_err());
        assert!("slow".parse::<Profile>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for s in Suite::EACH {
            let rows = run(s, Profile::Quick).unwrap();
            assert!(!rows.is_empty());
            for c in &rows {
                assert!(c.passed, "{c:?}");
                assert_eq!(c.suite, s);
            }
        }
    }
}
