use std::io::Write;

use greedy_energy::asymptotics::{g_bar, g_function, s_lambda, theta_from_odd, G_BAR_BOUND};
use greedy_energy::circle::{canonical_sequence, greedy_energy_exact, greedy_extremal_potential, second_order_series_with};
use greedy_energy::numeric::{generate, potential, GreedyConfig};
use greedy_energy::specfun::{continuous_energy, maximal_energy, second_order_constant, zeta_neg};
use greedy_energy::verify::{self, Check, Profile, Suite};
use greedy_energy::Exec;
use serde::{Deserialize, Serialize};

use crate::args::{ConstantsArgs, DataFormat, GCurvesArgs, GenerateArgs, Method, SecondOrderArgs, TextFormat, VerifyArgs};
use crate::output::{csv_bytes, fmt12, fmt17, json_bytes, write_with_manifest};
use crate::{usage, CliResult};

/// One point of a generated sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointRow {
    pub index: usize,
    /// Reduced fraction of a full turn, exact method only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub turn: Option<String>,
    pub coords: Vec<f64>,
    /// `U_n(a_n)`
    pub potential: f64,
    /// `H_λ(α_{n+1})`
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceFile {
    pub d: usize,
    pub lambda: f64,
    pub method: Method,
    pub rows: Vec<PointRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesRow {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "H_minus")]
    pub h_minus: f64,
    #[serde(rename = "H_normalized")]
    pub h_normalized: f64,
    #[serde(rename = "U_minus")]
    pub u_minus: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesFile {
    pub lambda: f64,
    pub rows: Vec<SeriesRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GCurvesFile {
    pub generators: Vec<u64>,
    pub lambda: Vec<f64>,
    /// `curves[i][j]` is `G(θ(M_i); λ_j)`.
    pub curves: Vec<Vec<f64>>,
}

/// Limit constants for one `λ`; entries outside their regime are absent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    pub lambda: f64,
    pub d: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub continuous_energy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zeta_neg: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub second_order_constant: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g_bar: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g_bar_witness: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s_lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda1_liminf: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub maximal_energy: Option<f64>,
}

fn exec(sequential: bool) -> Exec {
    if sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn exact_rows(a: &GenerateArgs) -> CliResult<Vec<PointRow>> {
    if a.d != 1 {
        return Err(usage("--method exact needs --d 1"));
    }
    if !(a.lambda > 0.0 && a.lambda < 2.0) {
        return Err(usage("--method exact needs --lambda in (0, 2)"));
    }
    if a.grid.is_some() || a.tolerance.is_some() {
        return Err(usage("--grid and --tolerance apply only to --method numeric"));
    }
    let seq = canonical_sequence(a.n)?;
    seq.iter()
        .enumerate()
        .map(|(i, t)| {
            let (potential, energy) = if i == 0 {
                (0.0, 0.0)
            } else {
                (greedy_extremal_potential(a.lambda, i as u64)?, greedy_energy_exact(a.lambda, i as u64 + 1)?)
            };
            Ok(PointRow { index: i, turn: Some(t.to_string()), coords: t.coords().to_vec(), potential, energy })
        })
        .collect()
}

fn numeric_rows(a: &GenerateArgs, ex: Exec) -> CliResult<Vec<PointRow>> {
    let mut cfg = GreedyConfig::new(a.d, a.lambda, a.n)?.with_exec(ex);
    if let Some(g) = a.grid {
        cfg = cfg.with_grid_size(g)?;
    }
    if let Some(t) = a.tolerance {
        cfg = cfg.with_tolerance(t)?;
    }
    let pts = generate(&cfg)?;
    let mut energy = 0.0;
    pts.iter()
        .enumerate()
        .map(|(i, p)| {
            let u = if i == 0 { 0.0 } else { potential(&pts[..i], a.lambda, p)? };
            energy += 2.0 * u;
            Ok(PointRow { index: i, turn: None, coords: p.coords().to_vec(), potential: u, energy })
        })
        .collect()
}

pub fn cmd_generate(a: &GenerateArgs, sequential: bool) -> CliResult<SequenceFile> {
    if a.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let rows = match a.method {
        Method::Exact => exact_rows(a)?,
        Method::Numeric => numeric_rows(a, exec(sequential))?,
    };
    let file = SequenceFile { d: a.d, lambda: a.lambda, method: a.method, rows };
    let bytes = match a.format {
        DataFormat::Json => json_bytes(&file)?,
        DataFormat::Csv => {
            let mut header = vec!["index".to_string()];
            if a.method == Method::Exact {
                header.push("turn".into());
            }
            header.extend((0..=a.d).map(|k| format!("x{k}")));
            header.extend(["potential".into(), "energy".into()]);
            let rows: Vec<Vec<String>> = file
                .rows
                .iter()
                .map(|r| {
                    let mut v = vec![r.index.to_string()];
                    v.extend(r.turn.clone());
                    v.extend(r.coords.iter().map(|&x| fmt17(x)));
                    v.extend([fmt17(r.potential), fmt17(r.energy)]);
                    v
                })
                .collect();
            csv_bytes(&header, &rows)?
        }
    };
    write_with_manifest(&a.out, &bytes, "generate", serde_json::to_value(a)?)?;
    Ok(file)
}

pub fn cmd_second_order(a: &SecondOrderArgs, sequential: bool) -> CliResult<SeriesFile> {
    if !(a.lambda > 0.0 && a.lambda < 2.0) {
        return Err(usage("--lambda must lie in (0, 2)"));
    }
    if a.nmax < 2 {
        return Err(usage("--nmax must be at least 2"));
    }
    let rows = second_order_series_with(a.lambda, a.nmax, exec(sequential))?
        .into_iter()
        .map(|r| SeriesRow { n: r.index, h_minus: r.energy_deficit, h_normalized: r.second_order, u_minus: r.potential_excess })
        .collect();
    let file = SeriesFile { lambda: a.lambda, rows };
    let bytes = match a.format {
        DataFormat::Json => json_bytes(&file)?,
        DataFormat::Csv => {
            let header = ["N", "H_minus", "H_normalized", "U_minus"].map(String::from);
            let rows: Vec<Vec<String>> = file
                .rows
                .iter()
                .map(|r| vec![r.n.to_string(), fmt17(r.h_minus), fmt17(r.h_normalized), fmt17(r.u_minus)])
                .collect();
            csv_bytes(&header, &rows)?
        }
    };
    write_with_manifest(&a.out, &bytes, "second-order", serde_json::to_value(a)?)?;
    Ok(file)
}

pub fn cmd_g_curves(a: &GCurvesArgs) -> CliResult<GCurvesFile> {
    if a.points == 0 {
        return Err(usage("--points must be at least 1"));
    }
    if a.m.is_empty() || a.m.iter().any(|m| m % 2 == 0) {
        return Err(usage("--m takes a list of odd integers"));
    }
    let lambda: Vec<f64> = (0..a.points).map(|i| i as f64 / a.points as f64).collect();
    let curves = a
        .m
        .iter()
        .map(|&m| {
            let theta = theta_from_odd(m, m.count_ones() as usize)?;
            lambda.iter().map(|&l| g_function(&theta, l)).collect::<greedy_energy::Result<Vec<f64>>>()
        })
        .collect::<greedy_energy::Result<Vec<_>>>()?;
    let file = GCurvesFile { generators: a.m.clone(), lambda, curves };
    let bytes = match a.format {
        DataFormat::Json => json_bytes(&file)?,
        DataFormat::Csv => {
            let mut header = vec!["lambda".to_string()];
            header.extend(a.m.iter().map(|m| format!("G_{m}")));
            let rows: Vec<Vec<String>> = (0..a.points)
                .map(|j| {
                    let mut v = vec![fmt17(file.lambda[j])];
                    v.extend(file.curves.iter().map(|c| fmt17(c[j])));
                    v
                })
                .collect();
            csv_bytes(&header, &rows)?
        }
    };
    write_with_manifest(&a.out, &bytes, "g-curves", serde_json::to_value(a)?)?;
    Ok(file)
}

/// Runs the suites, prints the table and returns whether every check passed.
pub fn cmd_verify(a: &VerifyArgs, out: &mut impl Write) -> CliResult<bool> {
    let suite: Suite = a.suite.parse().map_err(|e: greedy_energy::Error| usage(e.to_string()))?;
    let profile: Profile = a.profile.parse().map_err(|e: greedy_energy::Error| usage(e.to_string()))?;
    let checks = verify::run(suite, profile)?;
    write_table(&checks, out)?;
    Ok(checks.iter().all(|c| c.passed))
}

fn write_table(checks: &[Check], out: &mut impl Write) -> std::io::Result<()> {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    writeln!(out, "{:<9} {:<width$} {:>22} {:>22} {:>9}  result", "suite", "check", "measured", "expected", "tol")?;
    for c in checks {
        writeln!(
            out,
            "{:<9} {:<width$} {:>22.15e} {:>22.15e} {:>9.1e}  {}",
            c.suite.name(),
            c.name,
            c.measured,
            c.expected,
            c.tolerance,
            if c.passed { "PASS" } else { "FAIL" }
        )?;
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} checks, {failed} failed", checks.len())
}

pub fn constants(lambda: f64, d: u32) -> CliResult<Constants> {
    if lambda.is_nan() || lambda <= 0.0 || lambda.is_infinite() {
        return Err(greedy_energy::Error::LambdaOutOfRange { lambda, range: "(0, inf)" }.into());
    }
    if d == 0 {
        return Err(usage("--d must be at least 1"));
    }
    let mut c = Constants {
        lambda,
        d,
        continuous_energy: None,
        zeta_neg: None,
        second_order_constant: None,
        g_bar: None,
        g_bar_witness: None,
        s_lambda: None,
        lambda1_liminf: None,
        maximal_energy: None,
    };
    if lambda >= 2.0 {
        c.maximal_energy = Some(maximal_energy(lambda)?);
        return Ok(c);
    }
    c.continuous_energy = Some(continuous_energy(lambda, d)?);
    c.zeta_neg = Some(zeta_neg(lambda)?);
    c.second_order_constant = Some(second_order_constant(lambda)?);
    if lambda < 1.0 {
        let g = g_bar(lambda, G_BAR_BOUND)?;
        c.g_bar = Some(g.value);
        c.g_bar_witness = Some(g.witness);
    } else if lambda == 1.0 {
        c.lambda1_liminf = Some(-std::f64::consts::PI / (9.0 * std::f64::consts::LN_2));
    } else {
        c.s_lambda = Some(s_lambda(lambda, 1e-12)?.value);
    }
    Ok(c)
}

pub fn cmd_constants(a: &ConstantsArgs, out: &mut impl Write) -> CliResult<Constants> {
    let c = constants(a.lambda, a.d)?;
    match a.format {
        TextFormat::Json => out.write_all(&json_bytes(&c)?)?,
        TextFormat::Text => {
            writeln!(out, "{:<28} {}", "lambda", c.lambda)?;
            let lines = [
                (format!("I_lambda(sigma_{})", c.d), c.continuous_energy),
                ("zeta(-lambda)".into(), c.zeta_neg),
                ("(2pi)^lambda 2zeta(-lambda)".into(), c.second_order_constant),
                ("g_bar".into(), c.g_bar),
                ("s_lambda".into(), c.s_lambda),
                ("-pi/(9 log 2)".into(), c.lambda1_liminf),
                ("maximal energy".into(), c.maximal_energy),
            ];
            for (name, v) in lines {
                if let Some(v) = v {
                    writeln!(out, "{name:<28} {}", fmt12(v))?;
                }
            }
            if let Some(m) = c.g_bar_witness {
                writeln!(out, "{:<28} {m}", "g_bar witness M")?;
            }
        }
    }
    Ok(c)
}
