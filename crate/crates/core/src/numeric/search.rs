//! Global maximization of the discrete potential: grid seeding plus local refinement.

use std::cmp::Ordering;
use std::f64::consts::PI;

use super::{GreedyConfig, SpherePoint};
use crate::exec::Exec;

const CIRCLE_CANDIDATES: usize = 24;
const SPHERE_CANDIDATES: usize = 8;
const SPHERE_POOL: usize = 4096;
/// Relative gap under which two maxima count as tied.
pub(crate) const TIE_TOLERANCE: f64 = 1e-10;

pub(crate) fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub(crate) fn potential_at(points: &[SpherePoint], lambda: f64, x: &[f64]) -> f64 {
    let h = lambda / 2.0;
    points.iter().map(|a| dist2(a.coords(), x).powf(h)).sum()
}

/// Coarse grid with the accumulated potential of the points added so far.
pub(crate) struct Landscape {
    dim: usize,
    lambda: f64,
    /// Circle: angle spacing. Sphere: nominal spacing between grid points.
    step: f64,
    coords: Vec<f64>,
    values: Vec<f64>,
    exec: Exec,
}

impl Landscape {
    pub(crate) fn new(cfg: &GreedyConfig) -> Self {
        let dim = cfg.d + 1;
        let (step, coords) = if cfg.d == 1 {
            let g = cfg.coarse_grid_size + cfg.coarse_grid_size % 2;
            let step = 2.0 * PI / g as f64;
            let mut c = Vec::with_capacity(2 * (g / 2 + 2));
            for i in 0..g / 2 + 2 {
                let (s, co) = (i as f64 * step).sin_cos();
                c.extend_from_slice(&[co, s]);
            }
            (step, c)
        } else {
            let c = super::grid::hemisphere_points(cfg.d, cfg.coarse_grid_size);
            let area = 2.0 * PI.powf(dim as f64 / 2.0) / crate::specfun::gamma_pos(dim as f64 / 2.0);
            (( area / cfg.coarse_grid_size as f64).powf(1.0 / cfg.d as f64), c)
        };
        let n = coords.len() / dim;
        Landscape {
            dim,
            lambda: cfg.lambda,
            step,
            coords,
            values: vec![0.0; n],
            exec: cfg.exec,
        }
    }

    fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub(crate) fn add(&mut self, a: &SpherePoint) {
        let h = self.lambda / 2.0;
        let (dim, coords) = (self.dim, &self.coords);
        self.exec.for_each_mut(&mut self.values, |i, v| {
            *v += dist2(&coords[i * dim..(i + 1) * dim], a.coords()).powf(h);
        });
    }

    /// A maximizer of the even-index potential, chosen with the tie-break rules.
    pub(crate) fn maximize(&self, points: &[SpherePoint], cfg: &GreedyConfig) -> SpherePoint {
        if self.dim == 2 {
            self.maximize_circle(points, cfg)
        } else {
            self.maximize_sphere(points, cfg)
        }
    }

    fn flat(&self, range: std::ops::Range<usize>) -> bool {
        let vals = &self.values[range];
        let max = vals.iter().cloned().fold(f64::MIN, f64::max);
        let min = vals.iter().cloned().fold(f64::MAX, f64::min);
        max - min <= TIE_TOLERANCE * max.abs()
    }

    fn maximize_circle(&self, points: &[SpherePoint], cfg: &GreedyConfig) -> SpherePoint {
        let half = self.values.len() - 2;
        if self.flat(1..half + 1) {
            return SpherePoint::from_angle(self.step);
        }
        let v = &self.values;
        let mut peaks: Vec<usize> = (1..=half).filter(|&i| v[i] >= v[i - 1] && v[i] >= v[i + 1]).collect();
        peaks.sort_by(|&a, &b| v[b].total_cmp(&v[a]).then(a.cmp(&b)));
        peaks.truncate(CIRCLE_CANDIDATES);
        let angles: Vec<f64> = points.iter().map(SpherePoint::angle).collect();
        let refined = cfg.exec.map(peaks.len(), |k| {
            let i = peaks[k] as f64;
            let (t, val) = refine_circle(&angles, self.lambda, (i - 1.0) * self.step, (i + 1.0) * self.step, cfg.refine_tolerance);
            let mut t = t.rem_euclid(PI);
            if t == 0.0 {
                t = PI;
            }
            (t, val)
        });
        let best = refined.iter().map(|r| r.1).fold(f64::MIN, f64::max);
        let theta = refined
            .iter()
            .filter(|r| r.1 >= best - TIE_TOLERANCE * best.abs())
            .map(|r| r.0)
            .fold(f64::INFINITY, f64::min);
        SpherePoint::from_angle(theta)
    }

    fn maximize_sphere(&self, points: &[SpherePoint], cfg: &GreedyConfig) -> SpherePoint {
        let n = self.values.len();
        let v = &self.values;
        if self.flat(0..n) {
            let i = (0..n)
                .min_by(|&a, &b| lex(self.point(a), self.point(b)))
                .expect("non-empty grid");
            return SpherePoint::unit(self.point(i).to_vec());
        }
        let order = |a: &usize, b: &usize| v[*b].total_cmp(&v[*a]).then(a.cmp(b));
        let mut idx: Vec<usize> = (0..n).collect();
        if n > SPHERE_POOL {
            idx.select_nth_unstable_by(SPHERE_POOL, order);
            idx.truncate(SPHERE_POOL);
        }
        idx.sort_by(order);
        let radius2 = (3.0 * self.step).powi(2);
        let mut seeds: Vec<usize> = Vec::new();
        for &i in &idx {
            let p = self.point(i);
            let far = seeds.iter().all(|&j| {
                let q = self.point(j);
                let minus: f64 = p.iter().zip(q).map(|(x, y)| (x + y) * (x + y)).sum();
                dist2(p, q).min(minus) > radius2
            });
            if far {
                seeds.push(i);
                if seeds.len() == SPHERE_CANDIDATES {
                    break;
                }
            }
        }
        let refined = cfg.exec.map(seeds.len(), |k| {
            let (mut x, val) = ascend(points, self.lambda, self.point(seeds[k]).to_vec(), cfg.refine_tolerance);
            canonical_hemisphere(&mut x);
            (x, val)
        });
        let best = refined.iter().map(|r| r.1).fold(f64::MIN, f64::max);
        let x = refined
            .into_iter()
            .filter(|r| r.1 >= best - TIE_TOLERANCE * best.abs())
            .map(|r| r.0)
            .min_by(|a, b| lex(a, b))
            .expect("at least one candidate");
        SpherePoint::unit(x)
    }
}

fn lex(a: &[f64], b: &[f64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Negates `x` when its first clearly nonzero coordinate is positive.
fn canonical_hemisphere(x: &mut [f64]) {
    if let Some(&c) = x.iter().find(|c| c.abs() > 1e-9) {
        if c > 0.0 {
            x.iter_mut().for_each(|c| *c = -*c);
        }
    }
}

fn circle_value(angles: &[f64], lambda: f64, t: f64) -> f64 {
    angles.iter().map(|&p| (2.0 * ((t - p) / 2.0).sin()).abs().powf(lambda)).sum()
}

fn circle_slope(angles: &[f64], lambda: f64, t: f64) -> f64 {
    angles
        .iter()
        .map(|&p| {
            let u = (t - p) / 2.0;
            let s = u.sin();
            if s == 0.0 {
                0.0
            } else {
                0.5 * lambda * (2.0 * s.abs()).powf(lambda) * u.cos() / s
            }
        })
        .sum()
}

/// Maximizer of the circle potential on `[lo, hi]`.
fn refine_circle(angles: &[f64], lambda: f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    if circle_slope(angles, lambda, lo) > 0.0 && circle_slope(angles, lambda, hi) < 0.0 {
        for _ in 0..200 {
            if hi - lo <= tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if circle_slope(angles, lambda, mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let t = 0.5 * (lo + hi);
        return (t, circle_value(angles, lambda, t));
    }
    // golden-section search
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (circle_value(angles, lambda, c), circle_value(angles, lambda, d));
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = circle_value(angles, lambda, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = circle_value(angles, lambda, d);
        }
    }
    let (t, f) = if fc >= fd { (c, fc) } else { (d, fd) };
    let (fl, fh) = (circle_value(angles, lambda, lo), circle_value(angles, lambda, hi));
    if fl > f && fl >= fh {
        (lo, fl)
    } else if fh > f {
        (hi, fh)
    } else {
        (t, f)
    }
}

fn normalize(x: &mut [f64]) {
    let n = x.iter().map(|c| c * c).sum::<f64>().sqrt();
    x.iter_mut().for_each(|c| *c /= n);
}

/// Tangential gradient of the potential at the unit vector `x`.
fn tangent_gradient(points: &[SpherePoint], lambda: f64, x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    for a in points {
        let r2 = dist2(a.coords(), x);
        if r2 < 1e-300 {
            continue;
        }
        let w = lambda * r2.powf(lambda / 2.0 - 1.0);
        for (gi, (xi, ai)) in g.iter_mut().zip(x.iter().zip(a.coords())) {
            *gi += w * (xi - ai);
        }
    }
    let radial: f64 = g.iter().zip(x).map(|(u, v)| u * v).sum();
    g.iter_mut().zip(x).for_each(|(gi, xi)| *gi -= radial * xi);
    g
}

fn step_to(x: &[f64], g: &[f64], t: f64) -> Vec<f64> {
    let mut y: Vec<f64> = x.iter().zip(g).map(|(a, b)| a + t * b).collect();
    normalize(&mut y);
    y
}

/// Projected gradient ascent with Armijo backtracking, then Barzilai-Borwein polishing.
fn ascend(points: &[SpherePoint], lambda: f64, mut x: Vec<f64>, tol: f64) -> (Vec<f64>, f64) {
    let mut f = potential_at(points, lambda, &x);
    let mut g = tangent_gradient(points, lambda, &x);
    let mut t = 0.1 / (norm(&g) + 1e-300);
    for _ in 0..2000 {
        let gn2: f64 = g.iter().map(|c| c * c).sum();
        if gn2 == 0.0 {
            return (x, f);
        }
        let mut accepted = None;
        while t * gn2.sqrt() > 1e-3 * tol {
            let y = step_to(&x, &g, t);
            let fy = potential_at(points, lambda, &y);
            if fy >= f + 1e-4 * t * gn2 {
                accepted = Some((y, fy));
                break;
            }
            t *= 0.5;
        }
        let Some((y, fy)) = accepted else { break };
        let moved = dist2(&x, &y).sqrt();
        x = y;
        f = fy;
        g = tangent_gradient(points, lambda, &x);
        t *= 2.0;
        if moved < tol {
            break;
        }
    }
    // the function values stall near the top before the gradient does
    let (mut xp, mut gp) = (x.clone(), g.clone());
    let mut y = step_to(&x, &g, t);
    for _ in 0..200 {
        let gy = tangent_gradient(points, lambda, &y);
        let s: Vec<f64> = y.iter().zip(&xp).map(|(a, b)| a - b).collect();
        let dy: f64 = gy.iter().zip(&gp).zip(&s).map(|((a, b), c)| (a - b) * c).sum();
        let ss: f64 = s.iter().map(|c| c * c).sum();
        if ss.sqrt() < 1e-2 * tol || !(dy < 0.0) {
            break;
        }
        let next = step_to(&y, &gy, ss / -dy);
        xp = y;
        gp = gy;
        y = next;
    }
    let fy = potential_at(points, lambda, &y);
    if fy >= f - 1e-13 * f.abs() && dist2(&x, &y) < 1e-6 {
        (y, fy)
    } else {
        (x, f)
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}
