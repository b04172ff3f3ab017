//! Numeric greedy λ-energy sequences on `S^d`.
//!
//! Each even-index point maximizes the potential over a coarse quasi-uniform
//! grid, refined locally; odd-index points are the antipodes of their
//! predecessors, which is exact for greedy sequences. On the circle, ties go
//! to the smallest positive angle. On higher spheres they go to the
//! lexicographically smallest coordinate vector.

mod discrepancy;
mod divergent;
mod grid;
mod search;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exec::Exec;

pub use discrepancy::{cap_discrepancy, cap_discrepancy_with, cap_measure};
pub use divergent::{divergent_lambda2_example, DivergentExample, WeightSnapshot};

/// A unit vector in `R^{d+1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint {
    coords: Vec<f64>,
}

impl SpherePoint {
    /// Normalizes a nonzero vector with at least two coordinates.
    pub fn new(mut coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionMismatch {
                got: coords.len(),
                expected: 2,
            });
        }
        let n = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::NotOnSphere { norm: n });
        }
        coords.iter_mut().for_each(|c| *c /= n);
        Ok(SpherePoint { coords })
    }

    /// Accepts a vector whose norm is 1 within `1e-12`, then renormalizes it.
    pub fn from_unit(coords: Vec<f64>) -> Result<Self> {
        let n = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::NotOnSphere { norm: n });
        }
        SpherePoint::new(coords)
    }

    pub(crate) fn unit(coords: Vec<f64>) -> Self {
        SpherePoint::new(coords).expect("nonzero vector")
    }

    /// `(1, 0, ..., 0)` on `S^d`.
    pub fn north(d: usize) -> Self {
        let mut c = vec![0.0; d + 1];
        c[0] = 1.0;
        SpherePoint { coords: c }
    }

    /// `(cos θ, sin θ)` on the circle.
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        SpherePoint { coords: vec![c, s] }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Sphere dimension `d`.
    pub fn d(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn antipode(&self) -> Self {
        SpherePoint {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// Polar angle of the first two coordinates.
    pub fn angle(&self) -> f64 {
        self.coords[1].atan2(self.coords[0])
    }

    pub fn distance(&self, other: &SpherePoint) -> f64 {
        search::dist2(&self.coords, &other.coords).sqrt()
    }
}

/// Parameters of a numeric greedy run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GreedyConfig {
    pub d: usize,
    pub lambda: f64,
    pub n_points: usize,
    pub coarse_grid_size: usize,
    pub refine_tolerance: f64,
    pub seed_point: SpherePoint,
    pub exec: Exec,
}

const CIRCLE_GRID_CAP: usize = 1 << 21;
const SPHERE_GRID_CAP: usize = 1 << 18;

impl GreedyConfig {
    /// Defaults: grid of `4096 n` angles on the circle or `64 n²` points on
    /// `S^d` (capped), tolerance `1e-12` on the circle and `1e-10` otherwise,
    /// seed `(1, 0, ..., 0)`.
    pub fn new(d: usize, lambda: f64, n_points: usize) -> Result<Self> {
        let n = n_points.max(1);
        let (grid, tol) = if d == 1 {
            ((4096 * n).min(CIRCLE_GRID_CAP), 1e-12)
        } else {
            ((64 * n * n).min(SPHERE_GRID_CAP), 1e-10)
        };
        let cfg = GreedyConfig {
            d,
            lambda,
            n_points,
            coarse_grid_size: grid.max(64),
            refine_tolerance: tol,
            seed_point: SpherePoint::north(d),
            exec: Exec::default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_grid_size(mut self, size: usize) -> Result<Self> {
        self.coarse_grid_size = size;
        self.validate()?;
        Ok(self)
    }

    pub fn with_tolerance(mut self, tol: f64) -> Result<Self> {
        self.refine_tolerance = tol;
        self.validate()?;
        Ok(self)
    }

    pub fn with_seed(mut self, seed: SpherePoint) -> Result<Self> {
        self.seed_point = seed;
        self.validate()?;
        Ok(self)
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 1 {
            return Err(invalid("d", self.d, "must be at least 1"));
        }
        crate::specfun::Lambda::new(self.lambda)?;
        if self.coarse_grid_size < 64 {
            return Err(invalid("coarse_grid_size", self.coarse_grid_size, "must be at least 64"));
        }
        if !(self.refine_tolerance > 0.0) {
            return Err(invalid("refine_tolerance", self.refine_tolerance, "must be positive"));
        }
        if self.seed_point.d() != self.d {
            return Err(Error::DimensionMismatch {
                got: self.seed_point.coords.len(),
                expected: self.d + 1,
            });
        }
        Ok(())
    }
}

/// `U_n(x) = Σ_k |x - a_k|^λ`.
pub fn potential(points: &[SpherePoint], lambda: f64, x: &SpherePoint) -> Result<f64> {
    if points.is_empty() {
        return Err(invalid("points", 0, "must be non-empty"));
    }
    crate::specfun::Lambda::new(lambda)?;
    if let Some(p) = points.iter().find(|p| p.d() != x.d()) {
        return Err(Error::DimensionMismatch {
            got: p.coords.len(),
            expected: x.coords.len(),
        });
    }
    Ok(search::potential_at(points, lambda, &x.coords))
}

fn check_points(points: &[SpherePoint], cfg: &GreedyConfig) -> Result<()> {
    cfg.validate()?;
    if points.is_empty() {
        return Err(invalid("points", 0, "must be non-empty"));
    }
    if let Some(p) = points.iter().find(|p| p.d() != cfg.d) {
        return Err(Error::DimensionMismatch {
            got: p.coords.len(),
            expected: cfg.d + 1,
        });
    }
    Ok(())
}

/// The greedy successor of `points`.
pub fn next_point(points: &[SpherePoint], cfg: &GreedyConfig) -> Result<SpherePoint> {
    check_points(points, cfg)?;
    if points.len() % 2 == 1 {
        return Ok(points[points.len() - 1].antipode());
    }
    let mut land = search::Landscape::new(cfg);
    for p in points {
        land.add(p);
    }
    Ok(land.maximize(points, cfg))
}

/// The first `n_points` points of the greedy sequence started at `seed_point`.
pub fn generate(cfg: &GreedyConfig) -> Result<Vec<SpherePoint>> {
    cfg.validate()?;
    if cfg.n_points < 1 {
        return Err(invalid("n_points", cfg.n_points, "must be at least 1"));
    }
    let mut land = search::Landscape::new(cfg);
    let mut points = Vec::with_capacity(cfg.n_points);
    let mut next = cfg.seed_point.clone();
    while points.len() < cfg.n_points {
        land.add(&next);
        points.push(next);
        if points.len() == cfg.n_points {
            break;
        }
        next = if points.len() % 2 == 1 {
            points[points.len() - 1].antipode()
        } else {
            land.maximize(&points, cfg)
        };
    }
    Ok(points)
}

#[cfg(test)]
mod tests;
