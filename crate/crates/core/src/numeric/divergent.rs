//! A greedy `λ = 2` sequence on `S^2` whose counting measures do not converge.
//!
//! With atoms `y_0 = e_1`, `y_1 = -e_1`, `y_2 = e_2`, `y_3 = -e_2`, take
//! `a_i = y_i` for `i < 4`. For `m >= 2` the next `2^{m-1}` points alternate
//! `y_0, y_1` and the following `2^{m-1}` alternate `y_2, y_3`. Every odd
//! point is the antipode of its predecessor, so each even-index potential is
//! constant and every choice is greedy.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

const ATOMS: [[f64; 3]; 4] = [[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, -1.0, 0.0]];

/// Counting-measure weights of the four atoms after `n` points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSnapshot {
    pub n: u64,
    pub weights: [Ratio<u64>; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivergentExample {
    /// Atom index of each point.
    pub sequence: Vec<usize>,
    /// Snapshots at `N = 2^m` (`2 <= m <= m_max`) and `N = 3·2^{m-1}` (`2 <= m < m_max`), in increasing `N`.
    pub snapshots: Vec<WeightSnapshot>,
}

impl DivergentExample {
    pub fn atoms() -> [[f64; 3]; 4] {
        ATOMS
    }

    pub fn point(&self, i: usize) -> [f64; 3] {
        ATOMS[self.sequence[i]]
    }

    /// True when every odd point is the antipode of its predecessor.
    pub fn antipodal_pairs(&self) -> bool {
        self.sequence.chunks(2).all(|p| p.len() < 2 || p[1] == p[0] ^ 1)
    }

    /// Largest relative spread of `U_n` over `samples` random points, over all even `n`.
    pub fn potential_spread(&self, samples: usize, seed: u64) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let xs: Vec<[f64; 3]> = (0..samples).map(|_| random_unit(&mut rng)).collect();
        let mut counts = [0u64; 4];
        let mut worst: f64 = 0.0;
        for (n, &atom) in self.sequence.iter().enumerate() {
            if n % 2 == 0 && n > 0 {
                let vals: Vec<f64> = xs.iter().map(|x| counted_potential(&counts, x)).collect();
                let max = vals.iter().cloned().fold(f64::MIN, f64::max);
                let min = vals.iter().cloned().fold(f64::MAX, f64::min);
                worst = worst.max((max - min) / max);
            }
            counts[atom] += 1;
        }
        worst
    }
}

fn counted_potential(counts: &[u64; 4], x: &[f64; 3]) -> f64 {
    ATOMS
        .iter()
        .zip(counts)
        .map(|(a, &c)| c as f64 * a.iter().zip(x).map(|(u, v)| (u - v) * (u - v)).sum::<f64>())
        .sum()
}

fn random_unit(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let v = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
        let n2: f64 = v.iter().map(|c| c * c).sum();
        if n2 > 1e-4 && n2 <= 1.0 {
            let n = n2.sqrt();
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

pub fn divergent_lambda2_example(m_max: u32) -> Result<DivergentExample> {
    if !(2..=40).contains(&m_max) {
        return Err(invalid("m_max", m_max, "must lie in 2..=40"));
    }
    let mut sequence = vec![0, 1, 2, 3];
    let mut snapshots = Vec::new();
    let mut counts = [0u64; 4];
    counts.iter_mut().for_each(|c| *c = 1);
    let snap = |counts: &[u64; 4]| {
        let n: u64 = counts.iter().sum();
        WeightSnapshot {
            n,
            weights: counts.map(|c| Ratio::new(c, n)),
        }
    };
    snapshots.push(snap(&counts));
    for m in 2..m_max {
        let half = 1usize << (m - 1);
        for pair in [(0, 1), (2, 3)] {
            for i in 0..half {
                let atom = if i % 2 == 0 { pair.0 } else { pair.1 };
                sequence.push(atom);
                counts[atom] += 1;
            }
            snapshots.push(snap(&counts));
        }
    }
    Ok(DivergentExample { sequence, snapshots })
}
