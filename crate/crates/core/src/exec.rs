//! Execution mode for the data-parallel kernels.
//!
//! Every reduction uses the same fixed block partition in both modes, so
//! sequential and parallel runs produce bitwise identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

const BLOCK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work is actually spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Deterministic sum of `f(i)` for `i` in `0..n`.
    pub fn sum<F>(self, n: usize, f: F) -> f64
    where
        F: Fn(usize) -> f64 + Sync + Send,
    {
        let blocks = n.div_ceil(BLOCK);
        let block_sum = |b: usize| {
            let lo = b * BLOCK;
            let hi = (lo + BLOCK).min(n);
            let vals: Vec<f64> = (lo..hi).map(&f).collect();
            pairwise_sum(&vals)
        };
        let partial = self.map(blocks, block_sum);
        pairwise_sum(&partial)
    }

    /// `(0..n).map(f).collect()` preserving order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Applies `f` to every element of `data` in place.
    pub fn for_each_mut<T, F>(self, data: &mut [T], f: F)
    where
        T: Send,
        F: Fn(usize, &mut T) + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            data.par_iter_mut().enumerate().for_each(|(i, x)| f(i, x));
            return;
        }
        data.iter_mut().enumerate().for_each(|(i, x)| f(i, x));
    }

    /// Index maximizing `key` over `0..n`; ties go to the smaller index.
    pub fn argmax<F>(self, n: usize, key: F) -> Option<(usize, f64)>
    where
        F: Fn(usize) -> f64 + Sync + Send,
    {
        let blocks = n.div_ceil(BLOCK);
        let best_in = |b: usize| {
            let lo = b * BLOCK;
            let hi = (lo + BLOCK).min(n);
            let mut best: Option<(usize, f64)> = None;
            for i in lo..hi {
                let v = key(i);
                if best.is_none_or(|(_, bv)| v > bv) {
                    best = Some((i, v));
                }
            }
            best
        };
        self.map(blocks, best_in)
            .into_iter()
            .flatten()
            .fold(None, |acc: Option<(usize, f64)>, (i, v)| match acc {
                Some((_, bv)) if v <= bv => acc,
                _ => Some((i, v)),
            })
    }
}

/// Pairwise (tree) summation.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 16 {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}
