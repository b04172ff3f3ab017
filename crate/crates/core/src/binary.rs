//! Binary decomposition `N = 2^{n_1} + ... + 2^{n_p}` with `n_1 > ... > n_p`.

use crate::error::{invalid, Result};

/// Set-bit exponents of `N`, most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryRep {
    exponents: Vec<u32>,
}

impl BinaryRep {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of ones in the binary expansion.
    pub fn tau(&self) -> usize {
        self.exponents.len()
    }

    pub fn value(&self) -> u64 {
        self.exponents.iter().map(|&e| 1u64 << e).sum()
    }
}

pub fn decompose(n: u64) -> Result<BinaryRep> {
    if n < 1 {
        return Err(invalid("N", n, "must be at least 1"));
    }
    let exponents = (0..64).rev().filter(|&b| n >> b & 1 == 1).collect();
    Ok(BinaryRep { exponents })
}

/// Evaluates the right-hand side of the binary square identity in integers and
/// compares it with `N^2`.
pub fn square_identity_check(n: u64) -> Result<bool> {
    if n < 2 {
        return Err(invalid("N", n, "must be at least 2"));
    }
    if n > 1 << 31 {
        return Err(invalid("N", n, "must not exceed 2^31"));
    }
    let e: Vec<i128> = decompose(n)?.exponents.iter().map(|&x| x as i128).collect();
    let p = e.len();
    let mut rhs: i128 = 0;
    for k in 0..p {
        // sum_{j>k} 2^{n_j - n_k} 2^{2(n_k+1)} = sum_{j>k} 2^{n_j + n_k + 2}
        let upper: i128 = e[k + 1..].iter().map(|&nj| 1i128 << (nj + e[k] + 2)).sum();
        // (1 - sum_{j>k} 2^{n_j - n_k + 1}) 2^{2 n_k}
        let lower: i128 = (1i128 << (2 * e[k]))
            - e[k + 1..].iter().map(|&nj| 1i128 << (nj + e[k] + 1)).sum::<i128>();
        rhs += upper + lower;
    }
    Ok(rhs == (n as i128) * (n as i128))
}

/// Checks `sum_{j>k} 2^{n_j - n_k} < 1` for every `k`, in integers.
pub fn geometric_bound_holds(n: u64) -> Result<bool> {
    let e = decompose(n)?.exponents;
    Ok((0..e.len()).all(|k| e[k + 1..].iter().map(|&nj| 1u64 << nj).sum::<u64>() < 1u64 << e[k]))
}

/// `N_r(p) = (2^{rp} - 1)/(2^r - 1)`, the number with `p` ones spaced `r` apart.
pub fn spaced_ones(r: u32, p: u32) -> Result<u64> {
    if r < 1 || p < 1 || r * p > 63 {
        return Err(invalid("r*p", r * p, "need r, p >= 1 and r p <= 63"));
    }
    Ok(((1u64 << (r * p)) - 1) / ((1u64 << r) - 1))
}
