use super::*;
use crate::specfun::{continuous_energy, second_order_constant};
use proptest::prelude::*;

const LAMBDAS: [f64; 6] = [0.1, 0.3, 0.5, 1.0, 1.5, 1.9];

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn turns(xs: &[DyadicAngle]) -> Vec<String> {
    xs.iter().map(|a| a.to_string()).collect()
}

/// Twice the sum over pairs of chord powers.
fn pairwise_energy(lambda: f64, pts: &[DyadicAngle]) -> f64 {
    let mut s = 0.0;
    for i in 0..pts.len() {
        for j in 0..i {
            s += chord(pts[i], pts[j]).powf(lambda);
        }
    }
    2.0 * s
}

#[test]
fn canonical_prefix() {
    let seq = canonical_sequence(8).unwrap();
    assert_eq!(turns(&seq), ["0", "1/2", "1/4", "3/4", "1/8", "5/8", "3/8", "7/8"]);
    assert_eq!(seq[5], seq[4].antipode());
    assert!(canonical_sequence(0).is_err());
}

#[test]
fn dyadic_prefixes_are_roots_of_unity() {
    let seq = canonical_sequence(1 << 10).unwrap();
    for m in 0..=10 {
        let mut nums: Vec<u64> = seq[..1 << m]
            .iter()
            .map(|a| a.numerator() << (m - a.level()))
            .collect();
        nums.sort_unstable();
        assert_eq!(nums, (0..1u64 << m).collect::<Vec<_>>());
    }
    for k in 0..512 {
        assert_eq!(seq[2 * k + 1], seq[2 * k].antipode());
    }
}

#[test]
fn dyadic_angle_reduces() {
    let a = DyadicAngle::new(4, 4).unwrap();
    assert_eq!((a.numerator(), a.level()), (1, 2));
    assert_eq!(DyadicAngle::new(0, 7).unwrap(), DyadicAngle::van_der_corput(0));
    assert!(DyadicAngle::new(8, 3).is_err());
    assert_eq!(DyadicAngle::van_der_corput(0).antipode().to_string(), "1/2");
}

#[test]
fn chord_examples() {
    let zero = DyadicAngle::van_der_corput(0);
    let half = DyadicAngle::new(1, 1).unwrap();
    let quarter = DyadicAngle::new(1, 2).unwrap();
    assert_eq!(chord(zero, half), 2.0);
    assert!((chord(zero, quarter) - 2f64.sqrt()).abs() < 1e-15);
    assert_eq!(chord(quarter, quarter), 0.0);
    let far = DyadicAngle::new((1 << 40) + 1, 41).unwrap();
    assert!(rel(chord(far, half), 2.0 * (PI / (1u64 << 41) as f64).sin()) < 1e-15);
}

#[test]
fn roots_energy_examples() {
    for l in LAMBDAS {
        assert_eq!(roots_energy(l, 1).unwrap(), 0.0);
        assert!(rel(roots_energy(l, 2).unwrap(), 2f64.powf(l + 1.0)) < 1e-15);
    }
    assert!((roots_energy(2.0, 4).unwrap() - 32.0).abs() < 1e-12);
    assert!(roots_energy(2.1, 4).is_err());
    assert!(roots_energy(0.5, 0).is_err());
}

#[test]
fn roots_energy_matches_pairwise() {
    for l in LAMBDAS {
        for n in [16u64, 64] {
            let pts = canonical_sequence(n as usize).unwrap();
            assert!(rel(roots_energy(l, n).unwrap(), pairwise_energy(l, &pts)) < 1e-12);
        }
        for n in [3u64, 5, 33, 100] {
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..i {
                    s += (2.0 * (PI * (i - j) as f64 / n as f64).sin()).powf(l);
                }
            }
            assert!(rel(roots_energy(l, n).unwrap(), 2.0 * s) < 1e-12);
        }
    }
}

#[test]
fn midpoint_routes_agree() {
    for l in LAMBDAS {
        assert!(rel(midpoint_potential(l, 1).unwrap(), 2f64.powf(l)) < 1e-15);
        for n in [1u64, 2, 3, 7, 64, 1000, 4096] {
            let a = midpoint_potential(l, n).unwrap();
            let b = midpoint_potential_from_roots(l, n).unwrap();
            assert!(rel(a, b) < 1e-12, "lambda {l}, N {n}");
        }
    }
    let i = continuous_energy(0.7, 1).unwrap();
    assert!(rel(midpoint_potential(0.7, 1 << 16).unwrap() / (1 << 16) as f64, i) < 1e-5);
}

#[test]
fn greedy_energy_examples() {
    assert!((greedy_energy_exact(2.0, 3).unwrap() - 16.0).abs() < 1e-12);
    for l in LAMBDAS {
        for n in 1..12 {
            let a = greedy_energy_exact(l, 1 << n).unwrap();
            assert!(rel(a, roots_energy(l, 1 << n).unwrap()) < 1e-15);
        }
    }
    assert!(greedy_energy_exact(0.5, 1).is_err());
}

#[test]
fn greedy_formulas_match_brute_force() {
    let seq = canonical_sequence(200).unwrap();
    for l in LAMBDAS {
        for n in 2..150usize {
            let h = pairwise_energy(l, &seq[..n]);
            assert!(rel(greedy_energy_exact(l, n as u64).unwrap(), h) < 1e-11, "lambda {l}, N {n}");
            let u: f64 = (0..n).map(|k| chord(seq[n], seq[k]).powf(l)).sum();
            assert!(rel(greedy_extremal_potential(l, n as u64).unwrap(), u) < 1e-11);
        }
    }
}

#[test]
fn extremal_potential_examples() {
    for l in LAMBDAS {
        assert!(rel(greedy_extremal_potential(l, 1).unwrap(), 2f64.powf(l)) < 1e-15);
        for n in 1..14 {
            let m = 1u64 << n;
            let lhs = greedy_extremal_potential(l, m - 1).unwrap();
            assert!(rel(lhs, roots_energy(l, m).unwrap() / m as f64) < 1e-12);
        }
    }
}

#[test]
fn r_lambda_regression_value() {
    // (L(4) - 16 I) / 4^{1/2} with L(4) = 15.17051116951414873, I = 1.07870520237675871
    let r = r_lambda(0.5, 4).unwrap();
    assert!((r + 1.044_386_034_256_995_3).abs() < 1e-13);
    assert!((r_lambda_direct(0.5, 4).unwrap() - r).abs() < 1e-13);
    assert!((r_lambda(1.5, 3).unwrap() + 0.843_586_419_641_077_8).abs() < 1e-13);
    assert!((r_lambda(1.5, 100).unwrap() + 0.802_798_496_261_648_8).abs() < 1e-13);
}

#[test]
fn r_lambda_at_one_is_minus_energy() {
    for l in LAMBDAS {
        assert!(rel(r_lambda(l, 1).unwrap(), -continuous_energy(l, 1).unwrap()) < 1e-13);
    }
}

#[test]
fn r_lambda_spectral_matches_direct() {
    for l in LAMBDAS {
        for n in (1..=300u64).chain([511, 512, 1000, 2048]) {
            let a = r_lambda(l, n).unwrap();
            let b = r_lambda_direct(l, n).unwrap();
            let slack = 1e-14 * (n as f64).powf(1.0 + l) + 1e-13;
            assert!((a - b).abs() < slack, "lambda {l}, N {n}: {a} vs {b}");
        }
    }
}

#[test]
fn r_lambda_negative_and_convergent() {
    for k in 1..20 {
        let l = k as f64 / 10.0;
        for n in 1..=4096 {
            assert!(r_lambda(l, n).unwrap() < 0.0);
        }
        let c = second_order_constant(l).unwrap();
        assert!((r_lambda(l, 1 << 20).unwrap() - c).abs() < 1e-9, "lambda {l}");
    }
    assert!((r_lambda(1.0, 1 << 16).unwrap() + PI / 3.0).abs() < 1e-8);
}

#[test]
fn deficit_forms_match_direct_differences() {
    let seq = canonical_sequence(300).unwrap();
    for l in LAMBDAS {
        let i = continuous_energy(l, 1).unwrap();
        let table = PowerTable::new(l, 10).unwrap();
        for n in 1..260u64 {
            let nf = n as f64;
            let h = if n >= 2 { greedy_energy_exact(l, n).unwrap() } else { 0.0 };
            assert!((table.energy_deficit(n).unwrap() - (h - nf * nf * i)).abs() < 1e-10 * nf * nf);
            let u: f64 = (0..n as usize).map(|k| chord(seq[n as usize], seq[k]).powf(l)).sum();
            assert!((table.potential_excess(n).unwrap() - (u - nf * i)).abs() < 1e-11 * nf);
        }
        assert!(table.energy_deficit(1 << 12).is_err());
    }
}

#[test]
fn series_at_powers_of_two_equals_r() {
    for l in [0.2, 0.5, 0.9] {
        let rows = second_order_series(l, 1 << 12).unwrap();
        for n in 1..=12u32 {
            let row = &rows[(1usize << n) - 2];
            assert_eq!(row.index, 1 << n);
            assert!((row.second_order - r_lambda(l, 1 << n).unwrap()).abs() < 1e-12);
        }
    }
    assert!(second_order_series(0.5, 1).is_err());
    assert!(second_order_series(2.0, 10).is_err());
}

#[test]
fn potential_excess_bounds() {
    for l in LAMBDAS {
        let i = continuous_energy(l, 1).unwrap();
        for row in second_order_series(l, 2000).unwrap() {
            assert!(row.potential_excess > 0.0 && row.potential_excess < i, "lambda {l}, N {}", row.index);
            assert!(row.potential_value >= 0.0 && row.energy >= 0.0);
        }
    }
}

#[test]
fn monotone_potentials_and_odd_jump() {
    let seq = canonical_sequence(514).unwrap();
    for l in LAMBDAS {
        let u: Vec<f64> = (1..=513u64).map(|n| greedy_extremal_potential(l, n).unwrap()).collect();
        // u[n-1] = U_n(a_n)
        for n in 1..512usize {
            let (un, un1) = (u[n - 1], u[n]);
            assert!(un <= un1 * (1.0 + 1e-13));
            assert!(un1 <= (un + chord(seq[n + 1], seq[n]).powf(l)) * (1.0 + 1e-13));
        }
        for k in 1..=256usize {
            assert!((u[2 * k] - u[2 * k - 1] - 2f64.powf(l)).abs() < 1e-12 * u[2 * k]);
        }
    }
}

#[test]
fn energy_sandwich() {
    for l in LAMBDAS {
        let i = continuous_energy(l, 1).unwrap();
        let table = PowerTable::new(l, 12).unwrap();
        for n in 2..=4096u64 {
            let nf = n as f64;
            let d = table.energy_deficit(n).unwrap();
            assert!(d < 0.0 && d > -nf * i, "lambda {l}, N {n}");
        }
    }
}

#[test]
fn kappa_regimes() {
    assert_eq!(kappa(0.5, 16), 4.0);
    assert_eq!(kappa(1.0, 1), 0.0);
    assert!((kappa(1.0, 8) - 8f64.ln()).abs() < 1e-15);
    assert_eq!(kappa(1.5, 1000), 1.0);
}

proptest! {
    #[test]
    fn chord_is_symmetric_and_bounded(a in 0u64..1 << 20, b in 0u64..1 << 20) {
        let (x, y) = (DyadicAngle::new(a, 20).unwrap(), DyadicAngle::new(b, 20).unwrap());
        prop_assert_eq!(chord(x, y), chord(y, x));
        prop_assert!((0.0..=2.0).contains(&chord(x, y)));
        prop_assert!((chord(x, y.antipode()).powi(2) + chord(x, y).powi(2) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn van_der_corput_is_reduced(n in 1u64..1 << 63) {
        let a = DyadicAngle::van_der_corput(n);
        prop_assert_eq!(a.numerator() % 2, 1);
        prop_assert!(a.numerator() < 1u64 << a.level());
    }
}
