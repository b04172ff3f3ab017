use greedy_energy::asymptotics::{g_bar, G_BAR_BOUND};
use greedy_energy::circle::{canonical_sequence, second_order_series};
use greedy_energy::numeric::{cap_discrepancy, generate, GreedyConfig};
use greedy_energy::specfun::{continuous_energy, second_order_constant};

/// Tanh-sinh quadrature over (-1, 1); `f` receives `1 - x` and `1 + x`.
fn tanh_sinh(f: impl Fn(f64, f64) -> f64) -> f64 {
    let h = 1.0 / 256.0;
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut sum = 0.0;
    for k in -2048i32..=2048 {
        let t = k as f64 * h;
        let u = half_pi * t.sinh();
        // 1 ∓ x as e^{∓u}/cosh(u) to keep endpoint resolution
        let one_minus = (-u).exp() / u.cosh();
        let one_plus = u.exp() / u.cosh();
        let w = half_pi * t.cosh() / (u.cosh() * u.cosh());
        if w < 1e-300 || one_minus == 0.0 || one_plus == 0.0 {
            continue;
        }
        sum += w * f(one_minus, one_plus);
    }
    h * sum
}

/// Mean of `|x - y|^λ` over `S^d × S^d`, from the density of `t = <x, y>`.
fn energy_by_quadrature(lambda: f64, d: u32) -> f64 {
    let e = (d as f64 - 2.0) / 2.0;
    let num = tanh_sinh(|m, p| (2.0 * m).powf(lambda / 2.0) * (m * p).powf(e));
    let den = tanh_sinh(|m, p| (m * p).powf(e));
    num / den
}

#[test]
fn continuous_energy_matches_quadrature() {
    for d in 1..=5 {
        for l in [0.1, 0.5, 1.0, 1.5, 1.9] {
            let q = energy_by_quadrature(l, d);
            let c = continuous_energy(l, d).unwrap();
            assert!((q - c).abs() < 1e-9 * c, "d = {d}, lambda = {l}: {q} vs {c}");
        }
    }
}

/// Greedy on the `2^level` roots of unity, ties to the smallest angle.
fn grid_greedy(lambda: f64, level: u32, count: usize) -> Vec<u64> {
    let g = 1u64 << level;
    let chord = |i: u64, j: u64| {
        let k = i.abs_diff(j);
        2.0 * (std::f64::consts::PI * k as f64 / g as f64).sin()
    };
    let mut chosen = vec![0u64];
    let mut field = vec![0.0f64; g as usize];
    while chosen.len() < count {
        let last = *chosen.last().unwrap();
        for (i, v) in field.iter_mut().enumerate() {
            *v += chord(i as u64, last).powf(lambda);
        }
        let best = field.iter().cloned().fold(f64::MIN, f64::max);
        let pick = field.iter().position(|&v| v >= best * (1.0 - 1e-12)).unwrap();
        chosen.push(pick as u64);
    }
    chosen
}

#[test]
fn grid_greedy_reproduces_canonical_sequence() {
    let level = 16;
    let exact = canonical_sequence(16).unwrap();
    for l in [0.5, 1.0, 1.5] {
        let picks = grid_greedy(l, level, 16);
        for (p, a) in picks.iter().zip(&exact) {
            assert_eq!(*p as f64 / (1u64 << level) as f64, a.turn(), "lambda = {l}");
        }
    }
}

#[test]
fn empirical_liminf_respects_g_bar_bound() {
    for l in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let bound = g_bar(l, G_BAR_BOUND).unwrap().value * second_order_constant(l).unwrap();
        let rows = second_order_series(l, 1 << 14).unwrap();
        let low = rows.iter().map(|r| r.second_order).fold(f64::INFINITY, f64::min);
        assert!(low >= bound - 0.02, "lambda = {l}: {low} < {bound}");
    }
}

#[test]
fn g_bar_regression() {
    let g = g_bar(0.5, 1 << 20).unwrap();
    assert!((g.value - 1.3933514245).abs() < 1e-9, "{}", g.value);
    assert_eq!(g.witness, 699051);
    assert_eq!(format!("{:b}", g.witness), "10101010101010101011");
    let g = g_bar(0.1, 1 << 20).unwrap();
    assert!((g.value - 1.0345150200).abs() < 1e-9, "{}", g.value);
}

#[test]
fn discrepancy_decreases_on_two_sphere() {
    let pts = generate(&GreedyConfig::new(2, 0.5, 512).unwrap()).unwrap();
    let small = cap_discrepancy(&pts[..64], 2048).unwrap();
    let large = cap_discrepancy(&pts, 2048).unwrap();
    assert!(large < small, "{large} vs {small}");
}
