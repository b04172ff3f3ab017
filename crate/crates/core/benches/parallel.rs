use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use greedy_energy::asymptotics::g_bar_with;
use greedy_energy::circle::{roots_energy_with, second_order_series_with};
use greedy_energy::numeric::{cap_discrepancy_with, generate, GreedyConfig};
use greedy_energy::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn circle(c: &mut Criterion) {
    let mut g = c.benchmark_group("roots_energy");
    for (name, ex) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 1 << 20), &ex, |b, &ex| {
            b.iter(|| roots_energy_with(black_box(1.5), 1 << 20, ex).unwrap())
        });
    }
    g.finish();
    let mut g = c.benchmark_group("second_order_series");
    for (name, ex) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 1 << 16), &ex, |b, &ex| {
            b.iter(|| second_order_series_with(black_box(0.5), 1 << 16, ex).unwrap())
        });
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("g_bar");
    g.sample_size(10);
    for (name, ex) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 1 << 18), &ex, |b, &ex| {
            b.iter(|| g_bar_with(black_box(0.5), 1 << 18, ex).unwrap())
        });
    }
    g.finish();
}

fn sphere(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate_s2");
    g.sample_size(10);
    for (name, ex) in MODES {
        let cfg = GreedyConfig::new(2, 0.8, 64).unwrap().with_exec(ex);
        g.bench_with_input(BenchmarkId::new(name, 64), &cfg, |b, cfg| b.iter(|| generate(cfg).unwrap()));
    }
    g.finish();
    let pts = generate(&GreedyConfig::new(2, 0.8, 256).unwrap()).unwrap();
    let mut g = c.benchmark_group("cap_discrepancy");
    g.sample_size(10);
    for (name, ex) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 256), &ex, |b, &ex| {
            b.iter(|| cap_discrepancy_with(&pts, 4096, ex).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, circle, enumeration, sphere);
criterion_main!(benches);
