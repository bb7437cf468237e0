//! Parallel vs sequential grid evaluation on a small temperature sweep.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use qpurity::sweep::{preset, run_grid, run_grid_sequential};

fn bench_grid(c: &mut Criterion) {
    let mut cfg = preset("fig3").unwrap();
    cfg.sweep.as_mut().unwrap().points = 8;
    let grid = cfg.grid();

    let mut group = c.benchmark_group("temperature_sweep_8pt");
    group.sample_size(10);
    group.bench_function("default", |b| {
        b.iter(|| run_grid(black_box(&cfg), black_box(&grid)).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| run_grid_sequential(black_box(&cfg), black_box(&grid)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_grid);
criterion_main!(benches);
