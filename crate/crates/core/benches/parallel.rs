//! Sequential against rayon execution for the same work. Without the
//! `parallel` feature both variants run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use phi_core::invariants::phi_eulerian;
use phi_core::relations::{delcont_sweep, four_t_sweep};
use phi_core::{EvalOptions, Exec, Graph};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn eulerian(c: &mut Criterion) {
    let mut group = c.benchmark_group("eulerian");
    group.sample_size(10);
    for &n in &[18usize, 20] {
        let g = Graph::cycle(n).pivot(0, n / 2).unwrap();
        for (name, exec) in MODES {
            let opts = EvalOptions {
                exec,
                ..EvalOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| phi_eulerian(black_box(g), &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("delcont", name), |b| {
            b.iter(|| delcont_sweep(black_box(6), exec).unwrap())
        });
        group.bench_function(BenchmarkId::new("fourT", name), |b| {
            b.iter(|| four_t_sweep(black_box(5), 8, 500, 1, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, eulerian, sweeps);
criterion_main!(benches);
