use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use phi_core::invariants::{phi_components, phi_delcont, phi_direct, phi_eulerian, psi};
use phi_core::{EvalCache, EvalOptions, Graph};

fn random_graph(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for j in 0..n {
        for i in 0..j {
            if rng.random_bool(density) {
                g.set_edge(i, j, true).unwrap();
            }
        }
    }
    g
}

fn evaluators(c: &mut Criterion) {
    let opts = EvalOptions::sequential();
    let mut group = c.benchmark_group("phi");
    for &n in &[6usize, 8, 10, 12] {
        let g = random_graph(n, 0.3, n as u64);
        let id = format!("n={n},m={}", g.edge_count());
        if g.edge_count() <= opts.max_direct_edges {
            group.bench_with_input(BenchmarkId::new("direct", &id), &g, |b, g| {
                b.iter(|| phi_direct(black_box(g), &opts).unwrap())
            });
            group.bench_with_input(BenchmarkId::new("components", &id), &g, |b, g| {
                b.iter(|| phi_components(black_box(g), &opts).unwrap())
            });
        }
        group.bench_with_input(BenchmarkId::new("eulerian", &id), &g, |b, g| {
            b.iter(|| phi_eulerian(black_box(g), &opts).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("delcont", &id), &g, |b, g| {
            // a fresh cache each time: memoization across iterations would
            // measure lookups only
            b.iter(|| phi_delcont(black_box(g), &EvalCache::new()))
        });
        group.bench_with_input(BenchmarkId::new("psi", &id), &g, |b, g| {
            b.iter(|| psi(black_box(g), &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, evaluators);
criterion_main!(benches);
