//! Parallel against sequential exhaustive sums.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dellac::sums::{e_poly, e_poly_seq, odd_poly, odd_poly_seq};

fn even(c: &mut Criterion) {
    let mut g = c.benchmark_group("even_sum");
    g.sample_size(10);
    for n in [5, 6] {
        g.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| b.iter(|| e_poly(black_box(n)).unwrap()));
        g.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| b.iter(|| e_poly_seq(black_box(n)).unwrap()));
    }
    g.finish();
}

fn odd(c: &mut Criterion) {
    let mut g = c.benchmark_group("odd_sum");
    g.sample_size(10);
    for n in [5, 6] {
        g.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| b.iter(|| odd_poly(black_box(n)).unwrap()));
        g.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| b.iter(|| odd_poly_seq(black_box(n)).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, even, odd);
criterion_main!(benches);
