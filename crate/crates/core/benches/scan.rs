use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use multideg::hypergeom::{draw_beta, scan_beta, scan_beta_sequential};
use multideg::Rational;

fn betas() -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = [[2, 10], [2, 12], [3, 19]].iter().map(|b| b.iter().map(|&x| Rational::from_integer(x)).collect()).collect();
    out.extend((0..5).map(|s| draw_beta(2, s)));
    out
}

fn scan(c: &mut Criterion) {
    let a = vec![vec![1, 1, 1, 1, 1], vec![0, 2, 4, 7, 9]];
    let betas = betas();
    let mut group = c.benchmark_group("scan_beta");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| scan_beta_sequential(black_box(&a), black_box(&betas), 1).unwrap()));
    group.bench_function("parallel", |b| b.iter(|| scan_beta(black_box(&a), black_box(&betas), 1).unwrap()));
    group.finish();
}

criterion_group!(benches, scan);
criterion_main!(benches);
