use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use symcubic::boundary::bb_verdict;
use symcubic::jacobian::{hilbert_function, smoothness_certificate, RankConfig, SampleConfig};
use symcubic::lattice::{isotropic_vectors, IntegralLattice};
use symcubic::moduli::{analyze, classify_all};
use symcubic::symmetry::eigenspace_basis;
use symcubic_bench::{order_eleven_type, order_three_type, smooth_member};

fn bench_eigenspace(c: &mut Criterion) {
    let sym = order_three_type();
    c.bench_function("eigenspace_basis_degree7", |b| {
        b.iter(|| eigenspace_basis(black_box(&sym), 7))
    });
}

fn bench_certificate(c: &mut Criterion) {
    let sym = order_three_type();
    let f = smooth_member(&sym);
    let cfg = RankConfig::default();
    c.bench_function("smoothness_certificate_order3", |b| {
        b.iter(|| smoothness_certificate(black_box(&f), Some(&sym), &cfg).unwrap())
    });
}

fn bench_hilbert(c: &mut Criterion) {
    let sym = order_three_type();
    let f = smooth_member(&sym);
    let cfg = RankConfig::default();
    c.bench_function("hilbert_function_order3", |b| {
        b.iter(|| hilbert_function(black_box(&f), Some(&sym), &cfg).unwrap())
    });
}

fn bench_analyze(c: &mut Criterion) {
    let sym = order_three_type();
    let cfg = RankConfig::default();
    let sample = SampleConfig::default();
    c.bench_function("analyze_order3", |b| {
        b.iter(|| analyze(black_box(&sym), 42, &cfg, &sample).unwrap())
    });
}

fn bench_bb_search(c: &mut Criterion) {
    let sym = order_eleven_type();
    c.bench_function("bb_search_order11", |b| {
        b.iter(|| bb_verdict(black_box(&sym)).unwrap())
    });
}

fn bench_classify_small(c: &mut Criterion) {
    let cfg = RankConfig::default();
    let sample = SampleConfig::default();
    let mut group = c.benchmark_group("classify");
    group.sample_size(10);
    group.bench_function("classify_order2", |b| {
        b.iter(|| classify_all(&[2], 42, &cfg, &sample).unwrap())
    });
    group.finish();
}

fn bench_isotropic(c: &mut Criterion) {
    let l = IntegralLattice::hyperbolic_plane()
        .direct_sum(&IntegralLattice::hyperbolic_plane());
    c.bench_function("isotropic_vectors_rank4_h10", |b| {
        b.iter(|| isotropic_vectors(black_box(&l), 10).unwrap())
    });
}

criterion_group!(
    benches,
    bench_eigenspace,
    bench_certificate,
    bench_hilbert,
    bench_analyze,
    bench_bb_search,
    bench_classify_small,
    bench_isotropic
);
criterion_main!(benches);
