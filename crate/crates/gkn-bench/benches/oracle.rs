use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use gkn_core::oracle::{exact_rank, independent_conditions, random_configuration};

fn bench_oracle(c: &mut Criterion) {
    // One trial of the (n, k) = (7, 1) capacity experiment.
    let simple = random_configuration(3, 10, 1, 1000, 1).unwrap();
    c.bench_function("rank 10 simple points degree 3", |b| {
        b.iter(|| independent_conditions(black_box(&simple)))
    });

    // The double-cubic residual computation.
    let doubles = random_configuration(6, 9, 2, 1000, 1).unwrap();
    c.bench_function("rank 9 double points degree 6", |b| {
        b.iter(|| independent_conditions(black_box(&doubles)))
    });

    let matrix = doubles.evaluation_matrix();
    c.bench_function("bareiss 27x28 jet matrix", |b| {
        b.iter(|| exact_rank(black_box(&matrix)))
    });

    c.bench_function("build 27x28 jet matrix", |b| {
        b.iter(|| black_box(&doubles).evaluation_matrix())
    });
}

criterion_group!(benches, bench_oracle);
criterion_main!(benches);
