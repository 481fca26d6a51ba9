use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use kekule_bench::{members, named};
use kekule_core::matching::classify_edges;
use kekule_core::maximum_matching;
use kekule_core::spanning::{all_spanning_trees, DEFAULT_TREE_CAP};

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximum_matching");
    for (name, g) in named() {
        group.bench_with_input(BenchmarkId::new("named", name), &g, |b, g| b.iter(|| maximum_matching(black_box(g))));
    }
    for (n, g) in members(&[16, 64]) {
        group.bench_with_input(BenchmarkId::new("member", n), &g, |b, g| b.iter(|| maximum_matching(black_box(g))));
    }
    group.finish();

    let petersen = kekule_core::graph::petersen();
    c.bench_function("classify_edges/petersen", |b| b.iter(|| classify_edges(black_box(&petersen))));
    let k6 = kekule_core::complete(6).unwrap();
    c.bench_function("spanning_trees/k6", |b| b.iter(|| all_spanning_trees(black_box(&k6), DEFAULT_TREE_CAP)));
}

criterion_group!(benches, matching);
criterion_main!(benches);
