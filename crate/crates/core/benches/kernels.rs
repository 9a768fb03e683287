use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use kocay::covering::{kocay_check_with, union_classes_with, CoverSequence};
use kocay::graph::enumerate_graphs_with;
use kocay::sweep::{self, Suite};
use kocay::{Execution, Graph};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_graphs_7");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| enumerate_graphs_with(black_box(7), exec).unwrap()));
    }
    group.finish();
}

fn kocay_identity(c: &mut Criterion) {
    let g = Graph::complete(7);
    let seq = CoverSequence::new(vec![Graph::path(3), Graph::path(3), Graph::complete(2)]).unwrap();
    let mut group = c.benchmark_group("kocay_check_k7_p3_p3_k2");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| kocay_check_with(black_box(&g), &seq, exec)));
    }
    group.finish();
}

fn unions(c: &mut Criterion) {
    let seq = CoverSequence::new(vec![Graph::matching(3), Graph::matching(3)]).unwrap();
    let mut group = c.benchmark_group("union_classes_3k2_3k2");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| union_classes_with(black_box(&seq), 7, exec)));
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for suite in [Suite::Kelly, Suite::Path, Suite::Tree, Suite::Recoloring] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(suite.as_str(), name), &exec, |b, &exec| {
                b.iter(|| sweep::run(suite, 6, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration, kocay_identity, unions, sweeps);
criterion_main!(benches);
