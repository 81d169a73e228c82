use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use contraction_bench::{path_instances, tree_instances};
use contraction_core::kernel::kernelize;
use contraction_core::path::solve_path;
use contraction_core::tree::solve_tree;
use contraction_core::Mode;

fn path(c: &mut Criterion) {
    let mut group = c.benchmark_group("path");
    group.sample_size(10);
    for inst in path_instances() {
        group.bench_with_input(BenchmarkId::new("deterministic", &inst.name), &inst, |b, i| {
            b.iter(|| solve_path(black_box(&i.graph), i.k, Mode::Deterministic).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("randomized", &inst.name), &inst, |b, i| {
            b.iter(|| solve_path(black_box(&i.graph), i.k, Mode::Randomized(3)).unwrap())
        });
    }
    group.finish();
}

fn kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernel");
    for inst in path_instances() {
        group.bench_with_input(BenchmarkId::from_parameter(&inst.name), &inst, |b, i| {
            b.iter(|| kernelize(black_box(&i.graph), i.k).unwrap())
        });
    }
    group.finish();
}

fn tree(c: &mut Criterion) {
    let mut group = c.benchmark_group("tree");
    group.sample_size(10);
    for inst in tree_instances() {
        group.bench_with_input(BenchmarkId::new("deterministic", &inst.name), &inst, |b, i| {
            b.iter(|| solve_tree(black_box(&i.graph), i.k, Mode::Deterministic).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("randomized", &inst.name), &inst, |b, i| {
            b.iter(|| solve_tree(black_box(&i.graph), i.k, Mode::Randomized(3)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, path, kernel, tree);
criterion_main!(benches);
