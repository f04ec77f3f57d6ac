use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sturdy_core::constructions::{frankl, triangle};
use sturdy_core::metrics::link_matrix;
use sturdy_core::par;
use sturdy_core::search::{max_beta, ConstraintSpec, SearchOptions};
use sturdy_core::transforms::{basis, saturate};

fn worker_counts() -> Vec<usize> {
    let all = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    if all > 1 {
        vec![1, all]
    } else {
        vec![1]
    }
}

fn bench_link_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("link_matrix");
    let family = triangle(20, 5).unwrap();
    for w in worker_counts() {
        group.bench_with_input(BenchmarkId::new("T(20,5)", w), &w, |b, &w| {
            b.iter(|| par::with_workers(w, || link_matrix(&family)))
        });
    }
    group.finish();
}

fn bench_max_beta(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_beta");
    group.sample_size(10);
    let cases = [
        (
            "t_intersecting_uniform(6,3,1)",
            ConstraintSpec::TIntersectingUniform { n: 6, k: 3, t: 1 },
        ),
        (
            "t_intersecting_any(5,1)",
            ConstraintSpec::TIntersectingAny { n: 5, t: 1 },
        ),
        ("diameter(5,2)", ConstraintSpec::Diameter { n: 5, w: 2 }),
    ];
    for (name, spec) in cases {
        for w in worker_counts() {
            let opts = SearchOptions::default().with_workers(w);
            group.bench_with_input(BenchmarkId::new(name, w), &opts, |b, opts| {
                b.iter(|| max_beta(&spec, opts).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("basis");
    let family = saturate(&frankl(12, 6, 1, 2).unwrap(), 1).unwrap();
    for w in worker_counts() {
        group.bench_with_input(BenchmarkId::new("A_2(12,6,1)", w), &w, |b, &w| {
            b.iter(|| par::with_workers(w, || basis(&family, 1).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_link_matrix, bench_max_beta, bench_basis);
criterion_main!(benches);
