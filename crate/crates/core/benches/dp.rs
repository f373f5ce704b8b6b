//! Sequential (single-thread pool) against default-pool timings for the
//! parallel hot spots: join-heavy DPs, the subset oracle and curve sampling.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use tutte_core::forest::count_forests;
use tutte_core::general::general_dp;
use tutte_core::generators::{partial_ktree_instance, random_multigraph, rng};
use tutte_core::graph::Decompositions;
use tutte_core::oracle::brute_tutte;
use tutte_core::reduction::{curve_restriction, ising_evaluator};
use tutte_core::scalar::int;
use tutte_core::Scalar;

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let default = ThreadPoolBuilder::new().build().unwrap();
    vec![("sequential", single), ("parallel", default)]
}

fn bench_dps(c: &mut Criterion) {
    let mut r = rng(99);
    let tree = partial_ktree_instance(&mut r, 60, 3, 0.8);
    let nd = tree.decompositions.nice(&tree.graph).unwrap();
    let oracle_graph = loop {
        let g = random_multigraph(&mut r, 9, 20);
        if g.edge_count() == 20 {
            break g;
        }
    };
    let small = partial_ktree_instance(&mut r, 8, 2, 0.8);

    let mut group = c.benchmark_group("dp");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new("general_dp", name), |b| {
            b.iter(|| pool.install(|| general_dp(&tree.graph, &nd).unwrap()))
        });
        group.bench_function(BenchmarkId::new("count_forests", name), |b| {
            b.iter(|| pool.install(|| count_forests(&tree.graph, &nd, &Scalar::from_integer(1.into())).unwrap()))
        });
        group.bench_function(BenchmarkId::new("brute_tutte", name), |b| {
            b.iter(|| pool.install(|| brute_tutte(&oracle_graph, &int(2), &int(3)).unwrap()))
        });
        group.bench_function(BenchmarkId::new("curve_restriction", name), |b| {
            let d: &Decompositions = &small.decompositions;
            let eval = ising_evaluator(int(3), int(2));
            b.iter(|| pool.install(|| curve_restriction(&small.graph, d, &int(3), &int(2), &eval).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_dps);
criterion_main!(benches);
