//! Sequential vs parallel comparison for the subset-enumeration kernels.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use skewchar::corpus::CorpusRng;
use skewchar::ribbon::RibbonGraph;

fn bench_subset_profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("subset_profile");
    group.sample_size(10);
    for n in [14usize, 16] {
        let g = CorpusRng::new(2024).graph(n);
        group.bench_with_input(BenchmarkId::new("sequential", n), &g, |b, g| {
            b.iter(|| black_box(g.subset_profile_sequential()));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &g, |b, g| {
            b.iter(|| black_box(g.subset_profile()));
        });
    }
    group.finish();
}

fn bench_quasi_trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("quasi_trees");
    group.sample_size(10);
    for m in [14usize, 16] {
        let r = RibbonGraph::theta_planar(m);
        group.bench_with_input(BenchmarkId::new("sequential", m), &r, |b, r| {
            b.iter(|| black_box(r.quasi_tree_masks_sequential().len()));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", m), &r, |b, r| {
            b.iter(|| black_box(r.spanning_quasi_trees().unwrap().len()));
        });
    }
    group.finish();
}

fn bench_gf2_rank(c: &mut Criterion) {
    let g = CorpusRng::new(7).graph(20);
    let m = g.gf2_adjacency();
    c.bench_function("gf2_rank_20", |b| b.iter(|| black_box(m.rank())));
}

criterion_group!(benches, bench_subset_profile, bench_quasi_trees, bench_gf2_rank);
criterion_main!(benches);
