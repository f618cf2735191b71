use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use vrhq_bench::{complement_graph, cycle, projective_plane};
use vrhq_core::domination::{exact_gamma_t, exact_gamma_t_with, SolveOptions};
use vrhq_core::homology::{betti_gf2, betti_integer, DEFAULT_SNF_CAP};
use vrhq_core::{connectivity_lower_bound, paper_table, vietoris_rips, BoundQuery};

fn bounds(c: &mut Criterion) {
    let mut g = c.benchmark_group("bound");
    for (n, r) in [(20u32, 18u32), (200, 150), (2000, 1500)] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{n}_{r}")), &(n, r), |b, &(n, r)| {
            b.iter(|| connectivity_lower_bound(black_box(BoundQuery::new(n, r).unwrap())))
        });
    }
    g.finish();
    c.bench_function("published_table", |b| b.iter(paper_table));
}

fn graphs(c: &mut Criterion) {
    let mut g = c.benchmark_group("complement_graph");
    for n in [8u32, 10, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| complement_graph(n, n / 2)));
    }
    g.finish();
}

fn domination(c: &mut Criterion) {
    let mut g = c.benchmark_group("exact_gamma_t");
    g.measurement_time(Duration::from_secs(10));
    let cases = [("gc_6_4", complement_graph(6, 4)), ("gc_7_4", complement_graph(7, 4)), ("cycle_40", cycle(40))];
    for (name, graph) in &cases {
        g.bench_function(*name, |b| b.iter(|| exact_gamma_t(black_box(graph), None).unwrap()));
    }
    let gc64 = complement_graph(6, 4);
    for threads in [2usize, 4] {
        let opts = SolveOptions { threads, ..SolveOptions::default() };
        g.bench_with_input(BenchmarkId::new("gc_6_4_threads", threads), &opts, |b, opts| {
            b.iter(|| exact_gamma_t_with(&gc64, opts).unwrap())
        });
    }
    g.finish();
}

fn homology(c: &mut Criterion) {
    let mut g = c.benchmark_group("homology");
    let s7 = vietoris_rips(4, 3, 8).unwrap();
    g.bench_function("gf2_vr_4_3", |b| b.iter(|| betti_gf2(black_box(&s7), 7).unwrap()));
    let vr42 = vietoris_rips(4, 2, 4).unwrap();
    g.bench_function("gf2_vr_4_2", |b| b.iter(|| betti_gf2(black_box(&vr42), 3).unwrap()));
    let rp2 = projective_plane();
    g.bench_function("snf_rp2", |b| b.iter(|| betti_integer(black_box(&rp2), 2, DEFAULT_SNF_CAP).unwrap()));
    let s3 = vietoris_rips(3, 2, 4).unwrap();
    g.bench_function("snf_vr_3_2", |b| b.iter(|| betti_integer(black_box(&s3), 3, DEFAULT_SNF_CAP).unwrap()));
    g.bench_function("build_vr_4_2", |b| b.iter(|| vietoris_rips(4, 2, 4).unwrap()));
    g.finish();
}

criterion_group!(benches, bounds, graphs, domination, homology);
criterion_main!(benches);
