use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::Rng;
use std::hint::black_box;

use kdis_core::extremal::{max_kdis_count, sample_gnp, seeded_rng, ScanOptions};
use kdis_core::generators;
use kdis_core::graph::{graph6_decode, graph6_encode};
use kdis_core::search::count_kdis;
use kdis_core::tree::solve_forest_kdis;

fn bench_count(c: &mut Criterion) {
    let k3 = generators::complete(3).unwrap();
    let rook = generators::cartesian_product(&k3, &k3).unwrap();
    c.bench_function("count_kdis/rook3x3_k2", |b| {
        b.iter(|| count_kdis(black_box(&rook), 2).unwrap())
    });

    let cube4 = generators::power(&k3, 4).unwrap();
    c.bench_function("count_kdis/k3_pow4_k4", |b| {
        b.iter(|| count_kdis(black_box(&cube4), 4).unwrap())
    });

    let petersen = generators::kneser(5, 2).unwrap();
    c.bench_function("count_kdis/petersen_k2", |b| {
        b.iter(|| count_kdis(black_box(&petersen), 2).unwrap())
    });

    let mut rng = seeded_rng(99);
    let random16 = sample_gnp(16, 0.4, &mut rng);
    c.bench_function("count_kdis/gnp16_k2", |b| {
        b.iter(|| count_kdis(black_box(&random16), 2).unwrap())
    });
}

fn bench_tree_solver(c: &mut Criterion) {
    let mut rng = seeded_rng(7);
    let n = 100_000;
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|v| (rng.random_range(0..v), v))
        .collect();
    c.bench_function("tree_solver/random_100k", |b| {
        b.iter(|| solve_forest_kdis(n, black_box(&edges), 2).unwrap())
    });
}

fn bench_extremal_scan(c: &mut Criterion) {
    c.bench_function("extremal/all_graphs_n6_k2", |b| {
        b.iter(|| max_kdis_count(6, 2, black_box(&ScanOptions::default())).unwrap())
    });
}

fn bench_graph6(c: &mut Criterion) {
    let mut rng = seeded_rng(3);
    let graphs: Vec<String> = (0..64)
        .map(|_| graph6_encode(&sample_gnp(30, 0.5, &mut rng)))
        .collect();
    c.bench_function("graph6/decode_encode_n30", |b| {
        b.iter_batched(
            || graphs.clone(),
            |batch| {
                for s in batch {
                    let g = graph6_decode(&s).unwrap();
                    black_box(graph6_encode(&g));
                }
            },
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_count,
    bench_tree_solver,
    bench_extremal_scan,
    bench_graph6
);
criterion_main!(benches);
