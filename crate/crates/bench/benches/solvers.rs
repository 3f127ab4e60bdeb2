use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ocdom_bench::{corona_k3_p4, grid_c4_c5, k444, lex_p4_p4};
use ocdom_core::corpus::enumerate_labeled_connected;
use ocdom_core::scan::scan_small_sets;
use ocdom_core::solvers::{baseline::solve_exact, bnb::solve_bnb, Budget, DominationKind};
use ocdom_core::{emit_graph6, parse_graph6};

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma-oc");
    for (name, g) in [
        ("lex-p4-p4", lex_p4_p4()),
        ("grid-c4-c5", grid_c4_c5()),
        ("corona-k3-p4", corona_k3_p4()),
    ] {
        group.bench_with_input(BenchmarkId::new("bnb", name), &g, |b, g| {
            b.iter(|| solve_bnb(g, DominationKind::OuterConnected, Budget::UNLIMITED).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("baseline", name), &g, |b, g| {
            b.iter(|| solve_exact(g, DominationKind::OuterConnected, Budget::UNLIMITED).unwrap())
        });
    }
    group.finish();
}

fn direct_power(c: &mut Criterion) {
    let g = k444();
    let mut group = c.benchmark_group("k4-cubed");
    group.sample_size(10);
    group.bench_function("scan-size-3", |b| {
        b.iter(|| scan_small_sets(&g, DominationKind::OuterConnected, 3))
    });
    group.bench_function("bnb", |b| {
        b.iter(|| solve_bnb(&g, DominationKind::OuterConnected, Budget::UNLIMITED).unwrap())
    });
    group.finish();
}

fn graph6(c: &mut Criterion) {
    let graphs = enumerate_labeled_connected(5).unwrap();
    c.bench_function("graph6-round-trip-n5", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|g| parse_graph6(emit_graph6(g).as_bytes()).unwrap().order())
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, solvers, direct_power, graph6);
criterion_main!(benches);
