//! Measurements of the four numerically heavy paths: sequence generation,
//! simultaneous root finding, the three perturbation routes, and the
//! chain-sequence horizon scans.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use r2spectra_core::{
    generate_first, perturb_direct, perturb_via_structure, perturb_via_transfer, roots,
    wall_heuristic, ChainSeq, PerturbationSpec, RecurrenceFamily,
};

fn generation(c: &mut Criterion) {
    let fam = RecurrenceFamily::example1();
    let mut group = c.benchmark_group("generate_first");
    for n in [16usize, 32, 64] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| generate_first(black_box(&fam), n).unwrap())
        });
    }
    group.finish();
}

fn root_finding(c: &mut Criterion) {
    let fam = RecurrenceFamily::example1();
    let mut group = c.benchmark_group("aberth_roots");
    for n in [12usize, 24] {
        let p = generate_first(&fam, n).unwrap()[n].clone();
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| roots(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn perturbation_routes(c: &mut Criterion) {
    let fam = RecurrenceFamily::crr_offset(10.0, 12.0).unwrap();
    let spec = PerturbationSpec::single(3, -0.3, 1.2).unwrap();
    let n = 16usize;
    let mut group = c.benchmark_group("perturb_routes");
    group.bench_function("direct", |b| {
        b.iter(|| perturb_direct(black_box(&fam), black_box(&spec), n).unwrap())
    });
    group.bench_function("structure", |b| {
        b.iter(|| perturb_via_structure(black_box(&fam), black_box(&spec), n).unwrap())
    });
    group.bench_function("transfer", |b| {
        b.iter(|| perturb_via_transfer(black_box(&fam), black_box(&spec), n).unwrap())
    });
    group.finish();
}

fn chain_scans(c: &mut Criterion) {
    let quarter = ChainSeq::constant(0.25);
    let mut group = c.benchmark_group("chain");
    group.sample_size(20);
    group.bench_function("maximal_horizon_1e6", |b| {
        b.iter(|| {
            black_box(&quarter)
                .maximal_params_approx(4, 1_000_000)
                .unwrap()
        })
    });
    group.bench_function("wall_heuristic_1e5", |b| {
        b.iter(|| wall_heuristic(black_box(&quarter), 100_000).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    generation,
    root_finding,
    perturbation_routes,
    chain_scans
);
criterion_main!(benches);
