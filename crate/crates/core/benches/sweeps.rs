use criterion::{black_box, criterion_group, criterion_main, Criterion};
use extremal_core::par;
use extremal_core::verify::{construction_ledger, cyclic_interval_bounds, monotonicity_sweep, shifting_suite};

fn bench_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (name, threads) in [("sequential", Some(1)), ("parallel", None)] {
        group.bench_function(format!("{name}/shifting_suite"), |b| {
            b.iter(|| par::with_threads(threads, || black_box(shifting_suite(1, 200))))
        });
        group.bench_function(format!("{name}/construction_ledger"), |b| {
            b.iter(|| par::with_threads(threads, || black_box(construction_ledger(10, 4, 3).unwrap())))
        });
        group.bench_function(format!("{name}/monotonicity_sweep"), |b| {
            b.iter(|| par::with_threads(threads, || black_box(monotonicity_sweep(5, 4, 40).unwrap())))
        });
        group.bench_function(format!("{name}/cyclic_interval_bounds"), |b| {
            b.iter(|| par::with_threads(threads, || black_box(cyclic_interval_bounds(8).unwrap())))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
