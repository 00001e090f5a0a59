use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dedelat_core::verify::{run_suite_sequential, Suite};

const CASES: usize = 24;

fn runners(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_runner");
    for suite in [Suite::ThreeCase, Suite::FittingEq, Suite::Cyclicity] {
        group.bench_with_input(BenchmarkId::new("sequential", suite), &suite, |b, &s| {
            b.iter(|| run_suite_sequential(s, 42, CASES))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", suite), &suite, |b, &s| {
            b.iter(|| dedelat_core::verify::run_suite_parallel(s, 42, CASES))
        });
    }
    group.finish();
}

criterion_group!(
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = runners
);
criterion_main!(benches);
