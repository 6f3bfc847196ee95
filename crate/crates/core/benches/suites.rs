use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hfset::exec::Exec;
use hfset::suites::run_suite_with;
use hfset::HSet;

const SEED: u64 = 7;

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10).measurement_time(Duration::from_secs(5));
    for (name, size) in [
        ("axioms", 200),
        ("functions", 200),
        ("cardinal", 64),
        ("bcs", 32),
        ("umorphism", 64),
    ] {
        for (label, exec) in [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)] {
            group.bench_with_input(BenchmarkId::new(name, label), &size, |b, &size| {
                b.iter(|| {
                    let report = run_suite_with(name, size, SEED, exec).unwrap();
                    assert!(report.passed());
                })
            });
        }
    }
    group.finish();
}

fn kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernel");
    group.bench_function("powerset of ord(12)", |b| {
        let x = HSet::ord(12).unwrap();
        b.iter(|| x.powerset().unwrap())
    });
    group.bench_function("codes below 4096", |b| {
        b.iter(|| {
            (0..4096u64)
                .map(HSet::from_ackermann)
                .filter(|x| x.is_transitive())
                .count()
        })
    });
    group.finish();
}

criterion_group!(benches, suites, kernel);
criterion_main!(benches);
