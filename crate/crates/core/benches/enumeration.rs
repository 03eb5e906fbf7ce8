use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use normgram::exec::Strategy;
use normgram::oracle::{Flavor, ObjectKind, Oracle, Stat};
use normgram::sym;
use normgram::verify::{run_all_with, Profile};

fn strategies() -> Vec<(&'static str, Strategy)> {
    let mut out = vec![("sequential", Strategy::Sequential)];
    #[cfg(feature = "parallel")]
    out.push(("parallel", Strategy::Parallel));
    out
}

fn forest_tally(c: &mut Criterion) {
    let mut group = c.benchmark_group("binary_forest_tally");
    let assignment = [(Stat::Wx, sym("x")), (Stat::Wy, sym("y")), (Stat::Trees, sym("z"))];
    for n in [7, 8, 9] {
        for (name, strategy) in strategies() {
            let oracle = Oracle::new(strategy);
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| oracle.tally(ObjectKind::Forests(Flavor::Binary), black_box(n), &assignment).unwrap())
            });
        }
    }
    group.finish();
}

fn permutation_records(c: &mut Criterion) {
    let mut group = c.benchmark_group("permutation_records");
    for n in [7, 8] {
        for (name, strategy) in strategies() {
            let oracle = Oracle::new(strategy);
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| oracle.enumerate(ObjectKind::Permutations, black_box(n)).unwrap())
            });
        }
    }
    group.finish();
}

fn quick_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_quick");
    group.sample_size(10).measurement_time(Duration::from_secs(10));
    for (name, strategy) in strategies() {
        group.bench_function(name, |b| b.iter(|| run_all_with(Profile::Quick, strategy)));
    }
    group.finish();
}

criterion_group!(benches, forest_tally, permutation_records, quick_suite);
criterion_main!(benches);
