use std::time::Duration;

use cograph::difference::{enumerate_difference_cographs, DEFAULT_INTEGER_BOUND, DEFAULT_MAX_MODULUS};
use cograph::enumeration::{count_cographs_with, enumerate_cographs_with};
use cograph::pl::enumerate_pl;
use cograph::sum::enumerate_sum_cographs;
use cograph::Exec;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernels");
    group.sample_size(10).measurement_time(Duration::from_secs(5));
    for (mode, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("count_10", mode), &exec, |b, &e| b.iter(|| count_cographs_with(10, e).unwrap()));
        group.bench_with_input(BenchmarkId::new("enumerate_5", mode), &exec, |b, &e| {
            b.iter(|| enumerate_cographs_with(5, false, e).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sum_catalogue_5", mode), &exec, |b, &e| {
            b.iter(|| enumerate_sum_cographs(5, false, e).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("difference_catalogue_4", mode), &exec, |b, &e| {
            b.iter(|| enumerate_difference_cographs(4, DEFAULT_INTEGER_BOUND, DEFAULT_MAX_MODULUS, e).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("pl_catalogue_7", mode), &exec, |b, &e| b.iter(|| enumerate_pl(7, false, e).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
