use std::hint::black_box;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use coring::modules::Bimodule;
use coring::suite::{run_criterion, SuiteOptions};
use coring::ybe::{omega_r, qybe_check_with, RMatrix};
use coring::{Exec, Field, Matrix};

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn qybe(c: &mut Criterion) {
    let mut group = c.benchmark_group("qybe");
    group.sample_size(10);
    for n in [2, 3] {
        let r = RMatrix::matrix_algebra(n, Field::Rational).unwrap();
        let op = omega_r(&Bimodule::regular(r.algebra().clone()), &r).unwrap();
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, format!("M{n}")), &op, |b, op| {
                b.iter(|| black_box(qybe_check_with(op, exec)))
            });
        }
    }
    group.finish();
}

fn matmul(c: &mut Criterion) {
    let mut group = c.benchmark_group("matmul");
    group.sample_size(10);
    for n in [64, 128] {
        // dense, with small rationals so entries do not blow up
        let q = Field::Rational;
        let a = Matrix::from_fn(q, n, n, |i, j| q.from_i64(((i * 7 + j * 3) % 11) as i64 - 5));
        let b = Matrix::from_fn(q, n, n, |i, j| q.from_i64(((i * 5 + j) % 13) as i64 - 6));
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &(&a, &b), |bench, (a, b)| {
                bench.iter(|| black_box(a.mul_with(b, exec).unwrap()))
            });
        }
    }
    group.finish();
}

// hexagons over 27 triples and the perturbation sweep, fanned out per case
fn suite_criteria(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for id in [8, 9] {
        for (name, exec) in STRATEGIES {
            let opts = SuiteOptions { exec, ..SuiteOptions::default() };
            group.bench_function(BenchmarkId::new(name, format!("criterion {id}")), |b| {
                b.iter(|| black_box(run_criterion(id, &opts)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, qybe, matmul, suite_criteria);
criterion_main!(benches);
