use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gpcover::harness::sampling::all_nontrivial_covers;
use gpcover::harness::theorems::check_semi_optimal_exhaustive;
use gpcover::harness::{sweep, verify_theorems, SweepOptions, TheoremOptions};
use gpcover::solver::beta_bruteforce_with;
use gpcover::{Execution, PetersenGraph};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (label, execution) in MODES {
        group.bench_with_input(BenchmarkId::new(label, 35), &execution, |b, &execution| {
            b.iter(|| sweep(&SweepOptions { execution, ..SweepOptions::new(35) }).unwrap())
        });
    }
    group.finish();
}

fn bench_bruteforce(c: &mut Criterion) {
    let g = PetersenGraph::new(12, 5).unwrap();
    let mut group = c.benchmark_group("bruteforce_p12_5");
    group.sample_size(10);
    for (label, execution) in MODES {
        group.bench_function(label, |b| b.iter(|| beta_bruteforce_with(&g, execution).unwrap()));
    }
    group.finish();
}

fn bench_semi_optimal(c: &mut Criterion) {
    let g = PetersenGraph::new(10, 3).unwrap();
    let mut group = c.benchmark_group("semi_optimal_exhaustive_p10_3");
    group.throughput(criterion::Throughput::Elements(all_nontrivial_covers(&g).len() as u64));
    for (label, execution) in MODES {
        group.bench_function(label, |b| b.iter(|| check_semi_optimal_exhaustive(&g, execution).unwrap()));
    }
    group.finish();
}

fn bench_theorems(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_theorems");
    group.sample_size(10);
    for (label, execution) in MODES {
        let options = TheoremOptions { execution, samples: 200, ..TheoremOptions::new(11) };
        group.bench_function(label, |b| b.iter(|| verify_theorems(&options).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_sweep, bench_bruteforce, bench_semi_optimal, bench_theorems);
criterion_main!(benches);
