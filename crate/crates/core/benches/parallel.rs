use criterion::{criterion_group, criterion_main, Criterion};
use pentagon_core::counts::move_gain_exhaustive;
use pentagon_core::graph::{augment_classes, enumerate_graphs};
use pentagon_core::oracle::max_c5;
use pentagon_core::symbolic::{parse_ratfun, prove_nonneg_int};
use pentagon_core::Exec;
use std::hint::black_box;

fn executors() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn bench(c: &mut Criterion) {
    let parents = enumerate_graphs(6).unwrap();
    let mut g = c.benchmark_group("augment 6 -> 7");
    g.sample_size(10);
    for (name, exec) in executors() {
        g.bench_function(name, |b| b.iter(|| augment_classes(black_box(parents), exec)));
    }
    g.finish();

    let mut g = c.benchmark_group("max C5, K5-free, n = 7");
    g.sample_size(10);
    for (name, exec) in executors() {
        g.bench_function(name, |b| b.iter(|| max_c5(black_box(7), 5, exec).unwrap()));
    }
    g.finish();

    let f = parse_ratfun("(12*k^4 - 60*k^3 + 120*k^2 - 120*k + 48)/k^4 - 1/k^10").unwrap();
    let mut g = c.benchmark_group("k-sweep to 1000");
    for (name, exec) in executors() {
        g.bench_function(name, |b| b.iter(|| prove_nonneg_int(black_box(&f), 3, 1000, exec)));
    }
    g.finish();

    let mut g = c.benchmark_group("vertex moves, total <= 12");
    g.sample_size(10);
    for (name, exec) in executors() {
        g.bench_function(name, |b| b.iter(|| move_gain_exhaustive(black_box(12), exec)));
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
