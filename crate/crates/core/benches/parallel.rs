//! Parallel vs sequential benchmarks for the two hot paths: bounded
//! plane-partition enumeration and the relation suite.  Run with
//! `cargo bench` (rayon path) and compare against the `*_seq` entries.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use toroidal::planepartitions::{enumerate_pp, enumerate_pp_seq, BoundaryTriple};
use toroidal::scalars::make_generic_params;
use toroidal::verify::{run_suite, Rep};

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    let vac = BoundaryTriple::vacuum();
    let legs = BoundaryTriple::parse("(2);(1);(1,1)").unwrap();
    for (name, b, d) in [("vacuum", &vac, 9i64), ("legs", &legs, 7)] {
        group.bench_with_input(BenchmarkId::new("parallel", name), &d, |bench, &d| {
            bench.iter(|| enumerate_pp(b, d, None).len())
        });
        group.bench_with_input(BenchmarkId::new("sequential", name), &d, |bench, &d| {
            bench.iter(|| enumerate_pp_seq(b, d, None).len())
        });
    }
    group.finish();
}

fn bench_relation_suite(c: &mut Criterion) {
    let p = make_generic_params(7, 6).unwrap();
    let mut group = c.benchmark_group("relation_suite");
    group.sample_size(10);
    let fock = Rep::Fock(p.clone());
    group.bench_function("fock_d3_w1", |bench| {
        bench.iter(|| run_suite(&fock, 3, 1).len())
    });
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_relation_suite);
criterion_main!(benches);
