use criterion::{black_box, criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;
use pivotlab_core::algnum::{enumerate_a_cached, min_gap, MAX_INDEX};
use pivotlab_core::farey::{pivot_sequence, widths_to_cf, Triangle};
use pivotlab_core::kleinian::{complex_length, oracle_compare, MarkoffSeed};
use pivotlab_core::num::BigComplex;
use pivotlab_core::tracecalc::trace_polynomial;
use pivotlab_core::{ContinuedFraction, Endpoint, Slope};

fn farey(c: &mut Criterion) {
    let golden: ContinuedFraction = "golden".parse().unwrap();
    let am = Endpoint::Rational(Slope::from_ints(0, 1));
    c.bench_function("pivots golden depth 200", |b| b.iter(|| pivot_sequence(&am, black_box(&golden), 200).unwrap()));
    let widths: Vec<BigInt> = (1..=64).map(BigInt::from).collect();
    let ends = (Slope::from_ints(0, 1), Slope::from_ints(1, 0));
    c.bench_function("widths to cf, 64 widths", |b| b.iter(|| widths_to_cf((&ends.0, &ends.1), black_box(&widths)).unwrap()));
}

fn traces(c: &mut Criterion) {
    let base = Triangle::standard();
    for (p, q) in [(13, 8), (89, 55)] {
        let s = Slope::from_ints(p, q);
        c.bench_function(&format!("trace polynomial {p}/{q}"), |b| b.iter(|| trace_polynomial(black_box(&s), &base).unwrap()));
    }
}

fn gaps(c: &mut Criterion) {
    let mut g = c.benchmark_group("gap");
    g.sample_size(10);
    g.bench_function("enumerate A_3", |b| b.iter(|| enumerate_a_cached(3, None, MAX_INDEX).unwrap()));
    let set = enumerate_a_cached(3, None, MAX_INDEX).unwrap();
    let p = trace_polynomial(&Slope::from_ints(2, 1), &Triangle::standard()).unwrap();
    g.bench_function("min gap YZ - X on A_3", |b| b.iter(|| min_gap(black_box(&p), &set).unwrap()));
    g.finish();
}

fn kleinian(c: &mut Criterion) {
    let seed = MarkoffSeed { x: (3.0, 0.5), y: (2.5, -1.0), plus: true };
    let t = Slope::from_ints(34, 21);
    let p = trace_polynomial(&t, &Triangle::standard()).unwrap();
    c.bench_function("oracle 34/21", |b| b.iter(|| oracle_compare(&t, black_box(&p), &seed, 1e-8).unwrap()));
    let near = BigComplex::from_f64(2.0 + 1e-7, 1e-7, 128);
    c.bench_function("length near parabolic", |b| b.iter(|| complex_length(black_box(&near))));
}

criterion_group!(benches, farey, traces, gaps, kleinian);
criterion_main!(benches);
