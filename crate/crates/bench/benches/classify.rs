use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use knotrep::{
    component_count, enumerate_solutions, parse_expr, pretzel_diagram, representativity_bounds,
    scan_assignments, PretzelTriple, TangleExpr,
};

fn lemma(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_solutions");
    for max in [300u64, 10_000, 100_000] {
        group.bench_with_input(BenchmarkId::from_parameter(max), &max, |b, &max| {
            b.iter(|| enumerate_solutions(black_box(max)).unwrap())
        });
    }
    group.finish();
}

fn tracing(c: &mut Criterion) {
    let mut group = c.benchmark_group("component_count");
    for twists in [[-2i64, 3, 5], [-21, 33, 47], [-201, 333, 471]] {
        let label = format!("{twists:?}");
        group.bench_with_input(BenchmarkId::from_parameter(label), &twists, |b, twists| {
            b.iter(|| component_count(&pretzel_diagram(black_box(twists)).unwrap()).unwrap())
        });
    }
    group.finish();
}

fn surfaces(c: &mut Criterion) {
    c.bench_function("scan_assignments P(-6,9,17)", |b| {
        b.iter(|| scan_assignments(black_box(PretzelTriple::new(-6, 9, 17))).unwrap())
    });
}

fn reports(c: &mut Criterion) {
    let pretzel = TangleExpr::Pretzel(PretzelTriple::new(-2, 3, 5));
    c.bench_function("representativity_bounds P(-2,3,5)", |b| {
        b.iter(|| representativity_bounds(black_box(&pretzel)).unwrap())
    });
    let algebraic = parse_expr("C((1/3+1/5)+(1/2+1/7))").unwrap();
    c.bench_function("representativity_bounds large algebraic", |b| {
        b.iter(|| representativity_bounds(black_box(&algebraic)).unwrap())
    });
    c.bench_function("sweep [-12,12]", |b| {
        b.iter(|| {
            let mut exact = 0;
            for p in -12..=12 {
                for q in p..=12 {
                    for r in q..=12 {
                        let e = TangleExpr::Pretzel(PretzelTriple::new(p, q, r));
                        if let Ok(report) = representativity_bounds(&e) {
                            exact += usize::from(report.exact.is_some());
                        }
                    }
                }
            }
            exact
        })
    });
}

criterion_group!(benches, lemma, tracing, surfaces, reports);
criterion_main!(benches);
