use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use argfacets::fixtures::{ex1, pairs};
use argfacets::{enumerate, facet_report, significance_table, Budget, Constraints, Semantics};
use argfacets_bench::random_series;

fn enumeration_vs_facets(c: &mut Criterion) {
    let mut group = c.benchmark_group("pairs");
    for k in [8, 12, 16] {
        let af = pairs(k);
        group.bench_with_input(BenchmarkId::new("enumerate_10000", k), &af, |b, af| {
            b.iter(|| {
                enumerate(
                    af,
                    Semantics::Stab,
                    &Constraints::none(),
                    &Budget::models(10_000),
                )
            })
        });
        group.bench_with_input(BenchmarkId::new("facets", k), &af, |b, af| {
            b.iter(|| facet_report(af, Semantics::Stab, &Constraints::none()))
        });
    }
    group.finish();
}

fn facets_on_random(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_facets");
    group.sample_size(20);
    for (n, af) in random_series(&[10, 14, 18], 0.2) {
        for s in [
            Semantics::Comp,
            Semantics::Stab,
            Semantics::Pref,
            Semantics::Semi,
        ] {
            group.bench_with_input(BenchmarkId::new(s.as_str(), n), &af, |b, af| {
                b.iter(|| facet_report(af, s, &Constraints::none()))
            });
        }
    }
    group.finish();
}

fn ex1_significance(c: &mut Criterion) {
    let af = ex1();
    c.bench_function("ex1_significance_stab", |b| {
        b.iter(|| significance_table(black_box(&af), Semantics::Stab))
    });
}

criterion_group!(
    benches,
    enumeration_vs_facets,
    facets_on_random,
    ex1_significance
);
criterion_main!(benches);
