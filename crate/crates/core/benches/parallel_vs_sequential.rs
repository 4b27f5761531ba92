use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ishango::artifact::MeVariant;
use ishango::data;
use ishango::null_model::{estimate_pvalue, NamedStatistic, NullConstraints, StatisticKind};
use ishango::par::Parallelism;
use ishango::relations::{enumerate_relations_with, AlignmentFilter, SearchConfig};
use ishango::Artifact;

fn modes() -> Vec<(&'static str, Parallelism)> {
    let mut m = vec![("sequential", Parallelism::Sequential)];
    if Parallelism::available() {
        m.push(("parallel", Parallelism::Auto));
    }
    m
}

fn null_model(c: &mut Criterion) {
    let bone = data::ishango(MeVariant::Me10);
    let constraints = NullConstraints::default();
    let mut group = c.benchmark_group("estimate_pvalue");
    group.sample_size(10);
    for kind in [
        StatisticKind::EqualGdSums,
        StatisticKind::SlideRuleCoverageAtCost,
    ] {
        let stat = NamedStatistic::new(kind, &bone);
        for (name, par) in modes() {
            group.bench_with_input(BenchmarkId::new(kind.name(), name), &par, |b, &par| {
                b.iter(|| estimate_pvalue(&stat, &constraints, black_box(20_000), 1, par).unwrap())
            });
        }
    }
    group.finish();
}

fn relation_search(c: &mut Criterion) {
    let counts: Vec<u32> = (0..64).map(|i| 3 + (i * 7) % 11).collect();
    let targets: Vec<u32> = (0..32).map(|i| 10 + (i * 5) % 20).collect();
    let wide = Artifact::from_counts("wide", &counts, &targets, &targets).unwrap();
    let cfg = SearchConfig {
        max_run: 6,
        min_alignment: AlignmentFilter::Ignore,
        ..SearchConfig::default()
    };
    let mut group = c.benchmark_group("enumerate_relations");
    for (name, par) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| enumerate_relations_with(black_box(&wide), &cfg, par))
        });
    }
    group.finish();
}

criterion_group!(benches, null_model, relation_search);
criterion_main!(benches);
