use criterion::{black_box, criterion_group, criterion_main, Criterion};

use matdegen::decomposition::{decompose, DecomposeOptions, Hints};
use matdegen::degenerations::{min_above_general, min_above_rank4};
use matdegen::isomorphism::{automorphisms, canonical_form};
use matdegen::weak_order::compare;
use matdegen::{catalog, Matroid};
use matdegen_bench::fixtures;

fn searches(c: &mut Criterion) {
    let mut g = c.benchmark_group("min_above");
    g.sample_size(10);
    for (name, m) in fixtures() {
        g.bench_function(format!("general/{name}"), |b| b.iter(|| min_above_general(black_box(&m))));
        if m.rank() == 4 {
            g.bench_function(format!("rank4/{name}"), |b| b.iter(|| min_above_rank4(black_box(&m)).unwrap()));
        }
    }
    g.finish();
}

fn comparisons(c: &mut Criterion) {
    let fano = catalog::fano();
    let below: Vec<Matroid> = min_above_general(&fano).maximal;
    c.bench_function("compare/fano_degenerations", |b| {
        b.iter(|| below.iter().filter(|n| compare(n, &fano).unwrap()).count())
    });
}

fn symmetry(c: &mut Criterion) {
    let mut g = c.benchmark_group("isomorphism");
    for (name, m) in fixtures() {
        g.bench_function(format!("canonical/{name}"), |b| b.iter(|| canonical_form(black_box(&m))));
        g.bench_function(format!("automorphisms/{name}"), |b| b.iter(|| automorphisms(black_box(&m))));
    }
    g.finish();
}

fn decompositions(c: &mut Criterion) {
    let mut g = c.benchmark_group("decompose");
    g.sample_size(10);
    let opts = DecomposeOptions::default();
    let hints = Hints::shipped();
    for (name, m) in [("qs", catalog::qs()), ("fano", catalog::fano())] {
        g.bench_function(name, |b| b.iter(|| decompose(black_box(&m), &hints, &opts).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, searches, comparisons, symmetry, decompositions);
criterion_main!(benches);
