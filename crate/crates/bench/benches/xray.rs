use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use xray_core::builtins::{ex21, ex22, fig2};
use xray_core::{
    decide_extension_criterion, enumerate_compatible_polytopes,
    enumerate_compatible_polytopes_oracle, glue, ratio, xray_from_toric, LatticePolytope,
    SliceSpec, SubtorusEmbedding,
};

fn enumerate(c: &mut Criterion) {
    let x = fig2();
    c.bench_function("enumerate fig2 d=2", |b| {
        b.iter(|| enumerate_compatible_polytopes(black_box(&x), 2).unwrap())
    });
    c.bench_function("oracle fig2 d=2", |b| {
        b.iter(|| enumerate_compatible_polytopes_oracle(black_box(&x), 2).unwrap())
    });
}

fn criterion_verdict(c: &mut Criterion) {
    for (name, x) in [("ex21", ex21()), ("fig2", fig2())] {
        c.bench_function(&format!("criterion {name}"), |b| {
            b.iter(|| decide_extension_criterion(black_box(&x)).unwrap())
        });
    }
}

fn gluing(c: &mut Criterion) {
    let (a, bx) = (ex21(), ex22());
    let slice = SliceSpec::new(vec![0, 1], ratio(3, 2)).unwrap();
    c.bench_function("glue ex21 ex22", |b| {
        b.iter(|| glue(black_box(&a), black_box(&bx), &slice).unwrap())
    });
}

fn toric(c: &mut Criterion) {
    let prism = LatticePolytope::new(&[
        vec![0, 0, 0],
        vec![0, 3, 0],
        vec![0, 0, 3],
        vec![1, 0, 0],
        vec![1, 3, 0],
        vec![1, 0, 3],
    ])
    .unwrap();
    let iota = SubtorusEmbedding::parse("1,0;1,0;0,1").unwrap();
    c.bench_function("toric prism", |b| {
        b.iter(|| xray_from_toric(black_box(&prism), &iota).unwrap())
    });
}

criterion_group!(benches, enumerate, criterion_verdict, gluing, toric);
criterion_main!(benches);
