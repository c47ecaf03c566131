use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use z4codes::families::{kerdock_binary, kerdock_quaternary, preparata_quaternary};
use z4codes::gray::{gray_image_linear_span, min_distance_binary};
use z4codes::poly::{generator_poly_g, hensel_lift, primitive_polys};
use z4codes::{TrivariateWeightEnumerator, DEFAULT_CAP};

fn polynomials(c: &mut Criterion) {
    let h2 = primitive_polys(9).next().unwrap();
    c.bench_function("hensel_lift m=9", |b| {
        b.iter(|| hensel_lift(black_box(&h2)).unwrap())
    });
    let h = hensel_lift(&h2).unwrap();
    c.bench_function("generator_poly_g m=9", |b| {
        b.iter(|| generator_poly_g(black_box(&h), 9).unwrap())
    });
}

fn enumerators(c: &mut Criterion) {
    let d = kerdock_quaternary(5, None).unwrap();
    c.bench_function("swe of Kerdock m=5", |b| {
        b.iter(|| TrivariateWeightEnumerator::of_code(black_box(&d), DEFAULT_CAP).unwrap())
    });
    let swe = TrivariateWeightEnumerator::of_code(&d, DEFAULT_CAP).unwrap();
    let size = d.size();
    c.bench_function("macwilliams swe n=32", |b| {
        b.iter(|| swe.macwilliams(black_box(&size)).unwrap())
    });
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("searches");
    group.sample_size(10);
    let k = kerdock_binary(5, None, DEFAULT_CAP).unwrap();
    group.bench_function("Kerdock m=5 pairwise distance", |b| {
        b.iter(|| min_distance_binary(black_box(&k), DEFAULT_CAP, 64).unwrap())
    });
    let p = preparata_quaternary(5, None).unwrap();
    group.bench_function("Preparata m=5 Lee search w<=6", |b| {
        b.iter(|| p.min_lee_weight_by_syndrome(black_box(6)))
    });
    let span = gray_image_linear_span(&p);
    group.bench_function("span of Preparata m=5 weight search", |b| {
        b.iter(|| span.min_weight_search(black_box(2)))
    });
    group.finish();
}

criterion_group!(benches, polynomials, enumerators, searches);
criterion_main!(benches);
