use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sl2chars::numfield::{
    character_group, is_irreducible, poly_discriminant, round2_pmaximal_order,
};
use sl2chars_bench::{poly, FIELDS};

fn fields(c: &mut Criterion) {
    let mut group = c.benchmark_group("character_group");
    for (name, coeffs) in FIELDS {
        let f = poly(coeffs);
        group.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| {
            b.iter(|| character_group(f).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("round2_at_2");
    for (name, coeffs) in FIELDS {
        let f = poly(coeffs);
        group.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| {
            b.iter(|| round2_pmaximal_order(f, 2).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("irreducibility");
    for (name, coeffs) in FIELDS {
        let f = poly(coeffs);
        group.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| {
            b.iter(|| is_irreducible(f))
        });
    }
    group.finish();

    let f = poly(FIELDS[4].1);
    c.bench_function("discriminant degree 6", |b| {
        b.iter(|| poly_discriminant(&f).unwrap())
    });
}

criterion_group!(benches, fields);
criterion_main!(benches);
