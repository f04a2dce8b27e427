use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sl2chars::chars::eps_n;
use sl2chars::oracle::{abelianization, sl2_group};
use sl2chars::sl2core::{enumerate_sl2, DEFAULT_RING_BOUND};
use sl2chars::Ring;
use sl2chars_bench::small_rings;
use std::hint::black_box;

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_sl2");
    for ring in small_rings() {
        group.bench_with_input(BenchmarkId::from_parameter(ring), &ring, |b, &r| {
            b.iter(|| enumerate_sl2(r).unwrap())
        });
    }
    group.finish();
}

fn eval_all_pairs(c: &mut Criterion) {
    let ring = Ring::integers_mod(4).unwrap();
    let elems = enumerate_sl2(ring).unwrap();
    c.bench_function("eps4 homomorphism over SL2(Z/4)", |b| {
        b.iter(|| {
            for x in &elems {
                for y in &elems {
                    let xy = x.checked_mul(y).unwrap();
                    black_box(eps_n(&xy).unwrap() == eps_n(x).unwrap() * eps_n(y).unwrap());
                }
            }
        })
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("abelianization");
    group.sample_size(10);
    for ring in small_rings() {
        group.bench_with_input(BenchmarkId::from_parameter(ring), &ring, |b, &r| {
            b.iter(|| abelianization(&sl2_group(r, DEFAULT_RING_BOUND).unwrap()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumerate, eval_all_pairs, oracle);
criterion_main!(benches);
