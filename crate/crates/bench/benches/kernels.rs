use criterion::{criterion_group, criterion_main, Criterion};
fn bench_probe(c: &mut Criterion) {
    c.bench_function("cyclotomic_240", |b| {
        b.iter(|| coxgale_core::algebra::poly::cyclotomic(240))
    });
}
criterion_group!(benches, bench_probe);
criterion_main!(benches);
