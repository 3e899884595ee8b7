use boxcover::{cantor_endpoints, count_curve, estimate_dimension, ScaleSchedule};
use boxcover_bench::{halving, reciprocals};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn bench_count_curve(c: &mut Criterion) {
    let f = reciprocals(10_000);
    let schedule = halving(24);
    c.bench_function("count_curve/reciprocal:10000 geo 24", |b| {
        b.iter(|| count_curve(black_box(&f), &schedule).unwrap())
    });

    let cantor = cantor_endpoints(12);
    let pow3 = ScaleSchedule::pow3(12).unwrap();
    c.bench_function("estimate_dimension/cantor:12 pow3 12", |b| {
        b.iter(|| estimate_dimension(black_box(&cantor), &pow3).unwrap())
    });
}

criterion_group!(benches, bench_count_curve);
criterion_main!(benches);
