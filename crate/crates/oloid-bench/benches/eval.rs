use criterion::{black_box, criterion_group, criterion_main, Criterion};

use oloid::development::dev_touching;
use oloid::pencil::ExtendedParam;
use oloid::surface::{oloid_area, Angle};
use oloid::touching::gamma;

fn bench_touching_curve(c: &mut Criterion) {
    let lam = ExtendedParam::Finite(0.3);
    c.bench_function("touching curve, 512 samples", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for i in 0..512 {
                let t = -2.0 + 8.2 * i as f64 / 511.0;
                acc += gamma(lam, Angle::new(t)).unwrap().point.x;
            }
            black_box(acc)
        })
    });
}

fn bench_development(c: &mut Criterion) {
    let lam = ExtendedParam::Finite(0.5);
    c.bench_function("development, 512 samples", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for i in 0..512 {
                let t = -6.0 + 12.0 * i as f64 / 511.0;
                let p = dev_touching(lam, t).unwrap();
                acc += p.xi + p.eta;
            }
            black_box(acc)
        })
    });
}

fn bench_area(c: &mut Criterion) {
    let mut group = c.benchmark_group("quadrature");
    group.sample_size(20);
    group.bench_function("hull area", |b| b.iter(|| black_box(oloid_area().unwrap())));
    group.finish();
}

criterion_group!(benches, bench_touching_curve, bench_development, bench_area);
criterion_main!(benches);
