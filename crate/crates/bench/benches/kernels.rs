use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex;
use num_rational::BigRational;

use schurlang_core::local_factors::local_l_factor;
use schurlang_core::partition::dim_schur;
use schurlang_core::rep_ring::decompose_sum;
use schurlang_core::young::schur_image_dim;
use schurlang_core::{lr_coefficient, Partition, Scalar, UnramifiedParameter};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn q(n: i64, d: i64) -> Scalar {
    Complex::new(BigRational::new(n.into(), d.into()), BigRational::from_integer(0.into()))
}

fn lr(c: &mut Criterion) {
    let (lam, mu, nu) = (p(&[4, 2, 1]), p(&[3, 2, 1]), p(&[6, 4, 2, 1]));
    c.bench_function("lr_coefficient (4,2,1)(3,2,1)->(6,4,2,1)", |b| {
        b.iter(|| lr_coefficient(black_box(&lam), black_box(&mu), black_box(&nu)))
    });
}

fn dims(c: &mut Criterion) {
    let lam = p(&[5, 3, 2, 1]);
    c.bench_function("dim_schur (5,3,2,1) n=8", |b| b.iter(|| dim_schur(black_box(&lam), 8)));
    let lam = p(&[2, 1]);
    c.bench_function("schur_image_dim (2,1) n=3", |b| b.iter(|| schur_image_dim(black_box(&lam), 3)));
}

fn decompose(c: &mut Criterion) {
    let nu = p(&[4, 2]);
    c.bench_function("decompose_sum (4,2) 2 slots", |b| b.iter(|| decompose_sum(black_box(&nu), 2)));
}

fn l_factor(c: &mut Criterion) {
    let param = UnramifiedParameter::new(vec![q(1, 2), q(2, 3), q(-3, 5)], 7).unwrap();
    let nu = p(&[3, 1]);
    c.bench_function("local_l_factor (3,1) rank 3", |b| b.iter(|| local_l_factor(black_box(&param), &nu)));
}

criterion_group!(benches, lr, dims, decompose, l_factor);
criterion_main!(benches);
