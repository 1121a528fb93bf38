use criterion::{black_box, criterion_group, criterion_main, Criterion};

use equicurve_core::arith::cyclotomic::omega_field;
use equicurve_core::arith::{Field, NfElem, Poly, Rational};
use equicurve_core::arith::square::SquareConfig;
use equicurve_core::brauer::{is_split_kx, ConstField};

fn dense(seed: i64, n: usize) -> Poly<Rational> {
    let c: Vec<i64> = (0..=n as i64).map(|i| (i * 7 + seed) % 11 - 5).collect();
    Poly::from_i64s(&c)
}

fn polynomials(c: &mut Criterion) {
    let common = dense(1, 6);
    let a = &common * &dense(2, 14);
    let b = &common * &dense(3, 14);
    c.bench_function("gcd degree 20", |bench| bench.iter(|| Poly::gcd(black_box(&a), black_box(&b))));
    c.bench_function("squarefree degree 20", |bench| bench.iter(|| black_box(&a).is_squarefree()));
}

fn number_fields(c: &mut Criterion) {
    let (_, w) = omega_field(5);
    let x = w.add_ref(&NfElem::from_i64(2)).mul_ref(&w.square());
    c.bench_function("inverse in Q(w5)", |bench| bench.iter(|| black_box(&x).inv()));
}

fn splitting(c: &mut Criterion) {
    let q = ConstField::rationals();
    let cfg = SquareConfig::default();
    let f = Poly::<NfElem>::from_i64s(&[0, -3]);
    let g = Poly::<NfElem>::from_i64s(&[0, 27, 1]);
    c.bench_function("split (-3t, t(t+27))", |bench| bench.iter(|| is_split_kx(&q, &f, &g, &cfg)));
    let f = Poly::<NfElem>::from_i64s(&[0, 1]);
    let g = Poly::<NfElem>::from_i64s(&[2, -4, 1]);
    c.bench_function("not split (x, x^2-4x+2)", |bench| bench.iter(|| is_split_kx(&q, &f, &g, &cfg)));
}

criterion_group!(benches, polynomials, number_fields, splitting);
criterion_main!(benches);
