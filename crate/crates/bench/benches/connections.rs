use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qsmooth_bench::sphere_fixture;
use qsmooth_core::grading::{connection_matrix_det, connection_power, solve_connection};
use qsmooth_core::gwa::{smoothness_check, GwaSpec};
use qsmooth_core::{Scalar, UniPoly};

fn solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_connection");
    for l in [2, 4, 6] {
        let (p, g, a) = sphere_fixture("su2q", l);
        group.bench_with_input(BenchmarkId::new("su2q", l), &l, |b, _| {
            b.iter(|| solve_connection(&p, &g, black_box(&a)).unwrap())
        });
    }
    group.finish();
}

fn power(c: &mut Criterion) {
    let mut group = c.benchmark_group("connection_power");
    group.sample_size(10);
    for l in [2, 3] {
        let (p, g, a) = sphere_fixture("su2q", l);
        let omega = solve_connection(&p, &g, &a).unwrap().omega;
        group.bench_with_input(BenchmarkId::new("su2q", l), &l, |b, &l| {
            b.iter(|| connection_power(&p, &g, black_box(&omega), l as usize).unwrap())
        });
    }
    group.finish();
}

fn determinant(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinant");
    for l in [4, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(l), &l, |b, &l| {
            b.iter(|| connection_matrix_det(black_box(l)))
        });
    }
    group.finish();
}

fn smoothness(c: &mut Criterion) {
    // a^2 (1 - q^-2 a)(1 - q^-4 a)(1 - q^-6 a)
    let mut p = UniPoly::monomial(Scalar::one(), 2);
    for m in 1..=3 {
        p = &p * &UniPoly::from_coeffs(vec![Scalar::one(), -Scalar::t_pow(-2 * m)]);
    }
    let spec = GwaSpec::new(Scalar::t_pow(6), Scalar::zero(), p).unwrap();
    c.bench_function("smoothness_k2_l3", |b| b.iter(|| smoothness_check(black_box(&spec)).unwrap()));
}

criterion_group!(benches, solve, power, determinant, smoothness);
criterion_main!(benches);
