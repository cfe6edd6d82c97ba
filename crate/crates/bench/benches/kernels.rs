use criterion::{black_box, criterion_group, criterion_main, Criterion};
use repcur_core::currents::{current_operator_matrix, theta_monomial_operator, EvaluationModule};
use repcur_core::invariants::{casimir_tensor, fft_tensors, theta_cycle_gl};
use repcur_core::linalg::{commutant_dimension, rref};
use repcur_core::repbuild::{isotypic_decompose, tensor_power};
use repcur_core::verify::{check_isotypic_irreducibility, integer_points, GeneratorFamily};
use repcur_core::{build_lie_algebra, Family, Mat, Rat};

fn bench_rref(c: &mut Criterion) {
    let m = Mat::from_vec(
        12,
        12,
        (0..144).map(|i| Rat::new((i * 7 % 11) - 5, 1 + i % 3)).collect(),
    );
    c.bench_function("rref 12x12", |b| b.iter(|| rref(black_box(&m))));
}

fn bench_modules(c: &mut Criterion) {
    let gl2 = build_lie_algebra(Family::Gl, 2).unwrap();
    let v3 = tensor_power(&gl2, 3).unwrap();
    c.bench_function("isotypic gl2 V^3", |b| {
        b.iter(|| isotypic_decompose(black_box(&v3)).unwrap())
    });
    c.bench_function("commutant gl2 V^3", |b| {
        b.iter(|| commutant_dimension(black_box(&v3.actions), v3.dim, None).unwrap())
    });
    let sp4 = build_lie_algebra(Family::Sp, 2).unwrap();
    c.bench_function("sp4 pairing tensors k=2", |b| {
        b.iter(|| fft_tensors(black_box(&sp4), 2).unwrap())
    });
}

fn bench_currents(c: &mut Criterion) {
    let gl3 = build_lie_algebra(Family::Gl, 3).unwrap();
    let em = EvaluationModule::standard_power(&gl3, integer_points(3)).unwrap();
    let cycle = theta_cycle_gl(3, 3);
    let op = theta_monomial_operator(&cycle, &[0, 1, 2]).unwrap();
    c.bench_function("cycle operator gl3 V^3", |b| {
        b.iter(|| current_operator_matrix(black_box(&op), &em))
    });
    let omega = theta_monomial_operator(&casimir_tensor(&gl3), &[1, 2]).unwrap();
    c.bench_function("casimir operator gl3 V^3", |b| {
        b.iter(|| current_operator_matrix(black_box(&omega), &em))
    });
    let gl2 = build_lie_algebra(Family::Gl, 2).unwrap();
    let em = EvaluationModule::standard_power(&gl2, integer_points(3)).unwrap();
    let fam = GeneratorFamily::default_for(&em);
    c.bench_function("irreducibility gl2 V^3", |b| {
        b.iter(|| check_isotypic_irreducibility(black_box(&em), 2, &fam).unwrap())
    });
}

criterion_group!(benches, bench_rref, bench_modules, bench_currents);
criterion_main!(benches);
