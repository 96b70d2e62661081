use criterion::{criterion_group, criterion_main, Criterion};

use slicetor_core::satellite::{bing_double_obstruction, builtin_knot};
use slicetor_core::torsion::{boundary_torsion, BoundarySeifertMatrix, PsiMap};
use slicetor_core::{Cyclotomic, MonomialRep};

fn fixture_rep() -> MonomialRep {
    let path = format!(
        "{}/../../fixtures/bing_fig8_rep.json",
        env!("CARGO_MANIFEST_DIR")
    );
    MonomialRep::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn bench_bing_pipeline(c: &mut Criterion) {
    let rep = fixture_rep();
    let (_, delta) = builtin_knot("fig8").unwrap();
    c.bench_function("bing_double_obstruction", |b| {
        b.iter(|| bing_double_obstruction(&delta, &rep, 2, 1_000_000, 10_000_000).unwrap())
    });
}

fn bench_boundary_torsion(c: &mut Criterion) {
    let seifert = BoundarySeifertMatrix::knot(vec![vec![1, 1], vec![0, -1]]).unwrap();
    let rep = MonomialRep::trivial(1, 1);
    let psi = PsiMap::identity(1);
    c.bench_function("boundary_torsion_fig8_trivial", |b| {
        b.iter(|| boundary_torsion(&seifert, &rep, &psi).unwrap())
    });
}

fn bench_norm_test(c: &mut Criterion) {
    c.bench_function("rational_norm_class_2115", |b| {
        b.iter(|| {
            slicetor_core::rational_norm_class(
                &slicetor_core::rat::rat(2115),
                slicetor_core::RealUnits::PlusMinusOne,
                10_000_000,
            )
            .unwrap()
        })
    });
}

fn bench_cyclotomic_mul(c: &mut Criterion) {
    let a = Cyclotomic::from_dense(
        8,
        (1..=4).map(|i| slicetor_core::rat::rat(i)).collect(),
    );
    let b = a.conj();
    c.bench_function("cyclotomic_mul_conductor_8", |bch| {
        bch.iter(|| &a * &b)
    });
}

criterion_group!(
    benches,
    bench_bing_pipeline,
    bench_boundary_torsion,
    bench_norm_test,
    bench_cyclotomic_mul
);
criterion_main!(benches);
