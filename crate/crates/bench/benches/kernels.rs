//! Benchmarks for the hot kernels: symmetry enumeration, code assembly and
//! the bounded-weight distance search.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use chromatic_core::anyon::AnyonModel;
use chromatic_core::factory::{
    build_stellated_color_code, build_triangular_color_code,
};
use chromatic_core::symmetry::SymmetryGroup;

fn symmetry_enumeration(c: &mut Criterion) {
    let m = AnyonModel::color_code();
    c.bench_function("enumerate_cc_symmetries", |b| {
        b.iter(|| SymmetryGroup::enumerate(black_box(&m)).order())
    });
}

fn code_assembly(c: &mut Criterion) {
    c.bench_function("build_triangular_666_d5", |b| {
        b.iter(|| build_triangular_color_code(black_box("666"), 5).unwrap().1.n)
    });
    c.bench_function("build_stellated_488_s5_d5", |b| {
        b.iter(|| build_stellated_color_code(black_box("488"), 5, 5).unwrap().1.n)
    });
}

fn distance_search(c: &mut Criterion) {
    let (_, tri666, _) = build_triangular_color_code("666", 5).unwrap();
    c.bench_function("distance_triangular_666_d5", |b| {
        b.iter(|| tri666.distance_exact(black_box(5), false).weight())
    });
    let (_, stell, _) = build_triangular_color_code("488", 5).unwrap();
    c.bench_function("distance_triangular_488_d5", |b| {
        b.iter(|| stell.distance_exact(black_box(5), false).weight())
    });
    let (_, dressed) = build_stellated_color_code("666", 5, 3).unwrap();
    c.bench_function("distance_stellated_666_s5_d3_dressed", |b| {
        b.iter(|| dressed.distance_exact(black_box(3), true).weight())
    });
}

criterion_group!(kernels, symmetry_enumeration, code_assembly, distance_search);
criterion_main!(kernels);
