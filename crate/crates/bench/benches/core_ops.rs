//! Hot-path benchmarks: clique enumeration, the three theorem verifiers,
//! exact Betti ranks, and the dimension recursion.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use graphgeom::forms::{orientation_search, stokes_verify, Form, OrientationOutcome};
use graphgeom::generators;
use graphgeom::geometry::{dimension, gauss_bonnet_verify};
use graphgeom::morse::{poincare_hopf_verify, random_injective_function, sphere_like};
use graphgeom::simplicial::{clique_complex, clique_fvec};

fn bench_clique_enumeration(c: &mut Criterion) {
    let snub = generators::snub_cube();
    let dense = generators::erdos_renyi(20, 1, 2, 7).unwrap();
    c.bench_function("clique_fvec/snub_cube", |b| {
        b.iter(|| black_box(clique_fvec(black_box(&snub))))
    });
    c.bench_function("clique_fvec/gnp_20_half", |b| {
        b.iter(|| black_box(clique_fvec(black_box(&dense))))
    });
    c.bench_function("clique_complex/gnp_20_half", |b| {
        b.iter(|| black_box(clique_complex(black_box(&dense), None)))
    });
}

fn bench_verifiers(c: &mut Criterion) {
    let ico = generators::icosahedron();
    let dense = generators::erdos_renyi(18, 1, 2, 3).unwrap();
    c.bench_function("gauss_bonnet/icosahedron", |b| {
        b.iter(|| black_box(gauss_bonnet_verify(black_box(&ico))))
    });
    c.bench_function("gauss_bonnet/gnp_18_half", |b| {
        b.iter(|| black_box(gauss_bonnet_verify(black_box(&dense))))
    });

    let snub = generators::snub_cube();
    let f = random_injective_function(&snub, 0);
    c.bench_function("poincare_hopf/snub_cube", |b| {
        b.iter(|| black_box(poincare_hopf_verify(black_box(&snub), black_box(&f)).unwrap()))
    });

    let complex = clique_complex(&snub, None);
    let OrientationOutcome::Orientable(o) = orientation_search(&complex, 2).unwrap() else {
        unreachable!("snub cube orients");
    };
    let form = Form::random_int(&complex, 1, 5);
    c.bench_function("stokes/snub_cube", |b| {
        b.iter(|| black_box(stokes_verify(&complex, &o, black_box(&form)).unwrap()))
    });
}

fn bench_exact_linear_algebra(c: &mut Criterion) {
    let oct = generators::octahedron();
    let dense = generators::erdos_renyi(12, 1, 2, 11).unwrap();
    let c_oct = clique_complex(&oct, None);
    let c_dense = clique_complex(&dense, None);
    c.bench_function("betti/octahedron", |b| {
        b.iter(|| black_box(graphgeom::betti_numbers(black_box(&c_oct)).unwrap()))
    });
    c.bench_function("betti/gnp_12_half", |b| {
        b.iter(|| black_box(graphgeom::betti_numbers(black_box(&c_dense)).unwrap()))
    });
}

fn bench_recursions(c: &mut Criterion) {
    let tc = generators::truncated_cube();
    c.bench_function("dimension/truncated_cube", |b| {
        b.iter(|| black_box(dimension(black_box(&tc))))
    });
    let oct = generators::octahedron();
    c.bench_function("sphere_like/octahedron", |b| {
        b.iter(|| black_box(sphere_like(black_box(&oct), 8).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_clique_enumeration,
    bench_verifiers,
    bench_exact_linear_algebra,
    bench_recursions
);
criterion_main!(benches);
