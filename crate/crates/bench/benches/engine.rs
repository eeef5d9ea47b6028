use criterion::{black_box, criterion_group, criterion_main, Criterion};

use denom_core::arc_model::{enumerate_arcs, TaggedTriangulation};
use denom_core::cluster_engine::{
    b_matrix_of, enumerate_monomials, explore, ideal_b_matrix, ExploreMode, Seed,
};
use denom_core::surface_model::{standard_triangulation, MarkedSurface};
use denom_core::verifier::lockstep;

fn exploration(c: &mut Criterion) {
    let octagon =
        ideal_b_matrix(&standard_triangulation(&MarkedSurface::disk(8, 0).unwrap()).unwrap());
    c.bench_function("explore 8-gon", |b| {
        b.iter(|| {
            explore(
                &Seed::initial(black_box(octagon.clone())),
                ExploreMode::Full { cap: 10_000 },
            )
            .unwrap()
        })
    });
    let ex = explore(&Seed::initial(octagon), ExploreMode::Full { cap: 10_000 }).unwrap();
    c.bench_function("monomials 8-gon degree 3", |b| {
        b.iter(|| enumerate_monomials(black_box(&ex), 3))
    });
}

fn geometry(c: &mut Criterion) {
    let surface = MarkedSurface::disk(4, 1).unwrap();
    c.bench_function("enumerate arcs once-punctured square", |b| {
        b.iter(|| enumerate_arcs(black_box(&surface)).unwrap())
    });
    let model = enumerate_arcs(&surface).unwrap();
    let t = TaggedTriangulation::standard(&model);
    let bm = b_matrix_of(&t).unwrap();
    c.bench_function("lockstep once-punctured square", |b| {
        b.iter(|| lockstep(&model, &t, black_box(bm.clone())).unwrap())
    });
}

criterion_group!(benches, exploration, geometry);
criterion_main!(benches);
