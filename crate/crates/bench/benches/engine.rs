use criterion::{black_box, criterion_group, criterion_main, Criterion};
use reeskit::blowup::{rees_presentation, special_fiber};
use reeskit::frontend::parse_polynomial;
use reeskit::hilbert::hilbert_samuel_multiplicity;
use reeskit::modmat::{ext_module, free_resolution};
use reeskit::{Ideal, Limits, ModulePresentation, RingContext};

fn ideal(ring: &RingContext, gens: &[&str]) -> Ideal {
    Ideal::new(ring, gens.iter().map(|g| parse_polynomial(g, ring).unwrap())).unwrap()
}

fn bench_groebner(c: &mut Criterion) {
    let r = RingContext::grevlex(["x", "y", "z"]).unwrap();
    let cyclic = ["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"];
    let l = Limits::default();
    c.bench_function("groebner cyclic-3", |b| {
        b.iter(|| ideal(&r, &cyclic).groebner_basis(&l).unwrap().len())
    });
    let katsura = ["x + 2*y + 2*z - 1", "x^2 + 2*y^2 + 2*z^2 - x", "2*x*y + 2*y*z - y"];
    c.bench_function("groebner katsura-3", |b| {
        b.iter(|| ideal(&r, &katsura).groebner_basis(&l).unwrap().len())
    });
}

fn bench_blowup(c: &mut Criterion) {
    let r = RingContext::grevlex(["x", "y"]).unwrap();
    let l = Limits::default();
    c.bench_function("rees (x^2, x*y, y^3)", |b| {
        b.iter(|| rees_presentation(&ideal(&r, &["x^2", "x*y", "y^3"]), &l).unwrap())
    });
    c.bench_function("special fiber (x^2, y)", |b| {
        b.iter(|| special_fiber(&ideal(&r, &["x^2", "y"]), &l).unwrap())
    });
    let rt = RingContext::grevlex(["x", "y", "t"]).unwrap();
    c.bench_function("multiplicity (x^2, y, t)", |b| {
        b.iter(|| hilbert_samuel_multiplicity(&ideal(&rt, &["x^2", "y", "t"]), &l).unwrap())
    });
}

fn bench_modules(c: &mut Criterion) {
    let r = RingContext::grevlex(["x", "y", "z"]).unwrap();
    let l = Limits::default();
    let m = ModulePresentation::cyclic(&ideal(&r, &["x", "y", "z"]));
    c.bench_function("resolution of R/(x,y,z)", |b| b.iter(|| free_resolution(black_box(&m), 4, &l).unwrap()));
    let r2 = RingContext::grevlex(["x", "y"]).unwrap();
    let k = ModulePresentation::cyclic(&ideal(&r2, &["x^2", "x*y", "y^2"]));
    c.bench_function("Ext^2 of R/(x^2,xy,y^2)", |b| b.iter(|| ext_module(2, black_box(&k), &l).unwrap()));
}

criterion_group!(benches, bench_groebner, bench_blowup, bench_modules);
criterion_main!(benches);
