//! Sequential against rayon-parallel runs of the main pipelines.
//!
//! `par::set_parallel` switches the shared map helpers at runtime, so both
//! modes are measured from one build. Built without the `parallel` feature,
//! the two rows coincide.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qslift_core::lifting::{lifting_gs, lifting_ms, LiftingProblem};
use qslift_core::par;
use qslift_core::parametric::stratum_ideal;
use qslift_core::parse::{parse_polys, parse_term_in};
use qslift_core::{HilbertPoly, MonomialIdeal, Ring};

const MODES: [(&str, bool); 2] = [("sequential", false), ("parallel", true)];

fn curve_problem() -> LiftingProblem {
    let ip = parse_polys("x0^2, x0*x1+x1^2, x0*x2", 4).unwrap();
    LiftingProblem::new(Ring::new(5), &ip, HilbertPoly::from_ints(&[1, 4, 1])).unwrap()
}

fn double_point_problem() -> LiftingProblem {
    let ip = parse_polys("x0, x1^2", 3).unwrap();
    LiftingProblem::new(Ring::new(4), &ip, HilbertPoly::from_ints(&[2, 2])).unwrap()
}

fn monomial_ideal(text: &str, nvars: usize) -> MonomialIdeal {
    let ring = Ring::new(nvars);
    MonomialIdeal::new(nvars, text.split(',').map(|t| parse_term_in(t.trim(), &ring).unwrap()))
}

fn bench_stratum(c: &mut Criterion) {
    let j = monomial_ideal("x0^2, x0*x1, x0*x2, x1^3, x1^2*x2", 4);
    let mut group = c.benchmark_group("stratum_ideal");
    group.sample_size(10);
    for (name, on) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "initial ideal of the section"), &j, |b, j| {
            par::set_parallel(on);
            b.iter(|| stratum_ideal(j))
        });
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let problem = curve_problem();
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (name, on) in MODES {
        group.bench_function(BenchmarkId::new(name, "curve"), |b| {
            par::set_parallel(on);
            b.iter(|| problem.enumerate().unwrap())
        });
    }
    group.finish();
}

fn bench_charts(c: &mut Criterion) {
    let curve = curve_problem();
    let double = double_point_problem();
    let mut group = c.benchmark_group("charts");
    group.sample_size(10);
    for (name, on) in MODES {
        group.bench_function(BenchmarkId::new(name, "marked, curve"), |b| {
            par::set_parallel(on);
            b.iter(|| lifting_ms(&curve).unwrap())
        });
        group.bench_function(BenchmarkId::new(name, "stratum, double point"), |b| {
            par::set_parallel(on);
            b.iter(|| lifting_gs(&double).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_stratum, bench_enumeration, bench_charts);
criterion_main!(benches);
