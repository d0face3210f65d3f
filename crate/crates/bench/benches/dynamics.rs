use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rowvac::ast::Theta;
use rowvac::dynamics::{rowmotion, rowvacuation};
use rowvac::lalanne_kreweras::lalanne_kreweras;
use rowvac::{CartanType, NoncrossingLattice};
use rowvac_bench::{dynamics_types, Fixture};

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("all-antichains");
    for t in dynamics_types() {
        let f = Fixture::new(t);
        let p = f.rp.poset();
        group.bench_with_input(BenchmarkId::new("rowmotion", t), &f, |b, f| {
            b.iter(|| {
                f.antichains
                    .iter()
                    .map(|a| rowmotion(p, black_box(a)).len())
                    .sum::<usize>()
            })
        });
        group.bench_with_input(BenchmarkId::new("rowvacuation", t), &f, |b, f| {
            b.iter(|| {
                f.antichains
                    .iter()
                    .map(|a| rowvacuation(p, black_box(a)).len())
                    .sum::<usize>()
            })
        });
        group.bench_function(BenchmarkId::new("enumerate", t), |b| {
            b.iter(|| p.count_antichains())
        });
    }
    group.finish();
}

fn closed_form(c: &mut Criterion) {
    let f = Fixture::new(CartanType::A(7));
    let p = f.rp.poset();
    let mut group = c.benchmark_group("rvac-a7");
    group.bench_function("toggles", |b| {
        b.iter(|| {
            f.antichains
                .iter()
                .map(|a| rowvacuation(p, black_box(a)).len())
                .sum::<usize>()
        })
    });
    group.bench_function("interval-formula", |b| {
        b.iter(|| {
            f.antichains
                .iter()
                .map(|a| lalanne_kreweras(&f.rp, black_box(a)).unwrap().len())
                .sum::<usize>()
        })
    });
    group.finish();
}

fn bijection(c: &mut Criterion) {
    let mut group = c.benchmark_group("theta");
    for t in [CartanType::A(5), CartanType::D(5)] {
        let f = Fixture::new(t);
        let theta = Theta::new(&f.rp).unwrap();
        group.bench_with_input(BenchmarkId::new("apply-all", t), &f, |b, f| {
            b.iter(|| {
                f.antichains
                    .iter()
                    .filter(|a| theta.apply(black_box(a)).unwrap().is_identity())
                    .count()
            })
        });
    }
    group.sample_size(10);
    group.bench_function("nc-lattice-d5", |b| {
        b.iter(|| {
            NoncrossingLattice::new(black_box(CartanType::D(5)))
                .unwrap()
                .len()
        })
    });
    group.finish();
}

criterion_group!(benches, sweep, closed_form, bijection);
criterion_main!(benches);
