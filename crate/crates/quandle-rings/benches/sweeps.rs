//! Parallel vs sequential timings for the three big search sweeps.
//!
//! The `parallel` arms exercise the rayon fan-out (the default feature);
//! building with `--no-default-features` makes them equal to the
//! sequential reference paths.

use criterion::{criterion_group, criterion_main, Criterion};
use quandle_rings::caps::Caps;
use quandle_rings::idempotents::{
    build_system, enumerate_idempotents, enumerate_idempotents_seq, search_system,
    search_system_seq,
};
use quandle_rings::quandle::{enumerate_quandles, enumerate_quandles_seq, Quandle};
use std::hint::black_box;

fn bench_idempotent_sweep(c: &mut Criterion) {
    let q = Quandle::commutative(7).unwrap();
    let caps = Caps::default();
    let mut group = c.benchmark_group("idempotent_sweep_c7_bound3");
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_idempotents(black_box(&q), 3, &caps).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_idempotents_seq(black_box(&q), 3, &caps).unwrap())
    });
    group.finish();
}

fn bench_table_enumeration(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("enumerate_quandles_order5");
    group.sample_size(20);
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_quandles(black_box(5), &caps).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_quandles_seq(black_box(5), &caps).unwrap())
    });
    group.finish();
}

fn bench_system_search(c: &mut Criterion) {
    let sys = build_system(&Quandle::commutative(5).unwrap(), 1);
    let caps = Caps {
        box_sweep_max: 100_000_000,
        ..Caps::default()
    };
    let mut group = c.benchmark_group("system_search_c5_box12");
    group.bench_function("parallel", |b| {
        b.iter(|| search_system(black_box(&sys), 12, &caps).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| search_system_seq(black_box(&sys), 12, &caps).unwrap())
    });
    group.finish();
}

criterion_group!(
    sweeps,
    bench_idempotent_sweep,
    bench_table_enumeration,
    bench_system_search
);
criterion_main!(sweeps);
