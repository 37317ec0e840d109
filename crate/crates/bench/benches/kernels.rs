use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fpf5::arith::{kernel, CoeffRing, Mat};
use fpf5::constructions::build_thm24;
use fpf5::constructions::constants::alt5_perms;
use fpf5::constructions::hall_witt::hall_witt_sweep;
use fpf5::group::presentation_from_chain;
use fpf5::group::todd_coxeter::coset_enumeration;
use fpf5::group::{ChainOptions, StabChain};

fn howell(c: &mut Criterion) {
    let ring = CoeffRing::local_ring(7, 2).unwrap();
    let data: Vec<u32> = (0..96u32).map(|i| (i * 37 + 11) % 49).collect();
    let a = Mat::new(ring, 8, 12, data).unwrap();
    c.bench_function("howell kernel 8x12 over Z/49", |b| b.iter(|| kernel(black_box(&a)).unwrap()));
}

fn chains(c: &mut Criterion) {
    let k = build_thm24(3).unwrap();
    c.bench_function("chain for J at r=3", |b| {
        b.iter(|| StabChain::build(black_box(&k.j_gens), &ChainOptions::seeded(1)).unwrap().order())
    });
}

fn todd_coxeter(c: &mut Criterion) {
    let chain = StabChain::build(&alt5_perms(), &ChainOptions::seeded(1)).unwrap();
    let p = presentation_from_chain(&chain).unwrap();
    c.bench_function("coset enumeration Alt(5)", |b| b.iter(|| coset_enumeration(black_box(&p), &[], 10_000).unwrap()));
}

fn hall_witt(c: &mut Criterion) {
    c.bench_function("hall-witt sweep r=7", |b| b.iter(|| hall_witt_sweep(black_box(7)).unwrap()));
}

criterion_group!(benches, howell, chains, todd_coxeter, hall_witt);
criterion_main!(benches);
