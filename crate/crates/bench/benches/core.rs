use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use regmod::chartab::dixon_character_table;
use regmod::dade::{
    check_proposition_hypotheses, construct_regular_vector, random_instance, remark_counterexample, Split,
};
use regmod::gmod::{regular_orbit_scan, ScanMode};
use regmod::scen::{build_extraspecial, validate_theorem_hypotheses, Sign};
use regmod_bench::scenario;

fn character_tables(c: &mut Criterion) {
    let e0 = scenario("e0");
    c.bench_function("dixon/order-54", |b| b.iter(|| dixon_character_table(black_box(e0.ga.clone()), 0).unwrap()));
    let e1 = scenario("e1");
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("dixon/order-2688", |b| b.iter(|| dixon_character_table(black_box(e1.ga.clone()), 0).unwrap()));
    g.bench_function("hypotheses/e1", |b| {
        b.iter(|| validate_theorem_hypotheses(&e1.ga, &e1.embeddings, 2, 7, 0).unwrap())
    });
    g.bench_function("extraspecial/2^(1+6)", |b| b.iter(|| build_extraspecial(2, 3, Sign::Plus).unwrap()));
    g.finish();
}

fn regular_orbits(c: &mut Criterion) {
    c.bench_function("remark/p=5", |b| b.iter(|| remark_counterexample(black_box(5)).unwrap()));
    let instances: Vec<_> = (0..8).map(|s| random_instance(2 + (s % 2), s)).collect();
    c.bench_function("construct/random-8", |b| {
        b.iter(|| {
            for inst in &instances {
                let split = Split::Explicit { b: inst.b.clone(), c: inst.c.clone() };
                let pi = check_proposition_hypotheses(&inst.module, split, 0).unwrap();
                black_box(construct_regular_vector(&pi).unwrap());
            }
        })
    });
    c.bench_function("scan/random-8", |b| {
        b.iter(|| {
            for inst in &instances {
                black_box(regular_orbit_scan(&inst.module, ScanMode::UntilRegularOrbit).unwrap());
            }
        })
    });
}

criterion_group!(benches, character_tables, regular_orbits);
criterion_main!(benches);
