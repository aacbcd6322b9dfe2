use criterion::{black_box, criterion_group, criterion_main, Criterion};
use quadcount_core::constructions;
use quadcount_core::count::{count_c3, count_copies_generic, count_p2, count_p3, count_p4};
use quadcount_core::pattern::{BuiltinPattern, Pattern};
use quadcount_core::random::random_hypergraph;
use rand::SeedableRng;

fn specialized_counters(c: &mut Criterion) {
    let t4 = constructions::t4(20).hypergraph;
    let d4 = constructions::d4(20).hypergraph;
    let b4 = constructions::b4(20).unwrap().hypergraph;
    c.bench_function("count_p2 t4(20)", |b| {
        b.iter(|| count_p2(black_box(&t4)).unwrap())
    });
    c.bench_function("count_p3 d4(20)", |b| {
        b.iter(|| count_p3(black_box(&d4)).unwrap())
    });
    c.bench_function("count_p4 b4(20)", |b| {
        b.iter(|| count_p4(black_box(&b4)).unwrap())
    });
    c.bench_function("count_c3 b4(20)", |b| {
        b.iter(|| count_c3(black_box(&b4)).unwrap())
    });
}

fn generic_counter(c: &mut Criterion) {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let host = random_hypergraph(11, 0.3, &mut rng);
    for b in BuiltinPattern::ALL {
        let p = Pattern::builtin(b);
        c.bench_function(&format!("generic {} random(11,0.3)", b.name()), |bench| {
            bench.iter(|| count_copies_generic(black_box(&host), black_box(&p)).unwrap())
        });
    }
}

criterion_group!(benches, specialized_counters, generic_counter);
criterion_main!(benches);
