use criterion::{black_box, criterion_group, criterion_main, Criterion};
use quadcount_core::constructions;
use quadcount_core::pattern::{BuiltinPattern, Pattern};
use quadcount_core::{exact_ex, min_added_edge_copies, optimize_partition, PartitionMode, SearchBudget};

fn cmin_oracle(c: &mut Criterion) {
    let d4 = constructions::d4(12);
    let p3 = Pattern::builtin(BuiltinPattern::P3);
    c.bench_function("cmin d4(12) P3", |b| {
        b.iter(|| min_added_edge_copies(black_box(&d4.hypergraph), &p3, None).unwrap())
    });
}

fn partition_search(c: &mut Criterion) {
    let b4 = constructions::b4(14).unwrap();
    c.bench_function("optimize_partition b4(14) odd-odd 8 restarts", |b| {
        b.iter(|| {
            optimize_partition(
                black_box(&b4.hypergraph),
                PartitionMode::OddOdd,
                8,
                1729,
                &[],
            )
            .unwrap()
        })
    });
}

fn turan_search(c: &mut Criterion) {
    let c3 = Pattern::builtin(BuiltinPattern::C3);
    c.bench_function("exact_ex(6, C3)", |b| {
        b.iter(|| exact_ex(6, black_box(&c3), SearchBudget::default()).unwrap())
    });
}

criterion_group!(benches, cmin_oracle, partition_search, turan_search);
criterion_main!(benches);
