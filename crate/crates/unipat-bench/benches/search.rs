use criterion::{black_box, criterion_group, criterion_main, Criterion};
use unipat::patterns::antichain_counts;
use unipat::singleroot::{arm_search, arm_search_with, midafi_table, SearchOptions};
use unipat::{RootSystem, RootType};
use unipat_bench::{e8_root_of_height, exceptional};

fn antichains(c: &mut Criterion) {
    let mut g = c.benchmark_group("antichain_counts");
    for rs in exceptional() {
        g.bench_function(rs.label(), |b| b.iter(|| antichain_counts(black_box(&rs))));
    }
    g.finish();
}

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("midafi_table");
    g.sample_size(10);
    for rs in exceptional() {
        g.bench_function(rs.label(), |b| {
            b.iter(|| midafi_table(black_box(&rs), 0).unwrap())
        });
    }
    g.finish();
}

fn single_root(c: &mut Criterion) {
    let rs = RootSystem::new(RootType::E8, 8).unwrap();
    let a = e8_root_of_height(&rs, 24);
    c.bench_function("arm_search E8 height 24", |b| {
        b.iter(|| arm_search(black_box(&rs), a).unwrap())
    });
    let f4 = RootSystem::new(RootType::F4, 4).unwrap();
    let top = f4.highest_root();
    let unpruned = SearchOptions {
        precommit: false,
        ..SearchOptions::default()
    };
    let mut g = c.benchmark_group("arm_search F4 highest root");
    g.bench_function("pruned", |b| {
        b.iter(|| arm_search(black_box(&f4), top).unwrap())
    });
    g.bench_function("without precommit", |b| {
        b.iter(|| arm_search_with(black_box(&f4), top, unpruned).unwrap())
    });
    g.finish();
}

criterion_group!(benches, antichains, tables, single_root);
criterion_main!(benches);
