use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use recbaf::psm::enumerate_psm;
use recbaf::semantics::{complete_extensions, grounded, EnumerationOptions, Route};
use recbaf::{DefinitionMode, Flavor};
use recbaf_bench::{large, programs, small};

fn grounded_large(c: &mut Criterion) {
    let mut group = c.benchmark_group("grounded");
    group.sample_size(10);
    for flavor in [Flavor::Af, Flavor::Afn, Flavor::Rafn, Flavor::Afrad] {
        let fw = large(flavor, 1000, 7);
        group.bench_with_input(BenchmarkId::from_parameter(flavor), &fw, |b, fw| {
            b.iter(|| grounded(black_box(fw), DefinitionMode::General).unwrap())
        });
    }
    group.finish();
}

fn complete_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("complete");
    for flavor in [Flavor::Afn, Flavor::Rafn] {
        let fws = small(flavor, 10, 20, 11);
        for (label, route) in [("direct", Route::Direct), ("program", Route::LogicProgram)] {
            let options = EnumerationOptions { route, ..EnumerationOptions::default() };
            group.bench_function(BenchmarkId::new(label, flavor), |b| {
                b.iter(|| {
                    for fw in &fws {
                        black_box(complete_extensions(fw, DefinitionMode::General, &options).unwrap());
                    }
                })
            });
        }
    }
    group.finish();
}

fn psm_enumeration(c: &mut Criterion) {
    let ps = programs(Flavor::Asaf, 12, 20, 13);
    c.bench_function("psm/asaf", |b| {
        b.iter(|| {
            for p in &ps {
                black_box(enumerate_psm(p).unwrap());
            }
        })
    });
}

criterion_group!(benches, grounded_large, complete_routes, psm_enumeration);
criterion_main!(benches);
