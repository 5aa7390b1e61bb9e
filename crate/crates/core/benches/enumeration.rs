use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qeuler_core::enumerate::tally_sequential;
use qeuler_core::perm::{GroupKind, GroupSpec};

fn walk(c: &mut Criterion) {
    let mut group = c.benchmark_group("tally");
    group.sample_size(10);
    for (kind, n) in [(GroupKind::B, 6), (GroupKind::B, 7), (GroupKind::D, 7)] {
        let spec = GroupSpec::new(kind, n).unwrap();
        group.bench_with_input(BenchmarkId::new("sequential", spec), &spec, |b, s| {
            b.iter(|| black_box(tally_sequential(s)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", spec), &spec, |b, s| {
            b.iter(|| black_box(qeuler_core::enumerate::tally_parallel(s)))
        });
    }
    group.finish();
}

criterion_group!(benches, walk);
criterion_main!(benches);
