use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ffrec_core::config::InstanceConfig;
use ffrec_core::par::Execution;
use ffrec_core::verify::scan_theorem1_with;

fn instance(name: &str) -> ffrec_core::effective::TheoremInstance {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    InstanceConfig::from_json(&std::fs::read_to_string(path).unwrap())
        .unwrap()
        .build()
        .unwrap()
}

fn scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_theorem1");
    group.sample_size(10);
    for name in ["monomial.json", "sum_vs_trinomial.json"] {
        let inst = instance(name);
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, name), &inst, |b, inst| {
                b.iter(|| scan_theorem1_with(inst, 40, 40, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, scan);
criterion_main!(benches);
