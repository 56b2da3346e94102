use chev_group::{check_steinberg, ChevalleyGroup, Exec};
use chev_ring::Ring;
use chev_roots::SystemType;
use criterion::{criterion_group, criterion_main, Criterion};

fn bench(c: &mut Criterion) {
    let mut grp = c.benchmark_group("steinberg_b2_zmod25");
    grp.sample_size(10);
    let r = Ring::parse("zmod:5^2", &[2]).unwrap();
    let g = ChevalleyGroup::new(SystemType::B2, &r).unwrap();
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        grp.bench_function(name, |b| b.iter(|| check_steinberg(&g, 5, 7, exec).unwrap()));
    }
    grp.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
