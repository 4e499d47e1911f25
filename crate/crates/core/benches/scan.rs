use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use g2cover::family::{presets, scan_sequential, GridSpec, ParamFamily, ScanOptions};

fn grids() -> Vec<(&'static str, ParamFamily, GridSpec)> {
    vec![
        ("pencil", presets::two_torsion_pencil(), GridSpec::integers(-12, 12, 1)),
        ("independent", presets::independent_sections(), GridSpec { samples: Some(48), seed: 1, ..GridSpec::integers(-4, 4, 3) }),
        ("surface", presets::surface_two_torsion(), GridSpec { max_den: 2, ..GridSpec::integers(-3, 3, 2) }),
    ]
}

fn scans(c: &mut Criterion) {
    let opts = ScanOptions::default();
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for (name, fam, grid) in grids() {
        group.bench_with_input(BenchmarkId::new("sequential", name), &grid, |b, g| {
            b.iter(|| scan_sequential(black_box(&fam), g, &opts).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", name), &grid, |b, g| {
            b.iter(|| g2cover::family::scan_parallel(black_box(&fam), g, &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, scans);
criterion_main!(benches);
