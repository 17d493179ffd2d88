use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mimfvs::builders::{interval_linear_order, random_intervals};
use mimfvs::dp::{solve_mif, SolveOptions};
use mimfvs::BranchDecomposition;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn interval_instance(n: usize, len: f64) -> (mimfvs::Graph, BranchDecomposition) {
    let iv = random_intervals(n, len, &mut ChaCha8Rng::seed_from_u64(7));
    let (g, order) = interval_linear_order(&iv).unwrap();
    (g, BranchDecomposition::from_linear_order(&order).unwrap())
}

fn parallel_vs_sequential(c: &mut Criterion) {
    let mut group = c.benchmark_group("interval_mif");
    group.sample_size(10);
    for (n, len) in [(40, 4.0), (80, 4.0), (40, 12.0)] {
        let (g, d) = interval_instance(n, len);
        for parallel in [false, true] {
            if parallel && !mimfvs::par::available() {
                continue;
            }
            let opts = SolveOptions {
                parallel,
                ..SolveOptions::default()
            };
            let name = if parallel { "parallel" } else { "sequential" };
            group.bench_with_input(BenchmarkId::new(name, format!("n{n}_len{len}")), &(), |b, _| {
                b.iter(|| solve_mif(&g, &d, &opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, parallel_vs_sequential);
criterion_main!(benches);
