use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use treesym::pathtree::{phi_forward, psi_inverse, theta_map};
use treesym::{arrangements, gamma, genfun, nested};
use treesym_bench::standard_trees;

fn generating_functions(c: &mut Criterion) {
    let mut g = c.benchmark_group("compute_g");
    for n in [3, 4, 5] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| genfun::compute_g(n, 6).unwrap()));
    }
    g.finish();
    c.bench_function("ribbon_expansion_formal/5", |b| b.iter(|| nested::ribbon_expansion_formal(black_box(5))));
    c.bench_function("functional_equations/5", |b| b.iter(|| genfun::verify_g_functional_equation(5, 6).unwrap()));
}

fn bijections(c: &mut Criterion) {
    let trees = standard_trees(5);
    c.bench_function("phi_psi_round_trip/5", |b| {
        b.iter(|| trees.iter().all(|t| psi_inverse(&phi_forward(t)) == *t))
    });
    let seqs: Vec<_> = trees.iter().map(phi_forward).collect();
    c.bench_function("theta/5", |b| b.iter(|| seqs.iter().map(theta_map).count()));
}

fn enumerations(c: &mut Criterion) {
    c.bench_function("bernardi_trees/6", |b| b.iter(|| arrangements::bernardi_trees(black_box(6)).len()));
    c.bench_function("lbs_distribution/8", |b| b.iter(|| gamma::lbs_distribution(black_box(8)).unwrap()));
    c.bench_function("intransitive_distribution/6", |b| b.iter(|| gamma::intransitive_distribution(black_box(6)).unwrap()));
}

criterion_group!(benches, generating_functions, bijections, enumerations);
criterion_main!(benches);
