use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use frattini_lab::algebra::{normal_subgroups, subgroup_lattice, ElementTable, LatticeBudget, Subgroup};
use frattini_lab::corpus::{run_suite, Check, GroupExpr, GroupSpec, SuiteConfig};
use frattini_lab::invariants::{invariant_profile, min_generators};
use frattini_lab::par;

const MODES: [(&str, bool); 2] = [("parallel", true), ("sequential", false)];

fn whole(expr: &str) -> Subgroup {
    let g = GroupExpr::parse(expr).unwrap().build().unwrap().group;
    ElementTable::new(&g, 10_000).unwrap().whole()
}

fn bench_profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant_profile");
    for expr in ["sl2(9)", "direct_product(alt(5),alt(5))"] {
        let g = whole(expr);
        for (mode, on) in MODES {
            par::set_enabled(on);
            group.bench_with_input(BenchmarkId::new(mode, expr), &g, |b, g| b.iter(|| invariant_profile(g)));
        }
    }
    group.finish();
}

fn bench_normal_subgroups(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_subgroups");
    for expr in ["sym(5)", "swap_product(alt(5))"] {
        let g = whole(expr);
        for (mode, on) in MODES {
            par::set_enabled(on);
            group.bench_with_input(BenchmarkId::new(mode, expr), &g, |b, g| {
                b.iter(|| normal_subgroups(g, 10_000).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_min_generators(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_generators");
    for expr in ["elem_abelian(2,5)", "direct_product(q8,q8)"] {
        let g = whole(expr);
        for (mode, on) in MODES {
            par::set_enabled(on);
            group.bench_with_input(BenchmarkId::new(mode, expr), &g, |b, g| {
                b.iter(|| min_generators(g, 10_000).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("subgroup_lattice");
    let g = whole("gl2_3");
    for (mode, on) in MODES {
        par::set_enabled(on);
        group.bench_function(mode, |b| b.iter(|| subgroup_lattice(&g, &LatticeBudget::default()).unwrap()));
    }
    group.finish();
}

fn bench_suite(c: &mut Criterion) {
    let groups = ["sym(4)", "sl23", "gl2_3", "sl2(5)", "direct_product(cyclic(3),q8)"];
    let config = SuiteConfig::new(
        groups.iter().map(|g| GroupSpec::parse(g).unwrap()).collect(),
        Check::parse_list("profile,structure,tate,thmA,thmB,thmC(2,3)").unwrap(),
    );
    let mut group = c.benchmark_group("run_suite");
    group.sample_size(10);
    for (mode, on) in MODES {
        par::set_enabled(on);
        group.bench_function(mode, |b| b.iter(|| run_suite(&config).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_profile, bench_normal_subgroups, bench_min_generators, bench_lattice, bench_suite);
criterion_main!(benches);
