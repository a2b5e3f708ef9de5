use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use pargame::generate::worst_case;
use pargame::{lehtinen_family, solve_parity, solve_reachability, solve_via_registers, Player, ReachabilityProblem};
use pargame_bench::{random_fixture, sparse_target};

fn reachability(c: &mut Criterion) {
    let mut group = c.benchmark_group("reachability");
    for n in [1_000, 10_000, 100_000] {
        let game = random_fixture(n, 0, 1);
        let target = sparse_target(n);
        group.throughput(Throughput::Elements((n + game.num_edges()) as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &game, |b, g| {
            let problem = ReachabilityProblem::new(g, Player::Even, &target).unwrap();
            b.iter(|| solve_reachability(&problem).unwrap());
        });
    }
    group.finish();
}

fn zielonka_worst_case(c: &mut Criterion) {
    let mut group = c.benchmark_group("zielonka_worst_case");
    for n in [4, 8, 16, 32, 64] {
        let game = worst_case(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &game, |b, g| b.iter(|| solve_parity(g)));
    }
    group.finish();
}

fn zielonka_random(c: &mut Criterion) {
    let mut group = c.benchmark_group("zielonka_random");
    group.sample_size(20);
    for n in [100, 1_000, 10_000] {
        let game = random_fixture(n, 8, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &game, |b, g| b.iter(|| solve_parity(g)));
    }
    group.finish();
}

fn registers(c: &mut Criterion) {
    let mut group = c.benchmark_group("registers");
    group.sample_size(20);
    for r in [1, 2] {
        let game = lehtinen_family(r);
        group.bench_with_input(BenchmarkId::new("lehtinen", r), &game, |b, g| {
            b.iter(|| solve_via_registers(g, 0, Some(r + 1), None).unwrap())
        });
    }
    let game = random_fixture(8, 3, 3);
    group.bench_function("random8", |b| b.iter(|| solve_via_registers(&game, 0, None, None).unwrap()));
    group.finish();
}

criterion_group!(benches, reachability, zielonka_worst_case, zielonka_random, registers);
criterion_main!(benches);
