mod common;

use common::{naive_distances, random_small, set, six_vertex_reachability, SIX_TARGET};
use pargame::generate::{random_game, RandomGameParams};
use pargame::{solve_reachability, Distance, ParityGame, Player, ReachabilityProblem, Vertex, VertexSet};
use proptest::prelude::*;

fn solve(game: &ParityGame, attacker: Player, target: &[Vertex]) -> pargame::AttractorResult {
    solve_reachability(&ReachabilityProblem::new(game, attacker, target).unwrap()).unwrap()
}

/// Every attacker vertex with an edge into `a` and every defender non-sink
/// with all edges into `a` is in `a`.
fn is_closed(game: &ParityGame, attacker: Player, a: &VertexSet) -> bool {
    game.vertices().all(|u| {
        let succ = game.successors(u);
        let forced = if game.owner(u) == attacker {
            succ.iter().any(|&w| a.contains(w))
        } else {
            !succ.is_empty() && succ.iter().all(|&w| a.contains(w))
        };
        !forced || a.contains(u)
    })
}

#[test]
fn six_vertex_example() {
    let g = six_vertex_reachability();
    let r = solve(&g, Player::Even, &SIX_TARGET);
    let names = |s: &VertexSet| s.iter().map(|v| g.label(v)).collect::<String>();
    assert_eq!(names(&r.attractor), "bcef");
    assert_eq!(names(&r.attractor.complement()), "ad");
    use Distance::*;
    assert_eq!(r.distance, vec![Infinite, Finite(2), Finite(0), Infinite, Finite(1), Finite(0)]);
    assert_eq!(r.distance, naive_distances(&g, Player::Even, &set(6, &SIX_TARGET)));
}

#[test]
fn empty_target_has_empty_attractor() {
    for seed in 0..20 {
        let g = random_small(seed, 10, 3, 3);
        for p in Player::BOTH {
            let r = solve(&g, p, &[]);
            assert!(r.attractor.is_empty());
            assert!(r.distance.iter().all(|d| *d == Distance::Infinite));
        }
    }
}

#[test]
fn target_out_of_range_is_rejected() {
    let g = six_vertex_reachability();
    assert!(ReachabilityProblem::new(&g, Player::Even, &[6]).is_err());
}

#[test]
fn distances_match_naive_fixpoint() {
    for seed in 0..300u64 {
        let n = 1 + (seed as usize * 7) % 50;
        let g = random_small(seed, n, 0, 3);
        let target: Vec<Vertex> = (0..n).filter(|v| (v * 31 + seed as usize).is_multiple_of(5)).collect();
        for p in Player::BOTH {
            let r = solve(&g, p, &target);
            assert_eq!(r.distance, naive_distances(&g, p, &set(n, &target)), "seed {seed}");
            for v in g.vertices() {
                assert_eq!(r.attractor.contains(v), r.distance[v].is_finite());
            }
        }
    }
}

#[test]
fn attractor_is_least_closed_superset() {
    for seed in 0..200u64 {
        let n = 1 + seed as usize % 8;
        let g = random_small(seed, n, 0, 2);
        let target_mask = (seed * 0x9e37_79b9) as usize % (1 << n);
        let target: Vec<Vertex> = (0..n).filter(|v| target_mask >> v & 1 == 1).collect();
        for p in Player::BOTH {
            let a = solve(&g, p, &target).attractor;
            assert!(is_closed(&g, p, &a));
            // Intersection of all closed supersets of the target.
            let mut least = VertexSet::full(n);
            for mask in 0..1usize << n {
                if mask & target_mask != target_mask {
                    continue;
                }
                let s = VertexSet::from_vertices(n, (0..n).filter(|v| mask >> v & 1 == 1));
                if is_closed(&g, p, &s) {
                    least = least.intersection(&s);
                }
            }
            assert_eq!(a, least, "seed {seed}, attacker {p}");
        }
    }
}

#[test]
fn strategies_are_optimal_and_determined() {
    for seed in 0..200u64 {
        let n = 2 + seed as usize % 30;
        let g = random_small(seed, n, 0, 3);
        let target: Vec<Vertex> = (0..n).filter(|v| (v + seed as usize).is_multiple_of(7)).collect();
        for attacker in Player::BOTH {
            let r = solve(&g, attacker, &target);
            assert!(r.attacker_strategy.check(&g).is_ok());
            assert!(r.defender_strategy.check(&g).is_ok());
            for u in g.vertices() {
                let Some(du) = r.distance[u].finite() else {
                    // Outside: the defender can stay out, the attacker cannot get in.
                    for &w in g.successors(u) {
                        if g.owner(u) == attacker {
                            assert!(!r.attractor.contains(w));
                        }
                    }
                    if g.owner(u) != attacker && !g.is_sink(u) {
                        let w = r.defender_strategy.get(u).expect("defender move");
                        assert!(!r.attractor.contains(w));
                    }
                    continue;
                };
                if du == 0 {
                    continue;
                }
                if g.owner(u) == attacker {
                    let w = r.attacker_strategy.get(u).unwrap();
                    assert_eq!(r.distance[w], Distance::Finite(du - 1));
                } else {
                    for &w in g.successors(u) {
                        assert!(r.distance[w] <= Distance::Finite(du - 1));
                    }
                    let w = r.delaying_moves[u].unwrap();
                    assert_eq!(r.distance[w], Distance::Finite(du - 1));
                }
            }
            // Optimal against delaying play: the target is hit after exactly d(u) moves.
            for u in r.attractor.iter() {
                let (mut v, mut steps) = (u, 0);
                while r.distance[v] != Distance::Finite(0) {
                    v = if g.owner(v) == attacker {
                        r.attacker_strategy.get(v).unwrap()
                    } else {
                        r.delaying_moves[v].unwrap()
                    };
                    steps += 1;
                }
                assert_eq!(Distance::Finite(steps), r.distance[u]);
            }
        }
    }
}

#[test]
fn counters_stay_within_linear_bounds() {
    for seed in 0..5 {
        let params = RandomGameParams {
            vertices: 10_000,
            min_color: 0,
            max_color: 0,
            min_out: 1,
            max_out: 5,
            sink_probability: 0.0,
        };
        let g = random_game(&params, seed).unwrap();
        let target: Vec<Vertex> = (0..g.num_vertices()).step_by(97).collect();
        let r = solve(&g, Player::Odd, &target);
        assert!(r.stats.queue_insertions <= g.num_vertices());
        assert!(r.stats.edge_inspections <= g.num_edges());
        assert!(r.stats.strategy_scans <= g.num_edges());
        assert_eq!(r.stats.counter_scans, 0);
    }
}

proptest! {
    #[test]
    fn attractor_contains_target_and_is_monotone(seed in any::<u64>(), n in 1usize..20, bits in any::<u32>()) {
        let g = random_small(seed, n, 0, 3);
        let small: Vec<Vertex> = (0..n).filter(|v| bits >> v & 1 == 1 && v % 2 == 0).collect();
        let large: Vec<Vertex> = (0..n).filter(|v| bits >> v & 1 == 1).collect();
        for p in Player::BOTH {
            let a_small = solve(&g, p, &small).attractor;
            let a_large = solve(&g, p, &large).attractor;
            prop_assert!(set(n, &small).is_subset(&a_small));
            prop_assert!(a_small.is_subset(&a_large));
        }
    }
}
