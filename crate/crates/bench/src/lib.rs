//! Game fixtures shared by the benchmarks.

use pargame::generate::{random_game, RandomGameParams};
use pargame::{Color, ParityGame, Vertex};

/// Random game with `n` vertices, colors `0..=max_color` and out-degree 1..=5.
pub fn random_fixture(n: usize, max_color: Color, seed: u64) -> ParityGame {
    let params = RandomGameParams {
        vertices: n,
        min_color: 0,
        max_color,
        min_out: 1,
        max_out: 5.min(n.max(1)),
        sink_probability: 0.0,
    };
    random_game(&params, seed).expect("valid parameters")
}

/// Every 50th vertex, as a reachability target.
pub fn sparse_target(n: usize) -> Vec<Vertex> {
    (0..n).step_by(50).collect()
}
