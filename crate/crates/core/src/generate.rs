//! Game generators: seeded random games and Zielonka's cubic worst case.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenerateError;
use crate::game::{Color, ParityGame, Player, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct RandomGameParams {
    pub vertices: usize,
    pub min_color: Color,
    pub max_color: Color,
    /// Out-degree range for non-sink vertices; successors are distinct.
    pub min_out: usize,
    pub max_out: usize,
    pub sink_probability: f64,
}

impl Default for RandomGameParams {
    fn default() -> Self {
        Self {
            vertices: 8,
            min_color: 1,
            max_color: 3,
            min_out: 1,
            max_out: 3,
            sink_probability: 0.0,
        }
    }
}

impl RandomGameParams {
    fn check(&self) -> Result<(), GenerateError> {
        if self.min_color > self.max_color {
            return Err(GenerateError::InvalidParams("min_color exceeds max_color".into()));
        }
        if self.min_out > self.max_out {
            return Err(GenerateError::InvalidParams("min_out exceeds max_out".into()));
        }
        if self.vertices > 0 && self.min_out > self.vertices {
            return Err(GenerateError::InvalidParams(format!(
                "min_out {} exceeds the vertex count {}",
                self.min_out, self.vertices
            )));
        }
        if !(0.0..=1.0).contains(&self.sink_probability) {
            return Err(GenerateError::InvalidParams("sink_probability must lie in [0, 1]".into()));
        }
        Ok(())
    }
}

/// A random game; the same parameters and seed always give the same game.
pub fn random_game(params: &RandomGameParams, seed: u64) -> Result<ParityGame, GenerateError> {
    params.check()?;
    let n = params.vertices;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut owner = Vec::with_capacity(n);
    let mut colors = Vec::with_capacity(n);
    let mut lists = Vec::with_capacity(n);
    for _ in 0..n {
        owner.push(if rng.gen_bool(0.5) { Player::Even } else { Player::Odd });
        colors.push(rng.gen_range(params.min_color..=params.max_color));
        let sink = params.sink_probability > 0.0 && rng.gen_bool(params.sink_probability);
        let degree = if sink {
            0
        } else {
            rng.gen_range(params.min_out..=params.max_out).min(n)
        };
        let succ: Vec<Vertex> = sample(&mut rng, n, degree).into_iter().collect();
        lists.push(succ);
    }
    Ok(ParityGame::from_successors(owner, colors, lists).expect("sampled successors are in range"))
}

/// The `2n`-vertex game on which Zielonka's algorithm takes cubic time.
///
/// Even owns `a_1..a_n` (color 1), Odd owns `b_1..b_n` (color 2). Edges are
/// the loops `(a_i, a_i)`, the edges `(b_i, a_i)`, and `(a_i, b_j)` for
/// `i < j`. Vertex `a_i` has id `2(i - 1)` and `b_i` has id `2i - 1`. Odd
/// wins everywhere.
pub fn worst_case(n: usize) -> ParityGame {
    let a = |i: usize| 2 * (i - 1);
    let b = |i: usize| 2 * i - 1;
    let mut owner = Vec::with_capacity(2 * n);
    let mut colors = Vec::with_capacity(2 * n);
    let mut names = Vec::with_capacity(2 * n);
    for i in 1..=n {
        owner.extend([Player::Even, Player::Odd]);
        colors.extend([1, 2]);
        names.extend([Some(format!("a{i}")), Some(format!("b{i}"))]);
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push((a(i), a(i)));
        edges.push((b(i), a(i)));
        for j in i + 1..=n {
            edges.push((a(i), b(j)));
        }
    }
    ParityGame::from_edges(owner, colors, &edges)
        .expect("worst-case edges are in range")
        .with_names(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_games_are_seed_deterministic() {
        let p = RandomGameParams {
            vertices: 20,
            sink_probability: 0.1,
            ..Default::default()
        };
        assert_eq!(random_game(&p, 7).unwrap(), random_game(&p, 7).unwrap());
        assert_ne!(random_game(&p, 7).unwrap(), random_game(&p, 8).unwrap());
    }

    #[test]
    fn random_games_respect_parameters() {
        let p = RandomGameParams {
            vertices: 50,
            min_color: 2,
            max_color: 5,
            min_out: 2,
            max_out: 4,
            sink_probability: 0.0,
        };
        let g = random_game(&p, 1).unwrap();
        for v in g.vertices() {
            assert!((2..=5).contains(&g.color(v)));
            assert!((2..=4).contains(&g.out_degree(v)));
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let bad = RandomGameParams {
            min_out: 3,
            max_out: 2,
            ..Default::default()
        };
        assert!(random_game(&bad, 0).is_err());
        let bad = RandomGameParams {
            sink_probability: 1.5,
            ..Default::default()
        };
        assert!(random_game(&bad, 0).is_err());
    }

    #[test]
    fn worst_case_four_matches_the_drawing() {
        let g = worst_case(4);
        assert_eq!(g.num_vertices(), 8);
        // 4 loops, 4 (b_i, a_i), 6 (a_i, b_j) with i < j.
        assert_eq!(g.num_edges(), 14);
        assert_eq!(g.successors(0), &[0, 3, 5, 7]);
        assert_eq!(g.successors(1), &[0]);
        assert_eq!(g.successors(6), &[6]);
        assert_eq!(g.label(7), "b4");
    }
}
