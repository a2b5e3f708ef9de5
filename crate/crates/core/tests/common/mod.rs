#![allow(dead_code)]

use pargame::{Color, Distance, ParityGame, Player, Vertex, VertexSet};

fn named(owner: Vec<Player>, colors: Vec<Color>, edges: &[(Vertex, Vertex)], names: &str) -> ParityGame {
    ParityGame::from_edges(owner, colors, edges)
        .unwrap()
        .with_names(names.chars().map(|c| Some(c.to_string())).collect())
}

/// Reachability example: Even owns a, c, e; Odd owns b, d, f; Even's target is {c, f}.
pub fn six_vertex_reachability() -> ParityGame {
    use Player::*;
    let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
    named(
        vec![Even, Odd, Even, Odd, Even, Odd],
        vec![0; 6],
        &[(a, d), (d, a), (b, e), (e, b), (d, e), (e, d), (b, c), (e, f), (f, c)],
        "abcdef",
    )
}

pub const SIX_TARGET: [Vertex; 2] = [2, 5];

/// Parity example a:2 b:4 c:5 d:1 e:2 f:3 g:2 h:1; Even owns a, b, g, h.
pub fn eight_vertex_parity() -> ParityGame {
    use Player::*;
    let (a, b, c, d, e, f, g, h) = (0, 1, 2, 3, 4, 5, 6, 7);
    named(
        vec![Even, Even, Odd, Odd, Odd, Odd, Even, Even],
        vec![2, 4, 5, 1, 2, 3, 2, 1],
        &[
            (a, e),
            (a, b),
            (b, c),
            (b, f),
            (c, b),
            (c, g),
            (d, c),
            (d, h),
            (d, d),
            (e, a),
            (e, h),
            (f, e),
            (f, b),
            (g, h),
            (g, c),
            (h, d),
            (h, e),
        ],
        "abcdefgh",
    )
}

/// Iterates the three defining equations of the winning distance from
/// "everything infinite" until nothing changes.
pub fn naive_distances(game: &ParityGame, attacker: Player, target: &VertexSet) -> Vec<Distance> {
    let n = game.num_vertices();
    let mut d: Vec<Distance> = (0..n)
        .map(|v| if target.contains(v) { Distance::Finite(0) } else { Distance::Infinite })
        .collect();
    loop {
        let mut changed = false;
        for u in 0..n {
            if target.contains(u) {
                continue;
            }
            let options = game.successors(u).iter().map(|&v| d[v].succ());
            let value = if game.owner(u) == attacker {
                options.min()
            } else {
                options.max()
            }
            .unwrap_or(Distance::Infinite);
            if value != d[u] {
                d[u] = value;
                changed = true;
            }
        }
        if !changed {
            return d;
        }
    }
}

pub fn set(n: usize, vs: &[Vertex]) -> VertexSet {
    VertexSet::from_vertices(n, vs.iter().copied())
}

/// Seeded random game with distinct successors and occasional sinks.
pub fn random_small(seed: u64, n: usize, max_color: Color, max_out: usize) -> ParityGame {
    let params = pargame::generate::RandomGameParams {
        vertices: n,
        min_color: 0,
        max_color,
        min_out: 1,
        max_out: max_out.min(n),
        sink_probability: 0.1,
    };
    pargame::generate::random_game(&params, seed).unwrap()
}
