//! Winner-preserving game-to-game encodings.

use std::collections::BTreeSet;

use crate::game::{Color, EdgeColoredGame, ParityGame, Player, Vertex};
use crate::set::VertexSet;

/// Merges colors that can be identified without changing any winner.
///
/// Whenever color `q + 2` is in use and `q + 1` is not (for `q >= 0`), every
/// vertex of color `q + 2` is recolored to `q`, until no such pair remains.
/// The fixpoint is order- and parity-preserving and uses an interval of
/// colors starting at 0 or 1.
pub fn compact_colors(game: &ParityGame) -> ParityGame {
    let used: BTreeSet<Color> = game.colors().iter().copied().collect();
    let mut mapping = std::collections::BTreeMap::new();
    let mut last: Option<Color> = None;
    for &c in &used {
        let new = match last {
            None => c % 2,
            Some(prev) if prev % 2 == c % 2 => prev,
            Some(prev) => prev + 1,
        };
        mapping.insert(c, new);
        last = Some(new);
    }
    let colors = game.colors().iter().map(|c| mapping[c]).collect();
    game.recolored(colors)
}

/// Encodes "`attacker` reaches `target`" as a two-color parity game.
///
/// Target vertices lose their outgoing edges; every resulting sink gets a
/// self-loop. Target vertices take the attacker's color and all others the
/// defender's: 2 and 1 for an Even attacker, 3 and 2 for an Odd one.
pub fn encode_reachability_as_parity(game: &ParityGame, target: &VertexSet, attacker: Player) -> ParityGame {
    let (hit, miss) = match attacker {
        Player::Even => (2, 1),
        Player::Odd => (3, 2),
    };
    let lists: Vec<Vec<Vertex>> = game
        .vertices()
        .map(|v| {
            if target.contains(v) || game.is_sink(v) {
                vec![v]
            } else {
                game.successors(v).to_vec()
            }
        })
        .collect();
    let colors = game
        .vertices()
        .map(|v| if target.contains(v) { hit } else { miss })
        .collect();
    ParityGame::from_successors(game.owners().to_vec(), colors, lists)
        .expect("encoding keeps edges in range")
        .with_names(game.names().to_vec())
}

/// Gives each sink a self-loop colored so that its owner still loses:
/// color 1 for Even's sinks and 2 for Odd's.
pub fn eliminate_sinks(game: &ParityGame) -> ParityGame {
    let mut colors = game.colors().to_vec();
    let mut lists = game.successor_lists();
    for v in game.vertices() {
        if game.is_sink(v) {
            lists[v].push(v);
            colors[v] = game.owner(v).index() as Color + 1;
        }
    }
    ParityGame::from_successors(game.owners().to_vec(), colors, lists)
        .expect("self-loops stay in range")
        .with_names(game.names().to_vec())
}

/// Subdivides every edge `e = (u, v)` into `u -> v_e -> v` where `v_e`
/// carries the color of `e` and is owned by the owner of `u`. Original
/// vertices keep their ids and get color 0; subdivision vertices follow in
/// edge order, so the result has `n + m` vertices.
pub fn edge_to_vertex_colored(game: &EdgeColoredGame) -> ParityGame {
    let n = game.num_vertices();
    let m = game.num_edges();
    let mut owner = game.owners().to_vec();
    owner.reserve(m);
    let mut colors = vec![0; n];
    colors.reserve(m);
    let mut lists: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    lists.reserve(m);
    let mut names = game.names().to_vec();
    for (u, v, c) in game.edges() {
        let mid = owner.len();
        owner.push(game.owner(u));
        colors.push(c);
        lists[u].push(mid);
        lists.push(vec![v]);
        names.push(None);
    }
    ParityGame::from_successors(owner, colors, lists)
        .expect("subdivision keeps edges in range")
        .with_names(names)
}

/// Colors every edge with the color of its source.
pub fn vertex_to_edge_colored(game: &ParityGame) -> EdgeColoredGame {
    let lists = game
        .vertices()
        .map(|u| game.successors(u).iter().map(|&v| (v, game.color(u))).collect())
        .collect();
    EdgeColoredGame::from_checked_lists(game.owners().to_vec(), lists).with_names(game.names().to_vec())
}
