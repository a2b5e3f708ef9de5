//! Zielonka's recursive algorithm with strategy extraction.
//!
//! Subgames are vertex masks over the original game; no edge data is copied.
//! In a subgame whose top color `d` favours player `i`, the opponent's region
//! starts as the opponent-attractor of `i`'s sinks and grows by the
//! opponent's region of the recursive subgame `W_i \ attr_i(color d)` until
//! that region comes back empty.

use crate::game::{ParityGame, Player, Vertex};
use crate::reachability::attract;
use crate::set::VertexSet;
use crate::strategy::{PositionalStrategy, SolveOutcome};
use crate::transform::compact_colors;

/// Work counters for one solve.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ZielonkaStats {
    /// Invocations of the recursive procedure, the top-level one included.
    pub recursive_calls: usize,
    /// Loop iterations summed over all levels.
    pub outer_iterations: usize,
    pub attractor_calls: usize,
    /// Edge entries touched by attractor computations and sink detection.
    pub edge_work: usize,
    /// Loop iterations of the top-level call.
    pub top_level_iterations: usize,
    /// Top-level iterations that grew the opponent's region.
    pub top_level_growths: usize,
    /// Vertices added to the opponent's region by each top-level growth.
    pub top_level_gains: Vec<Vec<Vertex>>,
}

/// Solves a parity game. Both returned strategies are winning on their
/// player's region.
pub fn solve_parity(game: &ParityGame) -> SolveOutcome {
    solve_parity_with_stats(game).0
}

pub fn solve_parity_with_stats(game: &ParityGame) -> (SolveOutcome, ZielonkaStats) {
    let compacted = compact_colors(game);
    let n = game.num_vertices();
    let mut solver = Solver {
        game: &compacted,
        moves: vec![None; n],
        stats: ZielonkaStats::default(),
    };
    let [region_even, region_odd] = if n == 0 {
        [VertexSet::empty(0), VertexSet::empty(0)]
    } else {
        solver.solve(&VertexSet::full(n), true)
    };
    let strategy_even = PositionalStrategy::restricted(game, Player::Even, region_even.clone(), &solver.moves);
    let strategy_odd = PositionalStrategy::restricted(game, Player::Odd, region_odd.clone(), &solver.moves);
    let outcome = SolveOutcome {
        region_even,
        region_odd,
        strategy_even,
        strategy_odd,
    };
    debug_assert!(outcome.is_consistent());
    (outcome, solver.stats)
}

struct Solver<'g> {
    game: &'g ParityGame,
    /// Winner moves, written by the call that fixes a vertex's region.
    moves: Vec<Option<Vertex>>,
    stats: ZielonkaStats,
}

impl Solver<'_> {
    /// Returns the regions `[even, odd]` of the subgame induced by `sub`,
    /// which must be non-empty.
    fn solve(&mut self, sub: &VertexSet, top: bool) -> [VertexSet; 2] {
        self.stats.recursive_calls += 1;
        let game = self.game;
        let top_color = sub.iter().map(|v| game.color(v)).max().expect("non-empty subgame");
        let me = Player::of_color(top_color);
        let opp = me.opponent();

        let mut my_sinks = VertexSet::empty(game.num_vertices());
        for v in sub.iter() {
            if game.owner(v) != me {
                continue;
            }
            let succ = game.successors(v);
            self.stats.edge_work += succ.len();
            if !succ.iter().any(|&w| sub.contains(w)) {
                my_sinks.insert(v);
            }
        }
        let mut opp_region = self.attract_opp(sub, opp, my_sinks);

        loop {
            self.stats.outer_iterations += 1;
            if top {
                self.stats.top_level_iterations += 1;
            }
            let my_region = sub.difference(&opp_region);
            if my_region.is_empty() {
                return regions(me, my_region, opp_region);
            }
            let top_vertices =
                VertexSet::from_vertices(game.num_vertices(), my_region.iter().filter(|&v| game.color(v) == top_color));
            self.stats.attractor_calls += 1;
            let attraction = attract(game, Some(&my_region), me, &top_vertices);
            self.stats.edge_work += attraction.stats.total_edge_work();
            let rest = my_region.difference(&attraction.members);
            let gained = if rest.is_empty() {
                VertexSet::empty(game.num_vertices())
            } else {
                let sub_regions = self.solve(&rest, false);
                sub_regions[opp.index()].clone()
            };

            if gained.is_empty() {
                // Final iteration: moves inside `rest` came from the recursive call.
                for v in attraction.members.iter() {
                    if game.owner(v) != me {
                        continue;
                    }
                    if top_vertices.contains(v) {
                        let succ = game.successors(v);
                        self.stats.edge_work += succ.len();
                        self.moves[v] = succ.iter().copied().find(|&w| my_region.contains(w));
                        debug_assert!(self.moves[v].is_some(), "{me} vertex {v} stuck in its region");
                    } else {
                        self.moves[v] = attraction.attacker_moves[v];
                    }
                }
                return regions(me, my_region, opp_region);
            }

            // Moves in `gained` were written by the recursive call.
            let before = opp_region.clone();
            opp_region.union_with(&gained);
            opp_region = self.attract_opp(sub, opp, opp_region);
            if top {
                self.stats.top_level_growths += 1;
                self.stats.top_level_gains.push(opp_region.difference(&before).to_vec());
            }
        }
    }

    /// Opponent-attractor of `target` in `sub`; newly attracted opponent
    /// vertices get the reachability move, targets keep their moves.
    fn attract_opp(&mut self, sub: &VertexSet, opp: Player, target: VertexSet) -> VertexSet {
        self.stats.attractor_calls += 1;
        let attraction = attract(self.game, Some(sub), opp, &target);
        self.stats.edge_work += attraction.stats.total_edge_work();
        for v in attraction.members.iter() {
            if !target.contains(v) && self.game.owner(v) == opp {
                self.moves[v] = attraction.attacker_moves[v];
            }
        }
        attraction.members
    }
}

fn regions(me: Player, mine: VertexSet, theirs: VertexSet) -> [VertexSet; 2] {
    match me {
        Player::Even => [mine, theirs],
        Player::Odd => [theirs, mine],
    }
}
