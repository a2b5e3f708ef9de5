//! Ground truth for small games: play evaluation, exhaustive positional
//! strategy enumeration and an independent strategy verifier.
//!
//! Nothing here shares code with the solvers it is meant to check, apart
//! from the game representation itself.

use crate::error::OracleError;
use crate::game::{Color, ParityGame, Player, Vertex};
use crate::scc;
use crate::set::VertexSet;
use crate::strategy::{PositionalStrategy, SolveOutcome};
use crate::error::StrategyError;

/// How a play was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlayKind {
    /// The play got stuck in `sink`, whose owner loses.
    SinkLoss { sink: Vertex },
    /// The play ended up cycling; `max_color` is the top color on the cycle.
    CycleParity { max_color: Color },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlayVerdict {
    pub winner: Player,
    pub kind: PlayKind,
}

/// Follows the unique play from `start` when both players move by the given
/// total move tables (indexed by vertex; only entries at owned non-sink
/// vertices are read).
pub fn evaluate_play(
    game: &ParityGame,
    even: &[Option<Vertex>],
    odd: &[Option<Vertex>],
    start: Vertex,
) -> Result<PlayVerdict, OracleError> {
    let n = game.num_vertices();
    if start >= n {
        return Err(OracleError::StartOutOfRange { vertex: start, len: n });
    }
    let mut step_of = vec![usize::MAX; n];
    let mut path = Vec::new();
    let mut v = start;
    loop {
        if step_of[v] != usize::MAX {
            let max_color = path[step_of[v]..]
                .iter()
                .map(|&u| game.color(u))
                .max()
                .expect("non-empty cycle");
            return Ok(PlayVerdict {
                winner: Player::of_color(max_color),
                kind: PlayKind::CycleParity { max_color },
            });
        }
        if game.is_sink(v) {
            return Ok(PlayVerdict {
                winner: game.owner(v).opponent(),
                kind: PlayKind::SinkLoss { sink: v },
            });
        }
        step_of[v] = path.len();
        path.push(v);
        let table = match game.owner(v) {
            Player::Even => even,
            Player::Odd => odd,
        };
        let w = table
            .get(v)
            .copied()
            .flatten()
            .ok_or(OracleError::MissingMove { vertex: v })?;
        if !game.has_edge(v, w) {
            return Err(OracleError::IllegalMove { from: v, to: w });
        }
        v = w;
    }
}

/// Default cap on the number of (Even strategy, Odd strategy) pairs.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// Solves by enumerating all positional strategies of both players.
pub fn brute_force_solve(game: &ParityGame) -> Result<SolveOutcome, OracleError> {
    brute_force_solve_with_budget(game, DEFAULT_BUDGET)
}

/// `v` is Even's iff some positional Even strategy wins from `v` against
/// every positional Odd strategy, and symmetrically for Odd. The returned
/// strategies are witnesses that win on the whole region at once.
pub fn brute_force_solve_with_budget(game: &ParityGame, budget: u128) -> Result<SolveOutcome, OracleError> {
    let n = game.num_vertices();
    if n > 64 {
        return Err(OracleError::TooManyVertices(n));
    }
    let choosers = |p: Player| -> Vec<Vertex> {
        game.vertices()
            .filter(|&v| game.owner(v) == p && !game.is_sink(v))
            .collect()
    };
    let even_vs = choosers(Player::Even);
    let odd_vs = choosers(Player::Odd);
    let space = |vs: &[Vertex]| -> u128 { vs.iter().map(|&v| game.out_degree(v) as u128).product() };
    let (even_count, odd_count) = (space(&even_vs), space(&odd_vs));
    let size = even_count.saturating_mul(odd_count);
    if size > budget {
        return Err(OracleError::BudgetExceeded { size, budget });
    }
    let (even_count, odd_count) = (even_count as usize, odd_count as usize);
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut succ: Vec<Option<Vertex>> = vec![None; n];
    let mut scratch = Scratch::new(n);
    let mut even_masks = vec![0u64; even_count];
    let mut odd_masks = vec![all; odd_count];
    for a in 0..even_count {
        assign(game, &even_vs, a, &mut succ);
        let mut even_forall = all;
        for (b, odd_mask) in odd_masks.iter_mut().enumerate() {
            assign(game, &odd_vs, b, &mut succ);
            let even_wins = scratch.even_winning(game, &succ);
            even_forall &= even_wins;
            *odd_mask &= !even_wins & all;
        }
        even_masks[a] = even_forall;
    }

    let region_even_mask = even_masks.iter().fold(0, |acc, m| acc | m);
    let region_odd_mask = odd_masks.iter().fold(0, |acc, m| acc | m);
    let even_witness = even_masks
        .iter()
        .position(|&m| m == region_even_mask)
        .ok_or(OracleError::NoUniformWitness(Player::Even))?;
    let odd_witness = odd_masks
        .iter()
        .position(|&m| m == region_odd_mask)
        .ok_or(OracleError::NoUniformWitness(Player::Odd))?;

    let to_set = |mask: u64| VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
    let region_even = to_set(region_even_mask);
    let region_odd = to_set(region_odd_mask);
    let mut table = vec![None; n];
    assign(game, &even_vs, even_witness, &mut table);
    assign(game, &odd_vs, odd_witness, &mut table);
    Ok(SolveOutcome {
        strategy_even: PositionalStrategy::restricted(game, Player::Even, region_even.clone(), &table),
        strategy_odd: PositionalStrategy::restricted(game, Player::Odd, region_odd.clone(), &table),
        region_even,
        region_odd,
    })
}

/// Writes the `index`-th combination of choices for `vertices` (mixed radix
/// over out-degrees) into `succ`.
fn assign(game: &ParityGame, vertices: &[Vertex], mut index: usize, succ: &mut [Option<Vertex>]) {
    for &v in vertices {
        let out = game.successors(v);
        succ[v] = Some(out[index % out.len()]);
        index /= out.len();
    }
}

/// Scratch buffers for evaluating every start of a fully fixed play graph.
struct Scratch {
    state: Vec<u8>,
    even_wins: Vec<bool>,
    path: Vec<Vertex>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            state: vec![0; n],
            even_wins: vec![false; n],
            path: Vec::with_capacity(n),
        }
    }

    /// Bitmask of starts won by Even when every vertex moves by `succ`
    /// (`None` only at sinks).
    fn even_winning(&mut self, game: &ParityGame, succ: &[Option<Vertex>]) -> u64 {
        const NEW: u8 = 0;
        const ON_PATH: u8 = 1;
        const DONE: u8 = 2;
        let n = succ.len();
        self.state.iter_mut().for_each(|s| *s = NEW);
        for start in 0..n {
            if self.state[start] != NEW {
                continue;
            }
            self.path.clear();
            let mut v = start;
            let outcome = loop {
                match self.state[v] {
                    DONE => break self.even_wins[v],
                    ON_PATH => {
                        let pos = self.path.iter().position(|&u| u == v).expect("vertex on path");
                        let top = self.path[pos..].iter().map(|&u| game.color(u)).max().expect("cycle");
                        let won = top % 2 == 0;
                        for &u in &self.path[pos..] {
                            self.even_wins[u] = won;
                            self.state[u] = DONE;
                        }
                        self.path.truncate(pos);
                        break won;
                    }
                    _ => {}
                }
                self.state[v] = ON_PATH;
                self.path.push(v);
                match succ[v] {
                    Some(w) => v = w,
                    None => {
                        let won = game.owner(v) == Player::Odd;
                        self.even_wins[v] = won;
                        self.state[v] = DONE;
                        self.path.pop();
                        break won;
                    }
                }
            };
            for &u in &self.path {
                self.even_wins[u] = outcome;
                self.state[u] = DONE;
            }
        }
        self.even_wins
            .iter()
            .enumerate()
            .fold(0u64, |acc, (v, &w)| if w { acc | 1 << v } else { acc })
    }
}

/// Why a strategy is not winning on its support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    Malformed(StrategyError),
    /// A play consistent with the strategy can leave the support here.
    LeavesSupport { from: Vertex, to: Vertex },
    /// A sink of the strategy's own player is inside the support.
    LosingSink { vertex: Vertex },
    /// A cycle inside the support whose top color favours the opponent.
    BadCycle { cycle: Vec<Vertex>, max_color: Color },
}

/// Checks that `strategy` wins from every vertex of its support.
///
/// In the graph where the player's moves are fixed to the strategy (all
/// edges kept where it is undefined), the support must be closed, contain
/// no sink of the player, and contain no cycle whose top color has the
/// opponent's parity. The last condition is checked per opponent color `c`
/// on the subgraph of colors `<= c`: no vertex of color `c` may lie on a
/// cycle there.
pub fn verify_strategy(game: &ParityGame, strategy: &PositionalStrategy) -> Result<(), Counterexample> {
    strategy.check(game).map_err(Counterexample::Malformed)?;
    let n = game.num_vertices();
    let player = strategy.player();
    let support = strategy.support();

    let mut restricted: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in support.iter() {
        restricted[v] = match strategy.get(v) {
            Some(w) => vec![w],
            None => game.successors(v).to_vec(),
        };
        if let Some(&w) = restricted[v].iter().find(|&&w| !support.contains(w)) {
            return Err(Counterexample::LeavesSupport { from: v, to: w });
        }
        if restricted[v].is_empty() && game.owner(v) == player {
            return Err(Counterexample::LosingSink { vertex: v });
        }
    }

    let mut bad_colors: Vec<Color> = support
        .iter()
        .map(|v| game.color(v))
        .filter(|&c| Player::of_color(c) != player)
        .collect();
    bad_colors.sort_unstable();
    bad_colors.dedup();
    for c in bad_colors {
        let keep = |v: Vertex| support.contains(v) && game.color(v) <= c;
        let comp = scc::components(n, keep, |v| &restricted[v]);
        for x in support.iter().filter(|&x| game.color(x) == c) {
            if let Some(cycle) = cycle_through(x, &comp, &restricted) {
                return Err(Counterexample::BadCycle { cycle, max_color: c });
            }
        }
    }
    Ok(())
}

/// A cycle through `x` staying inside `x`'s component, if there is one.
fn cycle_through(x: Vertex, comp: &[usize], adj: &[Vec<Vertex>]) -> Option<Vec<Vertex>> {
    let target = comp[x];
    let mut parent = vec![usize::MAX; comp.len()];
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if comp[w] != target {
                continue;
            }
            if w == x {
                let mut cycle = vec![v];
                let mut u = v;
                while u != x {
                    u = parent[u];
                    cycle.push(u);
                }
                cycle.reverse();
                return Some(cycle);
            }
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}
