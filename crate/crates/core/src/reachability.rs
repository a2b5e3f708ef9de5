//! Reachability games: attractors, winning distances and optimal positional
//! strategies in time linear in the size of the graph.
//!
//! The solver is a breadth-first propagation backwards from the target. Each
//! vertex enters the FIFO queue at most once and each edge is looked at at
//! most once from its head. Attacker vertices are attracted by their first
//! attracted successor; defender vertices once their last remaining successor
//! has been attracted. The queue is ordered by distance, so the distance
//! assigned on attraction is final.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GameError;
use crate::game::{ParityGame, Player, Vertex};
use crate::set::VertexSet;
use crate::strategy::PositionalStrategy;

/// A winning distance: a number of moves, or `Infinite` outside the attractor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    /// `1 + d`, with `1 + ∞ = ∞`.
    pub fn succ(self) -> Distance {
        match self {
            Distance::Finite(d) => Distance::Finite(d + 1),
            Distance::Infinite => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Work counters for one attractor computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReachStats {
    /// Vertices appended to the FIFO queue, targets included.
    pub queue_insertions: usize,
    /// Predecessor entries examined by the propagation loop.
    pub edge_inspections: usize,
    /// Successor entries examined to size defender counters inside a subgame.
    pub counter_scans: usize,
    /// Successor entries examined to pick the defender's moves afterwards.
    pub strategy_scans: usize,
}

impl ReachStats {
    pub fn total_edge_work(&self) -> usize {
        self.edge_inspections + self.counter_scans + self.strategy_scans
    }
}

/// Raw output of one propagation, possibly inside a subgame.
#[derive(Debug, Clone)]
pub(crate) struct Attraction {
    pub members: VertexSet,
    pub distance: Vec<Distance>,
    /// Optimal moves of attacker-owned, non-target members.
    pub attacker_moves: Vec<Option<Vertex>>,
    /// For defender-owned, non-target members: the edge whose removal
    /// attracted the vertex, which is a successor of maximal distance.
    pub delaying_moves: Vec<Option<Vertex>>,
    pub stats: ReachStats,
}

/// Computes the `attacker`-attractor of `targets` inside the subgame induced
/// by `domain` (the whole game when `None`). `targets` must lie in `domain`.
pub(crate) fn attract(
    game: &ParityGame,
    domain: Option<&VertexSet>,
    attacker: Player,
    targets: &VertexSet,
) -> Attraction {
    const UNSIZED: usize = usize::MAX;
    let n = game.num_vertices();
    let in_domain = |v: Vertex| domain.is_none_or(|d| d.contains(v));
    let mut stats = ReachStats::default();
    let mut distance = vec![Distance::Infinite; n];
    let mut attacker_moves = vec![None; n];
    let mut delaying_moves = vec![None; n];
    let mut remaining: Vec<usize> = match domain {
        None => game.vertices().map(|v| game.out_degree(v)).collect(),
        Some(_) => vec![UNSIZED; n],
    };
    let mut members = VertexSet::empty(n);
    let mut queue = VecDeque::new();

    for t in targets.iter() {
        debug_assert!(in_domain(t), "target {t} outside the subgame");
        distance[t] = Distance::Finite(0);
        members.insert(t);
        queue.push_back(t);
        stats.queue_insertions += 1;
    }

    while let Some(v) = queue.pop_front() {
        let next = distance[v].succ();
        for &u in game.predecessors(v) {
            stats.edge_inspections += 1;
            if !in_domain(u) {
                continue;
            }
            if distance[u].is_finite() {
                // Keep the smallest-id optimal successor for the attacker.
                if game.owner(u) == attacker && distance[u] == next {
                    if let Some(current) = attacker_moves[u] {
                        if v < current {
                            attacker_moves[u] = Some(v);
                        }
                    }
                }
                continue;
            }
            if game.owner(u) == attacker {
                distance[u] = next;
                attacker_moves[u] = Some(v);
            } else {
                if remaining[u] == UNSIZED {
                    let succ = game.successors(u);
                    stats.counter_scans += succ.len();
                    remaining[u] = succ.iter().filter(|&&w| in_domain(w)).count();
                }
                remaining[u] -= 1;
                if remaining[u] > 0 {
                    continue;
                }
                distance[u] = next;
                delaying_moves[u] = Some(v);
            }
            members.insert(u);
            queue.push_back(u);
            stats.queue_insertions += 1;
        }
    }

    Attraction {
        members,
        distance,
        attacker_moves,
        delaying_moves,
        stats,
    }
}

/// A reachability game: `attacker` tries to reach `target`, the opponent
/// tries to avoid it. Colors of the underlying game are ignored.
#[derive(Debug, Clone)]
pub struct ReachabilityProblem<'g> {
    pub game: &'g ParityGame,
    pub attacker: Player,
    pub target: VertexSet,
}

impl<'g> ReachabilityProblem<'g> {
    pub fn new(game: &'g ParityGame, attacker: Player, target: &[Vertex]) -> Result<Self, GameError> {
        let len = game.num_vertices();
        if let Some(&vertex) = target.iter().find(|&&v| v >= len) {
            return Err(GameError::VertexOutOfRange { vertex, len });
        }
        Ok(Self {
            game,
            attacker,
            target: VertexSet::from_vertices(len, target.iter().copied()),
        })
    }
}

/// Solution of a reachability game.
#[derive(Debug, Clone)]
pub struct AttractorResult {
    pub attractor: VertexSet,
    pub distance: Vec<Distance>,
    /// Optimal: every move decreases the distance by exactly one. Undefined
    /// on the target.
    pub attacker_strategy: PositionalStrategy,
    /// Keeps every play inside the complement of the attractor.
    pub defender_strategy: PositionalStrategy,
    /// Moves for defender-owned attractor vertices that delay the defeat as
    /// long as possible.
    pub delaying_moves: Vec<Option<Vertex>>,
    pub stats: ReachStats,
}

/// Solves a reachability game with the linear-time propagation.
pub fn solve_reachability(problem: &ReachabilityProblem<'_>) -> Result<AttractorResult, GameError> {
    let game = problem.game;
    let n = game.num_vertices();
    if problem.target.universe() != n {
        return Err(GameError::VertexOutOfRange {
            vertex: problem.target.universe().saturating_sub(1),
            len: n,
        });
    }
    let attacker = problem.attacker;
    let defender = attacker.opponent();
    let Attraction {
        members,
        distance,
        attacker_moves,
        delaying_moves,
        mut stats,
    } = attract(game, None, attacker, &problem.target);

    let outside = members.complement();
    let mut defender_moves = vec![None; n];
    for u in outside.iter() {
        if game.owner(u) != defender {
            continue;
        }
        for &w in game.successors(u) {
            stats.strategy_scans += 1;
            if !members.contains(w) {
                defender_moves[u] = Some(w);
                break;
            }
        }
    }

    Ok(AttractorResult {
        attacker_strategy: PositionalStrategy::new(attacker, members.clone(), attacker_moves),
        defender_strategy: PositionalStrategy::new(defender, outside, defender_moves),
        attractor: members,
        distance,
        delaying_moves,
        stats,
    })
}

/// The `attacker`-attractor of `target`: the smallest attracting superset of
/// `target`.
pub fn attractor(game: &ParityGame, attacker: Player, target: &VertexSet) -> VertexSet {
    attract(game, None, attacker, target).members
}
