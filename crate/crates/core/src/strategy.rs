use crate::error::StrategyError;
use crate::game::{ParityGame, Player, Vertex};
use crate::set::VertexSet;

/// A positional strategy for one player: a support set together with a
/// partial move function defined on the player's vertices in the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionalStrategy {
    player: Player,
    support: VertexSet,
    moves: Vec<Option<Vertex>>,
}

impl PositionalStrategy {
    /// Invariants are not checked here; see [`PositionalStrategy::check`].
    pub fn new(player: Player, support: VertexSet, moves: Vec<Option<Vertex>>) -> Self {
        assert_eq!(support.universe(), moves.len());
        Self {
            player,
            support,
            moves,
        }
    }

    /// The strategy with empty support over `n` vertices.
    pub fn empty(player: Player, n: usize) -> Self {
        Self::new(player, VertexSet::empty(n), vec![None; n])
    }

    /// Keeps only the moves that the strategy's player makes from `support`.
    pub fn restricted(
        game: &ParityGame,
        player: Player,
        support: VertexSet,
        moves: &[Option<Vertex>],
    ) -> Self {
        let moves = game
            .vertices()
            .map(|v| {
                if support.contains(v) && game.owner(v) == player {
                    moves[v]
                } else {
                    None
                }
            })
            .collect();
        Self::new(player, support, moves)
    }

    pub fn player(&self) -> Player {
        self.player
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.moves.get(v).copied().flatten()
    }

    /// Defined moves as `(from, to)` pairs in vertex order.
    pub fn moves(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.moves
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.map(|w| (v, w)))
    }

    pub fn move_table(&self) -> &[Option<Vertex>] {
        &self.moves
    }

    /// Checks that moves are only defined on owned support vertices and
    /// follow edges of `game`.
    pub fn check(&self, game: &ParityGame) -> Result<(), StrategyError> {
        if self.moves.len() != game.num_vertices() {
            return Err(StrategyError::SizeMismatch {
                strategy: self.moves.len(),
                game: game.num_vertices(),
            });
        }
        for (v, w) in self.moves() {
            if !self.support.contains(v) {
                return Err(StrategyError::MoveOutsideSupport { vertex: v });
            }
            if game.owner(v) != self.player {
                return Err(StrategyError::NotOwned { vertex: v });
            }
            if !game.has_edge(v, w) {
                return Err(StrategyError::NotAnEdge { from: v, to: w });
            }
        }
        Ok(())
    }
}

/// Winning regions of both players together with a winning strategy each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub region_even: VertexSet,
    pub region_odd: VertexSet,
    pub strategy_even: PositionalStrategy,
    pub strategy_odd: PositionalStrategy,
}

impl SolveOutcome {
    pub fn region(&self, player: Player) -> &VertexSet {
        match player {
            Player::Even => &self.region_even,
            Player::Odd => &self.region_odd,
        }
    }

    pub fn strategy(&self, player: Player) -> &PositionalStrategy {
        match player {
            Player::Even => &self.strategy_even,
            Player::Odd => &self.strategy_odd,
        }
    }

    /// The winner at `v`. Panics if `v` lies in neither region.
    pub fn winner(&self, v: Vertex) -> Player {
        if self.region_even.contains(v) {
            Player::Even
        } else if self.region_odd.contains(v) {
            Player::Odd
        } else {
            panic!("vertex {v} lies in no region")
        }
    }

    /// Winners for every vertex, in vertex order.
    pub fn winners(&self) -> Vec<Player> {
        (0..self.region_even.universe()).map(|v| self.winner(v)).collect()
    }

    /// Regions are disjoint and cover every vertex; each strategy's support
    /// is its player's region.
    pub fn is_consistent(&self) -> bool {
        let n = self.region_even.universe();
        self.region_odd.universe() == n
            && self.region_even.intersection(&self.region_odd).is_empty()
            && self.region_even.len() + self.region_odd.len() == n
            && self.strategy_even.support() == &self.region_even
            && self.strategy_odd.support() == &self.region_odd
            && self.strategy_even.player() == Player::Even
            && self.strategy_odd.player() == Player::Odd
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cycle() -> ParityGame {
        ParityGame::from_edges(
            vec![Player::Even, Player::Odd],
            vec![2, 1],
            &[(0, 1), (1, 0), (0, 0)],
        )
        .unwrap()
    }

    #[test]
    fn check_accepts_owned_edge_moves() {
        let g = two_cycle();
        let s = PositionalStrategy::new(Player::Even, VertexSet::full(2), vec![Some(0), None]);
        assert_eq!(s.check(&g), Ok(()));
        assert_eq!(s.moves().collect::<Vec<_>>(), vec![(0, 0)]);
    }

    #[test]
    fn check_rejects_foreign_or_bogus_moves() {
        let g = two_cycle();
        let foreign = PositionalStrategy::new(Player::Even, VertexSet::full(2), vec![None, Some(0)]);
        assert_eq!(foreign.check(&g), Err(StrategyError::NotOwned { vertex: 1 }));
        let outside =
            PositionalStrategy::new(Player::Even, VertexSet::from_vertices(2, [1]), vec![Some(1), None]);
        assert_eq!(outside.check(&g), Err(StrategyError::MoveOutsideSupport { vertex: 0 }));
        let g2 = ParityGame::from_edges(vec![Player::Even, Player::Odd], vec![2, 1], &[(1, 0)]).unwrap();
        let bogus = PositionalStrategy::new(Player::Even, VertexSet::full(2), vec![Some(1), None]);
        assert_eq!(bogus.check(&g2), Err(StrategyError::NotAnEdge { from: 0, to: 1 }));
    }

    #[test]
    fn restricted_drops_foreign_moves() {
        let g = two_cycle();
        let s = PositionalStrategy::restricted(&g, Player::Even, VertexSet::full(2), &[Some(1), Some(0)]);
        assert_eq!(s.move_table(), &[Some(1), None]);
    }
}
