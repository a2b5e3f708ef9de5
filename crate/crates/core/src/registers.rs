//! Register games and the quasi-polynomial solving pipeline.
//!
//! In the `r`-register game Even keeps `r` sorted registers of colors seen
//! since their last reset. A play alternates between reset states, where
//! Even picks a register `j` to reset, and transition states, where the owner
//! of the underlying vertex moves along an edge of the original game. A
//! transition into `w` raises every register to at least the color of `w`.
//! Resetting register `j` drops its value, shifts a fresh 0 in at the bottom,
//! and scores color `2j` or `2j + 1` by the parity of the dropped value. Edges
//! that are transitions score color 0.
//!
//! With `n < 2^r` the register game from `(v, x, reset)` has the same winner
//! as the original game from `v`, for every initial vector `x`.

use std::collections::HashMap;
use std::fmt;

use crate::error::RegisterError;
use crate::game::{Color, EdgeColoredGame, ParityGame, Player, Vertex};
use crate::transform::edge_to_vertex_colored;
use crate::zielonka::{solve_parity_with_stats, ZielonkaStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    Reset,
    Transition,
}

/// A state `(vertex, registers, phase)`; registers are sorted non-decreasingly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegisterState {
    pub vertex: Vertex,
    pub registers: Vec<Color>,
    pub phase: Phase,
}

impl RegisterState {
    fn describe(&self, game: &ParityGame) -> String {
        let regs: Vec<String> = self.registers.iter().map(|x| x.to_string()).collect();
        let phase = match self.phase {
            Phase::Reset => 's',
            Phase::Transition => 't',
        };
        format!("({},[{}],{})", game.label(self.vertex), regs.join(","), phase)
    }
}

/// What an edge of the register game does. Labels carry no meaning for the
/// winner; they are kept for inspection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegisterEdge {
    /// Reset of register `j`, counted from 1.
    Reset(usize),
    Transition,
}

impl fmt::Display for RegisterEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegisterEdge::Reset(j) => write!(f, "reset({j})"),
            RegisterEdge::Transition => f.write_str("transition"),
        }
    }
}

/// The part of a register game reachable from its initial state, with
/// states interned to dense ids.
#[derive(Debug, Clone)]
pub struct RegisterGame {
    pub game: EdgeColoredGame,
    states: Vec<RegisterState>,
    index: HashMap<RegisterState, Vertex>,
    /// Aligned with `game.edges()`.
    edge_labels: Vec<RegisterEdge>,
    initial: Vertex,
    register_count: usize,
}

impl RegisterGame {
    pub fn state(&self, id: Vertex) -> &RegisterState {
        &self.states[id]
    }

    pub fn states(&self) -> &[RegisterState] {
        &self.states
    }

    pub fn id_of(&self, state: &RegisterState) -> Option<Vertex> {
        self.index.get(state).copied()
    }

    pub fn initial(&self) -> Vertex {
        self.initial
    }

    pub fn register_count(&self) -> usize {
        self.register_count
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_edges(&self) -> usize {
        self.game.num_edges()
    }

    /// `(source, target, color, label)` for every edge, in edge order.
    pub fn labelled_edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Color, RegisterEdge)> + '_ {
        self.game
            .edges()
            .zip(self.edge_labels.iter())
            .map(|((u, v, c), &l)| (u, v, c, l))
    }
}

/// Default cap on the number of expanded states.
pub const DEFAULT_STATE_CAP: usize = 5_000_000;

/// Smallest `r` with `n < 2^r`.
pub fn default_register_count(n: usize) -> usize {
    (usize::BITS - n.leading_zeros()) as usize
}

/// Breadth-first expansion of the states reachable from `(start, x, reset)`.
pub fn expand_register_game(
    game: &ParityGame,
    start: Vertex,
    x: &[Color],
    r: usize,
) -> Result<RegisterGame, RegisterError> {
    expand_register_game_with_cap(game, start, x, r, DEFAULT_STATE_CAP)
}

pub fn expand_register_game_with_cap(
    game: &ParityGame,
    start: Vertex,
    x: &[Color],
    r: usize,
    cap: usize,
) -> Result<RegisterGame, RegisterError> {
    if r == 0 {
        return Err(RegisterError::NoRegisters);
    }
    if x.len() != r {
        return Err(RegisterError::VectorLength {
            expected: r,
            got: x.len(),
        });
    }
    if x.windows(2).any(|w| w[0] > w[1]) {
        return Err(RegisterError::UnsortedVector);
    }
    if start >= game.num_vertices() {
        return Err(RegisterError::StartOutOfRange {
            vertex: start,
            len: game.num_vertices(),
        });
    }

    let mut states: Vec<RegisterState> = Vec::new();
    let mut index: HashMap<RegisterState, Vertex> = HashMap::new();
    let mut lists: Vec<Vec<(Vertex, Color)>> = Vec::new();
    let mut labels: Vec<Vec<RegisterEdge>> = Vec::new();

    let mut intern = |state: RegisterState,
                      states: &mut Vec<RegisterState>|
     -> Result<Vertex, RegisterError> {
        if let Some(&id) = index.get(&state) {
            return Ok(id);
        }
        if states.len() >= cap {
            return Err(RegisterError::StateCapExceeded { cap });
        }
        let id = states.len();
        index.insert(state.clone(), id);
        states.push(state);
        Ok(id)
    };

    let initial = intern(
        RegisterState {
            vertex: start,
            registers: x.to_vec(),
            phase: Phase::Reset,
        },
        &mut states,
    )?;

    // States are processed in id order, which is discovery order.
    let mut next = 0;
    while next < states.len() {
        let state = states[next].clone();
        let mut out = Vec::new();
        let mut out_labels = Vec::new();
        match state.phase {
            Phase::Reset => {
                for j in 1..=r {
                    let dropped = state.registers[j - 1];
                    let mut y = Vec::with_capacity(r);
                    y.push(0);
                    y.extend_from_slice(&state.registers[..j - 1]);
                    y.extend_from_slice(&state.registers[j..]);
                    let color = 2 * j as Color + dropped % 2;
                    let target = intern(
                        RegisterState {
                            vertex: state.vertex,
                            registers: y,
                            phase: Phase::Transition,
                        },
                        &mut states,
                    )?;
                    out.push((target, color));
                    out_labels.push(RegisterEdge::Reset(j));
                }
            }
            Phase::Transition => {
                for &w in game.successors(state.vertex) {
                    let floor = game.color(w);
                    let y = state.registers.iter().map(|&xj| xj.max(floor)).collect();
                    let target = intern(
                        RegisterState {
                            vertex: w,
                            registers: y,
                            phase: Phase::Reset,
                        },
                        &mut states,
                    )?;
                    out.push((target, 0));
                    out_labels.push(RegisterEdge::Transition);
                }
            }
        }
        lists.push(out);
        labels.push(out_labels);
        next += 1;
    }

    let owner = states
        .iter()
        .map(|s| match s.phase {
            Phase::Reset => Player::Even,
            Phase::Transition => game.owner(s.vertex),
        })
        .collect();
    let names = states.iter().map(|s| Some(s.describe(game))).collect();
    let colored = EdgeColoredGame::from_checked_lists(owner, lists).with_names(names);
    Ok(RegisterGame {
        game: colored,
        states,
        index,
        edge_labels: labels.into_iter().flatten().collect(),
        initial,
        register_count: r,
    })
}

/// Outcome of the register pipeline for one start vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterSolve {
    pub winner: Player,
    pub registers: usize,
    pub states: usize,
    pub edges: usize,
    /// Vertices of the vertex-colored game handed to the parity solver.
    pub solver_vertices: usize,
    pub zielonka: ZielonkaStats,
}

/// Decides the winner at `start` through the register game.
///
/// `r` defaults to the smallest count with `n < 2^r`, `x` to all zeros.
pub fn solve_via_registers(
    game: &ParityGame,
    start: Vertex,
    r: Option<usize>,
    x: Option<&[Color]>,
) -> Result<RegisterSolve, RegisterError> {
    solve_via_registers_with_cap(game, start, r, x, DEFAULT_STATE_CAP)
}

pub fn solve_via_registers_with_cap(
    game: &ParityGame,
    start: Vertex,
    r: Option<usize>,
    x: Option<&[Color]>,
    cap: usize,
) -> Result<RegisterSolve, RegisterError> {
    let r = r.unwrap_or_else(|| default_register_count(game.num_vertices()));
    let zeros = vec![0; r];
    let x = x.unwrap_or(&zeros);
    let expanded = expand_register_game_with_cap(game, start, x, r, cap)?;
    let flat = edge_to_vertex_colored(&expanded.game);
    let (outcome, zielonka) = solve_parity_with_stats(&flat);
    Ok(RegisterSolve {
        winner: outcome.winner(expanded.initial()),
        registers: r,
        states: expanded.num_states(),
        edges: expanded.num_edges(),
        solver_vertices: flat.num_vertices(),
        zielonka,
    })
}

/// Lehtinen's family `G_r`: `2^(r+1) - 2` vertices, all owned by Odd, with
/// top color `2r` and exactly one vertex each of colors `2r - 1` and `2r`.
/// Even wins everywhere in `G_r` but needs `r + 1` registers to do so in the
/// register game.
///
/// `G_1` is a 2-cycle over colors 1 and 2. `G_r` joins a left and a right
/// copy of `G_{r-1}` through two fresh vertices: the left copy's top vertex
/// (color `2r - 2`) moves to the new `2r - 1` vertex, which moves to the
/// right copy's top vertex; the right copy's top vertex moves to the new
/// `2r` vertex, which moves back to the left copy's top vertex. Vertex
/// names record the path of copies, e.g. `LR3`.
pub fn lehtinen_family(r: usize) -> ParityGame {
    assert!(r >= 1, "the family starts at r = 1");
    let (colors, edges, names, _) = lehtinen_parts(r);
    let n = colors.len();
    ParityGame::from_edges(vec![Player::Odd; n], colors, &edges)
        .expect("family edges are in range")
        .with_names(names.into_iter().map(Some).collect())
}

/// Colors, edges, names and the id of the unique top-colored vertex.
fn lehtinen_parts(r: usize) -> (Vec<Color>, Vec<(Vertex, Vertex)>, Vec<String>, Vertex) {
    if r == 1 {
        return (vec![1, 2], vec![(0, 1), (1, 0)], vec!["1".into(), "2".into()], 1);
    }
    let (colors, edges, names, top) = lehtinen_parts(r - 1);
    let k = colors.len();
    let mut all_colors = colors.clone();
    all_colors.extend_from_slice(&colors);
    let odd_new = 2 * k;
    let even_new = 2 * k + 1;
    all_colors.push(2 * r as Color - 1);
    all_colors.push(2 * r as Color);
    let mut all_edges = edges.clone();
    all_edges.extend(edges.iter().map(|&(u, v)| (u + k, v + k)));
    let (left_top, right_top) = (top, top + k);
    all_edges.extend([
        (left_top, odd_new),
        (odd_new, right_top),
        (right_top, even_new),
        (even_new, left_top),
    ]);
    let mut all_names: Vec<String> = names.iter().map(|s| format!("L{s}")).collect();
    all_names.extend(names.iter().map(|s| format!("R{s}")));
    all_names.push((2 * r - 1).to_string());
    all_names.push((2 * r).to_string());
    (all_colors, all_edges, all_names, even_new)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_register_count_is_minimal() {
        for (n, r) in [(1, 1), (2, 2), (3, 2), (4, 3), (7, 3), (8, 4), (12, 4), (15, 4), (16, 5)] {
            assert_eq!(default_register_count(n), r, "n = {n}");
            assert!(n < 1 << r && n >= 1 << (r - 1));
        }
    }

    #[test]
    fn single_even_loop_expands_to_three_states() {
        let g = ParityGame::from_edges(vec![Player::Even], vec![2], &[(0, 0)]).unwrap();
        let rg = expand_register_game(&g, 0, &[0], 1).unwrap();
        let reset = |x: Color, phase| RegisterState {
            vertex: 0,
            registers: vec![x],
            phase,
        };
        assert_eq!(rg.num_states(), 3);
        assert_eq!(rg.state(rg.initial()), &reset(0, Phase::Reset));
        assert!(rg.id_of(&reset(0, Phase::Transition)).is_some());
        assert!(rg.id_of(&reset(2, Phase::Reset)).is_some());
        let reset_colors: Vec<Color> = rg
            .labelled_edges()
            .filter(|e| matches!(e.3, RegisterEdge::Reset(_)))
            .map(|e| e.2)
            .collect();
        assert_eq!(reset_colors, vec![2, 2]);
        assert_eq!(solve_via_registers(&g, 0, Some(1), None).unwrap().winner, Player::Even);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        let g = ParityGame::from_edges(vec![Player::Even], vec![2], &[(0, 0)]).unwrap();
        assert_eq!(expand_register_game(&g, 0, &[], 0).unwrap_err(), RegisterError::NoRegisters);
        assert!(matches!(
            expand_register_game(&g, 0, &[0], 2),
            Err(RegisterError::VectorLength { expected: 2, got: 1 })
        ));
        assert_eq!(expand_register_game(&g, 0, &[2, 1], 2).unwrap_err(), RegisterError::UnsortedVector);
        assert!(matches!(
            expand_register_game(&g, 3, &[0], 1),
            Err(RegisterError::StartOutOfRange { .. })
        ));
    }

    #[test]
    fn state_cap_is_an_explicit_error() {
        let g = lehtinen_family(2);
        assert_eq!(
            expand_register_game_with_cap(&g, 0, &[0, 0, 0], 3, 10).unwrap_err(),
            RegisterError::StateCapExceeded { cap: 10 }
        );
    }

    #[test]
    fn lehtinen_shapes() {
        let g1 = lehtinen_family(1);
        assert_eq!(g1.num_vertices(), 2);
        assert_eq!(g1.colors(), &[1, 2]);
        for r in 1..=4 {
            let g = lehtinen_family(r);
            assert_eq!(g.num_vertices(), (1 << (r + 1)) - 2);
            assert!(g.owners().iter().all(|&p| p == Player::Odd));
            let top = 2 * r as Color;
            assert_eq!(g.max_color(), Some(top));
            assert_eq!(g.colors().iter().filter(|&&c| c == top).count(), 1);
            assert_eq!(g.colors().iter().filter(|&&c| c == top - 1).count(), 1);
        }
    }
}
