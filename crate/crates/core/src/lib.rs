//! Solvers for reachability and parity games on finite graphs.
//!
//! * [`reachability`]: linear-time attractors with winning distances and
//!   optimal strategies for both players.
//! * [`zielonka`]: Zielonka's recursive parity game algorithm.
//! * [`registers`]: register games and the quasi-polynomial pipeline built
//!   on top of them.
//! * [`oracle`]: brute-force ground truth and a strategy verifier.
//! * [`transform`]: winner-preserving encodings between game flavours.
//! * [`generate`] and [`enumerate`]: random, structured and exhaustive game
//!   families for testing and benchmarking.

pub mod enumerate;
pub mod error;
pub mod game;
pub mod generate;
pub mod oracle;
pub mod reachability;
pub mod registers;
mod scc;
pub mod set;
pub mod strategy;
pub mod transform;
pub mod zielonka;

pub use error::{GameError, GenerateError, OracleError, RegisterError, StrategyError};
pub use game::{
    validate, Color, EdgeColoredGame, ParityGame, Player, UncheckedGame, UncheckedVertex, Vertex, Violation,
};
pub use oracle::{brute_force_solve, evaluate_play, verify_strategy, Counterexample, PlayKind, PlayVerdict};
pub use reachability::{attractor, solve_reachability, AttractorResult, Distance, ReachStats, ReachabilityProblem};
pub use registers::{expand_register_game, lehtinen_family, solve_via_registers, RegisterGame, RegisterState};
pub use set::VertexSet;
pub use strategy::{PositionalStrategy, SolveOutcome};
pub use zielonka::{solve_parity, solve_parity_with_stats, ZielonkaStats};
