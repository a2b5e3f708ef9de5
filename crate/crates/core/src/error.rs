use thiserror::Error;

use crate::game::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("edge ({from},{to}) points outside the vertex range")]
    DanglingEdge { from: i64, to: i64 },
    #[error("vertex {vertex} has negative color {color}")]
    NegativeColor { vertex: Vertex, color: i64 },
    #[error("color {0} does not fit in 32 bits")]
    ColorOverflow(i64),
    #[error("inconsistent lengths: {owners} owners, {colors} colors, {adjacency} adjacency lists")]
    LengthMismatch {
        owners: usize,
        colors: usize,
        adjacency: usize,
    },
    #[error("vertex {vertex} is out of range for a game with {len} vertices")]
    VertexOutOfRange { vertex: Vertex, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("strategy covers {strategy} vertices but the game has {game}")]
    SizeMismatch { strategy: usize, game: usize },
    #[error("move at {vertex} which is outside the support")]
    MoveOutsideSupport { vertex: Vertex },
    #[error("move at {vertex} which the strategy's player does not own")]
    NotOwned { vertex: Vertex },
    #[error("move {from} -> {to} is not an edge")]
    NotAnEdge { from: Vertex, to: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no move given at reachable non-sink vertex {vertex}")]
    MissingMove { vertex: Vertex },
    #[error("move {from} -> {to} is not an edge")]
    IllegalMove { from: Vertex, to: Vertex },
    #[error("start vertex {vertex} is out of range for a game with {len} vertices")]
    StartOutOfRange { vertex: Vertex, len: usize },
    #[error("strategy space of {size} pairs exceeds the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("brute force supports at most 64 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("no single positional strategy wins the whole region of {0}")]
    NoUniformWitness(crate::game::Player),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegisterError {
    #[error("at least one register is required")]
    NoRegisters,
    #[error("initial register vector has {got} entries, expected {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error("initial register vector must be sorted non-decreasingly")]
    UnsortedVector,
    #[error("start vertex {vertex} is out of range for a game with {len} vertices")]
    StartOutOfRange { vertex: Vertex, len: usize },
    #[error("register game exceeds the cap of {cap} states")]
    StateCapExceeded { cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}
