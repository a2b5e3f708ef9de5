//! Strategy files: a player, a support and one `u -> v` line per move.
//!
//! ```text
//! player: even
//! support: a b c e f g h
//! a -> b
//! b -> f
//! ```
//!
//! Vertices are written by label (name, or id when unnamed). Blank lines and
//! lines starting with `#` are ignored.

use std::fmt::Write as _;

use pargame::{ParityGame, Player, PositionalStrategy, Vertex, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown vertex '{label}'")]
    UnknownVertex { line: usize, label: String },
    #[error("missing '{0}:' line")]
    Missing(&'static str),
}

fn syntax(line: usize, message: impl Into<String>) -> StrategyFileError {
    StrategyFileError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_player(s: &str) -> Option<Player> {
    match s.to_ascii_lowercase().as_str() {
        "even" | "0" => Some(Player::Even),
        "odd" | "1" => Some(Player::Odd),
        _ => None,
    }
}

/// Reads a strategy; structural checks against the game are left to the
/// verifier.
pub fn parse_strategy(game: &ParityGame, text: &str) -> Result<PositionalStrategy, StrategyFileError> {
    let n = game.num_vertices();
    let resolve = |line: usize, label: &str| {
        game.find_vertex(label).ok_or_else(|| StrategyFileError::UnknownVertex {
            line,
            label: label.to_string(),
        })
    };
    let mut player = None;
    let mut support: Option<VertexSet> = None;
    let mut moves: Vec<Option<Vertex>> = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(rest) = content.strip_prefix("player:") {
            let p = parse_player(rest.trim()).ok_or_else(|| syntax(line, format!("unknown player '{}'", rest.trim())))?;
            player = Some(p);
        } else if let Some(rest) = content.strip_prefix("support:") {
            let mut s = VertexSet::empty(n);
            for label in rest.split_whitespace() {
                s.insert(resolve(line, label)?);
            }
            support = Some(s);
        } else if let Some((u, v)) = content.split_once("->") {
            let (u, v) = (resolve(line, u.trim())?, resolve(line, v.trim())?);
            if moves[u].replace(v).is_some() {
                return Err(syntax(line, format!("second move for {}", game.label(u))));
            }
        } else {
            return Err(syntax(line, format!("cannot read '{content}'")));
        }
    }
    let player = player.ok_or(StrategyFileError::Missing("player"))?;
    let support = support.ok_or(StrategyFileError::Missing("support"))?;
    Ok(PositionalStrategy::new(player, support, moves))
}

pub fn emit_strategy(game: &ParityGame, strategy: &PositionalStrategy) -> String {
    let mut out = String::new();
    writeln!(out, "player: {}", strategy.player().to_string().to_lowercase()).unwrap();
    let support: Vec<String> = strategy.support().iter().map(|v| game.label(v)).collect();
    writeln!(out, "support: {}", support.join(" ")).unwrap();
    for (u, v) in strategy.moves() {
        writeln!(out, "{} -> {}", game.label(u), game.label(v)).unwrap();
    }
    out
}
