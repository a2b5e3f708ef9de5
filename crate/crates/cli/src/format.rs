//! Text formats for games.
//!
//! Vertex-colored games use the PGSolver layout:
//!
//! ```text
//! parity 2;
//! 0 2 0 1,2 "a";
//! 1 1 1 0;
//! 2 3 1 ;
//! ```
//!
//! Each record is `<id> <color> <owner> <successors> ["name"];` with owner 0
//! for Even and 1 for Odd. The header and names are optional, the successor
//! list may be empty (a sink), and records may span lines. A `start <id>;`
//! record is accepted and remembered. Ids need not be dense: they are mapped
//! to `0..n` in increasing order, and an unnamed vertex whose id changes is
//! named after its original id so output still refers to it.
//!
//! Edge-colored games use a similar layout, told apart by a mandatory header:
//!
//! ```text
//! edgeparity 1;
//! 0 0 1:2,0:1 "a";
//! 1 1 0:0;
//! ```
//!
//! with records `<id> <owner> <target:color,...> ["name"];`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use log::warn;
use pargame::{Color, EdgeColoredGame, ParityGame, Player, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertex id {id} declared twice")]
    DuplicateId { line: usize, id: u64 },
    #[error("line {line}: successor {to} of vertex {from} is not declared")]
    UnknownSuccessor { line: usize, from: u64, to: u64 },
    #[error("line {line}: start vertex {id} is not declared")]
    UnknownStart { line: usize, id: u64 },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// A parsed vertex-colored game.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedGame {
    pub game: ParityGame,
    /// Original id of each dense vertex.
    pub ids: Vec<u64>,
    pub start: Option<Vertex>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedEdgeGame {
    pub game: EdgeColoredGame,
    pub ids: Vec<u64>,
}

/// Which format a text uses, judged by its first word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Vertex,
    Edge,
}

pub fn detect(text: &str) -> Flavor {
    match text.split(|c: char| c.is_whitespace() || c == ';').find(|w| !w.is_empty()) {
        Some("edgeparity") => Flavor::Edge,
        _ => Flavor::Vertex,
    }
}

/// One `;`-terminated record split into unquoted words and an optional name.
struct Record {
    line: usize,
    words: Vec<String>,
    name: Option<String>,
}

fn records(text: &str) -> Result<Vec<Record>, FormatError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut start_line = None;
    let mut words = Vec::new();
    let mut word = String::new();
    let mut name: Option<String> = None;
    let mut chars = text.chars();
    let flush = |word: &mut String, words: &mut Vec<String>| {
        if !word.is_empty() {
            words.push(std::mem::take(word));
        }
    };
    while let Some(c) = chars.next() {
        match c {
            '\n' => {
                flush(&mut word, &mut words);
                line += 1;
            }
            c if c.is_whitespace() => flush(&mut word, &mut words),
            ';' => {
                flush(&mut word, &mut words);
                if let Some(l) = start_line.take() {
                    out.push(Record {
                        line: l,
                        words: std::mem::take(&mut words),
                        name: name.take(),
                    });
                }
            }
            '"' => {
                flush(&mut word, &mut words);
                start_line.get_or_insert(line);
                if name.is_some() {
                    return Err(syntax(line, "more than one name in a record"));
                }
                let open = line;
                let mut s = String::new();
                loop {
                    match chars.next() {
                        None => return Err(syntax(open, "unterminated name")),
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(e @ ('"' | '\\')) => s.push(e),
                            _ => return Err(syntax(line, "bad escape in name")),
                        },
                        Some(c) => {
                            if c == '\n' {
                                line += 1;
                            }
                            s.push(c)
                        }
                    }
                }
                name = Some(s);
            }
            c => {
                if name.is_some() {
                    return Err(syntax(line, "text after the name"));
                }
                start_line.get_or_insert(line);
                word.push(c);
            }
        }
    }
    flush(&mut word, &mut words);
    if let Some(l) = start_line {
        return Err(syntax(l, "record is missing its terminating ';'"));
    }
    Ok(out)
}

fn number<T: std::str::FromStr>(line: usize, what: &str, s: &str) -> Result<T, FormatError> {
    s.parse().map_err(|_| syntax(line, format!("invalid {what} '{s}'")))
}

fn owner(line: usize, s: &str) -> Result<Player, FormatError> {
    match s {
        "0" => Ok(Player::Even),
        "1" => Ok(Player::Odd),
        _ => Err(syntax(line, format!("owner must be 0 or 1, got '{s}'"))),
    }
}

fn color(line: usize, s: &str) -> Result<Color, FormatError> {
    let c: i64 = number(line, "color", s)?;
    if c < 0 {
        return Err(syntax(line, format!("negative color {c}")));
    }
    Color::try_from(c).map_err(|_| syntax(line, format!("color {c} is too large")))
}

/// Comma-separated items, tolerating spaces around the commas.
fn list(words: &[String]) -> Vec<String> {
    words
        .join("")
        .split(',')
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

/// Dense ids in increasing order of the declared ones.
fn densify(declared: &BTreeMap<u64, usize>) -> BTreeMap<u64, Vertex> {
    declared.keys().enumerate().map(|(v, &id)| (id, v)).collect()
}

fn check_header(rec: &Record, keyword: &str) -> Result<(), FormatError> {
    if rec.words.len() != 2 || rec.name.is_some() {
        return Err(syntax(rec.line, format!("header must read '{keyword} <max-id>;'")));
    }
    number::<u64>(rec.line, "maximal id", &rec.words[1])?;
    Ok(())
}

fn dedupe<T: PartialEq + Copy>(line: usize, from: u64, items: Vec<T>, show: impl Fn(T) -> String) -> Vec<T> {
    let mut seen = Vec::with_capacity(items.len());
    for item in items {
        if seen.contains(&item) {
            warn!("line {line}: duplicate edge {from} -> {} ignored", show(item));
        } else {
            seen.push(item);
        }
    }
    seen
}

/// Names unnamed vertices whose id changed after their original id.
fn names_for(ids: &[u64], names: Vec<Option<String>>) -> Vec<Option<String>> {
    names
        .into_iter()
        .enumerate()
        .map(|(v, name)| name.or_else(|| (ids[v] != v as u64).then(|| ids[v].to_string())))
        .collect()
}

pub fn parse_game(text: &str) -> Result<ParsedGame, FormatError> {
    struct Raw {
        line: usize,
        id: u64,
        color: Color,
        owner: Player,
        succ: Vec<u64>,
        name: Option<String>,
    }
    let mut raws: Vec<Raw> = Vec::new();
    let mut start = None;
    let mut declared = BTreeMap::new();
    for (i, rec) in records(text)?.into_iter().enumerate() {
        match rec.words.first().map(String::as_str) {
            Some("parity") if i == 0 => {
                check_header(&rec, "parity")?;
                continue;
            }
            Some("start") => {
                if rec.words.len() != 2 {
                    return Err(syntax(rec.line, "start record must read 'start <id>;'"));
                }
                start = Some((rec.line, number::<u64>(rec.line, "start id", &rec.words[1])?));
                continue;
            }
            _ => {}
        }
        if rec.words.len() < 3 {
            return Err(syntax(rec.line, "expected '<id> <color> <owner> <successors>'"));
        }
        let id: u64 = number(rec.line, "vertex id", &rec.words[0])?;
        if declared.insert(id, rec.line).is_some() {
            return Err(FormatError::DuplicateId { line: rec.line, id });
        }
        let succ = list(&rec.words[3..])
            .iter()
            .map(|s| number(rec.line, "successor", s))
            .collect::<Result<Vec<u64>, _>>()?;
        raws.push(Raw {
            line: rec.line,
            id,
            color: color(rec.line, &rec.words[1])?,
            owner: owner(rec.line, &rec.words[2])?,
            succ: dedupe(rec.line, id, succ, |w| w.to_string()),
            name: rec.name,
        });
    }

    let dense = densify(&declared);
    let n = raws.len();
    raws.sort_by_key(|r| dense[&r.id]);
    let mut owners = Vec::with_capacity(n);
    let mut colors = Vec::with_capacity(n);
    let mut lists = Vec::with_capacity(n);
    let mut names = Vec::with_capacity(n);
    let ids: Vec<u64> = raws.iter().map(|r| r.id).collect();
    for r in raws {
        let succ = r
            .succ
            .iter()
            .map(|w| {
                dense.get(w).copied().ok_or(FormatError::UnknownSuccessor {
                    line: r.line,
                    from: r.id,
                    to: *w,
                })
            })
            .collect::<Result<Vec<Vertex>, _>>()?;
        owners.push(r.owner);
        colors.push(r.color);
        lists.push(succ);
        names.push(r.name);
    }
    let start = match start {
        None => None,
        Some((line, id)) => Some(*dense.get(&id).ok_or(FormatError::UnknownStart { line, id })?),
    };
    let game = ParityGame::from_successors(owners, colors, lists)
        .expect("successors were resolved")
        .with_names(names_for(&ids, names));
    Ok(ParsedGame { game, ids, start })
}

pub fn parse_edge_game(text: &str) -> Result<ParsedEdgeGame, FormatError> {
    let recs = records(text)?;
    match recs.first() {
        Some(r) if r.words.first().map(String::as_str) == Some("edgeparity") => check_header(r, "edgeparity")?,
        Some(r) => return Err(syntax(r.line, "edge-colored games start with 'edgeparity <max-id>;'")),
        None => return Err(syntax(1, "missing 'edgeparity <max-id>;' header")),
    }
    let mut declared = BTreeMap::new();
    let mut raws = Vec::new();
    for rec in recs.into_iter().skip(1) {
        if rec.words.len() < 2 {
            return Err(syntax(rec.line, "expected '<id> <owner> <target:color,...>'"));
        }
        let id: u64 = number(rec.line, "vertex id", &rec.words[0])?;
        if declared.insert(id, rec.line).is_some() {
            return Err(FormatError::DuplicateId { line: rec.line, id });
        }
        let edges = list(&rec.words[2..])
            .iter()
            .map(|item| {
                let (to, c) = item
                    .split_once(':')
                    .ok_or_else(|| syntax(rec.line, format!("edge '{item}' must read target:color")))?;
                Ok((number::<u64>(rec.line, "successor", to)?, color(rec.line, c)?))
            })
            .collect::<Result<Vec<(u64, Color)>, FormatError>>()?;
        let edges = dedupe(rec.line, id, edges, |(w, c)| format!("{w}:{c}"));
        raws.push((rec.line, id, owner(rec.line, &rec.words[1])?, edges, rec.name));
    }
    let dense = densify(&declared);
    raws.sort_by_key(|r| dense[&r.1]);
    let ids: Vec<u64> = raws.iter().map(|r| r.1).collect();
    let owners = raws.iter().map(|r| r.2).collect();
    let mut edges = Vec::new();
    let mut names = Vec::new();
    for (line, id, _, out, name) in raws {
        for (w, c) in out {
            let v = *dense.get(&w).ok_or(FormatError::UnknownSuccessor { line, from: id, to: w })?;
            edges.push((dense[&id], v, c));
        }
        names.push(name);
    }
    let game = EdgeColoredGame::from_edges(owners, &edges)
        .expect("edges were resolved")
        .with_names(names_for(&ids, names));
    Ok(ParsedEdgeGame { game, ids })
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

fn owner_digit(p: Player) -> char {
    match p {
        Player::Even => '0',
        Player::Odd => '1',
    }
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Writes a game with dense ids; `parse_game` reads it back unchanged.
pub fn emit_game(game: &ParityGame) -> String {
    let mut out = String::new();
    writeln!(out, "parity {};", game.num_vertices().saturating_sub(1)).unwrap();
    for v in game.vertices() {
        let mut parts = vec![v.to_string(), game.color(v).to_string(), owner_digit(game.owner(v)).to_string()];
        if !game.is_sink(v) {
            parts.push(join(game.successors(v).iter()));
        }
        if let Some(name) = game.name(v) {
            parts.push(quote(name));
        }
        writeln!(out, "{};", parts.join(" ")).unwrap();
    }
    out
}

pub fn emit_edge_game(game: &EdgeColoredGame) -> String {
    let mut out = String::new();
    writeln!(out, "edgeparity {};", game.num_vertices().saturating_sub(1)).unwrap();
    for v in game.vertices() {
        let mut parts = vec![v.to_string(), owner_digit(game.owner(v)).to_string()];
        if !game.is_sink(v) {
            parts.push(join(game.out_edges(v).map(|(w, c)| format!("{w}:{c}"))));
        }
        if let Some(name) = game.name(v) {
            parts.push(quote(name));
        }
        writeln!(out, "{};", parts.join(" ")).unwrap();
    }
    out
}
