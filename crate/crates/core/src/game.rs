//! Game graphs: players, vertex-colored parity games and edge-colored games.
//!
//! Games are immutable once built. Vertices are dense ids `0..n`; names are
//! display metadata only. A color is any non-negative integer and the winner
//! of an infinite play is the parity of the largest color seen infinitely
//! often, whatever the range of colors in use.

use std::fmt;
use std::ops::Range;

use log::warn;

use crate::error::GameError;

pub type Vertex = usize;
pub type Color = u32;

/// The two players. `Even` is player 0, `Odd` is player 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    pub const BOTH: [Player; 2] = [Player::Even, Player::Odd];

    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }

    pub fn from_index(index: usize) -> Option<Player> {
        match index {
            0 => Some(Player::Even),
            1 => Some(Player::Odd),
            _ => None,
        }
    }

    /// The player favoured by a color: `Even` for even colors.
    pub fn of_color(color: Color) -> Player {
        if color.is_multiple_of(2) {
            Player::Even
        } else {
            Player::Odd
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Even => f.write_str("Even"),
            Player::Odd => f.write_str("Odd"),
        }
    }
}

/// Compressed adjacency shared by both game flavours. Successor order is
/// insertion order with duplicates removed.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Adjacency {
    succ_offsets: Vec<usize>,
    succ: Vec<Vertex>,
    pred_offsets: Vec<usize>,
    pred: Vec<Vertex>,
}

impl Adjacency {
    fn from_successor_lists(lists: &[Vec<Vertex>]) -> Self {
        let n = lists.len();
        let mut succ_offsets = Vec::with_capacity(n + 1);
        let mut succ = Vec::new();
        succ_offsets.push(0);
        for list in lists {
            succ.extend_from_slice(list);
            succ_offsets.push(succ.len());
        }
        let mut in_degree = vec![0usize; n + 1];
        for &w in &succ {
            in_degree[w + 1] += 1;
        }
        for v in 0..n {
            in_degree[v + 1] += in_degree[v];
        }
        let pred_offsets = in_degree.clone();
        let mut fill = in_degree;
        let mut pred = vec![0; succ.len()];
        for (v, list) in lists.iter().enumerate() {
            for &w in list {
                pred[fill[w]] = v;
                fill[w] += 1;
            }
        }
        Self {
            succ_offsets,
            succ,
            pred_offsets,
            pred,
        }
    }

    fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.succ[self.succ_offsets[v]..self.succ_offsets[v + 1]]
    }

    fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.pred[self.pred_offsets[v]..self.pred_offsets[v + 1]]
    }

    fn edge_range(&self, v: Vertex) -> Range<usize> {
        self.succ_offsets[v]..self.succ_offsets[v + 1]
    }
}

/// Removes repeated entries, keeping first occurrences. Returns the number of
/// entries dropped.
fn dedup_in_order<T: PartialEq + Copy>(items: &mut Vec<T>) -> usize {
    let before = items.len();
    let mut kept: Vec<T> = Vec::with_capacity(before);
    for &item in items.iter() {
        if !kept.contains(&item) {
            kept.push(item);
        }
    }
    *items = kept;
    before - items.len()
}

/// A finite two-player game graph with a vertex coloring. Sinks are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityGame {
    owner: Vec<Player>,
    color: Vec<Color>,
    adj: Adjacency,
    names: Vec<Option<String>>,
}

impl ParityGame {
    /// Builds a game from per-vertex successor lists. Duplicate successors
    /// are dropped with a warning; out-of-range successors are an error.
    pub fn from_successors(
        owner: Vec<Player>,
        color: Vec<Color>,
        mut successors: Vec<Vec<Vertex>>,
    ) -> Result<Self, GameError> {
        let n = owner.len();
        if color.len() != n || successors.len() != n {
            return Err(GameError::LengthMismatch {
                owners: n,
                colors: color.len(),
                adjacency: successors.len(),
            });
        }
        for (v, list) in successors.iter_mut().enumerate() {
            if let Some(&w) = list.iter().find(|&&w| w >= n) {
                return Err(GameError::DanglingEdge {
                    from: v as i64,
                    to: w as i64,
                });
            }
            let dropped = dedup_in_order(list);
            if dropped > 0 {
                warn!("vertex {v}: dropped {dropped} duplicate edge(s)");
            }
        }
        Ok(Self {
            owner,
            color,
            adj: Adjacency::from_successor_lists(&successors),
            names: vec![None; n],
        })
    }

    /// Builds a game from an edge list.
    pub fn from_edges(
        owner: Vec<Player>,
        color: Vec<Color>,
        edges: &[(Vertex, Vertex)],
    ) -> Result<Self, GameError> {
        let n = owner.len();
        let mut lists = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GameError::DanglingEdge {
                    from: u as i64,
                    to: v as i64,
                });
            }
            lists[u].push(v);
        }
        Self::from_successors(owner, color, lists)
    }

    /// Attaches display names. Panics if the length differs from the vertex count.
    pub fn with_names(mut self, names: Vec<Option<String>>) -> Self {
        assert_eq!(names.len(), self.num_vertices(), "one name slot per vertex");
        self.names = names;
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.owner.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.owner.is_empty()
    }

    pub fn vertices(&self) -> Range<Vertex> {
        0..self.num_vertices()
    }

    pub fn owner(&self, v: Vertex) -> Player {
        self.owner[v]
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.color[v]
    }

    pub fn owners(&self) -> &[Player] {
        &self.owner
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        self.adj.successors(v)
    }

    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        self.adj.predecessors(v)
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.adj.edge_range(v).len()
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.out_degree(v) == 0
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.successors(u).contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.successors(u).iter().map(move |&v| (u, v)))
    }

    pub fn max_color(&self) -> Option<Color> {
        self.color.iter().copied().max()
    }

    pub fn name(&self, v: Vertex) -> Option<&str> {
        self.names[v].as_deref()
    }

    pub fn names(&self) -> &[Option<String>] {
        &self.names
    }

    /// The name of `v` if it has one, its id otherwise.
    pub fn label(&self, v: Vertex) -> String {
        match self.name(v) {
            Some(name) => name.to_string(),
            None => v.to_string(),
        }
    }

    /// Looks a vertex up by name, falling back to a numeric id.
    pub fn find_vertex(&self, label: &str) -> Option<Vertex> {
        if let Some(v) = self.names.iter().position(|n| n.as_deref() == Some(label)) {
            return Some(v);
        }
        label.parse::<Vertex>().ok().filter(|&v| v < self.num_vertices())
    }

    pub fn successor_lists(&self) -> Vec<Vec<Vertex>> {
        self.vertices().map(|v| self.successors(v).to_vec()).collect()
    }

    /// Same graph and owners with a new coloring.
    pub fn recolored(&self, color: Vec<Color>) -> ParityGame {
        assert_eq!(color.len(), self.num_vertices());
        ParityGame {
            owner: self.owner.clone(),
            color,
            adj: self.adj.clone(),
            names: self.names.clone(),
        }
    }
}

/// A game graph whose colors sit on edges. Between two vertices there may be
/// several edges as long as their colors differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredGame {
    owner: Vec<Player>,
    adj: Adjacency,
    /// Aligned with `adj.succ`.
    edge_color: Vec<Color>,
    names: Vec<Option<String>>,
}

impl EdgeColoredGame {
    /// Builds a game from `(source, target, color)` triples. Repeated triples
    /// are dropped with a warning.
    pub fn from_edges(
        owner: Vec<Player>,
        edges: &[(Vertex, Vertex, Color)],
    ) -> Result<Self, GameError> {
        let n = owner.len();
        let mut lists: Vec<Vec<(Vertex, Color)>> = vec![Vec::new(); n];
        for &(u, v, c) in edges {
            if u >= n || v >= n {
                return Err(GameError::DanglingEdge {
                    from: u as i64,
                    to: v as i64,
                });
            }
            lists[u].push((v, c));
        }
        for (u, list) in lists.iter_mut().enumerate() {
            let dropped = dedup_in_order(list);
            if dropped > 0 {
                warn!("vertex {u}: dropped {dropped} duplicate colored edge(s)");
            }
        }
        Ok(Self::from_checked_lists(owner, lists))
    }

    /// Lists must be in range and free of repeated triples.
    pub(crate) fn from_checked_lists(owner: Vec<Player>, lists: Vec<Vec<(Vertex, Color)>>) -> Self {
        let n = owner.len();
        let targets: Vec<Vec<Vertex>> = lists
            .iter()
            .map(|l| l.iter().map(|&(v, _)| v).collect())
            .collect();
        let edge_color = lists.iter().flat_map(|l| l.iter().map(|&(_, c)| c)).collect();
        Self {
            owner,
            adj: Adjacency::from_successor_lists(&targets),
            edge_color,
            names: vec![None; n],
        }
    }

    pub fn with_names(mut self, names: Vec<Option<String>>) -> Self {
        assert_eq!(names.len(), self.num_vertices(), "one name slot per vertex");
        self.names = names;
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.owner.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.succ.len()
    }

    pub fn vertices(&self) -> Range<Vertex> {
        0..self.num_vertices()
    }

    pub fn owner(&self, v: Vertex) -> Player {
        self.owner[v]
    }

    pub fn owners(&self) -> &[Player] {
        &self.owner
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.adj.edge_range(v).is_empty()
    }

    /// Outgoing edges of `v` as `(target, color)` pairs.
    pub fn out_edges(&self, v: Vertex) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.adj
            .edge_range(v)
            .map(move |e| (self.adj.succ[e], self.edge_color[e]))
    }

    /// All edges as `(source, target, color)` in source order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        self.vertices()
            .flat_map(move |u| self.out_edges(u).map(move |(v, c)| (u, v, c)))
    }

    pub fn name(&self, v: Vertex) -> Option<&str> {
        self.names[v].as_deref()
    }

    pub fn names(&self) -> &[Option<String>] {
        &self.names
    }

    pub fn label(&self, v: Vertex) -> String {
        match self.name(v) {
            Some(name) => name.to_string(),
            None => v.to_string(),
        }
    }
}

/// A vertex record as read from an untrusted source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncheckedVertex {
    pub owner: Player,
    pub color: i64,
    pub successors: Vec<i64>,
    pub name: Option<String>,
}

/// A game description that has not been validated yet.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UncheckedGame {
    pub vertices: Vec<UncheckedVertex>,
}

/// A problem found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DanglingEdge { from: Vertex, to: i64 },
    DuplicateEdge { from: Vertex, to: Vertex },
    NegativeColor { vertex: Vertex, color: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DanglingEdge { from, to } => {
                write!(f, "edge ({from},{to}) points outside the vertex range")
            }
            Violation::DuplicateEdge { from, to } => write!(f, "edge ({from},{to}) listed more than once"),
            Violation::NegativeColor { vertex, color } => {
                write!(f, "vertex {vertex} has negative color {color}")
            }
        }
    }
}

/// Reports dangling edge endpoints, duplicate edges and negative colors.
pub fn validate(game: &UncheckedGame) -> Vec<Violation> {
    let n = game.vertices.len() as i64;
    let mut violations = Vec::new();
    for (v, record) in game.vertices.iter().enumerate() {
        if record.color < 0 {
            violations.push(Violation::NegativeColor {
                vertex: v,
                color: record.color,
            });
        }
        let mut seen = Vec::new();
        for &w in &record.successors {
            if w < 0 || w >= n {
                violations.push(Violation::DanglingEdge { from: v, to: w });
            } else if seen.contains(&w) {
                violations.push(Violation::DuplicateEdge {
                    from: v,
                    to: w as Vertex,
                });
            } else {
                seen.push(w);
            }
        }
    }
    violations
}

impl UncheckedGame {
    /// Validates and builds the game. Duplicate edges are dropped with a
    /// warning; any other violation is an error.
    pub fn build(self) -> Result<ParityGame, GameError> {
        for violation in validate(&self) {
            match violation {
                Violation::DuplicateEdge { from, to } => {
                    warn!("duplicate edge ({from},{to}) ignored")
                }
                Violation::DanglingEdge { from, to } => {
                    return Err(GameError::DanglingEdge {
                        from: from as i64,
                        to,
                    })
                }
                Violation::NegativeColor { vertex, color } => {
                    return Err(GameError::NegativeColor { vertex, color })
                }
            }
        }
        let mut owner = Vec::with_capacity(self.vertices.len());
        let mut color = Vec::with_capacity(self.vertices.len());
        let mut lists = Vec::with_capacity(self.vertices.len());
        let mut names = Vec::with_capacity(self.vertices.len());
        for record in self.vertices {
            owner.push(record.owner);
            color.push(Color::try_from(record.color).map_err(|_| GameError::ColorOverflow(record.color))?);
            let mut list: Vec<Vertex> = record.successors.iter().map(|&w| w as Vertex).collect();
            dedup_in_order(&mut list);
            lists.push(list);
            names.push(record.name);
        }
        Ok(ParityGame::from_successors(owner, color, lists)?.with_names(names))
    }
}
