//! Command-line interface: argument definitions and command bodies.
//!
//! Every command writes `key: value` lines (or one JSON document with
//! `--json`) to the given writer. [`run`] returns the process exit code:
//! 0 on success, 1 when `verify` rejects a strategy.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pargame::generate::{random_game, worst_case, RandomGameParams};
use pargame::oracle::{brute_force_solve_with_budget, DEFAULT_BUDGET};
use pargame::registers::{default_register_count, expand_register_game_with_cap, solve_via_registers_with_cap, DEFAULT_STATE_CAP};
use pargame::transform::{edge_to_vertex_colored, eliminate_sinks, vertex_to_edge_colored};
use pargame::{
    lehtinen_family, solve_parity_with_stats, solve_reachability, verify_strategy, Color, Counterexample, ParityGame,
    Player, PositionalStrategy, ReachabilityProblem, SolveOutcome, Vertex,
};
use serde_json::{json, Value};

use crate::dot::emit_dot;
use crate::format::{detect, emit_edge_game, emit_game, parse_edge_game, parse_game, Flavor};
use crate::strategy_file::{emit_strategy, parse_player, parse_strategy};

#[derive(Debug, Parser)]
#[command(name = "pargame", version, about = "Solve reachability and parity games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute winning regions and strategies.
    Solve(SolveArgs),
    /// Solve a reachability game: attractor, distances and strategies.
    Attractor(AttractorArgs),
    /// Check that a strategy file wins from its whole support.
    Verify(VerifyArgs),
    /// Convert between vertex-colored, edge-colored and sink-free games.
    Convert(ConvertArgs),
    /// Generate a game.
    Gen(GenArgs),
    /// Time a solver on a game family; one row per size.
    Bench(BenchArgs),
    /// Write the register game reachable from a start vertex.
    Expand(ExpandArgs),
    /// Render a game in Graphviz format.
    Dot(DotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Zielonka,
    Oracle,
    Registers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Parity,
    Edge,
    Novsinks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Random,
    Worstcase,
    Lehtinen,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Game file (`-` for stdin); edge-colored files are subdivided first.
    pub game: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Zielonka)]
    pub algo: Algo,
    /// Report the winner at this vertex (label or id); registers mode
    /// otherwise solves every vertex.
    #[arg(long)]
    pub start: Option<String>,
    /// Register count; defaults to the smallest r with n < 2^r.
    #[arg(long)]
    pub registers: Option<usize>,
    /// Initial register vector, comma-separated and sorted; default zeros.
    #[arg(long, value_delimiter = ',')]
    pub vector: Option<Vec<Color>>,
    /// Strategy-pair budget for the oracle.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// State cap for register expansion.
    #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
    pub state_cap: usize,
    /// Write Even's winning strategy to this file.
    #[arg(long)]
    pub strategy_even: Option<PathBuf>,
    /// Write Odd's winning strategy to this file.
    #[arg(long)]
    pub strategy_odd: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct AttractorArgs {
    pub game: PathBuf,
    /// The player trying to reach the target.
    #[arg(long, value_parser = player_arg)]
    pub player: Player,
    /// Target vertices, comma-separated labels or ids.
    #[arg(long, value_delimiter = ',', required = true)]
    pub target: Vec<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub game: PathBuf,
    #[arg(long)]
    pub strategy: PathBuf,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    pub game: PathBuf,
    #[arg(long, value_enum)]
    pub to: Target,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub min_color: Color,
    #[arg(long, default_value_t = 3)]
    pub max_color: Color,
    #[arg(long, default_value_t = 1)]
    pub min_out: usize,
    #[arg(long, default_value_t = 3)]
    pub max_out: usize,
    #[arg(long, default_value_t = 0.0)]
    pub sink_prob: f64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Vertices for random, n for worstcase (2n vertices), r for lehtinen.
    #[arg(long, default_value_t = 8)]
    pub size: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_delimiter = ',', default_values_t = [4usize, 8, 16, 32])]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub repeat: usize,
    /// zielonka or registers (from vertex 0 with the default register count).
    #[arg(long, value_enum, default_value_t = Algo::Zielonka)]
    pub algo: Algo,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    pub game: PathBuf,
    #[arg(long)]
    pub start: String,
    #[arg(long)]
    pub registers: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub vector: Option<Vec<Color>>,
    #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
    pub state_cap: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DotArgs {
    pub game: PathBuf,
    /// Solve first and draw regions and strategies.
    #[arg(long)]
    pub solve: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn player_arg(s: &str) -> Result<Player, String> {
    parse_player(s).ok_or_else(|| format!("expected 'even' or 'odd', got '{s}'"))
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Loads a vertex-colored game; edge-colored files are subdivided, keeping
/// the original vertices at their ids.
fn load_game(path: &Path) -> Result<(ParityGame, Option<Vertex>)> {
    let text = read_text(path)?;
    let context = || format!("parsing {}", path.display());
    match detect(&text) {
        Flavor::Vertex => {
            let parsed = parse_game(&text).with_context(context)?;
            Ok((parsed.game, parsed.start))
        }
        Flavor::Edge => {
            let parsed = parse_edge_game(&text).with_context(context)?;
            Ok((edge_to_vertex_colored(&parsed.game), None))
        }
    }
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(Into::into),
    }
}

fn vertex(game: &ParityGame, label: &str) -> Result<Vertex> {
    game.find_vertex(label)
        .ok_or_else(|| anyhow!("no vertex '{label}' in a game with {} vertices", game.num_vertices()))
}

fn labels(game: &ParityGame, vs: impl Iterator<Item = Vertex>) -> Vec<String> {
    vs.map(|v| game.label(v)).collect()
}

fn moves(game: &ParityGame, s: &PositionalStrategy) -> Vec<String> {
    s.moves().map(|(u, v)| format!("{}->{}", game.label(u), game.label(v))).collect()
}

/// Ordered `key: value` lines that can also be dumped as JSON.
#[derive(Default)]
struct Report {
    lines: Vec<(String, Value)>,
}

impl Report {
    fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.lines.push((key.to_string(), value.into()));
    }

    fn write(self, json: bool, out: &mut dyn Write) -> Result<()> {
        if json {
            let mut map = serde_json::Map::new();
            for (k, v) in self.lines {
                match map.get_mut(&k) {
                    Some(Value::Array(items)) => items.push(v),
                    Some(existing) => *existing = Value::Array(vec![existing.take(), v]),
                    None => {
                        map.insert(k, v);
                    }
                }
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(map))?)?;
        } else {
            for (k, v) in self.lines {
                let text = match v {
                    Value::String(s) => s,
                    Value::Array(items) => items
                        .iter()
                        .map(|i| i.as_str().map_or_else(|| i.to_string(), str::to_string))
                        .collect::<Vec<_>>()
                        .join(" "),
                    other => other.to_string(),
                };
                writeln!(out, "{k}: {text}")?;
            }
        }
        Ok(())
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Solve(a) => solve(a, out),
        Command::Attractor(a) => attractor(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Convert(a) => convert(a, out),
        Command::Gen(a) => gen(a, out),
        Command::Bench(a) => bench(a, out),
        Command::Expand(a) => expand(a, out),
        Command::Dot(a) => dot(a, out),
    }
}

fn report_outcome(r: &mut Report, game: &ParityGame, o: &SolveOutcome) {
    r.put("regionEven", labels(game, o.region_even.iter()));
    r.put("regionOdd", labels(game, o.region_odd.iter()));
    r.put("strategyEven", moves(game, &o.strategy_even));
    r.put("strategyOdd", moves(game, &o.strategy_odd));
}

fn solve(a: SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let (game, file_start) = load_game(&a.game)?;
    let start = match &a.start {
        Some(label) => Some(vertex(&game, label)?),
        None => file_start,
    };
    let mut r = Report::default();
    r.put("algorithm", format!("{:?}", a.algo).to_lowercase());
    r.put("vertices", game.num_vertices());
    r.put("edges", game.num_edges());
    let outcome = match a.algo {
        Algo::Zielonka => {
            let (o, stats) = solve_parity_with_stats(&game);
            report_outcome(&mut r, &game, &o);
            r.put("recursiveCalls", stats.recursive_calls);
            r.put("outerIterations", stats.outer_iterations);
            r.put("attractorCalls", stats.attractor_calls);
            r.put("edgeWork", stats.edge_work);
            Some(o)
        }
        Algo::Oracle => {
            let o = brute_force_solve_with_budget(&game, a.budget)?;
            report_outcome(&mut r, &game, &o);
            Some(o)
        }
        Algo::Registers => {
            let starts: Vec<Vertex> = match start {
                Some(v) => vec![v],
                None => game.vertices().collect(),
            };
            let rc = a.registers.unwrap_or_else(|| default_register_count(game.num_vertices()));
            r.put("registers", rc);
            for v in starts {
                let s = solve_via_registers_with_cap(&game, v, Some(rc), a.vector.as_deref(), a.state_cap)?;
                r.put("winner", format!("{} {}", game.label(v), s.winner));
                r.put(
                    "expansion",
                    format!("{} states={} edges={} solverVertices={}", game.label(v), s.states, s.edges, s.solver_vertices),
                );
            }
            None
        }
    };
    if let Some(o) = &outcome {
        if let Some(v) = start {
            r.put("winner", format!("{} {}", game.label(v), o.winner(v)));
        }
        for (path, p) in [(&a.strategy_even, Player::Even), (&a.strategy_odd, Player::Odd)] {
            if let Some(path) = path {
                fs::write(path, emit_strategy(&game, o.strategy(p)))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
    } else if a.strategy_even.is_some() || a.strategy_odd.is_some() {
        bail!("the register pipeline decides winners only; use --algo zielonka or oracle for strategies");
    }
    r.write(a.json, out)?;
    Ok(0)
}

fn attractor(a: AttractorArgs, out: &mut dyn Write) -> Result<i32> {
    let (game, _) = load_game(&a.game)?;
    let target = a
        .target
        .iter()
        .map(|t| vertex(&game, t.trim()))
        .collect::<Result<Vec<_>>>()?;
    let problem = ReachabilityProblem::new(&game, a.player, &target)?;
    let res = solve_reachability(&problem)?;
    let mut r = Report::default();
    r.put("player", a.player.to_string());
    r.put("target", labels(&game, problem.target.iter()));
    r.put("attractor", labels(&game, res.attractor.iter()));
    r.put("complement", labels(&game, res.attractor.complement().iter()));
    r.put(
        "distance",
        game.vertices()
            .map(|v| format!("{}:{}", game.label(v), res.distance[v]))
            .collect::<Vec<_>>(),
    );
    r.put("strategyAttacker", moves(&game, &res.attacker_strategy));
    r.put("strategyDefender", moves(&game, &res.defender_strategy));
    r.put(
        "delaying",
        game.vertices()
            .filter_map(|u| res.delaying_moves[u].map(|v| format!("{}->{}", game.label(u), game.label(v))))
            .collect::<Vec<_>>(),
    );
    r.put("queueInsertions", res.stats.queue_insertions);
    r.put("edgeInspections", res.stats.edge_inspections);
    r.put("strategyScans", res.stats.strategy_scans);
    r.write(a.json, out)?;
    Ok(0)
}

fn describe(game: &ParityGame, c: &Counterexample) -> String {
    match c {
        Counterexample::Malformed(e) => format!("malformed strategy: {e}"),
        Counterexample::LeavesSupport { from, to } => {
            format!("play leaves the support along {} -> {}", game.label(*from), game.label(*to))
        }
        Counterexample::LosingSink { vertex } => format!("own sink {} in the support", game.label(*vertex)),
        Counterexample::BadCycle { cycle, max_color } => format!(
            "cycle {} with top color {max_color}",
            labels(game, cycle.iter().copied()).join(" ")
        ),
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let (game, _) = load_game(&a.game)?;
    let text = read_text(&a.strategy)?;
    let strategy = parse_strategy(&game, &text).with_context(|| format!("parsing {}", a.strategy.display()))?;
    match verify_strategy(&game, &strategy) {
        Ok(()) => {
            writeln!(out, "ok")?;
            Ok(0)
        }
        Err(c) => {
            writeln!(out, "counterexample: {}", describe(&game, &c))?;
            Ok(1)
        }
    }
}

fn convert(a: ConvertArgs, out: &mut dyn Write) -> Result<i32> {
    let text = read_text(&a.game)?;
    let context = || format!("parsing {}", a.game.display());
    let result = match (detect(&text), a.to) {
        (Flavor::Vertex, target) => {
            let g = parse_game(&text).with_context(context)?.game;
            match target {
                Target::Parity => emit_game(&g),
                Target::Edge => emit_edge_game(&vertex_to_edge_colored(&g)),
                Target::Novsinks => emit_game(&eliminate_sinks(&g)),
            }
        }
        (Flavor::Edge, target) => {
            let g = parse_edge_game(&text).with_context(context)?.game;
            match target {
                Target::Parity => emit_game(&edge_to_vertex_colored(&g)),
                Target::Edge => emit_edge_game(&g),
                Target::Novsinks => emit_game(&eliminate_sinks(&edge_to_vertex_colored(&g))),
            }
        }
    };
    write_output(a.output.as_deref(), &result, out)?;
    Ok(0)
}

fn build(f: &FamilyArgs, size: usize) -> Result<ParityGame> {
    Ok(match f.family {
        Family::Random => {
            let params = RandomGameParams {
                vertices: size,
                min_color: f.min_color,
                max_color: f.max_color,
                min_out: f.min_out,
                max_out: f.max_out,
                sink_probability: f.sink_prob,
            };
            random_game(&params, f.seed)?
        }
        Family::Worstcase => worst_case(size),
        Family::Lehtinen => {
            if size == 0 || size > 20 {
                bail!("lehtinen needs 1 <= r <= 20, got {size}");
            }
            lehtinen_family(size)
        }
    })
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Result<i32> {
    let game = build(&a.family, a.size)?;
    write_output(a.output.as_deref(), &emit_game(&game), out)?;
    Ok(0)
}

fn bench(a: BenchArgs, out: &mut dyn Write) -> Result<i32> {
    if a.repeat == 0 {
        bail!("--repeat must be positive");
    }
    let family = format!("{:?}", a.family.family).to_lowercase();
    for &size in &a.sizes {
        let game = build(&a.family, size)?;
        let mut best = f64::INFINITY;
        let mut row = json!({
            "family": family,
            "size": size,
            "vertices": game.num_vertices(),
            "edges": game.num_edges(),
            "repeat": a.repeat,
        });
        for _ in 0..a.repeat {
            let clock = Instant::now();
            let extra = match a.algo {
                Algo::Zielonka => {
                    let (_, s) = solve_parity_with_stats(&game);
                    json!({
                        "recursiveCalls": s.recursive_calls,
                        "outerIterations": s.outer_iterations,
                        "attractorCalls": s.attractor_calls,
                        "edgeWork": s.edge_work,
                    })
                }
                Algo::Registers => {
                    if game.is_empty() {
                        bail!("cannot run the register pipeline on an empty game");
                    }
                    let s = solve_via_registers_with_cap(&game, 0, None, None, DEFAULT_STATE_CAP)?;
                    json!({
                        "registers": s.registers,
                        "states": s.states,
                        "registerEdges": s.edges,
                        "recursiveCalls": s.zielonka.recursive_calls,
                        "attractorCalls": s.zielonka.attractor_calls,
                        "winner": s.winner.to_string(),
                    })
                }
                Algo::Oracle => bail!("bench supports zielonka and registers"),
            };
            best = best.min(clock.elapsed().as_secs_f64());
            if let (Value::Object(row), Value::Object(extra)) = (&mut row, extra) {
                row.extend(extra);
            }
        }
        row["wallMicros"] = json!((best * 1e6).round() as u64);
        if a.json {
            writeln!(out, "{row}")?;
        } else {
            let Value::Object(fields) = row else { unreachable!() };
            let cells: Vec<String> = fields
                .iter()
                .map(|(k, v)| format!("{k}={}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
                .collect();
            writeln!(out, "{}", cells.join(" "))?;
        }
    }
    Ok(0)
}

fn expand(a: ExpandArgs, out: &mut dyn Write) -> Result<i32> {
    let (game, _) = load_game(&a.game)?;
    let start = vertex(&game, &a.start)?;
    let rc = a.registers.unwrap_or_else(|| default_register_count(game.num_vertices()));
    let x = a.vector.clone().unwrap_or_else(|| vec![0; rc]);
    let rg = expand_register_game_with_cap(&game, start, &x, rc, a.state_cap)?;
    log::info!("{} states, {} edges", rg.num_states(), rg.num_edges());
    write_output(a.output.as_deref(), &emit_edge_game(&rg.game), out)?;
    Ok(0)
}

fn dot(a: DotArgs, out: &mut dyn Write) -> Result<i32> {
    let (game, _) = load_game(&a.game)?;
    let outcome = a.solve.then(|| solve_parity_with_stats(&game).0);
    write_output(a.output.as_deref(), &emit_dot(&game, outcome.as_ref()), out)?;
    Ok(0)
}
