//! Graphviz rendering. Even's vertices are circles and Odd's are boxes; a
//! solved game gets one cluster per winning region and bold strategy edges.

use std::fmt::Write as _;

use pargame::{ParityGame, Player, SolveOutcome, Vertex};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn node(out: &mut String, game: &ParityGame, v: Vertex, indent: &str) {
    let shape = match game.owner(v) {
        Player::Even => "circle",
        Player::Odd => "box",
    };
    writeln!(
        out,
        "{indent}v{v} [label=\"{}\\n{}\", shape={shape}];",
        escape(&game.label(v)),
        game.color(v)
    )
    .unwrap();
}

pub fn emit_dot(game: &ParityGame, outcome: Option<&SolveOutcome>) -> String {
    let mut out = String::from("digraph game {\n");
    match outcome {
        None => {
            for v in game.vertices() {
                node(&mut out, game, v, "  ");
            }
        }
        Some(o) => {
            for p in Player::BOTH {
                let name = p.to_string().to_lowercase();
                writeln!(out, "  subgraph cluster_{name} {{").unwrap();
                writeln!(out, "    label=\"{p} wins\";").unwrap();
                for v in o.region(p).iter() {
                    node(&mut out, game, v, "    ");
                }
                out.push_str("  }\n");
            }
        }
    }
    for (u, v) in game.edges() {
        let bold = outcome.is_some_and(|o| o.strategy(game.owner(u)).get(u) == Some(v));
        let style = if bold { " [style=bold, penwidth=2]" } else { "" };
        writeln!(out, "  v{u} -> v{v}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pargame::solve_parity;

    #[test]
    fn shapes_clusters_and_bold_edges() {
        let g = ParityGame::from_edges(vec![Player::Even, Player::Odd], vec![2, 1], &[(0, 0), (0, 1), (1, 1)]).unwrap();
        let plain = emit_dot(&g, None);
        assert!(plain.contains("v0 [label=\"0\\n2\", shape=circle];"));
        assert!(plain.contains("v1 [label=\"1\\n1\", shape=box];"));
        assert!(!plain.contains("cluster"));
        let out = solve_parity(&g);
        let solved = emit_dot(&g, Some(&out));
        assert_eq!(solved.matches("subgraph cluster_").count(), 2);
        assert!(solved.contains("v0 -> v0 [style=bold, penwidth=2];"));
        assert!(solved.contains("v0 -> v1;"));
        assert_eq!(solved, emit_dot(&g, Some(&out)));
    }
}
