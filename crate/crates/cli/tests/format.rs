use pargame::generate::{random_game, RandomGameParams};
use pargame::transform::vertex_to_edge_colored;
use pargame_cli::format::{emit_edge_game, emit_game, parse_edge_game, parse_game};
use proptest::prelude::*;

fn params(n: usize) -> RandomGameParams {
    RandomGameParams {
        vertices: n,
        min_color: 0,
        max_color: 9,
        min_out: 1,
        max_out: 4,
        sink_probability: 0.2,
    }
}

proptest! {
    #[test]
    fn emit_then_parse_is_identity(seed in any::<u64>(), n in 0usize..40) {
        let g = random_game(&params(n), seed).unwrap();
        let text = emit_game(&g);
        let back = parse_game(&text).unwrap();
        prop_assert_eq!(&back.game, &g);
        prop_assert_eq!(emit_game(&back.game), text);
    }

    #[test]
    fn parse_normalizes_sparse_ids(seed in any::<u64>(), n in 1usize..30, gap in 1u64..5) {
        // Re-number vertex v as gap * v + 3 and shuffle nothing else.
        let g = random_game(&params(n), seed).unwrap();
        let id = |v: usize| gap * v as u64 + 3;
        let mut text = String::new();
        for v in g.vertices().rev() {
            let succ: Vec<String> = g.successors(v).iter().map(|&w| id(w).to_string()).collect();
            text.push_str(&format!("{} {} {} {};\n", id(v), g.color(v), g.owner(v).index(), succ.join(", ")));
        }
        let parsed = parse_game(&text).unwrap();
        prop_assert_eq!(parsed.game.successor_lists(), g.successor_lists());
        prop_assert_eq!(parsed.game.colors(), g.colors());
        prop_assert_eq!(parsed.game.label(0), id(0).to_string());
        // Normalized output is a fixpoint.
        let once = emit_game(&parsed.game);
        prop_assert_eq!(emit_game(&parse_game(&once).unwrap().game), once);
    }

    #[test]
    fn edge_format_round_trips(seed in any::<u64>(), n in 0usize..30) {
        let g = vertex_to_edge_colored(&random_game(&params(n), seed).unwrap());
        let text = emit_edge_game(&g);
        prop_assert_eq!(parse_edge_game(&text).unwrap().game, g);
    }
}

#[test]
fn pgsolver_header_example() {
    let g = parse_game("parity 1;\n0 2 0 1;\n1 1 1 0;").unwrap().game;
    assert_eq!(emit_game(&g), "parity 1;\n0 2 0 1;\n1 1 1 0;\n");
    let single = parse_game("0 2 0 ;").unwrap().game;
    assert_eq!(emit_game(&single), "parity 0;\n0 2 0;\n");
}
