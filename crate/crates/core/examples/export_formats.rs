//! Writes T_2 as JSON and DOT, reads the JSON back, and solves it, printing
//! the solve report.
//!
//!     cargo run --example export_formats

use checkerboard_digraphs::generators::build_tournament;
use checkerboard_digraphs::io::{digraph_from_json, digraph_to_dot, digraph_to_json, SolveReport};
use checkerboard_digraphs::solvers::{dichromatic_number, Limits};

fn main() {
    let g = build_tournament(2).unwrap();
    let json = digraph_to_json(&g);
    println!("{json}\n");
    print!("{}", digraph_to_dot(&g));
    let parsed = digraph_from_json(&json).unwrap();
    assert_eq!(parsed, g);
    let report = SolveReport::from(&dichromatic_number(&parsed, Limits::default()));
    println!("\n{}", report.to_json());
}
