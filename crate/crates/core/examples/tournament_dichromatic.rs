//! Solves the dichromatic number of the checkerboard tournaments T_1..T_k and
//! draws each optimal coloring on its board.
//!
//!     cargo run --release --example tournament_dichromatic -- 3

use checkerboard_digraphs::generators::{build_tournament, cell_of_vertex};
use checkerboard_digraphs::solvers::{dichromatic_number, verify_coloring, Constraint, Limits};

fn main() {
    let max_k: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for k in 1..=max_k {
        let g = build_tournament(k).expect("k >= 1");
        let r = dichromatic_number(&g, Limits::default());
        println!(
            "T_{k}: {} vertices, {} arcs -> {:?} value {} ({} nodes, {:?})",
            g.vertex_count(),
            g.arc_count(),
            r.status,
            r.value,
            r.nodes_explored,
            r.elapsed
        );
        let Some(coloring) = &r.certificate else { continue };
        assert!(verify_coloring(&g, coloring, Constraint::Acyclic).unwrap());
        let side = 2 * k - 1;
        let mut grid = vec![vec!['.'; side as usize]; side as usize];
        for (v, &c) in coloring.color_of().iter().enumerate() {
            let cell = cell_of_vertex(&g, v).unwrap();
            grid[cell.row as usize - 1][cell.col as usize - 1] = char::from(b'A' + c as u8);
        }
        for row in grid {
            println!("    {}", row.into_iter().collect::<String>());
        }
    }
}
