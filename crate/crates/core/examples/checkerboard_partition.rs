//! Builds the diagonal c-sparse partition of an n x n board, checks it, and
//! writes it as JSON and SVG.
//!
//!     cargo run --example checkerboard_partition -- 7 partition.svg

use checkerboard_digraphs::board::{optimal_c_sparse_partition, Board};
use checkerboard_digraphs::io::{partition_to_json, partition_to_svg};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    let svg_path = args.next();

    let p = optimal_c_sparse_partition(Board::square(n).expect("n >= 1")).expect("square board");
    println!("{n}x{n}: {} classes, all c-sparse: {}", p.len(), p.is_c_sparse());
    for (i, class) in p.classes().iter().enumerate() {
        let cells: Vec<String> = class.iter().map(|c| c.to_string()).collect();
        println!("  class {i} ({} cells): {}", class.len(), cells.join(" "));
    }
    println!("{}", partition_to_json(&p));
    if let Some(path) = svg_path {
        std::fs::write(&path, partition_to_svg(&p)).expect("write svg");
        println!("wrote {path}");
    }
}
