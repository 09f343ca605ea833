//! Exact triangle-free chromatic numbers of the oriented n-partite graphs
//! against the nm/(n+2m-2) lower bound. Pass `--stretch` to add the 8 x 4 case.
//!
//!     cargo run --release --example npartite_bound -- --stretch

use std::time::Duration;

use checkerboard_digraphs::generators::build_npartite;
use checkerboard_digraphs::solvers::{dichromatic_number, npartite_lower_bound, triangle_free_chromatic, Limits};

fn main() {
    let stretch = std::env::args().any(|a| a == "--stretch");
    let mut cases: Vec<(u32, u32)> = (1..=6).flat_map(|n| (1..=3).map(move |m| (n, m))).collect();
    if stretch {
        cases.push((8, 4));
    }
    println!("{:>3} {:>3} {:>10} {:>6} {:>14} {:>12}", "n", "m", "bound", "ceil", "triangle-free", "dichromatic");
    for (n, m) in cases {
        let g = build_npartite(n, m).unwrap();
        let bound = npartite_lower_bound(n as i64, m as i64).unwrap();
        let limits = Limits { max_time: Duration::from_secs(600), ..Limits::default() };
        let tf = triangle_free_chromatic(&g, limits);
        let chi = dichromatic_number(&g, Limits::default());
        println!(
            "{n:>3} {m:>3} {:>10} {:>6} {:>14} {:>12}",
            format!("{}/{}", bound.numer(), bound.denom()),
            bound.ceil().to_integer(),
            format!("{} {:?}", tf.value, tf.status),
            format!("{} {:?}", chi.value, chi.status),
        );
    }
}
