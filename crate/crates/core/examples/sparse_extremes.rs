//! Exhaustive maxima of c-sparse and weak-c-sparse sets next to their upper
//! bounds n+m-1 and n+2m-2, plus the brute-force minimum partition size.
//!
//!     cargo run --release --example sparse_extremes

use checkerboard_digraphs::board::{max_sparse_bruteforce, min_c_sparse_partition_bruteforce, Board, SparsityMode};

fn main() {
    println!("{:>6} {:>8} {:>6} {:>8} {:>6}", "board", "c-max", "n+m-1", "weak-max", "n+2m-2");
    for n in 1..=5u32 {
        for m in 1..=5u32 {
            if n * m > 16 {
                continue;
            }
            let b = Board::new(n, m).unwrap();
            let (c, _) = max_sparse_bruteforce(b, SparsityMode::CSparse).unwrap();
            let (w, _) = max_sparse_bruteforce(b, SparsityMode::WeakCSparse).unwrap();
            println!("{:>6} {c:>8} {:>6} {w:>8} {:>6}", b.to_string(), n + m - 1, n + 2 * m - 2);
        }
    }
    for n in 1..=5 {
        let (sigma, witness) = min_c_sparse_partition_bruteforce(Board::square(n).unwrap()).unwrap();
        println!("sigma({n}x{n}) = {sigma}, witness classes: {}", witness.len());
    }
}
