//! Runs every claim suite at default scale and prints the pass/fail table.
//!
//!     cargo run --release --example verify_claims

use checkerboard_digraphs::harness::{render_table, run_suite, Suite, VerifyConfig};

fn main() {
    let claims = run_suite(Suite::All, &VerifyConfig::default());
    print!("{}", render_table(&claims));
    if claims.iter().any(|c| !c.passed) {
        std::process::exit(1);
    }
}
