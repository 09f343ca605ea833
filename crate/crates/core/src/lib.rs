//! Tournaments and oriented complete n-partite graphs built from checkerboards,
//! the c-sparse partition machinery behind their coloring bounds, and exact
//! solvers that certify dichromatic and triangle-free chromatic numbers.
//!
//! ```
//! use checkerboard_digraphs::{generators, solvers};
//!
//! let t2 = generators::build_tournament(2).unwrap();
//! let result = solvers::dichromatic_number(&t2, solvers::Limits::default());
//! assert_eq!(result.value, 2);
//! ```

pub mod board;
pub mod digraph;
pub mod error;
pub mod generators;
pub mod harness;
pub mod io;
pub mod solvers;

pub use board::{Board, Cell, CellPartition, CellSet};
pub use digraph::{Digraph, VertexSet};
pub use error::{Error, Result};
pub use solvers::{Coloring, Constraint, Limits, SolveResult, Status};
