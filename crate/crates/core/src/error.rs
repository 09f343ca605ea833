use thiserror::Error;

use crate::board::Cell;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid board dimensions {n}x{m}: both must be at least 1")]
    InvalidBoard { n: u32, m: u32 },

    #[error("cell ({row},{col}) is outside the {n}x{m} board")]
    CellOutOfBounds { row: u32, col: u32, n: u32, m: u32 },

    #[error("operation requires a square board, got {n}x{m}")]
    NotSquare { n: u32, m: u32 },

    #[error("diagonal classes require an odd side length, got {0}")]
    EvenSide(u32),

    #[error("class index {k} out of range 0..={max}")]
    ClassIndexOutOfRange { k: u32, max: u32 },

    #[error("keep set for {0} is empty")]
    EmptyKeepSet(&'static str),

    #[error("keep {axis} index {index} is outside 1..={bound}")]
    KeepIndexOutOfRange { axis: &'static str, index: u32, bound: u32 },

    #[error("board {n}x{m} has {cells} cells; brute-force search is limited to {limit}")]
    BoardTooLarge { n: u32, m: u32, cells: u32, limit: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("vertex {vertex} out of range for a digraph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("arcs {0}->{1} and {1}->{0} both present; digraphs here are oriented")]
    Digon(usize, usize),

    #[error("invalid vertex labels: {0}")]
    InvalidLabels(String),

    #[error("digraph is not a tournament")]
    NotTournament,

    #[error("digraph carries no cell labels")]
    Unlabeled,

    #[error("cell {0:?} is not a vertex label of this digraph")]
    UnknownCell(Cell),

    #[error("cannot orient a pair consisting of the same cell {0:?}")]
    SameCell(Cell),

    #[error("parameter {name} must be at least 1, got {value}")]
    NonPositive { name: &'static str, value: i64 },

    #[error("coloring has {got} entries but the digraph has {expected} vertices")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("claimed lower bound {bound} is refuted: a feasible coloring with {} colors exists", bound - 1)]
    LowerBoundRefuted { bound: usize },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
