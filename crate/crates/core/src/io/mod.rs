//! File formats: partition and digraph JSON, solve reports, DOT, and SVG.

mod dot;
mod json;
mod svg;

pub use dot::digraph_to_dot;
pub use json::{
    cellset_from_json, cellset_to_json, digraph_from_json, digraph_to_json, partition_from_json,
    partition_to_json, SolveReport,
};
pub use svg::{partition_to_svg, CELL_PX, PALETTE};
