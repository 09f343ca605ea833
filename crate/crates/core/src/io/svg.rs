use std::fmt::Write as _;

use crate::board::CellPartition;

pub const CELL_PX: u32 = 32;

/// Fill colors, indexed by class index mod 8.
pub const PALETTE: [&str; 8] =
    ["#e6194b", "#3cb44b", "#4363d8", "#ffe119", "#f58231", "#911eb4", "#42d4f4", "#f032e6"];

/// One square per cell, row 1 at the top and column 1 at the left. The output
/// depends only on the partition.
pub fn partition_to_svg(p: &CellPartition) -> String {
    let board = p.board();
    let (w, h) = (board.cols() * CELL_PX, board.rows() * CELL_PX);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    for cell in board.cells() {
        let class = p.class_of(cell).expect("partition covers the board");
        let x = (cell.col - 1) * CELL_PX;
        let y = (cell.row - 1) * CELL_PX;
        let _ = writeln!(
            out,
            r##"  <rect x="{x}" y="{y}" width="{CELL_PX}" height="{CELL_PX}" fill="{}" stroke="#000000" stroke-width="1"/>"##,
            PALETTE[class % PALETTE.len()]
        );
    }
    out.push_str("</svg>\n");
    out
}
