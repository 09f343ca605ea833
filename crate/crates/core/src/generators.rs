//! Digraphs built from checkerboards. Vertex `v` is the cell of rank `v` in
//! the cell order, so comparing vertex indices compares cells.
//!
//! Orientation rule shared by every construction: within a column arcs run
//! forward in the cell order, across columns they run backward.

use crate::board::{Board, Cell};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Returns the arc between `a` and `b` as `(tail, head)`.
pub fn orient_pair(a: Cell, b: Cell) -> Result<(Cell, Cell)> {
    if a == b {
        return Err(Error::SameCell(a));
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    Ok(if a.col == b.col { (lo, hi) } else { (hi, lo) })
}

fn from_board(board: Board, joined: impl Fn(Cell, Cell) -> bool) -> Digraph {
    let cells: Vec<Cell> = board.cells().collect();
    let mut g = Digraph::empty(cells.len());
    for (u, &a) in cells.iter().enumerate() {
        for (v, &b) in cells.iter().enumerate().skip(u + 1) {
            if !joined(a, b) {
                continue;
            }
            // u < v and cells are in order, so the rule reduces to the column test.
            let (tail, head) = if a.col == b.col { (u, v) } else { (v, u) };
            g.add_arc(tail, head).expect("fresh pair on distinct vertices");
        }
    }
    g.with_labels(cells).expect("board cells are distinct")
}

/// The tournament on the `(2k-1) x (2k-1)` board. Its dichromatic number is `k`.
pub fn build_tournament(k: u32) -> Result<Digraph> {
    if k < 1 {
        return Err(Error::NonPositive { name: "k", value: k as i64 });
    }
    Ok(build_tournament_from_board(Board::square(2 * k - 1)?))
}

/// The same orientation rule applied to every pair of cells of an arbitrary
/// board. No dichromatic-number claim is attached unless the board is the
/// odd square used by [`build_tournament`].
pub fn build_tournament_from_board(board: Board) -> Digraph {
    from_board(board, |_, _| true)
}

/// The oriented complete balanced `n`-partite graph with parts of size `m`:
/// each board row is a part, cells in different rows are joined.
pub fn build_npartite(n: u32, m: u32) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::NonPositive { name: "n", value: n as i64 });
    }
    if m < 1 {
        return Err(Error::NonPositive { name: "m", value: m as i64 });
    }
    Ok(from_board(Board::new(n, m)?, |a, b| a.row != b.row))
}

pub fn cell_of_vertex(g: &Digraph, v: usize) -> Result<Cell> {
    let labels = g.labels().ok_or(Error::Unlabeled)?;
    labels.get(v).copied().ok_or(Error::VertexOutOfRange { vertex: v, count: g.vertex_count() })
}

pub fn vertex_of_cell(g: &Digraph, c: Cell) -> Result<usize> {
    let labels = g.labels().ok_or(Error::Unlabeled)?;
    labels.iter().position(|&l| l == c).ok_or(Error::UnknownCell(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{find_directed_triangle, induced, is_acyclic, is_tournament, VertexSet};

    #[test]
    fn orientation_rule() {
        let c = Cell::new;
        assert_eq!(orient_pair(c(1, 1), c(3, 1)).unwrap(), (c(1, 1), c(3, 1)));
        assert_eq!(orient_pair(c(3, 1), c(1, 1)).unwrap(), (c(1, 1), c(3, 1)));
        assert_eq!(orient_pair(c(1, 1), c(2, 2)).unwrap(), (c(2, 2), c(1, 1)));
        assert_eq!(orient_pair(c(1, 1), c(1, 2)).unwrap(), (c(1, 2), c(1, 1)));
        assert!(matches!(orient_pair(c(2, 2), c(2, 2)), Err(Error::SameCell(_))));
    }

    #[test]
    fn generated_arcs_follow_orient_pair() {
        let g = build_tournament(3).unwrap();
        for (u, v) in g.arcs() {
            let (a, b) = (cell_of_vertex(&g, u).unwrap(), cell_of_vertex(&g, v).unwrap());
            assert_eq!(orient_pair(a, b).unwrap(), (a, b));
        }
    }

    #[test]
    fn tournament_sizes() {
        let t1 = build_tournament(1).unwrap();
        assert_eq!((t1.vertex_count(), t1.arc_count()), (1, 0));
        let t2 = build_tournament(2).unwrap();
        assert_eq!((t2.vertex_count(), t2.arc_count()), (9, 36));
        assert!(is_tournament(&t2));
        assert!(is_tournament(&build_tournament(3).unwrap()));
        assert!(build_tournament(0).is_err());
    }

    #[test]
    fn npartite_sizes() {
        let g = build_npartite(3, 2).unwrap();
        assert_eq!((g.vertex_count(), g.arc_count()), (6, 12));
        assert!(!is_tournament(&g));
        let single = build_npartite(1, 4).unwrap();
        assert_eq!((single.vertex_count(), single.arc_count()), (4, 0));
        for (n, m) in [(2u32, 3u32), (4, 2), (5, 3)] {
            let g = build_npartite(n, m).unwrap();
            let nm = (n * m) as usize;
            let expected = nm * (nm - 1) / 2 - n as usize * (m as usize * (m as usize - 1) / 2);
            assert_eq!(g.arc_count(), expected);
        }
        assert!(build_npartite(0, 2).is_err());
        assert!(build_npartite(2, 0).is_err());
    }

    #[test]
    fn npartite_triangle_witness() {
        let g = build_npartite(3, 2).unwrap();
        let c = Cell::new;
        let [a, b, d] = [c(1, 1), c(2, 2), c(3, 1)].map(|x| vertex_of_cell(&g, x).unwrap());
        // (1,1) -> (3,1) -> (2,2) -> (1,1)
        assert!(g.has_arc(a, d) && g.has_arc(d, b) && g.has_arc(b, a));
        let within = VertexSet::new(&g, [a, b, d]).unwrap();
        assert!(find_directed_triangle(&g, &within).is_some());
    }

    #[test]
    fn vertex_cell_bijection() {
        let g = build_tournament(2).unwrap();
        assert_eq!(cell_of_vertex(&g, 0).unwrap(), Cell::new(1, 1));
        assert_eq!(cell_of_vertex(&g, 8).unwrap(), Cell::new(3, 3));
        for v in 0..g.vertex_count() {
            assert_eq!(vertex_of_cell(&g, cell_of_vertex(&g, v).unwrap()).unwrap(), v);
        }
        assert!(matches!(cell_of_vertex(&Digraph::empty(2), 0), Err(Error::Unlabeled)));
        assert!(matches!(vertex_of_cell(&g, Cell::new(4, 1)), Err(Error::UnknownCell(_))));
    }

    #[test]
    fn single_rows_and_columns_are_acyclic() {
        let g = build_tournament(3).unwrap();
        for line in 1..=5 {
            let col = VertexSet::new(&g, (0..25).filter(|&v| cell_of_vertex(&g, v).unwrap().col == line)).unwrap();
            let row = VertexSet::new(&g, (0..25).filter(|&v| cell_of_vertex(&g, v).unwrap().row == line)).unwrap();
            assert!(is_acyclic(&induced(&g, &col)));
            assert!(is_acyclic(&induced(&g, &row)));
        }
        let t2 = build_tournament(2).unwrap();
        let col1 = induced(&t2, &VertexSet::new(&t2, [0, 3, 6]).unwrap());
        assert_eq!(col1.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }
}
