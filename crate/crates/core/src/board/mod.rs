//! Checkerboard cells, the row-major cell order, and the sparsity predicates
//! on cell sets.
//!
//! Indices are 1-based throughout: a cell `(i, j)` has `1 <= i <= n` and
//! `1 <= j <= m` on an `n x m` board.

mod bruteforce;

pub use bruteforce::{
    max_sparse_bruteforce, min_c_sparse_partition_bruteforce, SparsityMode, BRUTEFORCE_CELL_LIMIT,
};

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// A checkerboard cell. The derived ordering is the row-major total order:
/// `(i1, j1) < (i2, j2)` iff `i1 < i2`, or `i1 == i2` and `j1 < j2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    /// Panics if either coordinate is zero.
    pub fn new(row: u32, col: u32) -> Cell {
        assert!(row >= 1 && col >= 1, "cells are 1-based, got ({row},{col})");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

pub fn cell_cmp(a: Cell, b: Cell) -> Ordering {
    a.cmp(&b)
}

/// An `n x m` checkerboard (n rows, m columns).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Board {
    n: u32,
    m: u32,
}

impl Board {
    pub fn new(n: u32, m: u32) -> Result<Board> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidBoard { n, m });
        }
        Ok(Board { n, m })
    }

    pub fn square(n: u32) -> Result<Board> {
        Board::new(n, n)
    }

    pub fn rows(&self) -> u32 {
        self.n
    }

    pub fn cols(&self) -> u32 {
        self.m
    }

    pub fn cell_count(&self) -> usize {
        self.n as usize * self.m as usize
    }

    pub fn is_square(&self) -> bool {
        self.n == self.m
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.n).contains(&cell.row) && (1..=self.m).contains(&cell.col)
    }

    /// All cells in increasing cell order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let m = self.m;
        (1..=self.n).flat_map(move |i| (1..=m).map(move |j| Cell { row: i, col: j }))
    }

    /// Zero-based position of `cell` in the cell order.
    pub fn rank(&self, cell: Cell) -> usize {
        debug_assert!(self.contains(cell));
        (cell.row as usize - 1) * self.m as usize + (cell.col as usize - 1)
    }

    pub fn cell_at(&self, rank: usize) -> Cell {
        debug_assert!(rank < self.cell_count());
        let m = self.m as usize;
        Cell { row: (rank / m) as u32 + 1, col: (rank % m) as u32 + 1 }
    }

    fn check(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutOfBounds { row: cell.row, col: cell.col, n: self.n, m: self.m })
        }
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.n, self.m)
    }
}

/// A set of cells on a fixed board, kept sorted in cell order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSet {
    board: Board,
    cells: BTreeSet<Cell>,
}

impl CellSet {
    /// Builds a set from cells; duplicates collapse, out-of-bounds cells are rejected.
    pub fn new(board: Board, cells: impl IntoIterator<Item = Cell>) -> Result<CellSet> {
        let mut set = BTreeSet::new();
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return Err(Error::CellOutOfBounds { row: c.row, col: c.col, n: board.n, m: board.m });
            }
            board.check(c)?;
            set.insert(c);
        }
        Ok(CellSet { board, cells: set })
    }

    pub fn empty(board: Board) -> CellSet {
        CellSet { board, cells: BTreeSet::new() }
    }

    pub fn full(board: Board) -> CellSet {
        CellSet { board, cells: board.cells().collect() }
    }

    pub fn board(&self) -> Board {
        self.board
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Cells in increasing cell order.
    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.board == other.board && self.cells.is_subset(&other.cells)
    }

    pub fn is_disjoint(&self, other: &CellSet) -> bool {
        self.cells.is_disjoint(&other.cells)
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        debug_assert_eq!(self.board, other.board);
        CellSet { board: self.board, cells: self.cells.union(&other.cells).copied().collect() }
    }

    pub fn is_c_sparse(&self) -> bool {
        let cells: Vec<Cell> = self.iter().collect();
        c_sparse_sorted(&cells)
    }

    pub fn is_weak_c_sparse(&self) -> bool {
        let cells: Vec<Cell> = self.iter().collect();
        weak_c_sparse_sorted(&cells)
    }
}

/// True iff no cell of `s` lies strictly between two same-column cells of `s`
/// (in cell order) while sitting in a different column.
pub fn is_c_sparse(s: &CellSet) -> bool {
    s.is_c_sparse()
}

/// True iff no cell of `s` has its row strictly between the rows of two
/// same-column cells of `s` while sitting in a different column.
pub fn is_weak_c_sparse(s: &CellSet) -> bool {
    s.is_weak_c_sparse()
}

/// `cells` must be sorted in cell order. Only consecutive same-column pairs
/// need checking: any witness between a wider pair also separates some
/// consecutive pair, and a consecutive pair is violated exactly when the two
/// cells are not adjacent in the sorted sequence.
pub(crate) fn c_sparse_sorted(cells: &[Cell]) -> bool {
    let mut last_in_col: HashMap<u32, usize> = HashMap::new();
    for (pos, c) in cells.iter().enumerate() {
        if let Some(prev) = last_in_col.insert(c.col, pos) {
            if pos > prev + 1 {
                return false;
            }
        }
    }
    true
}

/// A column's cells bracket exactly the rows strictly between its minimum and
/// maximum row, so the widest pair per column decides the predicate.
pub(crate) fn weak_c_sparse_sorted(cells: &[Cell]) -> bool {
    let mut span: HashMap<u32, (u32, u32)> = HashMap::new();
    for c in cells {
        span.entry(c.col)
            .and_modify(|(lo, hi)| {
                *lo = (*lo).min(c.row);
                *hi = (*hi).max(c.row);
            })
            .or_insert((c.row, c.row));
    }
    for c in cells {
        for (&col, &(lo, hi)) in &span {
            if col != c.col && lo < c.row && c.row < hi {
                return false;
            }
        }
    }
    true
}

/// Cells `(x, y)` with `x - y == i`. Empty once `|i| >= n`.
pub fn diagonal_set(board: Board, i: i64) -> Result<CellSet> {
    if !board.is_square() {
        return Err(Error::NotSquare { n: board.n, m: board.m });
    }
    let n = board.n as i64;
    let cells = (1..=n).filter_map(|x| {
        let y = x - i;
        (1..=n).contains(&y).then_some(Cell { row: x as u32, col: y as u32 })
    });
    CellSet::new(board, cells)
}

/// The diagonal class `D(2k) ∪ D(2k+1) ∪ D(2k-n) ∪ D(2k-n-1)` of an odd square board.
pub fn s2k_set(board: Board, k: u32) -> Result<CellSet> {
    if !board.is_square() {
        return Err(Error::NotSquare { n: board.n, m: board.m });
    }
    let n = board.n;
    if n.is_multiple_of(2) {
        return Err(Error::EvenSide(n));
    }
    let max = (n - 1) / 2;
    if k > max {
        return Err(Error::ClassIndexOutOfRange { k, max });
    }
    let (k, n) = (k as i64, n as i64);
    let mut set = CellSet::empty(board);
    for i in [2 * k, 2 * k + 1, 2 * k - n, 2 * k - n - 1] {
        set = set.union(&diagonal_set(board, i)?);
    }
    Ok(set)
}

/// Keeps only the given rows and columns and re-indexes the survivors by
/// rank within the keep sets. The order induced on the sub-board matches the
/// original order, so c-sparse sets stay c-sparse.
pub fn restrict(s: &CellSet, keep_rows: &BTreeSet<u32>, keep_cols: &BTreeSet<u32>) -> Result<CellSet> {
    let board = s.board();
    if keep_rows.is_empty() {
        return Err(Error::EmptyKeepSet("rows"));
    }
    if keep_cols.is_empty() {
        return Err(Error::EmptyKeepSet("columns"));
    }
    for &r in keep_rows {
        if r == 0 || r > board.n {
            return Err(Error::KeepIndexOutOfRange { axis: "row", index: r, bound: board.n });
        }
    }
    for &c in keep_cols {
        if c == 0 || c > board.m {
            return Err(Error::KeepIndexOutOfRange { axis: "column", index: c, bound: board.m });
        }
    }
    let row_rank: HashMap<u32, u32> = keep_rows.iter().zip(1..).map(|(&r, i)| (r, i)).collect();
    let col_rank: HashMap<u32, u32> = keep_cols.iter().zip(1..).map(|(&c, i)| (c, i)).collect();
    let sub = Board::new(keep_rows.len() as u32, keep_cols.len() as u32)?;
    let cells = s.iter().filter_map(|c| {
        Some(Cell { row: *row_rank.get(&c.row)?, col: *col_rank.get(&c.col)? })
    });
    CellSet::new(sub, cells)
}

/// A partition of a board's cells into non-empty, pairwise disjoint classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPartition {
    board: Board,
    classes: Vec<CellSet>,
}

impl CellPartition {
    pub fn new(board: Board, classes: Vec<CellSet>) -> Result<CellPartition> {
        let mut seen = BTreeSet::new();
        for (idx, class) in classes.iter().enumerate() {
            if class.board() != board {
                return Err(Error::InvalidPartition(format!(
                    "class {idx} lives on board {}, expected {board}",
                    class.board()
                )));
            }
            if class.is_empty() {
                return Err(Error::InvalidPartition(format!("class {idx} is empty")));
            }
            for c in class.iter() {
                if !seen.insert(c) {
                    return Err(Error::InvalidPartition(format!("cell {c} appears in more than one class")));
                }
            }
        }
        if seen.len() != board.cell_count() {
            return Err(Error::InvalidPartition(format!(
                "classes cover {} of {} cells",
                seen.len(),
                board.cell_count()
            )));
        }
        Ok(CellPartition { board, classes })
    }

    /// Builds a partition from a class index per cell (indexed by cell rank).
    pub fn from_assignment(board: Board, class_of: &[usize]) -> Result<CellPartition> {
        if class_of.len() != board.cell_count() {
            return Err(Error::InvalidPartition(format!(
                "assignment has {} entries for {} cells",
                class_of.len(),
                board.cell_count()
            )));
        }
        let count = class_of.iter().max().map_or(0, |&c| c + 1);
        let mut buckets = vec![Vec::new(); count];
        for (rank, &c) in class_of.iter().enumerate() {
            buckets[c].push(board.cell_at(rank));
        }
        let classes = buckets
            .into_iter()
            .map(|cells| CellSet::new(board, cells))
            .collect::<Result<Vec<_>>>()?;
        CellPartition::new(board, classes)
    }

    pub fn board(&self) -> Board {
        self.board
    }

    pub fn classes(&self) -> &[CellSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, cell: Cell) -> Option<usize> {
        self.classes.iter().position(|s| s.contains(cell))
    }

    pub fn is_c_sparse(&self) -> bool {
        self.classes.iter().all(CellSet::is_c_sparse)
    }
}

/// The diagonal construction for odd `n`; for even `n` the odd construction
/// on `(n+1) x (n+1)` with its last row and column deleted. Produces
/// `floor(n/2) + 1` c-sparse classes.
pub fn optimal_c_sparse_partition(board: Board) -> Result<CellPartition> {
    if !board.is_square() {
        return Err(Error::NotSquare { n: board.n, m: board.m });
    }
    let n = board.n;
    if !n.is_multiple_of(2) {
        let classes = (0..=(n - 1) / 2)
            .map(|k| s2k_set(board, k))
            .collect::<Result<Vec<_>>>()?;
        return CellPartition::new(board, classes);
    }
    let bigger = optimal_c_sparse_partition(Board::square(n + 1)?)?;
    let keep: BTreeSet<u32> = (1..=n).collect();
    let mut classes = Vec::with_capacity(bigger.len());
    for class in bigger.classes() {
        let r = restrict(class, &keep, &keep)?;
        if !r.is_empty() {
            classes.push(r);
        }
    }
    CellPartition::new(board, classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(board: Board, cells: &[(u32, u32)]) -> CellSet {
        CellSet::new(board, cells.iter().map(|&(r, c)| Cell::new(r, c))).unwrap()
    }

    fn b(n: u32, m: u32) -> Board {
        Board::new(n, m).unwrap()
    }

    #[test]
    fn cell_order() {
        assert_eq!(cell_cmp(Cell::new(1, 3), Cell::new(2, 1)), Ordering::Less);
        assert_eq!(cell_cmp(Cell::new(2, 2), Cell::new(2, 2)), Ordering::Equal);
        assert_eq!(cell_cmp(Cell::new(2, 5), Cell::new(2, 3)), Ordering::Greater);
    }

    #[test]
    fn board_rejects_zero_dims() {
        assert!(matches!(Board::new(0, 3), Err(Error::InvalidBoard { .. })));
        assert!(Board::new(3, 0).is_err());
    }

    #[test]
    fn rank_round_trips() {
        let board = b(3, 4);
        for (r, c) in board.cells().enumerate() {
            assert_eq!(board.rank(c), r);
            assert_eq!(board.cell_at(r), c);
        }
    }

    #[test]
    fn cellset_rejects_out_of_bounds() {
        assert!(CellSet::new(b(2, 2), [Cell::new(3, 1)]).is_err());
        assert!(CellSet::new(b(2, 2), [Cell { row: 0, col: 1 }]).is_err());
    }

    #[test]
    fn c_sparse_examples() {
        assert!(!set(b(2, 2), &[(1, 1), (1, 2), (2, 1)]).is_c_sparse());
        assert!(CellSet::full(b(5, 1)).is_c_sparse());
        assert!(CellSet::empty(b(3, 3)).is_c_sparse());
        assert!(set(b(3, 3), &[(2, 2)]).is_c_sparse());
    }

    #[test]
    fn weak_c_sparse_examples() {
        assert!(set(b(2, 2), &[(1, 1), (1, 2), (2, 1)]).is_weak_c_sparse());
        assert!(!set(b(3, 2), &[(1, 1), (2, 2), (3, 1)]).is_weak_c_sparse());
        // (2,2) sits between non-consecutive rows 1 and 3 of column 1, while
        // column 1 also has a cell in row 2.
        assert!(!set(b(3, 2), &[(1, 1), (2, 1), (2, 2), (3, 1)]).is_weak_c_sparse());
    }

    #[test]
    fn diagonals() {
        let board = b(3, 3);
        assert_eq!(diagonal_set(board, 0).unwrap(), set(board, &[(1, 1), (2, 2), (3, 3)]));
        assert_eq!(diagonal_set(board, 2).unwrap(), set(board, &[(3, 1)]));
        assert!(diagonal_set(board, 5).unwrap().is_empty());
        assert!(diagonal_set(board, -5).unwrap().is_empty());
        assert!(diagonal_set(b(3, 2), 0).is_err());
    }

    #[test]
    fn s2k_examples() {
        let board = b(7, 7);
        let s0 = s2k_set(board, 0).unwrap();
        assert_eq!(s0.len(), 13);
        assert_eq!(s0, diagonal_set(board, 0).unwrap().union(&diagonal_set(board, 1).unwrap()));
        let s6 = s2k_set(board, 3).unwrap();
        let expected = [6, -1, -2]
            .iter()
            .fold(CellSet::empty(board), |acc, &i| acc.union(&diagonal_set(board, i).unwrap()));
        assert_eq!(s6, expected);
        assert_eq!(s6.len(), 12);
        for k in 0..=3 {
            assert!(s2k_set(board, k).unwrap().is_c_sparse());
        }
        assert!(matches!(s2k_set(b(6, 6), 0), Err(Error::EvenSide(6))));
        assert!(matches!(s2k_set(board, 4), Err(Error::ClassIndexOutOfRange { .. })));
    }

    #[test]
    fn optimal_partition_counts() {
        assert_eq!(optimal_c_sparse_partition(b(7, 7)).unwrap().len(), 4);
        let one = optimal_c_sparse_partition(b(1, 1)).unwrap();
        assert_eq!(one.classes(), &[set(b(1, 1), &[(1, 1)])]);
        assert_eq!(optimal_c_sparse_partition(b(4, 4)).unwrap().len(), 3);
        assert!(optimal_c_sparse_partition(b(4, 3)).is_err());
    }

    #[test]
    fn restrict_reindexes() {
        let board = b(3, 3);
        let col1 = set(board, &[(1, 1), (2, 1), (3, 1)]);
        let rows: BTreeSet<u32> = [1, 3].into();
        let cols: BTreeSet<u32> = [1, 2].into();
        let r = restrict(&col1, &rows, &cols).unwrap();
        assert_eq!(r, set(b(2, 2), &[(1, 1), (2, 1)]));
        assert!(restrict(&CellSet::empty(board), &rows, &cols).unwrap().is_empty());
        assert!(matches!(restrict(&col1, &BTreeSet::new(), &cols), Err(Error::EmptyKeepSet(_))));
        let bad: BTreeSet<u32> = [4].into();
        assert!(restrict(&col1, &bad, &cols).is_err());
    }

    #[test]
    fn partition_validation() {
        let board = b(2, 1);
        let a = set(board, &[(1, 1)]);
        let both = set(board, &[(1, 1), (2, 1)]);
        assert!(CellPartition::new(board, vec![a.clone()]).is_err());
        assert!(CellPartition::new(board, vec![a.clone(), both.clone()]).is_err());
        assert!(CellPartition::new(board, vec![both.clone(), CellSet::empty(board)]).is_err());
        assert!(CellPartition::new(board, vec![both]).is_ok());
    }
}
