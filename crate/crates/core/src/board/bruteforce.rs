//! Exhaustive searches over small boards. These back the extremal-size and
//! minimum-partition claims and refuse boards above [`BRUTEFORCE_CELL_LIMIT`].

use super::{c_sparse_sorted, weak_c_sparse_sorted, Board, Cell, CellPartition, CellSet};
use crate::error::{Error, Result};

pub const BRUTEFORCE_CELL_LIMIT: u32 = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SparsityMode {
    CSparse,
    WeakCSparse,
}

impl SparsityMode {
    pub fn holds(self, sorted: &[Cell]) -> bool {
        match self {
            SparsityMode::CSparse => c_sparse_sorted(sorted),
            SparsityMode::WeakCSparse => weak_c_sparse_sorted(sorted),
        }
    }
}

fn guard(board: Board) -> Result<()> {
    let cells = board.rows() * board.cols();
    if cells > BRUTEFORCE_CELL_LIMIT {
        return Err(Error::BoardTooLarge {
            n: board.rows(),
            m: board.cols(),
            cells,
            limit: BRUTEFORCE_CELL_LIMIT,
        });
    }
    Ok(())
}

/// Largest cell set satisfying `mode`, with a witness.
///
/// Cells are decided in cell order (include before exclude). Both predicates
/// are closed under taking subsets, so a violating partial set is pruned
/// together with all its extensions.
pub fn max_sparse_bruteforce(board: Board, mode: SparsityMode) -> Result<(usize, CellSet)> {
    guard(board)?;
    let cells: Vec<Cell> = board.cells().collect();
    let mut search = MaxSearch { cells: &cells, mode, chosen: Vec::new(), best: Vec::new() };
    search.run(0);
    let size = search.best.len();
    Ok((size, CellSet::new(board, search.best)?))
}

struct MaxSearch<'a> {
    cells: &'a [Cell],
    mode: SparsityMode,
    chosen: Vec<Cell>,
    best: Vec<Cell>,
}

impl MaxSearch<'_> {
    fn run(&mut self, idx: usize) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if idx == self.cells.len() || self.chosen.len() + (self.cells.len() - idx) <= self.best.len() {
            return;
        }
        self.chosen.push(self.cells[idx]);
        if self.mode.holds(&self.chosen) {
            self.run(idx + 1);
        }
        self.chosen.pop();
        self.run(idx + 1);
    }
}

/// Minimum number of c-sparse classes covering the board, with a witness.
///
/// Iterative deepening on the class count. Cells are placed in cell order, so
/// each placement appends the largest cell of its class and c-sparseness can
/// be maintained in O(1): the new cell breaks its class iff the class already
/// holds a cell in the same column that is not the class's latest cell.
pub fn min_c_sparse_partition_bruteforce(board: Board) -> Result<(usize, CellPartition)> {
    guard(board)?;
    let total = board.cell_count();
    for t in 1..=total {
        let mut search = PartitionSearch::new(board, t);
        if search.run(0, 0) {
            let partition = CellPartition::from_assignment(board, &search.class_of)?;
            return Ok((t, partition));
        }
    }
    unreachable!("singleton classes always form a c-sparse partition")
}

struct PartitionSearch {
    board: Board,
    classes: usize,
    class_of: Vec<usize>,
    len: Vec<usize>,
    // Per class, per column: sequence number (within the class) of the
    // latest cell placed in that column.
    last_in_col: Vec<Vec<Option<usize>>>,
}

impl PartitionSearch {
    fn new(board: Board, classes: usize) -> Self {
        PartitionSearch {
            board,
            classes,
            class_of: vec![usize::MAX; board.cell_count()],
            len: vec![0; classes],
            last_in_col: vec![vec![None; board.cols() as usize + 1]; classes],
        }
    }

    fn run(&mut self, rank: usize, used: usize) -> bool {
        if rank == self.class_of.len() {
            return true;
        }
        let col = self.board.cell_at(rank).col as usize;
        let open_limit = (used + 1).min(self.classes);
        for c in 0..open_limit {
            let len = self.len[c];
            if matches!(self.last_in_col[c][col], Some(p) if p + 1 != len) {
                continue;
            }
            let saved = self.last_in_col[c][col].replace(len);
            self.len[c] += 1;
            self.class_of[rank] = c;
            if self.run(rank + 1, used.max(c + 1)) {
                return true;
            }
            self.len[c] -= 1;
            self.last_in_col[c][col] = saved;
        }
        false
    }
}
