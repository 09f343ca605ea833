use std::collections::BTreeSet;

use checkerboard_digraphs::board::{
    is_c_sparse, is_weak_c_sparse, max_sparse_bruteforce, min_c_sparse_partition_bruteforce,
    optimal_c_sparse_partition, restrict, s2k_set, Board, Cell, CellSet, SparsityMode,
};
use proptest::prelude::*;

// Direct transcriptions of the definitions: every triple of cells.
fn c_sparse_by_definition(cells: &[Cell]) -> bool {
    for a1 in cells {
        for a2 in cells {
            if a1.col != a2.col || a1 >= a2 {
                continue;
            }
            for x in cells {
                if x.col != a1.col && a1 < x && x < a2 {
                    return false;
                }
            }
        }
    }
    true
}

fn weak_c_sparse_by_definition(cells: &[Cell]) -> bool {
    for a1 in cells {
        for a2 in cells {
            if a1.col != a2.col || a1.row >= a2.row {
                continue;
            }
            for x in cells {
                if x.col != a1.col && a1.row < x.row && x.row < a2.row && a1 < x && x < a2 {
                    return false;
                }
            }
        }
    }
    true
}

fn cell_set() -> impl Strategy<Value = CellSet> {
    (1u32..=7, 1u32..=7).prop_flat_map(|(n, m)| {
        proptest::collection::vec(any::<bool>(), (n * m) as usize).prop_map(move |bits| {
            let board = Board::new(n, m).unwrap();
            CellSet::new(board, board.cells().zip(bits).filter(|(_, b)| *b).map(|(c, _)| c)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn predicates_match_definitions(s in cell_set()) {
        let cells: Vec<Cell> = s.iter().collect();
        prop_assert_eq!(is_c_sparse(&s), c_sparse_by_definition(&cells));
        prop_assert_eq!(is_weak_c_sparse(&s), weak_c_sparse_by_definition(&cells));
        prop_assert!(!is_c_sparse(&s) || is_weak_c_sparse(&s));
    }

    #[test]
    fn predicates_are_antitone(s in cell_set(), drop in proptest::collection::vec(any::<bool>(), 49)) {
        let sub = CellSet::new(s.board(), s.iter().zip(drop).filter(|(_, d)| !d).map(|(c, _)| c)).unwrap();
        prop_assert!(!is_c_sparse(&s) || is_c_sparse(&sub));
        prop_assert!(!is_weak_c_sparse(&s) || is_weak_c_sparse(&sub));
    }

    #[test]
    fn restriction_keeps_c_sparse(
        s in cell_set(),
        rows in proptest::collection::btree_set(1u32..=7, 1..=7),
        cols in proptest::collection::btree_set(1u32..=7, 1..=7),
    ) {
        let rows: BTreeSet<u32> = rows.into_iter().filter(|&r| r <= s.board().rows()).collect();
        let cols: BTreeSet<u32> = cols.into_iter().filter(|&c| c <= s.board().cols()).collect();
        prop_assume!(!rows.is_empty() && !cols.is_empty());
        let r = restrict(&s, &rows, &cols).unwrap();
        prop_assert_eq!(r.board(), Board::new(rows.len() as u32, cols.len() as u32).unwrap());
        prop_assert_eq!(r.len(), s.iter().filter(|c| rows.contains(&c.row) && cols.contains(&c.col)).count());
        if is_c_sparse(&s) {
            prop_assert!(is_c_sparse(&r));
        }
    }
}

#[test]
fn diagonal_classes_cover_odd_boards() {
    for n in (1..=15u32).step_by(2) {
        let board = Board::square(n).unwrap();
        let mut seen = BTreeSet::new();
        for k in 0..=(n - 1) / 2 {
            let s = s2k_set(board, k).unwrap();
            let cells: Vec<Cell> = s.iter().collect();
            assert!(c_sparse_by_definition(&cells), "n={n} k={k}");
            for c in cells {
                assert!(seen.insert(c), "cell {c} in two classes");
            }
        }
        assert_eq!(seen.len(), board.cell_count());
    }
}

#[test]
fn constructed_partition_sizes() {
    for n in 1..=15u32 {
        let p = optimal_c_sparse_partition(Board::square(n).unwrap()).unwrap();
        assert_eq!(p.len(), (n / 2 + 1) as usize, "n={n}");
        for class in p.classes() {
            let cells: Vec<Cell> = class.iter().collect();
            assert!(c_sparse_by_definition(&cells));
        }
    }
}

#[test]
fn size_bounds_and_tightness() {
    for n in 1..=16u32 {
        for m in 1..=16 / n {
            let board = Board::new(n, m).unwrap();
            let (c, cw) = max_sparse_bruteforce(board, SparsityMode::CSparse).unwrap();
            let (w, ww) = max_sparse_bruteforce(board, SparsityMode::WeakCSparse).unwrap();
            assert!(c <= (n + m - 1) as usize, "{board}: {c}");
            if n == m {
                assert!(c <= (2 * n - 1) as usize);
            }
            assert!(w <= (n + 2 * m - 2) as usize, "{board}: {w}");
            assert!(c <= w);
            assert!(c_sparse_by_definition(&cw.iter().collect::<Vec<_>>()));
            assert!(weak_c_sparse_by_definition(&ww.iter().collect::<Vec<_>>()));
            if m == 1 && n <= 5 {
                assert_eq!((c, w), (n as usize, n as usize));
            }
        }
    }
}

#[test]
fn sigma_formula_small_boards() {
    for n in 1..=5u32 {
        let (sigma, witness) = min_c_sparse_partition_bruteforce(Board::square(n).unwrap()).unwrap();
        assert_eq!(sigma, (n / 2 + 1) as usize, "n={n}");
        assert_eq!(witness.len(), sigma);
        assert!(witness.is_c_sparse());
    }
}
