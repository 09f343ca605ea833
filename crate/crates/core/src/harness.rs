//! Runs the finite claims about sparse partitions and the generated digraphs
//! on concrete instances and reports one pass/fail line per claim.
//!
//! Randomized claims draw from a ChaCha stream seeded by
//! [`VerifyConfig::seed`], so reruns are identical.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::board::{
    max_sparse_bruteforce, min_c_sparse_partition_bruteforce, optimal_c_sparse_partition, restrict, s2k_set,
    Board, Cell, CellSet, SparsityMode,
};
use crate::digraph::{find_directed_triangle, induced, is_acyclic, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::generators::{build_npartite, build_tournament};
use crate::solvers::{
    dichromatic_number, npartite_lower_bound, solve, triangle_free_chromatic, verify_coloring, Constraint, Limits,
    Status,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Order,
    Bounds,
    Diagonals,
    Sigma,
    Tk,
    Equivalence,
    Npartite,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] =
        [Suite::Order, Suite::Bounds, Suite::Diagonals, Suite::Sigma, Suite::Tk, Suite::Equivalence, Suite::Npartite];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "order" => Suite::Order,
            "bounds" => Suite::Bounds,
            "diagonals" => Suite::Diagonals,
            "sigma" => Suite::Sigma,
            "tk" => Suite::Tk,
            "equivalence" => Suite::Equivalence,
            "npartite" => Suite::Npartite,
            "all" => Suite::All,
            other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest board side for the brute-force minimum partition.
    pub max_n: u32,
    /// Largest tournament index solved exactly.
    pub max_k: u32,
    /// A single n-partite case instead of the default grid `n <= 6, m <= 3`.
    pub npartite: Option<(u32, u32)>,
    /// Adds the `(8, 4)` n-partite case with a ten-minute budget.
    pub stretch: bool,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 5, max_k: 3, npartite: None, stretch: false, seed: 0, limits: Limits::default() }
    }
}

pub const STRETCH_CASE: (u32, u32) = (8, 4);
pub const STRETCH_LIMITS: Limits = Limits { max_nodes: u64::MAX, max_time: Duration::from_secs(600) };

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    /// The statement this claim instantiates.
    pub statement: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    fn new(id: impl Into<String>, statement: &'static str, passed: bool, detail: impl Into<String>) -> Claim {
        Claim { id: id.into(), statement, passed, detail: detail.into() }
    }
}

/// Claims of `suite`, sorted by id.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Vec<Claim> {
    let mut claims = match suite {
        Suite::Order => order_claims(config),
        Suite::Bounds => bounds_claims(),
        Suite::Diagonals => diagonal_claims(),
        Suite::Sigma => sigma_claims(config),
        Suite::Tk => tk_claims(config),
        Suite::Equivalence => equivalence_claims(config),
        Suite::Npartite => npartite_claims(config),
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, config)).collect(),
    };
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    claims
}

pub fn render_table(claims: &[Claim]) -> String {
    let width = claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in claims {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{mark}  {:<width$}  {}  [{}]", c.id, c.statement, c.detail);
    }
    let passed = claims.iter().filter(|c| c.passed).count();
    let _ = writeln!(out, "{passed}/{} claims passed", claims.len());
    out
}

fn board(n: u32, m: u32) -> Board {
    Board::new(n, m).expect("positive dimensions")
}

fn subset(cells: &[Cell], mask: u64) -> Vec<Cell> {
    cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c).collect()
}

fn boards_up_to(max_cells: u32) -> impl Iterator<Item = Board> {
    (1..=max_cells).flat_map(move |n| (1..=max_cells / n).map(move |m| board(n, m)))
}

fn order_claims(config: &VerifyConfig) -> Vec<Claim> {
    let mut claims = Vec::new();

    let cells: Vec<Cell> = board(4, 4).cells().collect();
    let mut total = true;
    for &a in &cells {
        total &= a.cmp(&a).is_eq();
        for &b in &cells {
            // Trichotomy: exactly one of a<b, a==b, b<a.
            total &= [a < b, a == b, b < a].iter().filter(|&&x| x).count() == 1;
            for &c in &cells {
                if a < b && b < c {
                    total &= a < c;
                }
            }
        }
    }
    claims.push(Claim::new("order/01-total", "cell order is a strict total order", total, "4x4 exhaustive"));

    let mut antitone = true;
    let mut implication = true;
    let mut boards = 0;
    for b in boards_up_to(9) {
        boards += 1;
        let cells: Vec<Cell> = b.cells().collect();
        let full: u64 = (1 << cells.len()) - 1;
        for sup in 0..=full {
            let s = subset(&cells, sup);
            let c = SparsityMode::CSparse.holds(&s);
            let w = SparsityMode::WeakCSparse.holds(&s);
            implication &= !c || w;
            if !(c || w) {
                continue;
            }
            // Every submask of a sparse set.
            let mut sub = sup;
            loop {
                let t = subset(&cells, sub);
                antitone &= !c || SparsityMode::CSparse.holds(&t);
                antitone &= !w || SparsityMode::WeakCSparse.holds(&t);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & sup;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..2000 {
        let b = board(rng.gen_range(3..=6), rng.gen_range(3..=6));
        let all: Vec<Cell> = b.cells().collect();
        let p: f64 = rng.gen();
        let sup: Vec<Cell> = all.iter().copied().filter(|_| rng.gen_bool(p)).collect();
        let sub: Vec<Cell> = sup.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        for mode in [SparsityMode::CSparse, SparsityMode::WeakCSparse] {
            antitone &= !mode.holds(&sup) || mode.holds(&sub);
        }
    }
    claims.push(Claim::new(
        "order/02-antitone",
        "subsets of (weak-)c-sparse sets are (weak-)c-sparse",
        antitone,
        format!("{boards} boards with nm<=9 exhaustive, 2000 random pairs"),
    ));
    claims.push(Claim::new(
        "order/03-implication",
        "c-sparse implies weak-c-sparse",
        implication,
        format!("{boards} boards with nm<=9 exhaustive"),
    ));

    let violations = deletion_violations(config.seed, 200);
    claims.push(Claim::new(
        "order/04-deletion",
        "deleting rows/columns keeps a c-sparse set c-sparse",
        violations == 0,
        format!("200 random cases, {violations} violations"),
    ));
    claims
}

/// Random c-sparse set: cells in shuffled order, each kept if the set stays
/// c-sparse, then thinned at random.
pub fn random_c_sparse_set(rng: &mut ChaCha8Rng, b: Board) -> CellSet {
    let mut order: Vec<Cell> = b.cells().collect();
    order.shuffle(rng);
    let mut chosen: BTreeSet<Cell> = BTreeSet::new();
    for c in order {
        chosen.insert(c);
        let sorted: Vec<Cell> = chosen.iter().copied().collect();
        if !SparsityMode::CSparse.holds(&sorted) {
            chosen.remove(&c);
        }
    }
    let keep: f64 = rng.gen_range(0.3..=1.0);
    CellSet::new(b, chosen.into_iter().filter(|_| rng.gen_bool(keep))).expect("cells from the board")
}

fn random_keep(rng: &mut ChaCha8Rng, bound: u32) -> BTreeSet<u32> {
    loop {
        let keep: BTreeSet<u32> = (1..=bound).filter(|_| rng.gen_bool(0.6)).collect();
        if !keep.is_empty() {
            return keep;
        }
    }
}

pub fn deletion_violations(seed: u64, cases: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xde1e);
    let mut violations = 0;
    for _ in 0..cases {
        let b = board(rng.gen_range(1..=8), rng.gen_range(1..=8));
        let s = random_c_sparse_set(&mut rng, b);
        let rows = random_keep(&mut rng, b.rows());
        let cols = random_keep(&mut rng, b.cols());
        let r = restrict(&s, &rows, &cols).expect("valid keep sets");
        if !s.is_c_sparse() || !r.is_c_sparse() {
            violations += 1;
        }
    }
    violations
}

#[allow(clippy::int_plus_one)]
fn bounds_claims() -> Vec<Claim> {
    let mut c_ok = true;
    let mut sq_ok = true;
    let mut w_ok = true;
    let mut worst = Vec::new();
    for b in boards_up_to(16) {
        let (n, m) = (b.rows() as usize, b.cols() as usize);
        let (c, _) = max_sparse_bruteforce(b, SparsityMode::CSparse).expect("within guard");
        let (w, _) = max_sparse_bruteforce(b, SparsityMode::WeakCSparse).expect("within guard");
        c_ok &= c <= n + m - 1;
        if n == m {
            sq_ok &= c <= 2 * n - 1;
        }
        w_ok &= w <= n + 2 * m - 2;
        if c > n + m - 1 || w > n + 2 * m - 2 {
            worst.push(format!("{b}: c={c} w={w}"));
        }
    }
    let detail = if worst.is_empty() { "all boards with nm<=16".to_string() } else { worst.join(", ") };
    let mut claims = vec![
        Claim::new("bounds/01-general", "c-sparse sets have at most n+m-1 cells", c_ok, detail.clone()),
        Claim::new("bounds/02-square", "c-sparse sets of n x n have at most 2n-1 cells", sq_ok, "square boards n<=4"),
        Claim::new("bounds/03-weak", "weak-c-sparse sets have at most n+2m-2 cells", w_ok, detail),
    ];
    let mut tight = true;
    let mut seen = Vec::new();
    for n in 1..=5u32 {
        let b = board(n, 1);
        let c = max_sparse_bruteforce(b, SparsityMode::CSparse).expect("small").0;
        let w = max_sparse_bruteforce(b, SparsityMode::WeakCSparse).expect("small").0;
        tight &= c == n as usize && w == n as usize;
        seen.push(format!("{n}x1:{c}/{w}"));
    }
    claims.push(Claim::new("bounds/04-tight-m1", "both bounds are attained on n x 1 boards", tight, seen.join(" ")));
    claims
}

fn diagonal_claims() -> Vec<Claim> {
    let mut cover = true;
    for n in (1..=15u32).step_by(2) {
        let b = board(n, n);
        let sets: Vec<CellSet> = (0..=(n - 1) / 2).map(|k| s2k_set(b, k).expect("valid k")).collect();
        cover &= sets.iter().all(CellSet::is_c_sparse);
        for (i, a) in sets.iter().enumerate() {
            for other in &sets[i + 1..] {
                cover &= a.is_disjoint(other);
            }
        }
        cover &= sets.iter().map(CellSet::len).sum::<usize>() == b.cell_count();
    }
    let mut construct = true;
    let mut counts = Vec::new();
    for n in 1..=15u32 {
        let p = optimal_c_sparse_partition(board(n, n)).expect("square");
        construct &= p.is_c_sparse() && p.len() == (n / 2 + 1) as usize;
        counts.push(p.len().to_string());
    }
    let seven = optimal_c_sparse_partition(board(7, 7)).expect("square").len();
    vec![
        Claim::new(
            "diagonals/01-cover",
            "diagonal classes are c-sparse and partition the odd board",
            cover,
            "odd n<=15",
        ),
        Claim::new(
            "diagonals/02-construct",
            "constructed partition has floor(n/2)+1 c-sparse classes",
            construct,
            format!("n=1..15 -> {}", counts.join(",")),
        ),
        Claim::new("diagonals/03-figure", "the 7 x 7 partition has 4 classes", seven == 4, format!("{seven} classes")),
    ]
}

fn sigma_claims(config: &VerifyConfig) -> Vec<Claim> {
    (1..=config.max_n)
        .map(|n| {
            let id = format!("sigma/n={n:02}");
            match min_c_sparse_partition_bruteforce(board(n, n)) {
                Ok((sigma, witness)) => {
                    let expected = (n / 2 + 1) as usize;
                    let ok = sigma == expected && witness.is_c_sparse() && witness.len() == sigma;
                    Claim::new(id, "sigma(n x n) = floor(n/2)+1", ok, format!("sigma={sigma}, expected {expected}"))
                }
                Err(e) => Claim::new(id, "sigma(n x n) = floor(n/2)+1", false, e.to_string()),
            }
        })
        .collect()
}

fn tk_claims(config: &VerifyConfig) -> Vec<Claim> {
    let mut claims = Vec::new();
    for k in 1..=config.max_k {
        let g = build_tournament(k).expect("k >= 1");
        let r = dichromatic_number(&g, config.limits);
        let certified = r
            .certificate
            .as_ref()
            .is_some_and(|c| verify_coloring(&g, c, Constraint::Acyclic).unwrap_or(false));
        let ok = r.status == Status::Optimal && r.value == k as usize && certified;
        claims.push(Claim::new(
            format!("tk/k={k:02}"),
            "dichromatic number of T_k is k",
            ok,
            format!("{:?} value={} nodes={} ({} vertices)", r.status, r.value, r.nodes_explored, g.vertex_count()),
        ));
    }
    let mut cross = true;
    let mut seen = Vec::new();
    for k in 1..=config.max_k.min(2) {
        let side = 2 * k - 1;
        let g = build_tournament(k).expect("k >= 1");
        let chi = dichromatic_number(&g, config.limits).value;
        let sigma = min_c_sparse_partition_bruteforce(board(side, side)).expect("small").0;
        cross &= chi == sigma;
        seen.push(format!("k={k}: chi={chi} sigma={sigma}"));
    }
    claims.push(Claim::new(
        "tk/cross-oracle",
        "dichromatic number of T_k equals sigma of its board",
        cross,
        seen.join("; "),
    ));
    claims
}

pub fn random_tournament(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) })
        .collect();
    Digraph::new(n, arcs).expect("one arc per pair")
}

/// Oriented graph with each pair independently absent, forward, or backward.
pub fn random_oriented(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..3) {
                0 => {}
                1 => arcs.push((u, v)),
                _ => arcs.push((v, u)),
            }
        }
    }
    Digraph::new(n, arcs).expect("one arc per pair")
}

pub fn triangle_lemma_mismatches(seed: u64, samples: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7a1);
    (0..samples)
        .filter(|_| {
            let n = rng.gen_range(1..=8);
            let g = random_tournament(&mut rng, n);
            is_acyclic(&g) != find_directed_triangle(&g, &g.all_vertices()).is_none()
        })
        .count()
}

fn labels_of(g: &Digraph, board: Board, vs: &VertexSet) -> CellSet {
    let labels = g.labels().expect("generated digraphs are labeled");
    CellSet::new(board, vs.members().iter().map(|&v| labels[v])).expect("labels lie on the board")
}

/// Mismatches between acyclicity of induced subtournaments of `T_k` and
/// c-sparseness of their cells; `None` samples means every subset.
pub fn equivalence_mismatches(k: u32, samples: Option<usize>, seed: u64) -> (usize, usize) {
    let g = build_tournament(k).expect("k >= 1");
    let side = 2 * k - 1;
    let b = board(side, side);
    let n = g.vertex_count();
    let check = |members: Vec<usize>| {
        let vs = VertexSet::new(&g, members).expect("in range");
        is_acyclic(&induced(&g, &vs)) != labels_of(&g, b, &vs).is_c_sparse()
    };
    match samples {
        None => {
            let total = 1usize << n;
            let bad = (0..total as u64).filter(|&mask| check((0..n).filter(|i| mask >> i & 1 == 1).collect())).count();
            (total, bad)
        }
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xe9);
            let bad = (0..count)
                .filter(|_| {
                    let p: f64 = rng.gen();
                    check((0..n).filter(|_| rng.gen_bool(p)).collect())
                })
                .count();
            (count, bad)
        }
    }
}

/// Every simple directed cycle, enumerated by extending paths from their
/// smallest vertex. Exponential; for tiny digraphs only.
pub fn has_cycle_by_enumeration(g: &Digraph) -> bool {
    fn extend(g: &Digraph, start: usize, path: &mut Vec<usize>) -> bool {
        let last = *path.last().expect("non-empty path");
        for next in start + 1..g.vertex_count() {
            if path.contains(&next) || !g.has_arc(last, next) {
                continue;
            }
            path.push(next);
            if g.has_arc(next, start) || extend(g, start, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    (0..g.vertex_count()).any(|s| extend(g, s, &mut vec![s]))
}

/// Minimum colors by plain enumeration of all `t^n` assignments, with class
/// checks done from scratch. Independent of the solver's search.
pub fn min_colors_by_enumeration(g: &Digraph, constraint: Constraint) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for t in 1..=n {
        let mut assignment = vec![0usize; n];
        loop {
            let ok = (0..t).all(|c| {
                let class = VertexSet::new(g, (0..n).filter(|&v| assignment[v] == c)).expect("in range");
                match constraint {
                    Constraint::Acyclic => !has_cycle_by_enumeration(&induced(g, &class)),
                    Constraint::TriangleFree => find_directed_triangle(g, &class).is_none(),
                }
            });
            if ok {
                return t;
            }
            // Next assignment in base t.
            let mut i = 0;
            while i < n && assignment[i] == t - 1 {
                assignment[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            assignment[i] += 1;
        }
    }
    unreachable!("singleton classes are always feasible")
}

fn equivalence_claims(config: &VerifyConfig) -> Vec<Claim> {
    let mut claims = Vec::new();
    let tri = triangle_lemma_mismatches(config.seed, 500);
    claims.push(Claim::new(
        "equivalence/01-triangle-lemma",
        "a tournament is acyclic iff it has no directed triangle",
        tri == 0,
        format!("500 random tournaments on <=8 vertices, {tri} mismatches"),
    ));
    let (total, bad) = equivalence_mismatches(2, None, config.seed);
    claims.push(Claim::new(
        "equivalence/02-t2-exhaustive",
        "vertex set of T_k is c-sparse iff it induces an acyclic subtournament",
        bad == 0,
        format!("{total} subsets of T_2, {bad} mismatches"),
    ));
    let (total, bad) = equivalence_mismatches(3, Some(10_000), config.seed);
    claims.push(Claim::new(
        "equivalence/03-t3-random",
        "vertex set of T_k is c-sparse iff it induces an acyclic subtournament",
        bad == 0,
        format!("{total} random subsets of T_3, {bad} mismatches"),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0xc1c);
    let mut cycle_bad = 0;
    for _ in 0..500 {
        let n = rng.gen_range(0..=5);
        let g = random_oriented(&mut rng, n);
        cycle_bad += usize::from(is_acyclic(&g) == has_cycle_by_enumeration(&g));
    }
    claims.push(Claim::new(
        "equivalence/04-cycle-oracle",
        "source elimination agrees with cycle enumeration",
        cycle_bad == 0,
        format!("500 random oriented graphs on <=5 vertices, {cycle_bad} mismatches"),
    ));

    let mut order_bad = 0;
    let mut search_bad = 0;
    for i in 0..100 {
        let n = rng.gen_range(1..=7);
        let g = if i % 4 == 0 { random_tournament(&mut rng, n) } else { random_oriented(&mut rng, n) };
        let tf = solve(&g, Constraint::TriangleFree, config.limits);
        let ac = solve(&g, Constraint::Acyclic, config.limits);
        order_bad += usize::from(tf.value > ac.value);
        if n <= 6 {
            search_bad += usize::from(ac.value != min_colors_by_enumeration(&g, Constraint::Acyclic));
            search_bad += usize::from(tf.value != min_colors_by_enumeration(&g, Constraint::TriangleFree));
        }
    }
    claims.push(Claim::new(
        "equivalence/05-constraint-order",
        "triangle-free chromatic number <= dichromatic number",
        order_bad == 0,
        format!("100 random digraphs on <=7 vertices, {order_bad} violations"),
    ));
    claims.push(Claim::new(
        "equivalence/06-search-complete",
        "symmetry-broken search matches unrestricted enumeration",
        search_bad == 0,
        format!("random digraphs on <=6 vertices, {search_bad} mismatches"),
    ));
    claims
}

/// Vertex subsets of `build_npartite(n, m)` without a directed triangle whose
/// cells are not weak-c-sparse. Exhaustive.
pub fn observation_violations(n: u32, m: u32) -> usize {
    let g = build_npartite(n, m).expect("positive");
    let b = board(n, m);
    let count = g.vertex_count();
    (0..1u64 << count)
        .filter(|&mask| {
            let vs = VertexSet::new(&g, (0..count).filter(|i| mask >> i & 1 == 1)).expect("in range");
            find_directed_triangle(&g, &vs).is_none() && !labels_of(&g, b, &vs).is_weak_c_sparse()
        })
        .count()
}

fn npartite_case(n: u32, m: u32, limits: Limits) -> Claim {
    let g = build_npartite(n, m).expect("positive");
    let bound = npartite_lower_bound(n as i64, m as i64).expect("positive");
    let need = bound.ceil().to_integer() as usize;
    let r = triangle_free_chromatic(&g, limits);
    let ok = match r.status {
        Status::Optimal => {
            r.value >= need
                && r.certificate
                    .as_ref()
                    .is_some_and(|c| verify_coloring(&g, c, Constraint::TriangleFree).unwrap_or(false))
        }
        // Levels below `value` were exhausted, so `value` is proven.
        _ => r.value >= need,
    };
    Claim::new(
        format!("npartite/n={n:02},m={m:02}"),
        "triangle-free chromatic number of K_n^(m) >= nm/(n+2m-2)",
        ok,
        format!("{:?} value={} bound={}/{} nodes={}", r.status, r.value, bound.numer(), bound.denom(), r.nodes_explored),
    )
}

fn npartite_claims(config: &VerifyConfig) -> Vec<Claim> {
    let mut claims = Vec::new();
    match config.npartite {
        Some((n, m)) => claims.push(npartite_case(n, m, config.limits)),
        None => {
            for n in 1..=6 {
                for m in 1..=3 {
                    claims.push(npartite_case(n, m, config.limits));
                }
            }
        }
    }
    if config.stretch {
        let (n, m) = STRETCH_CASE;
        claims.push(npartite_case(n, m, STRETCH_LIMITS));
    }
    let mut bad = 0;
    for n in 1..=3 {
        for m in 1..=3 {
            bad += observation_violations(n, m);
        }
    }
    claims.push(Claim::new(
        "npartite/observation",
        "triangle-free vertex sets of K_n^(m) are weak-c-sparse",
        bad == 0,
        format!("all subsets for n,m<=3, {bad} violations"),
    ));
    claims
}
