//! Exact minimum colorings of digraphs under two class constraints: every
//! class induces an acyclic sub-digraph (the dichromatic number), or no class
//! contains a directed triangle.
//!
//! The engine is iterative deepening on the color count. Each level is a
//! backtracking feasibility search over vertices in index order, where a
//! vertex may open color `c` only if colors `0..c` are already in use. The
//! greedy coloring caps the range of levels tried.
//!
//! Class feasibility is maintained incrementally. Under the triangle
//! constraint, and under the acyclic constraint on tournaments (where a
//! sub-tournament is acyclic iff it has no directed triangle), every
//! assignment records, for each later vertex, how many class pairs it would
//! close a triangle with; a later vertex with every color blocked prunes the
//! branch immediately. On general digraphs the acyclic constraint falls back
//! to a reachability check inside the class.

use std::time::{Duration, Instant};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::digraph::{find_directed_triangle, induced, is_acyclic, is_tournament, Digraph, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    /// No monochromatic directed cycle.
    Acyclic,
    /// No monochromatic directed triangle.
    TriangleFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_nodes: 100_000_000, max_time: Duration::from_secs(60) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// `value` is the exact optimum and a certificate is attached.
    Optimal,
    /// `value` is a proven lower bound; the optimum was not sought.
    LowerBoundOnly,
    /// A search limit was hit; `value` is the best lower bound proven so far.
    AbortedAtLimit,
}

/// A color index per vertex. Colors are `0..num_colors` and every color is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    color_of: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn new(color_of: Vec<usize>) -> Result<Coloring> {
        let num_colors = color_of.iter().max().map_or(0, |&c| c + 1);
        let mut used = vec![false; num_colors];
        for &c in &color_of {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidColoring(format!("color {missing} has no vertices")));
        }
        Ok(Coloring { color_of, num_colors })
    }

    pub fn color_of(&self) -> &[usize] {
        &self.color_of
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Vertex lists per color, each sorted.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.color_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub status: Status,
    pub value: usize,
    pub certificate: Option<Coloring>,
    /// Colors used by the best feasible coloring known when the solve ended.
    pub upper_bound: usize,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Minimum number of colors such that every class induces an acyclic sub-digraph.
pub fn dichromatic_number(g: &Digraph, limits: Limits) -> SolveResult {
    solve(g, Constraint::Acyclic, limits)
}

/// Minimum number of colors such that no class contains a directed triangle.
pub fn triangle_free_chromatic(g: &Digraph, limits: Limits) -> SolveResult {
    solve(g, Constraint::TriangleFree, limits)
}

pub fn solve(g: &Digraph, constraint: Constraint, limits: Limits) -> SolveResult {
    let start = Instant::now();
    let greedy = greedy_upper_bound(g, constraint);
    let upper = greedy.num_colors();
    let mut nodes = 0;
    let mut lower = upper.min(1);
    while lower < upper {
        let mut search = Search::new(g, constraint, lower, limits, start, nodes);
        let outcome = search.run();
        nodes = search.nodes;
        match outcome {
            Outcome::Found => {
                let coloring = Coloring::new(search.color_of).expect("search colors are contiguous");
                debug_assert!(verify_coloring(g, &coloring, constraint).unwrap());
                return SolveResult {
                    status: Status::Optimal,
                    value: lower,
                    certificate: Some(coloring),
                    upper_bound: lower,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                };
            }
            Outcome::Infeasible => lower += 1,
            Outcome::Aborted => {
                return SolveResult {
                    status: Status::AbortedAtLimit,
                    value: lower,
                    certificate: None,
                    upper_bound: upper,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                };
            }
        }
    }
    SolveResult {
        status: Status::Optimal,
        value: upper,
        certificate: Some(greedy),
        upper_bound: upper,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    }
}

/// Proves that at least `bound` colors are needed by exhausting the single
/// level `bound - 1`. Returns `LowerBoundOnly` with `value == bound` on
/// success, `AbortedAtLimit` with the trivial bound if a limit is hit, and
/// [`Error::LowerBoundRefuted`] if `bound - 1` colors suffice.
pub fn prove_lower_bound(g: &Digraph, constraint: Constraint, bound: usize, limits: Limits) -> Result<SolveResult> {
    let start = Instant::now();
    let trivial = g.vertex_count().min(1);
    let result = |status, value, nodes| SolveResult {
        status,
        value,
        certificate: None,
        upper_bound: g.vertex_count(),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    };
    if bound <= trivial {
        return Ok(result(Status::LowerBoundOnly, bound, 0));
    }
    let mut search = Search::new(g, constraint, bound - 1, limits, start, 0);
    match search.run() {
        Outcome::Found => Err(Error::LowerBoundRefuted { bound }),
        Outcome::Infeasible => Ok(result(Status::LowerBoundOnly, bound, search.nodes)),
        Outcome::Aborted => Ok(result(Status::AbortedAtLimit, trivial, search.nodes)),
    }
}

/// `nm / (n + 2m - 2)`, exact. Its ceiling bounds the triangle-free chromatic
/// number of `build_npartite(n, m)` from below.
pub fn npartite_lower_bound(n: i64, m: i64) -> Result<Ratio<u64>> {
    if n < 1 {
        return Err(Error::NonPositive { name: "n", value: n });
    }
    if m < 1 {
        return Err(Error::NonPositive { name: "m", value: m });
    }
    let (n, m) = (n as u64, m as u64);
    Ok(Ratio::new(n * m, n + 2 * m - 2))
}

/// Sequential greedy in vertex order: each vertex takes the least color whose
/// class stays feasible.
pub fn greedy_upper_bound(g: &Digraph, constraint: Constraint) -> Coloring {
    let n = g.vertex_count();
    let mut search = Search::new(g, constraint, n.max(1), Limits::default(), Instant::now(), 0);
    let mut used = 0;
    for v in 0..n {
        let c = (0..=used).find(|&c| search.allowed(v, c)).expect("a fresh color is always feasible");
        search.assign(v, c);
        used = used.max(c + 1);
    }
    Coloring::new(search.color_of).expect("greedy colors are contiguous")
}

/// Checks every color class with the digraph primitives only: full cycle
/// detection on the induced class, or a triangle scan.
pub fn verify_coloring(g: &Digraph, c: &Coloring, constraint: Constraint) -> Result<bool> {
    if c.color_of().len() != g.vertex_count() {
        return Err(Error::ShapeMismatch { expected: g.vertex_count(), got: c.color_of().len() });
    }
    for class in c.classes() {
        let set = VertexSet::new(g, class)?;
        let ok = match constraint {
            Constraint::Acyclic => is_acyclic(&induced(g, &set)),
            Constraint::TriangleFree => find_directed_triangle(g, &set).is_none(),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Found,
    Infeasible,
    Aborted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ClassCheck {
    Triangles,
    Cycles,
}

const UNCOLORED: usize = usize::MAX;

struct Search<'g> {
    g: &'g Digraph,
    colors: usize,
    check: ClassCheck,
    color_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    // blocked[c * n + w]: class-c pairs that would close a triangle with w.
    blocked: Vec<u32>,
    // Scratch for the reachability check.
    mark: Vec<bool>,
    stack: Vec<usize>,
    limits: Limits,
    start: Instant,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Digraph, constraint: Constraint, colors: usize, limits: Limits, start: Instant, nodes: u64) -> Self {
        let n = g.vertex_count();
        let check = match constraint {
            Constraint::TriangleFree => ClassCheck::Triangles,
            Constraint::Acyclic if is_tournament(g) => ClassCheck::Triangles,
            Constraint::Acyclic => ClassCheck::Cycles,
        };
        Search {
            g,
            colors,
            check,
            color_of: vec![UNCOLORED; n],
            classes: vec![Vec::new(); colors],
            blocked: if check == ClassCheck::Triangles { vec![0; colors * n] } else { Vec::new() },
            mark: vec![false; n],
            stack: Vec::new(),
            limits,
            start,
            nodes,
        }
    }

    fn run(&mut self) -> Outcome {
        if self.g.vertex_count() == 0 {
            return Outcome::Found;
        }
        if self.colors == 0 {
            return Outcome::Infeasible;
        }
        self.extend(0, 0)
    }

    fn extend(&mut self, v: usize, used: usize) -> Outcome {
        let n = self.g.vertex_count();
        if v == n {
            return Outcome::Found;
        }
        let open = (used + 1).min(self.colors);
        for c in 0..open {
            self.nodes += 1;
            if self.nodes >= self.limits.max_nodes
                || (self.nodes & 0x3ff == 0 && self.start.elapsed() >= self.limits.max_time)
            {
                return Outcome::Aborted;
            }
            if !self.allowed(v, c) {
                continue;
            }
            self.assign(v, c);
            let used = used.max(c + 1);
            let outcome = if self.wiped_out(v, used) { Outcome::Infeasible } else { self.extend(v + 1, used) };
            if outcome != Outcome::Infeasible {
                return outcome;
            }
            self.unassign(v, c);
        }
        Outcome::Infeasible
    }

    fn allowed(&mut self, v: usize, c: usize) -> bool {
        match self.check {
            ClassCheck::Triangles => self.blocked[c * self.g.vertex_count() + v] == 0,
            ClassCheck::Cycles => !self.closes_cycle(v, c),
        }
    }

    /// Whether `v` reaches itself through members of class `c`.
    fn closes_cycle(&mut self, v: usize, c: usize) -> bool {
        let g = self.g;
        let class = &self.classes[c];
        self.stack.clear();
        self.stack.push(v);
        let mut found = false;
        while let Some(x) = self.stack.pop() {
            if x != v && g.has_arc(x, v) {
                found = true;
                break;
            }
            for &y in class {
                if !self.mark[y] && g.has_arc(x, y) {
                    self.mark[y] = true;
                    self.stack.push(y);
                }
            }
        }
        for &y in class {
            self.mark[y] = false;
        }
        found
    }

    fn assign(&mut self, v: usize, c: usize) {
        if self.check == ClassCheck::Triangles {
            self.update_blocked(v, c, true);
        }
        self.color_of[v] = c;
        self.classes[c].push(v);
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.classes[c].pop();
        self.color_of[v] = UNCOLORED;
        if self.check == ClassCheck::Triangles {
            self.update_blocked(v, c, false);
        }
    }

    fn update_blocked(&mut self, v: usize, c: usize, add: bool) {
        let n = self.g.vertex_count();
        for w in v + 1..n {
            let hits = self.classes[c].iter().filter(|&&u| self.g.is_directed_triangle(u, v, w)).count() as u32;
            let slot = &mut self.blocked[c * n + w];
            if add {
                *slot += hits;
            } else {
                *slot -= hits;
            }
        }
    }

    /// A later vertex with every color blocked ends the branch. While a color
    /// is still unopened, any vertex can take it.
    fn wiped_out(&self, v: usize, used: usize) -> bool {
        if self.check != ClassCheck::Triangles || used < self.colors {
            return false;
        }
        let n = self.g.vertex_count();
        (v + 1..n).any(|w| (0..self.colors).all(|c| self.blocked[c * n + w] > 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_npartite, build_tournament};

    fn triangle() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn coloring_validation() {
        assert!(Coloring::new(vec![0, 2]).is_err());
        let c = Coloring::new(vec![1, 0, 1]).unwrap();
        assert_eq!(c.num_colors(), 2);
        assert_eq!(c.classes(), vec![vec![1], vec![0, 2]]);
        assert_eq!(Coloring::new(vec![]).unwrap().num_colors(), 0);
    }

    #[test]
    fn small_tournaments() {
        let t1 = dichromatic_number(&build_tournament(1).unwrap(), Limits::default());
        assert_eq!((t1.status, t1.value), (Status::Optimal, 1));
        let g = build_tournament(2).unwrap();
        let t2 = dichromatic_number(&g, Limits::default());
        assert_eq!((t2.status, t2.value), (Status::Optimal, 2));
        assert!(verify_coloring(&g, t2.certificate.as_ref().unwrap(), Constraint::Acyclic).unwrap());
    }

    #[test]
    fn empty_graph() {
        let r = dichromatic_number(&Digraph::empty(0), Limits::default());
        assert_eq!((r.status, r.value), (Status::Optimal, 0));
    }

    #[test]
    fn acyclic_inputs_need_one_color() {
        let dag = Digraph::new(4, [(0, 1), (1, 2), (0, 3), (3, 2)]).unwrap();
        assert_eq!(triangle_free_chromatic(&dag, Limits::default()).value, 1);
        assert_eq!(dichromatic_number(&dag, Limits::default()).value, 1);
        assert_eq!(greedy_upper_bound(&dag, Constraint::Acyclic).num_colors(), 1);
        assert_eq!(greedy_upper_bound(&dag, Constraint::TriangleFree).num_colors(), 1);
    }

    #[test]
    fn four_cycle_separates_constraints() {
        let c4 = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(triangle_free_chromatic(&c4, Limits::default()).value, 1);
        let r = dichromatic_number(&c4, Limits::default());
        assert_eq!(r.value, 2);
        assert!(verify_coloring(&c4, r.certificate.as_ref().unwrap(), Constraint::Acyclic).unwrap());
    }

    #[test]
    fn greedy_on_triangle() {
        let c = greedy_upper_bound(&triangle(), Constraint::Acyclic);
        assert_eq!(c.num_colors(), 2);
        assert!(verify_coloring(&triangle(), &c, Constraint::Acyclic).unwrap());
    }

    #[test]
    fn greedy_on_t2_is_feasible() {
        let g = build_tournament(2).unwrap();
        let c = greedy_upper_bound(&g, Constraint::Acyclic);
        assert!((2..=9).contains(&c.num_colors()));
        assert!(verify_coloring(&g, &c, Constraint::Acyclic).unwrap());
    }

    #[test]
    fn verify_rejects_bad_colorings() {
        let mono = Coloring::new(vec![0, 0, 0]).unwrap();
        assert!(!verify_coloring(&triangle(), &mono, Constraint::Acyclic).unwrap());
        assert!(!verify_coloring(&triangle(), &mono, Constraint::TriangleFree).unwrap());
        let short = Coloring::new(vec![0, 0]).unwrap();
        assert!(matches!(
            verify_coloring(&triangle(), &short, Constraint::Acyclic),
            Err(Error::ShapeMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn node_limit_aborts() {
        let g = build_tournament(3).unwrap();
        let limits = Limits { max_nodes: 1, ..Limits::default() };
        let r = dichromatic_number(&g, limits);
        assert_eq!(r.status, Status::AbortedAtLimit);
        assert!(r.certificate.is_none());
        assert!(r.value <= 3 && r.upper_bound >= 3);
    }

    #[test]
    fn npartite_bound_values() {
        assert_eq!(npartite_lower_bound(8, 4).unwrap(), Ratio::new(32, 14));
        assert_eq!(npartite_lower_bound(8, 4).unwrap().ceil().to_integer(), 3);
        assert_eq!(npartite_lower_bound(1, 1).unwrap(), Ratio::new(1, 1));
        let b = npartite_lower_bound(6, 3).unwrap();
        assert_eq!(b, Ratio::new(18, 10));
        assert_eq!(b.ceil().to_integer(), 2);
        assert!(npartite_lower_bound(0, 3).is_err());
        assert!(npartite_lower_bound(3, -1).is_err());
    }

    #[test]
    fn npartite_needs_two_colors() {
        let g = build_npartite(3, 2).unwrap();
        let r = triangle_free_chromatic(&g, Limits::default());
        assert_eq!(r.status, Status::Optimal);
        assert!(r.value >= 2);
    }

    #[test]
    fn lower_bound_proofs() {
        let g = build_tournament(2).unwrap();
        let r = prove_lower_bound(&g, Constraint::Acyclic, 2, Limits::default()).unwrap();
        assert_eq!((r.status, r.value), (Status::LowerBoundOnly, 2));
        assert!(matches!(
            prove_lower_bound(&g, Constraint::Acyclic, 3, Limits::default()),
            Err(Error::LowerBoundRefuted { bound: 3 })
        ));
        let r = prove_lower_bound(&g, Constraint::Acyclic, 1, Limits::default()).unwrap();
        assert_eq!(r.value, 1);
    }
}
