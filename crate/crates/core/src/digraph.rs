//! Oriented graphs on dense vertex indices with an adjacency matrix, plus the
//! cycle and triangle primitives the solvers are built on.

use std::collections::BTreeSet;

use crate::board::Cell;
use crate::error::{Error, Result};

/// A finite oriented graph: no self-loops and at most one arc per vertex pair.
/// Vertices are `0..vertex_count`; generated instances also carry the board
/// cell of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
    arc_count: usize,
    labels: Option<Vec<Cell>>,
}

impl Digraph {
    /// Exact duplicate arcs collapse; loops and antiparallel pairs are errors.
    pub fn new(vertex_count: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Digraph> {
        let mut g = Digraph { n: vertex_count, adj: vec![false; vertex_count * vertex_count], arc_count: 0, labels: None };
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(vertex_count: usize) -> Digraph {
        Digraph { n: vertex_count, adj: vec![false; vertex_count * vertex_count], arc_count: 0, labels: None }
    }

    pub(crate) fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, count: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_arc(v, u) {
            return Err(Error::Digon(u, v));
        }
        let slot = &mut self.adj[u * self.n + v];
        if !*slot {
            *slot = true;
            self.arc_count += 1;
        }
        Ok(())
    }

    /// Attaches a cell label to every vertex. Labels must be distinct, 1-based cells.
    pub fn with_labels(mut self, labels: Vec<Cell>) -> Result<Digraph> {
        if labels.len() != self.n {
            return Err(Error::InvalidLabels(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        let mut seen = BTreeSet::new();
        for c in &labels {
            if c.row == 0 || c.col == 0 {
                return Err(Error::InvalidLabels(format!("label {c} is not 1-based")));
            }
            if !seen.insert(*c) {
                return Err(Error::InvalidLabels(format!("label {c} is used twice")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (0..self.n).filter(move |&v| self.has_arc(u, v)).map(move |v| (u, v)))
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_arc(u, v))
    }

    pub fn labels(&self) -> Option<&[Cell]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<Cell> {
        self.labels.as_ref().and_then(|l| l.get(v).copied())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet { count: self.n, members: (0..self.n).collect() }
    }

    pub fn is_acyclic(&self) -> bool {
        is_acyclic(self)
    }

    pub fn is_tournament(&self) -> bool {
        is_tournament(self)
    }

    /// True iff the directed triangle `a -> b -> c -> a` or its reverse is present.
    #[inline]
    pub fn is_directed_triangle(&self, a: usize, b: usize, c: usize) -> bool {
        (self.has_arc(a, b) && self.has_arc(b, c) && self.has_arc(c, a))
            || (self.has_arc(a, c) && self.has_arc(c, b) && self.has_arc(b, a))
    }
}

/// A subset of a digraph's vertices, sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    count: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(g: &Digraph, members: impl IntoIterator<Item = usize>) -> Result<VertexSet> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&v) = set.iter().next_back() {
            if v >= g.n {
                return Err(Error::VertexOutOfRange { vertex: v, count: g.n });
            }
        }
        Ok(VertexSet { count: g.n, members: set.into_iter().collect() })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// Kahn's algorithm: repeatedly remove sources; a cycle remains iff some
/// vertex is never removed.
pub fn is_acyclic(g: &Digraph) -> bool {
    let n = g.n;
    let mut indeg: Vec<usize> = (0..n).map(|v| (0..n).filter(|&u| g.has_arc(u, v)).count()).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = stack.pop() {
        removed += 1;
        for v in g.out_neighbors(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    removed == n
}

/// The lexicographically first `(u, v, w)` with arcs `u -> v -> w -> u` inside
/// `within`. Since a triangle's rotation starting at its smallest vertex is
/// its smallest representation, `u` is always the minimum of the three.
pub fn find_directed_triangle(g: &Digraph, within: &VertexSet) -> Option<(usize, usize, usize)> {
    debug_assert_eq!(within.count, g.n);
    let m = within.members();
    for (i, &u) in m.iter().enumerate() {
        for &v in &m[i + 1..] {
            if !g.has_arc(u, v) {
                continue;
            }
            for &w in &m[i + 1..] {
                if w != v && g.has_arc(v, w) && g.has_arc(w, u) {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

/// The sub-digraph induced by `x`, re-indexed in increasing original order.
pub fn induced(g: &Digraph, x: &VertexSet) -> Digraph {
    debug_assert_eq!(x.count, g.n);
    let m = x.members();
    let mut h = Digraph::empty(m.len());
    for (a, &u) in m.iter().enumerate() {
        for (b, &v) in m.iter().enumerate() {
            if g.has_arc(u, v) {
                h.adj[a * h.n + b] = true;
                h.arc_count += 1;
            }
        }
    }
    h.labels = g.labels.as_ref().map(|l| m.iter().map(|&v| l[v]).collect());
    h
}

pub fn is_tournament(g: &Digraph) -> bool {
    (0..g.n).all(|u| (u + 1..g.n).all(|v| g.has_arc(u, v) != g.has_arc(v, u)))
}

/// Acyclicity of a tournament decided by the absence of directed triangles.
pub fn acyclic_iff_trianglefree_check(g: &Digraph) -> Result<bool> {
    if !is_tournament(g) {
        return Err(Error::NotTournament);
    }
    Ok(find_directed_triangle(g, &g.all_vertices()).is_none())
}
