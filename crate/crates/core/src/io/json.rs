//! JSON documents. Cell coordinates are 1-based `[row, col]` pairs; digraph
//! vertex ids are 0-based.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::board::{Board, Cell, CellPartition, CellSet};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::solvers::{SolveResult, Status};

#[derive(Serialize, Deserialize)]
struct PartitionDoc {
    n: u32,
    m: u32,
    classes: Vec<Vec<[u32; 2]>>,
}

fn cells_of(s: &CellSet) -> Vec<[u32; 2]> {
    s.iter().map(|c| [c.row, c.col]).collect()
}

fn parse_cell([row, col]: [u32; 2], board: Board) -> Result<Cell> {
    if row == 0 || col == 0 || row > board.rows() || col > board.cols() {
        return Err(Error::CellOutOfBounds { row, col, n: board.rows(), m: board.cols() });
    }
    Ok(Cell { row, col })
}

fn parse_classes(doc: PartitionDoc) -> Result<(Board, Vec<CellSet>)> {
    let board = Board::new(doc.n, doc.m)?;
    let mut classes = Vec::with_capacity(doc.classes.len());
    for class in doc.classes {
        let cells = class.into_iter().map(|c| parse_cell(c, board)).collect::<Result<Vec<_>>>()?;
        classes.push(CellSet::new(board, cells)?);
    }
    Ok((board, classes))
}

pub fn partition_to_json(p: &CellPartition) -> String {
    let doc = PartitionDoc {
        n: p.board().rows(),
        m: p.board().cols(),
        classes: p.classes().iter().map(cells_of).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn partition_from_json(text: &str) -> Result<CellPartition> {
    let (board, classes) = parse_classes(serde_json::from_str(text)?)?;
    CellPartition::new(board, classes)
}

/// A single set is written as a one-class document.
pub fn cellset_to_json(s: &CellSet) -> String {
    let doc = PartitionDoc { n: s.board().rows(), m: s.board().cols(), classes: vec![cells_of(s)] };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn cellset_from_json(text: &str) -> Result<CellSet> {
    let (_, mut classes) = parse_classes(serde_json::from_str(text)?)?;
    if classes.len() != 1 {
        return Err(Error::Parse(format!("expected exactly one class, found {}", classes.len())));
    }
    Ok(classes.pop().expect("one class"))
}

struct Labels<'a>(&'a [Cell]);

impl Serialize for Labels<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, c) in self.0.iter().enumerate() {
            map.serialize_entry(&v.to_string(), &[c.row, c.col])?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct DigraphOut<'a> {
    vertices: usize,
    arcs: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Labels<'a>>,
}

#[derive(Deserialize)]
struct DigraphIn {
    vertices: usize,
    arcs: Vec<[usize; 2]>,
    #[serde(default)]
    labels: Option<BTreeMap<String, [u32; 2]>>,
}

/// `{"vertices": N, "arcs": [[u,v],...], "labels": {"v": [i,j], ...}}`, labels
/// only when present, in vertex order.
pub fn digraph_to_json(g: &Digraph) -> String {
    let doc = DigraphOut {
        vertices: g.vertex_count(),
        arcs: g.arcs().map(|(u, v)| [u, v]).collect(),
        labels: g.labels().map(Labels),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn digraph_from_json(text: &str) -> Result<Digraph> {
    let doc: DigraphIn = serde_json::from_str(text)?;
    let g = Digraph::new(doc.vertices, doc.arcs.into_iter().map(|[u, v]| (u, v)))?;
    let Some(raw) = doc.labels else { return Ok(g) };
    let mut labels = vec![None; doc.vertices];
    for (key, [row, col]) in raw {
        let v: usize = key.parse().map_err(|_| Error::Parse(format!("label key {key:?} is not a vertex id")))?;
        let slot = labels
            .get_mut(v)
            .ok_or(Error::VertexOutOfRange { vertex: v, count: doc.vertices })?;
        if row == 0 || col == 0 {
            return Err(Error::InvalidLabels(format!("vertex {v} has non 1-based label [{row},{col}]")));
        }
        *slot = Some(Cell { row, col });
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| Error::InvalidLabels(format!("vertex {v} has no label"))))
        .collect::<Result<Vec<_>>>()?;
    g.with_labels(labels)
}

/// Wire form of a [`SolveResult`]:
/// `{"status": ..., "value": ..., "colors": [...]?, "nodes": ..., "millis": ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub status: Status,
    pub value: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<usize>>,
    pub nodes: u64,
    pub millis: u64,
}

impl From<&SolveResult> for SolveReport {
    fn from(r: &SolveResult) -> Self {
        SolveReport {
            status: r.status,
            value: r.value,
            colors: r.certificate.as_ref().map(|c| c.color_of().to_vec()),
            nodes: r.nodes_explored,
            millis: r.elapsed.as_millis() as u64,
        }
    }
}

impl SolveReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}
