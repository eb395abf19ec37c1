//! Directed graphs with optional loops: the single carrier for an
//! interconnection graph, its loop-stripped version and its all-loops version.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Selects which color change rule governs propagation on a graph.
///
/// `SimpleDirected` is a semantic tag, not a distinct data structure; it is
/// only valid for loop-free graphs and pairing it with a graph that carries a
/// loop is rejected wherever the two meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphKind {
    #[serde(rename = "loop-directed")]
    LoopDirected,
    #[serde(rename = "simple-directed")]
    SimpleDirected,
}

/// A directed graph on vertices `1..=n`. Loops `(u, u)` are allowed.
///
/// Edges are stored as ordered pairs `(u, v)` meaning an edge from `u` to `v`.
/// Values are immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DirectedGraph {
    /// Builds a graph, rejecting out-of-range endpoints and duplicate edges.
    ///
    /// Duplicates are rejected rather than deduplicated so that data errors
    /// in input files surface early.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(Self { n, edges: set })
    }

    /// Graph with no vertices and no edges.
    pub fn empty() -> Self {
        Self {
            n: 0,
            edges: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    /// Out-neighbors of `u` in ascending order.
    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((u, 0)..=(u, usize::MAX)).map(|&(_, v)| v)
    }

    /// Vertices carrying a loop. Always derived from the edge set.
    pub fn loop_vertices(&self) -> BTreeSet<usize> {
        self.vertices()
            .filter(|&u| self.edges.contains(&(u, u)))
            .collect()
    }

    pub fn has_loops(&self) -> bool {
        self.vertices().any(|u| self.edges.contains(&(u, u)))
    }

    /// True when every vertex carries a loop (vacuously true for `n = 0`).
    pub fn is_self_damped(&self) -> bool {
        self.vertices().all(|u| self.edges.contains(&(u, u)))
    }

    /// True when every edge is paired with its reverse.
    pub fn is_symmetric(&self) -> bool {
        self.edges.iter().all(|&(u, v)| self.edges.contains(&(v, u)))
    }

    /// The graph with every loop removed.
    pub fn strip_loops(&self) -> Self {
        Self {
            n: self.n,
            edges: self.edges.iter().copied().filter(|&(u, v)| u != v).collect(),
        }
    }

    /// The graph with a loop added on every vertex.
    pub fn add_all_loops(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.extend((1..=self.n).map(|u| (u, u)));
        Self { n: self.n, edges }
    }

    /// Verifies that this graph may be used under `kind`.
    pub fn check_kind(&self, kind: GraphKind) -> Result<()> {
        if kind == GraphKind::SimpleDirected {
            if let Some(&u) = self.loop_vertices().iter().next() {
                return Err(Error::LoopInSimpleGraph(u));
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    kind: GraphKind,
    edges: Vec<(usize, usize)>,
}

/// Parses the graph interchange format:
/// `{"n": 3, "kind": "loop-directed", "edges": [[1,1],[2,1]]}`.
pub fn parse_graph_json(text: &str) -> Result<(DirectedGraph, GraphKind)> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let graph = DirectedGraph::new(raw.n, raw.edges)?;
    graph.check_kind(raw.kind)?;
    Ok((graph, raw.kind))
}

pub fn graph_to_json(graph: &DirectedGraph, kind: GraphKind) -> String {
    serde_json::to_string(&GraphJson {
        n: graph.n(),
        kind,
        edges: graph.edges().collect(),
    })
    .expect("graph serialization cannot fail")
}
