//! Bipartite graphs over a row bank and a column bank.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A bipartite graph with banks `1..=row_count` and `1..=col_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    row_count: usize,
    col_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(
        row_count: usize,
        col_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (r, c) in edges {
            if r < 1 || r > row_count || c < 1 || c > col_count {
                return Err(Error::BipartiteEndpointOutOfRange(r, c));
            }
            if !set.insert((r, c)) {
                return Err(Error::DuplicateBipartiteEdge(r, c));
            }
        }
        Ok(Self {
            row_count,
            col_count,
            edges: set,
        })
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    pub fn col_count(&self) -> usize {
        self.col_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, r: usize, c: usize) -> bool {
        self.edges.contains(&(r, c))
    }

    /// Adjacency lists indexed by row (index 0 unused), columns ascending.
    pub fn row_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.row_count + 1];
        for &(r, c) in &self.edges {
            adj[r].push(c);
        }
        adj
    }
}
