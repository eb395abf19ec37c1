//! Zero-nonzero patterns over `{0, *, ?}` and the conversions between
//! graphs, patterns and bipartite graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bipartite::BipartiteGraph;
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// One cell of a pattern. `Star` is a prescribed nonzero, `Zero` a prescribed
/// zero, and `Free` an unconstrained entry (rendered `?`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternEntry {
    Zero,
    Star,
    Free,
}

impl PatternEntry {
    pub fn symbol(self) -> char {
        match self {
            PatternEntry::Zero => '0',
            PatternEntry::Star => '*',
            PatternEntry::Free => '?',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(PatternEntry::Zero),
            '*' => Some(PatternEntry::Star),
            '?' => Some(PatternEntry::Free),
            _ => None,
        }
    }
}

/// A `rows x cols` grid over [`PatternEntry`], indexed 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    rows: usize,
    cols: usize,
    entries: Vec<PatternEntry>,
}

impl Pattern {
    pub fn filled(rows: usize, cols: usize, entry: PatternEntry) -> Self {
        Self {
            rows,
            cols,
            entries: vec![entry; rows * cols],
        }
    }

    /// Builds a pattern from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<PatternEntry>>) -> Result<Self> {
        let row_count = rows.len();
        let col_count = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != col_count) {
            return Err(Error::Parse("ragged pattern rows".into()));
        }
        Ok(Self {
            rows: row_count,
            cols: col_count,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> PatternEntry {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, e: PatternEntry) {
        self.entries[(i - 1) * self.cols + (j - 1)] = e;
    }

    pub fn has_free(&self) -> bool {
        self.entries.contains(&PatternEntry::Free)
    }

    /// The pattern with a star placed on every diagonal cell, other cells
    /// unchanged. Requires a square pattern.
    pub fn star_diagonal(&self) -> Result<Pattern> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = self.clone();
        for i in 1..=self.rows {
            out.set(i, i, PatternEntry::Star);
        }
        Ok(out)
    }

    /// The pattern with the rows indexed by `remove` deleted, remaining rows
    /// in their original order.
    pub fn delete_rows(&self, remove: &BTreeSet<usize>) -> Result<Pattern> {
        for &r in remove {
            if r < 1 || r > self.rows {
                return Err(Error::RowOutOfRange {
                    row: r,
                    rows: self.rows,
                });
            }
        }
        let mut entries = Vec::with_capacity((self.rows - remove.len()) * self.cols);
        for i in 1..=self.rows {
            if !remove.contains(&i) {
                entries.extend((1..=self.cols).map(|j| self.get(i, j)));
            }
        }
        Ok(Pattern {
            rows: self.rows - remove.len(),
            cols: self.cols,
            entries,
        })
    }

    /// The bipartite graph with an edge `(i, j)` for every star.
    ///
    /// Patterns containing `?` are rejected: the matching machinery is only
    /// defined for star/zero patterns, and silently dropping free entries
    /// would hide caller mistakes.
    pub fn to_bipartite(&self) -> Result<BipartiteGraph> {
        let mut edges = Vec::new();
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                match self.get(i, j) {
                    PatternEntry::Star => edges.push((i, j)),
                    PatternEntry::Zero => {}
                    PatternEntry::Free => return Err(Error::FreeEntryInBipartite(i, j)),
                }
            }
        }
        BipartiteGraph::new(self.rows, self.cols, edges)
    }
}

impl DirectedGraph {
    /// The square pattern of this graph: a star at `(i, j)` exactly when the
    /// graph has an edge from `j` to `i`, zero elsewhere.
    pub fn to_pattern(&self) -> Pattern {
        let n = self.n();
        let mut p = Pattern::filled(n, n, PatternEntry::Zero);
        for (u, v) in self.edges() {
            p.set(v, u, PatternEntry::Star);
        }
        p
    }

    /// The pattern of the loop-stripped graph with a free diagonal: a star at
    /// off-diagonal `(i, j)` exactly when the graph has an edge from `j` to
    /// `i`, `?` on the whole diagonal, zero elsewhere.
    pub fn to_simple_pattern(&self) -> Pattern {
        let n = self.n();
        let mut p = Pattern::filled(n, n, PatternEntry::Zero);
        for i in 1..=n {
            p.set(i, i, PatternEntry::Free);
        }
        for (u, v) in self.edges() {
            if u != v {
                p.set(v, u, PatternEntry::Star);
            }
        }
        p
    }
}

/// One row per line over `{*, 0, ?}`, e.g. `"**0\n*00\n**0"`.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim_end_matches('\r');
            if line.is_empty() {
                continue;
            }
            let row: Option<Vec<PatternEntry>> =
                line.chars().map(PatternEntry::from_symbol).collect();
            match row {
                Some(r) => rows.push(r),
                None => {
                    return Err(Error::Parse(format!(
                        "invalid pattern character in line {line:?}"
                    )))
                }
            }
        }
        Pattern::from_rows(rows)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            if i > 1 {
                writeln!(f)?;
            }
            for j in 1..=self.cols {
                write!(f, "{}", self.get(i, j).symbol())?;
            }
        }
        Ok(())
    }
}
