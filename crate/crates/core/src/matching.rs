//! Constrained matchings in bipartite graphs.
//!
//! A matching is constrained when no other matching covers exactly the same
//! matched vertices; equivalently the subgraph induced on the matched
//! vertices has a unique perfect matching. [`is_constrained`] decides this by
//! two independent routes and cross-checks them: degree-one peeling, which
//! also produces a triangular ordering certificate, and an alternating-cycle
//! search for a second perfect matching.
//!
//! Computing a maximum constrained matching is NP-hard, so
//! [`max_constrained_matching`] runs an exact branch-and-bound over edges in
//! lexicographic order. Two facts make this viable at desk scale: every
//! subset of a constrained matching is constrained (so non-constrained
//! partial matchings prune the branch), and the unconstrained maximum
//! matching of the residual graph bounds any extension.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bipartite::BipartiteGraph;
use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, GraphKind};
use crate::zero_forcing::ForceList;

/// A set of row-column pairs, no two sharing a row or a column. Pairs are
/// kept ordered by row index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatchingJson", into = "MatchingJson")]
pub struct Matching {
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct MatchingJson {
    edges: Vec<(usize, usize)>,
}

impl From<Matching> for MatchingJson {
    fn from(m: Matching) -> Self {
        MatchingJson {
            edges: m.edges.into_iter().collect(),
        }
    }
}

impl TryFrom<MatchingJson> for Matching {
    type Error = Error;

    fn try_from(raw: MatchingJson) -> Result<Self> {
        Matching::new(raw.edges)
    }
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rows = BTreeSet::new();
        let mut cols = BTreeSet::new();
        let mut set = BTreeSet::new();
        for (r, c) in edges {
            if !rows.insert(r) {
                return Err(Error::InvalidMatching(format!("row {r} matched twice")));
            }
            if !cols.insert(c) {
                return Err(Error::InvalidMatching(format!("column {c} matched twice")));
            }
            set.insert((r, c));
        }
        Ok(Self { edges: set })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn matched_rows(&self) -> BTreeSet<usize> {
        self.edges.iter().map(|&(r, _)| r).collect()
    }

    pub fn matched_cols(&self) -> BTreeSet<usize> {
        self.edges.iter().map(|&(_, c)| c).collect()
    }

    fn check_in(&self, b: &BipartiteGraph) -> Result<()> {
        for (r, c) in self.edges() {
            if !b.has_edge(r, c) {
                return Err(Error::InvalidMatching(format!(
                    "({r}, {c}) is not an edge of the bipartite graph"
                )));
            }
        }
        Ok(())
    }
}

/// A triangular ordering witnessing constrainedness: pairs
/// `(row_1, col_1), ..., (row_t, col_t)` covering the matching such that for
/// `l < k` the bipartite graph has no edge `(row_k, col_l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstrainedCertificate {
    ordering: Vec<(usize, usize)>,
}

impl ConstrainedCertificate {
    pub fn ordering(&self) -> &[(usize, usize)] {
        &self.ordering
    }
}

/// Peels the matched-vertex-induced subgraph column by column: a column whose
/// only remaining matched-row neighbor is its partner can go first in the
/// triangular ordering. Among peelable columns the smallest index is taken,
/// so certificates are deterministic. Returns `None` when peeling stalls,
/// which happens exactly when the matching is not constrained.
fn peel_ordering(b: &BipartiteGraph, pairs: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let mut remaining_rows: BTreeSet<usize> = pairs.iter().map(|&(r, _)| r).collect();
    let mut remaining_cols: BTreeSet<usize> = pairs.iter().map(|&(_, c)| c).collect();
    let mut ordering = Vec::with_capacity(pairs.len());
    while !remaining_cols.is_empty() {
        let mut peeled = None;
        'cols: for &c in &remaining_cols {
            let mut unique_row = None;
            for &r in &remaining_rows {
                if b.has_edge(r, c) {
                    if unique_row.is_some() {
                        continue 'cols;
                    }
                    unique_row = Some(r);
                }
            }
            // The partner row is always adjacent, so a degree-one column's
            // unique neighbor is its partner.
            if let Some(r) = unique_row {
                peeled = Some((r, c));
                break;
            }
        }
        let (r, c) = peeled?;
        remaining_rows.remove(&r);
        remaining_cols.remove(&c);
        ordering.push((r, c));
    }
    Some(ordering)
}

/// Looks for an alternating cycle relative to the matching inside the
/// matched-vertex-induced subgraph. One exists exactly when a second perfect
/// matching covers the same vertices. Matching pairs are the nodes; pair `p`
/// reaches pair `q` when the graph has the non-matching edge
/// `(p.row, q.col)`.
fn has_alternating_cycle(b: &BipartiteGraph, pairs: &[(usize, usize)]) -> bool {
    let t = pairs.len();
    let mut successors = vec![Vec::new(); t];
    for (p, &(r, _)) in pairs.iter().enumerate() {
        for (q, &(_, c)) in pairs.iter().enumerate() {
            if p != q && b.has_edge(r, c) {
                successors[p].push(q);
            }
        }
    }
    // 0 = unvisited, 1 = on the current path, 2 = done.
    let mut state = vec![0u8; t];
    fn visit(p: usize, successors: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[p] = 1;
        for &q in &successors[p] {
            match state[q] {
                0 => {
                    if visit(q, successors, state) {
                        return true;
                    }
                }
                1 => return true,
                _ => {}
            }
        }
        state[p] = 2;
        false
    }
    (0..t).any(|p| state[p] == 0 && visit(p, &successors, &mut state))
}

/// Decides whether `m` is a constrained matching of `b`, returning the
/// triangular ordering certificate when it is.
///
/// Both routes (peeling and alternating-cycle uniqueness) are always run and
/// must agree; a disagreement would be an internal bug and panics.
pub fn is_constrained(
    b: &BipartiteGraph,
    m: &Matching,
) -> Result<(bool, Option<ConstrainedCertificate>)> {
    m.check_in(b)?;
    let pairs: Vec<(usize, usize)> = m.edges().collect();
    let ordering = peel_ordering(b, &pairs);
    let unique = !has_alternating_cycle(b, &pairs);
    assert_eq!(
        ordering.is_some(),
        unique,
        "peeling and alternating-cycle uniqueness disagree"
    );
    Ok(match ordering {
        Some(ordering) => (true, Some(ConstrainedCertificate { ordering })),
        None => (false, None),
    })
}

fn kuhn_augment(
    row: usize,
    adjacency: &[Vec<usize>],
    match_col: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &c in &adjacency[row] {
        if seen[c] {
            continue;
        }
        seen[c] = true;
        if match_col[c].is_none()
            || kuhn_augment(match_col[c].unwrap(), adjacency, match_col, seen)
        {
            match_col[c] = Some(row);
            return true;
        }
    }
    false
}

/// Size of a maximum (unconstrained) matching via augmenting paths.
fn max_matching_size(adjacency: &[Vec<usize>], col_count: usize) -> usize {
    let mut match_col = vec![None; col_count + 1];
    let mut size = 0;
    for row in 0..adjacency.len() {
        let mut seen = vec![false; col_count + 1];
        if kuhn_augment(row, adjacency, &mut match_col, &mut seen) {
            size += 1;
        }
    }
    size
}

struct MaxConstrainedSearch<'a> {
    b: &'a BipartiteGraph,
    edges: Vec<(usize, usize)>,
    forbidden: &'a BTreeSet<(usize, usize)>,
    best: Vec<(usize, usize)>,
}

impl MaxConstrainedSearch<'_> {
    fn residual_bound(&self, idx: usize, used_rows: &[bool], used_cols: &[bool]) -> usize {
        let mut adjacency: Vec<Vec<usize>> = Vec::new();
        let mut row_index: Vec<Option<usize>> = vec![None; self.b.row_count() + 1];
        for &(r, c) in &self.edges[idx..] {
            if used_rows[r] || used_cols[c] || self.forbidden.contains(&(r, c)) {
                continue;
            }
            let slot = *row_index[r].get_or_insert_with(|| {
                adjacency.push(Vec::new());
                adjacency.len() - 1
            });
            adjacency[slot].push(c);
        }
        max_matching_size(&adjacency, self.b.col_count())
    }

    fn dfs(
        &mut self,
        idx: usize,
        current: &mut Vec<(usize, usize)>,
        used_rows: &mut [bool],
        used_cols: &mut [bool],
    ) {
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        if idx == self.edges.len() {
            return;
        }
        if current.len() + self.residual_bound(idx, used_rows, used_cols) <= self.best.len() {
            return;
        }
        let (r, c) = self.edges[idx];
        if !used_rows[r] && !used_cols[c] && !self.forbidden.contains(&(r, c)) {
            current.push((r, c));
            // Subsets of constrained matchings are constrained, so a
            // non-constrained partial matching can never be extended into a
            // constrained one.
            if peel_ordering(self.b, current).is_some() {
                used_rows[r] = true;
                used_cols[c] = true;
                self.dfs(idx + 1, current, used_rows, used_cols);
                used_rows[r] = false;
                used_cols[c] = false;
            }
            current.pop();
        }
        self.dfs(idx + 1, current, used_rows, used_cols);
    }
}

/// Exact maximum constrained matching among matchings that avoid the given
/// edges. Constrainedness is always judged against the full bipartite graph:
/// an avoided edge may still appear in an alternative matching that disproves
/// constrainedness.
///
/// Branches on edges in (row, column) lexicographic order with include-first
/// exploration, so the reported witness is the lexicographically smallest
/// maximum and is deterministic.
pub fn max_constrained_matching_avoiding(
    b: &BipartiteGraph,
    forbidden_edges: &BTreeSet<(usize, usize)>,
) -> (usize, Matching) {
    let mut search = MaxConstrainedSearch {
        b,
        edges: b.edges().collect(),
        forbidden: forbidden_edges,
        best: Vec::new(),
    };
    let mut current = Vec::new();
    let mut used_rows = vec![false; b.row_count() + 1];
    let mut used_cols = vec![false; b.col_count() + 1];
    search.dfs(0, &mut current, &mut used_rows, &mut used_cols);
    let witness = Matching::new(search.best).expect("search maintains the matching property");
    (witness.len(), witness)
}

/// Exact maximum constrained matching that uses no diagonal edge `(i, i)`
/// with `i` in `forbidden_diagonal`. Passing every index forbids all
/// self-edges; passing the loop vertices of a graph forbids exactly those.
pub fn max_constrained_matching(
    b: &BipartiteGraph,
    forbidden_diagonal: &BTreeSet<usize>,
) -> (usize, Matching) {
    let forbidden: BTreeSet<(usize, usize)> =
        forbidden_diagonal.iter().map(|&i| (i, i)).collect();
    max_constrained_matching_avoiding(b, &forbidden)
}

/// The triangle number of a loop directed graph: the maximum size of a
/// constrained matching in the bipartite graph of its pattern.
pub fn triangle_number(g: &DirectedGraph) -> usize {
    let b = g
        .to_pattern()
        .to_bipartite()
        .expect("graph patterns contain no free entries");
    max_constrained_matching_avoiding(&b, &BTreeSet::new()).0
}

/// Reads a constrained matching of the graph's bipartite graph as a zero
/// forcing set plus chronological list: unmatched rows stay black from the
/// start, and the certificate ordering replays as forces column -> row.
pub fn matching_to_zfs(g: &DirectedGraph, m: &Matching) -> Result<(BTreeSet<usize>, ForceList)> {
    let b = g
        .to_pattern()
        .to_bipartite()
        .expect("graph patterns contain no free entries");
    let (constrained, certificate) = is_constrained(&b, m)?;
    if !constrained {
        return Err(Error::NotConstrained);
    }
    let matched_rows = m.matched_rows();
    let s: BTreeSet<usize> = g.vertices().filter(|v| !matched_rows.contains(v)).collect();
    let forces = ForceList(
        certificate
            .expect("certificate accompanies every constrained verdict")
            .ordering()
            .iter()
            .map(|&(row, col)| (col, row))
            .collect(),
    );
    debug_assert_eq!(
        forces
            .replay(g, GraphKind::LoopDirected, &s)
            .map(|black| black.len()),
        Ok(g.n())
    );
    Ok((s, forces))
}

/// Reads a chronological list of forces completing `s` under the loop rule
/// as a matching (forced, forcer). The result is guaranteed constrained and
/// this is asserted.
pub fn zfs_to_matching(g: &DirectedGraph, s: &BTreeSet<usize>, forces: &ForceList) -> Result<Matching> {
    let black = forces.replay(g, GraphKind::LoopDirected, s)?;
    if black.len() != g.n() {
        return Err(Error::InvalidForceList(
            "list does not color the whole graph".into(),
        ));
    }
    let m = Matching::new(forces.forces().iter().map(|&(forcer, forced)| (forced, forcer)))
        .map_err(|e| Error::InvalidForceList(e.to_string()))?;
    let b = g
        .to_pattern()
        .to_bipartite()
        .expect("graph patterns contain no free entries");
    let (constrained, _) = is_constrained(&b, &m)?;
    assert!(
        constrained,
        "a valid chronological list always yields a constrained matching"
    );
    Ok(m)
}
