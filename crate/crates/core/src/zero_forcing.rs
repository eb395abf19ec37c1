//! Color change rules, propagation to closure, zero forcing sets and
//! numbers, chronological force lists, and the polynomial-time minimum zero
//! forcing set algorithm for symmetric trees.
//!
//! Two rules are supported. Under the loop rule a vertex with exactly one
//! white out-neighbor (possibly itself) forces that neighbor black,
//! regardless of its own color. Under the simple rule the forcing vertex
//! must itself be black.

use std::collections::{BTreeSet, HashSet, VecDeque};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, GraphKind};

/// A chronological list of forces: ordered `(forcer, forced)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ForceList(pub Vec<(usize, usize)>);

impl ForceList {
    pub fn forces(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Replays the list step by step under the declared rule, checking the
    /// rule's premise at every force, and returns the final black set.
    ///
    /// This validates the force-list invariants: a vertex is forced at most
    /// once, an initially black vertex is never forced, and under the simple
    /// rule every forcer is black when it forces.
    pub fn replay(
        &self,
        g: &DirectedGraph,
        kind: GraphKind,
        initial: &BTreeSet<usize>,
    ) -> Result<BTreeSet<usize>> {
        g.check_kind(kind)?;
        check_vertices(g, initial)?;
        let mut black = initial.clone();
        for (step, &(forcer, forced)) in self.0.iter().enumerate() {
            for v in [forcer, forced] {
                if v < 1 || v > g.n() {
                    return Err(Error::InvalidForceList(format!(
                        "step {}: vertex {v} out of range",
                        step + 1
                    )));
                }
            }
            if black.contains(&forced) {
                return Err(Error::InvalidForceList(format!(
                    "step {}: vertex {forced} is already black",
                    step + 1
                )));
            }
            if kind == GraphKind::SimpleDirected && !black.contains(&forcer) {
                return Err(Error::InvalidForceList(format!(
                    "step {}: forcer {forcer} is white under the simple rule",
                    step + 1
                )));
            }
            let white: Vec<usize> = g
                .out_neighbors(forcer)
                .filter(|v| !black.contains(v))
                .collect();
            if white != [forced] {
                return Err(Error::InvalidForceList(format!(
                    "step {}: {forced} is not the unique white out-neighbor of {forcer}",
                    step + 1
                )));
            }
            black.insert(forced);
        }
        Ok(black)
    }
}

/// Outcome of running a color change rule to its fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropagationResult {
    pub complete: bool,
    pub black: BTreeSet<usize>,
    pub forces: ForceList,
}

fn check_vertices(g: &DirectedGraph, set: &BTreeSet<usize>) -> Result<()> {
    for &v in set {
        if v < 1 || v > g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    Ok(())
}

fn out_adjacency(g: &DirectedGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n() + 1];
    for (u, v) in g.edges() {
        adj[u].push(v);
    }
    adj
}

/// Runs the color change rule of `kind` from `initial` to its fixed point.
///
/// The force list is deterministic: candidate forcers are scanned in
/// ascending vertex id and the scan restarts at vertex 1 after every force.
/// The final black set is independent of that order; only the list varies.
pub fn propagate(
    g: &DirectedGraph,
    kind: GraphKind,
    initial: &BTreeSet<usize>,
) -> Result<PropagationResult> {
    g.check_kind(kind)?;
    check_vertices(g, initial)?;
    let n = g.n();
    let adj = out_adjacency(g);
    let mut black = vec![false; n + 1];
    for &v in initial {
        black[v] = true;
    }
    let mut forces = Vec::new();
    'scan: loop {
        for i in 1..=n {
            if kind == GraphKind::SimpleDirected && !black[i] {
                continue;
            }
            let mut whites = adj[i].iter().filter(|&&j| !black[j]);
            if let (Some(&j), None) = (whites.next(), whites.next()) {
                black[j] = true;
                forces.push((i, j));
                continue 'scan;
            }
        }
        break;
    }
    let black_set: BTreeSet<usize> = (1..=n).filter(|&v| black[v]).collect();
    Ok(PropagationResult {
        complete: black_set.len() == n,
        black: black_set,
        forces: ForceList(forces),
    })
}

/// True when starting from exactly `s` black turns the whole graph black.
pub fn is_zero_forcing_set(
    g: &DirectedGraph,
    kind: GraphKind,
    s: &BTreeSet<usize>,
) -> Result<bool> {
    Ok(propagate(g, kind, s)?.complete)
}

/// The zero forcing number together with a minimum witness, by exhaustive
/// subset enumeration in increasing cardinality (lexicographic within a
/// cardinality, so the witness is deterministic).
pub fn zero_forcing_number(g: &DirectedGraph, kind: GraphKind) -> Result<(usize, BTreeSet<usize>)> {
    g.check_kind(kind)?;
    let n = g.n();
    for k in 0..=n {
        for combo in (1..=n).combinations(k) {
            let s: BTreeSet<usize> = combo.into_iter().collect();
            if is_zero_forcing_set(g, kind, &s)? {
                return Ok((k, s));
            }
        }
    }
    unreachable!("the full vertex set is always a zero forcing set")
}

struct AvoidSearch<'a> {
    adj: &'a [Vec<usize>],
    kind: GraphKind,
    forbidden: &'a BTreeSet<usize>,
    n: usize,
    dead: HashSet<Vec<u64>>,
}

impl AvoidSearch<'_> {
    fn words(black: &[bool]) -> Vec<u64> {
        let mut words = vec![0u64; black.len() / 64 + 1];
        for (v, &is_black) in black.iter().enumerate() {
            if is_black {
                words[v / 64] |= 1 << (v % 64);
            }
        }
        words
    }

    fn dfs(&mut self, black: &mut Vec<bool>, count: usize, forces: &mut Vec<(usize, usize)>) -> bool {
        if count == self.n {
            return true;
        }
        let key = Self::words(black);
        if self.dead.contains(&key) {
            return false;
        }
        for i in 1..=self.n {
            if self.kind == GraphKind::SimpleDirected && !black[i] {
                continue;
            }
            let mut whites = self.adj[i].iter().filter(|&&j| !black[j]);
            let (Some(&j), None) = (whites.next(), whites.next()) else {
                continue;
            };
            if i == j && self.forbidden.contains(&i) {
                continue;
            }
            black[j] = true;
            forces.push((i, j));
            if self.dfs(black, count + 1, forces) {
                return true;
            }
            forces.pop();
            black[j] = false;
        }
        self.dead.insert(key);
        false
    }
}

/// Searches for a complete chronological list of forces from `s` that never
/// contains a self-force `i -> i` with `i` in `forbidden`.
///
/// The search backtracks over every applicable force at every step, so an
/// absent result means no such list exists at all; in particular `None` is
/// returned when `s` is not a zero forcing set. A greedy pass would not be
/// enough: the first complete list found may use a forbidden self-force even
/// though another ordering avoids it.
pub fn find_force_list_avoiding(
    g: &DirectedGraph,
    kind: GraphKind,
    s: &BTreeSet<usize>,
    forbidden: &BTreeSet<usize>,
) -> Result<Option<ForceList>> {
    g.check_kind(kind)?;
    check_vertices(g, s)?;
    check_vertices(g, forbidden)?;
    let n = g.n();
    let adj = out_adjacency(g);
    let mut black = vec![false; n + 1];
    for &v in s {
        black[v] = true;
    }
    let mut search = AvoidSearch {
        adj: &adj,
        kind,
        forbidden,
        n,
        dead: HashSet::new(),
    };
    let mut forces = Vec::new();
    if search.dfs(&mut black, s.len(), &mut forces) {
        Ok(Some(ForceList(forces)))
    } else {
        Ok(None)
    }
}

/// Undirected adjacency of a symmetric, loop-free, connected graph whose
/// underlying undirected graph is a tree.
fn symmetric_tree_adjacency(t: &DirectedGraph) -> Result<Vec<Vec<usize>>> {
    let n = t.n();
    if n == 0 {
        return Err(Error::NotATree("graph has no vertices".into()));
    }
    if t.has_loops() {
        return Err(Error::NotATree("loops present".into()));
    }
    if !t.is_symmetric() {
        return Err(Error::NotATree(
            "directed edges are not paired with their reverses".into(),
        ));
    }
    if t.edge_count() != 2 * (n - 1) {
        return Err(Error::NotATree(format!(
            "expected {} undirected edges, found {}",
            n - 1,
            t.edge_count() / 2
        )));
    }
    let mut adj = vec![Vec::new(); n + 1];
    for (u, v) in t.edges() {
        if u < v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut seen = vec![false; n + 1];
    let mut queue = VecDeque::from([1usize]);
    seen[1] = true;
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    if reached != n {
        return Err(Error::NotATree("graph is disconnected".into()));
    }
    Ok(adj)
}

/// Minimum zero forcing set of a symmetric tree under the simple rule, in
/// polynomial time.
///
/// The tree is covered by a minimum number of vertex-disjoint paths: a
/// maximum set of tree edges in which every vertex keeps degree at most two
/// is selected by dynamic programming from the leaves, and each resulting
/// path contributes one endpoint (its smallest) to the witness. The number
/// of paths equals the zero forcing number.
pub fn tree_min_zero_forcing_set(t: &DirectedGraph) -> Result<(usize, BTreeSet<usize>)> {
    let adj = symmetric_tree_adjacency(t)?;
    let n = t.n();
    let root = 1;

    let mut order = Vec::with_capacity(n);
    let mut parent = vec![0usize; n + 1];
    let mut seen = vec![false; n + 1];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }

    // For each vertex: maximum selected edges in its subtree with its own
    // selected degree capped at one (`capped`) or two (`full`). The gain of
    // taking a child edge is always 0 or 1, so taking the smallest-id
    // children with gain 1 up to the cap is optimal and deterministic.
    let mut capped = vec![0usize; n + 1];
    let mut full = vec![0usize; n + 1];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut picked_full: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut picked_capped: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &v in order.iter().rev() {
        children[v] = adj[v].iter().copied().filter(|&w| w != parent[v]).collect();
        let base: usize = children[v].iter().map(|&c| full[c]).sum();
        let gainful: Vec<usize> = children[v]
            .iter()
            .copied()
            .filter(|&c| capped[c] + 1 > full[c])
            .collect();
        picked_full[v] = gainful.iter().copied().take(2).collect();
        picked_capped[v] = gainful.iter().copied().take(1).collect();
        full[v] = base + picked_full[v].len();
        capped[v] = base + picked_capped[v].len();
    }

    let mut used = vec![Vec::new(); n + 1];
    let mut stack = vec![(root, false)];
    let mut used_count = 0usize;
    while let Some((v, is_capped)) = stack.pop() {
        let picked = if is_capped {
            &picked_capped[v]
        } else {
            &picked_full[v]
        };
        for &c in &children[v] {
            if picked.contains(&c) {
                used[v].push(c);
                used[c].push(v);
                used_count += 1;
                stack.push((c, true));
            } else {
                stack.push((c, false));
            }
        }
    }

    let mut visited = vec![false; n + 1];
    let mut witness = BTreeSet::new();
    for v in 1..=n {
        if visited[v] || used[v].len() > 1 {
            continue;
        }
        witness.insert(v);
        let (mut prev, mut cur) = (0usize, v);
        loop {
            visited[cur] = true;
            match used[cur].iter().find(|&&w| w != prev) {
                Some(&next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
    }

    let z = n - used_count;
    debug_assert_eq!(witness.len(), z);
    debug_assert!(matches!(
        is_zero_forcing_set(t, GraphKind::SimpleDirected, &witness),
        Ok(true)
    ));
    Ok((z, witness))
}

/// Minimum rank of a symmetric tree: vertex count minus its zero forcing
/// number.
pub fn tree_min_rank(t: &DirectedGraph) -> Result<usize> {
    let (z, _) = tree_min_zero_forcing_set(t)?;
    Ok(t.n() - z)
}
