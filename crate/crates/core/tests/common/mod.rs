//! Test-only oracles and generators, kept independent of the library's
//! implementation paths: matchings are enumerated and judged by the
//! definition of constrainedness, closures are computed by simultaneous
//! rounds instead of a sequential scan, and ranks are recomputed from
//! determinants of minors.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::cmp::Reverse;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use zfc_core::{BipartiteGraph, DirectedGraph, GraphKind, RationalMatrix};

pub type PairSet = BTreeSet<(usize, usize)>;

/// Every matching of `b`, including the empty one, each exactly once.
pub fn enumerate_matchings(b: &BipartiteGraph) -> Vec<PairSet> {
    fn recurse(
        edges: &[(usize, usize)],
        start: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<PairSet>,
    ) {
        out.push(current.iter().copied().collect());
        for i in start..edges.len() {
            let (r, c) = edges[i];
            if current.iter().all(|&(r2, c2)| r2 != r && c2 != c) {
                current.push((r, c));
                recurse(edges, i + 1, current, out);
                current.pop();
            }
        }
    }
    let edges: Vec<(usize, usize)> = b.edges().collect();
    let mut out = Vec::new();
    recurse(&edges, 0, &mut Vec::new(), &mut out);
    out
}

/// Constrainedness by definition: a matching is constrained exactly when no
/// other matching covers the same matched vertices. Returns the flag for
/// every matching of `b`.
pub fn oracle_constrained_flags(b: &BipartiteGraph) -> BTreeMap<PairSet, bool> {
    let all = enumerate_matchings(b);
    let mut group_sizes: BTreeMap<(BTreeSet<usize>, BTreeSet<usize>), usize> = BTreeMap::new();
    for m in &all {
        let rows: BTreeSet<usize> = m.iter().map(|&(r, _)| r).collect();
        let cols: BTreeSet<usize> = m.iter().map(|&(_, c)| c).collect();
        *group_sizes.entry((rows, cols)).or_insert(0) += 1;
    }
    all.into_iter()
        .map(|m| {
            let rows: BTreeSet<usize> = m.iter().map(|&(r, _)| r).collect();
            let cols: BTreeSet<usize> = m.iter().map(|&(_, c)| c).collect();
            let unique = group_sizes[&(rows, cols)] == 1;
            (m, unique)
        })
        .collect()
}

/// Maximum size of a constrained matching avoiding the given edges, by full
/// enumeration.
pub fn oracle_max_constrained_avoiding(b: &BipartiteGraph, forbidden: &PairSet) -> usize {
    oracle_constrained_flags(b)
        .into_iter()
        .filter(|(m, constrained)| *constrained && m.is_disjoint(forbidden))
        .map(|(m, _)| m.len())
        .max()
        .unwrap_or(0)
}

/// Closure of the color change rule computed in simultaneous rounds: every
/// applicable force fires at once, repeated until stable.
pub fn closure_oracle(
    g: &DirectedGraph,
    kind: GraphKind,
    initial: &BTreeSet<usize>,
) -> BTreeSet<usize> {
    let mut black = initial.clone();
    loop {
        let mut newly_black = Vec::new();
        for i in g.vertices() {
            if kind == GraphKind::SimpleDirected && !black.contains(&i) {
                continue;
            }
            let whites: Vec<usize> = g.out_neighbors(i).filter(|v| !black.contains(v)).collect();
            if whites.len() == 1 {
                newly_black.push(whites[0]);
            }
        }
        let before = black.len();
        black.extend(newly_black);
        if black.len() == before {
            return black;
        }
    }
}

fn det_laplace(m: &RationalMatrix, rows: &[usize], cols: &[usize]) -> BigRational {
    if rows.is_empty() {
        return BigRational::from_integer(1.into());
    }
    let mut det = BigRational::zero();
    let sub_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        let entry = m.get(rows[0], c);
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&other| other != c)
            .collect();
        let minor = det_laplace(m, sub_rows, &sub_cols);
        let term = entry * &minor;
        if k % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn subsets_of_size(universe: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(
        next: usize,
        universe: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in next..=universe {
            current.push(v);
            recurse(v + 1, universe, size, current, out);
            current.pop();
        }
    }
    recurse(1, universe, size, &mut current, &mut out);
    out
}

/// Rank as the largest order of a nonzero minor, with determinants by
/// Laplace expansion.
pub fn oracle_rank_by_minors(m: &RationalMatrix) -> usize {
    let max_order = m.rows().min(m.cols());
    for k in (1..=max_order).rev() {
        for rows in subsets_of_size(m.rows(), k) {
            for cols in subsets_of_size(m.cols(), k) {
                if !det_laplace(m, &rows, &cols).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// A directed graph on `1..=max_n` vertices where each ordered pair,
/// including loops, appears with a random density.
pub fn random_loop_digraph(rng: &mut ChaCha8Rng, max_n: usize) -> DirectedGraph {
    let n = rng.gen_range(1..=max_n);
    let density: f64 = rng.gen_range(0.1..0.7);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in 1..=n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    DirectedGraph::new(n, edges).unwrap()
}

/// A uniformly random labeled tree (random sequence decoding), returned as
/// the symmetric directed graph with both orientations of every tree edge.
pub fn random_symmetric_tree(rng: &mut ChaCha8Rng, n: usize) -> DirectedGraph {
    assert!(n >= 1);
    if n == 1 {
        return DirectedGraph::new(1, []).unwrap();
    }
    let sequence: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    let mut degree = vec![1usize; n + 1];
    for &s in &sequence {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (1..=n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut undirected = Vec::new();
    for &s in &sequence {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        undirected.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    undirected.push((u, v));
    let edges = undirected.into_iter().flat_map(|(a, b)| [(a, b), (b, a)]);
    DirectedGraph::new(n, edges).unwrap()
}
