//! Acceptance suite: one test per criterion, each pinned to its stated
//! tolerance and printing a PASS line (visible with `-- --nocapture`).

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{
    enumerate_matchings, oracle_constrained_flags, random_loop_digraph, random_symmetric_tree,
    PairSet,
};
use zfc_core::{
    derive_seed, is_constrained, is_zero_forcing_set, kalman_rank, kalman_trial,
    matching_to_zfs, max_constrained_matching, min_input_set, sample_realization,
    selfless_matching_input_set, strong_matching, strong_simple, strong_zf, tree_min_zero_forcing_set,
    triangle_number, zero_forcing_number, zfs_to_matching, DirectedGraph, GraphKind, Matching,
    RationalMatrix, SystemSpec,
};

/// Three-vertex loop digraph with a loop on 1, edges 2->1, 1->2, 1->3, 2->3.
fn demo_loop_graph() -> DirectedGraph {
    DirectedGraph::new(3, [(1, 1), (2, 1), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// The same graph without its loop; also the counterexample graph for the
/// self-less matching correction.
fn undamped_graph() -> DirectedGraph {
    DirectedGraph::new(3, [(2, 1), (1, 2), (1, 3), (2, 3)]).unwrap()
}

fn spec(g: &DirectedGraph, s: &BTreeSet<usize>) -> SystemSpec {
    SystemSpec::new(g.clone(), GraphKind::LoopDirected, s.iter().copied()).unwrap()
}

fn powerset(n: usize) -> Vec<BTreeSet<usize>> {
    (0..(1usize << n))
        .map(|mask| (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect())
        .collect()
}

/// Graph stream shared by criteria 5 and 7.
fn agreement_graphs() -> Vec<DirectedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    (0..50).map(|_| random_loop_digraph(&mut rng, 5)).collect()
}

/// Graph stream shared by criteria 6 and 7.
fn self_damped_graphs() -> Vec<DirectedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    (0..50)
        .map(|_| random_loop_digraph(&mut rng, 5).add_all_loops())
        .collect()
}

#[test]
fn c01_loop_and_simple_verdicts_on_the_worked_example() {
    let started = Instant::now();
    let g = demo_loop_graph();
    let s = BTreeSet::from([1]);
    assert!(strong_zf(&spec(&g, &s)).unwrap().verdict);
    assert!(!strong_simple(&g.strip_loops(), &s).unwrap().verdict);
    assert!(
        started.elapsed() < Duration::from_secs(1),
        "criterion 1 exceeded its 1 s budget"
    );
    println!("acceptance criterion 01 (loop-rule true / simple-rule false on the worked example): PASS");
}

#[test]
fn c02_selfless_matching_correction_on_the_counterexample_graph() {
    let started = Instant::now();
    let g = undamped_graph();
    let b = g
        .to_pattern()
        .star_diagonal()
        .unwrap()
        .to_bipartite()
        .unwrap();

    // (a) Exactly three self-less 2-matchings, none constrained.
    let selfless_two: BTreeSet<PairSet> = enumerate_matchings(&b)
        .into_iter()
        .filter(|m| m.len() == 2 && m.iter().all(|&(r, c)| r != c))
        .collect();
    let expected: BTreeSet<PairSet> = [
        vec![(1, 2), (2, 1)],
        vec![(1, 2), (3, 1)],
        vec![(2, 1), (3, 2)],
    ]
    .into_iter()
    .map(|m| m.into_iter().collect())
    .collect();
    assert_eq!(selfless_two, expected);
    for pairs in &selfless_two {
        let m = Matching::new(pairs.iter().copied()).unwrap();
        let (constrained, _) = is_constrained(&b, &m).unwrap();
        assert!(!constrained, "{pairs:?} should not be constrained");
    }

    // (b) Maximum constrained self-less matching has size 1.
    let all_indices: BTreeSet<usize> = [1, 2, 3].into();
    let (size, _) = max_constrained_matching(&b, &all_indices);
    assert_eq!(size, 1);

    // (c) Both decision routes accept inputs {1}, so the self-less-matching
    // input set (size 2) is valid but not minimum.
    let s = BTreeSet::from([1]);
    assert!(strong_zf(&spec(&g, &s)).unwrap().verdict);
    assert!(strong_matching(&spec(&g, &s)).unwrap().verdict);
    let (corollary_set, _) = selfless_matching_input_set(&g).unwrap();
    assert_eq!(corollary_set.len(), 2);
    assert!(strong_zf(&spec(&g, &corollary_set)).unwrap().verdict);
    let (min_size, _, _) = min_input_set(&g, GraphKind::LoopDirected).unwrap();
    assert_eq!(min_size, 1);

    assert!(
        started.elapsed() < Duration::from_secs(1),
        "criterion 2 exceeded its 1 s budget"
    );
    println!("acceptance criterion 02 (self-less 2-matchings unconstrained, max self-less size 1, inputs {{1}} suffice): PASS");
}

#[test]
fn c03_triangle_number_plus_zero_forcing_number_is_the_order() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for round in 0..200 {
        let g = random_loop_digraph(&mut rng, 6);
        let (z, _) = zero_forcing_number(&g, GraphKind::LoopDirected).unwrap();
        assert_eq!(
            triangle_number(&g) + z,
            g.n(),
            "violation in round {round} on {g:?}"
        );
    }
    assert_eq!(triangle_number(&DirectedGraph::empty()), 0);
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "criterion 3 exceeded its 60 s budget: {elapsed:?}"
    );
    println!("acceptance criterion 03 (triangle number + zero forcing number = order, 200 graphs): PASS");
}

#[test]
fn c04_matching_zero_forcing_bijection_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut checked = 0usize;
    for _ in 0..100 {
        let g = random_loop_digraph(&mut rng, 5);
        let b = g.to_pattern().to_bipartite().unwrap();
        for (pairs, oracle_constrained) in oracle_constrained_flags(&b) {
            let m = Matching::new(pairs.iter().copied()).unwrap();
            let (constrained, _) = is_constrained(&b, &m).unwrap();
            assert_eq!(constrained, oracle_constrained);
            if !constrained {
                continue;
            }
            let (s, forces) = matching_to_zfs(&g, &m).unwrap();
            let black = forces.replay(&g, GraphKind::LoopDirected, &s).unwrap();
            assert_eq!(black.len(), g.n(), "force list does not complete the graph");
            let back = zfs_to_matching(&g, &s, &forces).unwrap();
            assert_eq!(back, m, "round trip lost the matching");
            checked += 1;
        }
    }
    assert!(checked > 100, "too few constrained matchings exercised");
    println!("acceptance criterion 04 (matching <-> zero-forcing round trip on {checked} constrained matchings): PASS");
}

#[test]
fn c05_decision_routes_agree_on_every_input_set() {
    let mut cases = 0usize;
    for g in agreement_graphs() {
        for s in powerset(g.n()) {
            let zf = strong_zf(&spec(&g, &s)).unwrap().verdict;
            let matching = strong_matching(&spec(&g, &s)).unwrap().verdict;
            assert_eq!(zf, matching, "routes disagree on {g:?} with inputs {s:?}");
            cases += 1;
        }
    }
    println!("acceptance criterion 05 (zero-forcing and matching routes agree on {cases} cases): PASS");
}

#[test]
fn c06_self_damped_systems_reduce_to_the_simple_rule() {
    for g in self_damped_graphs() {
        let stripped = g.strip_loops();
        for s in powerset(g.n()) {
            assert_eq!(
                strong_zf(&spec(&g, &s)).unwrap().verdict,
                strong_simple(&stripped, &s).unwrap().verdict,
                "equivalence fails on {g:?} with inputs {s:?}"
            );
        }
        let (size, witness, _) = min_input_set(&g, GraphKind::LoopDirected).unwrap();
        let (z, _) = zero_forcing_number(&stripped, GraphKind::SimpleDirected).unwrap();
        assert_eq!(size, z);
        assert!(strong_simple(&stripped, &witness).unwrap().verdict);
    }
    println!("acceptance criterion 06 (self-damped equivalence and minimum input sizes on 50 graphs): PASS");
}

#[test]
fn c07_strong_verdicts_are_kalman_sound() {
    // Hand-worked controllability block for one fixed realization.
    let a1 = RationalMatrix::from_i64_rows(&[&[-3, 1, 0], &[9, 0, 0], &[-5, -4, 0]]);
    let b1 = RationalMatrix::from_i64_rows(&[&[1], &[0], &[0]]);
    let ab = a1.mul(&b1).unwrap();
    let aab = a1.mul(&ab).unwrap();
    let c = RationalMatrix::hconcat(&[b1.clone(), ab, aab]).unwrap();
    let expected = RationalMatrix::from_i64_rows(&[&[1, -3, 18], &[0, 9, -27], &[0, -5, -21]]);
    assert_eq!(c, expected);
    assert_eq!(c.rank(), 3);
    assert_eq!(kalman_rank(&a1, &b1).unwrap(), 3);

    let mut cases = 0usize;
    let mut case_index = 0u64;
    let mut run = |g: &DirectedGraph, s: &BTreeSet<usize>| {
        case_index += 1;
        if s.is_empty() {
            // Never strongly controllable for n >= 1; nothing to sample.
            return;
        }
        let sp = spec(g, s);
        if !strong_zf(&sp).unwrap().verdict {
            return;
        }
        let report = kalman_trial(&sp, 100, derive_seed(707, case_index)).unwrap();
        assert!(report.strong_verdict);
        assert_eq!(
            report.controllable_count, 100,
            "uncontrollable realization under a strong verdict on {g:?} inputs {s:?}"
        );
        cases += 1;
    };

    run(&demo_loop_graph(), &BTreeSet::from([1]));
    run(&undamped_graph(), &BTreeSet::from([1]));
    for g in agreement_graphs() {
        for s in powerset(g.n()) {
            run(&g, &s);
        }
    }
    for g in self_damped_graphs() {
        for s in powerset(g.n()) {
            run(&g, &s);
        }
    }
    assert!(cases > 100, "too few strong cases exercised");
    println!("acceptance criterion 07 (Kalman soundness, {cases} strong cases x 100 exact realizations): PASS");
}

#[test]
fn c08_realization_ranks_respect_the_zero_forcing_lower_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let mut samples_done = 0u64;
    for _ in 0..20 {
        let g = random_loop_digraph(&mut rng, 6);
        let (z, _) = zero_forcing_number(&g, GraphKind::LoopDirected).unwrap();
        let p = g.to_pattern();
        for _ in 0..5 {
            let a = sample_realization(&p, derive_seed(808, samples_done));
            assert!(
                a.rank() >= g.n() - z,
                "rank bound violated on {g:?} with sample {samples_done}"
            );
            samples_done += 1;
        }
    }
    assert_eq!(samples_done, 100);
    println!("acceptance criterion 08 (realization rank >= order - zero forcing number, 100 samples): PASS");
}

#[test]
fn c09_tree_algorithm_matches_brute_force_and_scales() {
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let t = random_symmetric_tree(&mut rng, n);
        let (z_tree, witness) = tree_min_zero_forcing_set(&t).unwrap();
        let (z_brute, _) = zero_forcing_number(&t, GraphKind::SimpleDirected).unwrap();
        assert_eq!(z_tree, z_brute, "tree algorithm disagrees on {t:?}");
        assert!(is_zero_forcing_set(&t, GraphKind::SimpleDirected, &witness).unwrap());
    }

    let big = random_symmetric_tree(&mut rng, 1000);
    let started = Instant::now();
    let (z, witness) = tree_min_zero_forcing_set(&big).unwrap();
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "criterion 9 exceeded its 1 s budget on n=1000: {elapsed:?}"
    );
    assert_eq!(witness.len(), z);
    assert!(is_zero_forcing_set(&big, GraphKind::SimpleDirected, &witness).unwrap());
    println!("acceptance criterion 09 (tree algorithm: 100 brute-force agreements, n=1000 in {elapsed:?}): PASS");
}

#[test]
fn c10_reports_are_byte_identical_across_runs() {
    let g = demo_loop_graph();
    let s = BTreeSet::from([1]);

    let kalman_a = serde_json::to_string(&kalman_trial(&spec(&g, &s), 100, 42).unwrap()).unwrap();
    let kalman_b = serde_json::to_string(&kalman_trial(&spec(&g, &s), 100, 42).unwrap()).unwrap();
    assert_eq!(kalman_a, kalman_b);

    let zf_a = serde_json::to_string(&strong_zf(&spec(&g, &s)).unwrap()).unwrap();
    let zf_b = serde_json::to_string(&strong_zf(&spec(&g, &s)).unwrap()).unwrap();
    assert_eq!(zf_a, zf_b);

    let matching_a = serde_json::to_string(&strong_matching(&spec(&g, &s)).unwrap()).unwrap();
    let matching_b = serde_json::to_string(&strong_matching(&spec(&g, &s)).unwrap()).unwrap();
    assert_eq!(matching_a, matching_b);

    let min_a = min_input_set(&g, GraphKind::LoopDirected).unwrap();
    let min_b = min_input_set(&g, GraphKind::LoopDirected).unwrap();
    assert_eq!(min_a, min_b);

    // Different seeds must reach the sampler: the witness streams differ.
    let r1 = sample_realization(&g.to_pattern(), 1);
    let r2 = sample_realization(&g.to_pattern(), 2);
    assert_ne!(r1, r2);

    println!("acceptance criterion 10 (fixed seeds give byte-identical JSON reports): PASS");
}
