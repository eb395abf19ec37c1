//! Zero forcing sets, constrained matchings and strong structural
//! controllability of networked linear systems.
//!
//! The crate decides whether a system whose state pattern comes from a
//! directed graph is controllable for *every* choice of interaction
//! strengths, computes minimum input sets (exactly for small graphs, in
//! polynomial time for self-damped systems with a tree structure), and
//! validates every structural verdict against an exact-arithmetic Kalman
//! rank oracle.

pub mod bipartite;
pub mod controllability;
pub mod error;
pub mod graph;
pub mod matching;
pub mod matrix;
pub mod pattern;
pub mod zero_forcing;

pub use bipartite::BipartiteGraph;
pub use controllability::{
    derive_seed, input_pattern, kalman_rank, kalman_trial, min_input_set, sample_realization,
    selfless_matching_input_set, strong_matching, strong_simple, strong_zf, DecisionMethod,
    Evidence, KalmanReport, MinInputMethod, StrongControllabilityReport, SystemSpec,
    UncontrollableWitness,
};
pub use error::{Error, Result};
pub use graph::{graph_to_json, parse_graph_json, DirectedGraph, GraphKind};
pub use matching::{
    is_constrained, matching_to_zfs, max_constrained_matching,
    max_constrained_matching_avoiding, triangle_number, zfs_to_matching, ConstrainedCertificate,
    Matching,
};
pub use matrix::RationalMatrix;
pub use pattern::{Pattern, PatternEntry};
pub use zero_forcing::{
    find_force_list_avoiding, is_zero_forcing_set, propagate, tree_min_rank,
    tree_min_zero_forcing_set, zero_forcing_number, ForceList, PropagationResult,
};
