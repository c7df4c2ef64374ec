//! Common Prefix on trees.
//!
//! Every vertex of a tree carries a set of labels; choosing one permutation
//! per vertex earns, on each edge, the length of the longest common prefix of
//! its endpoints' permutations. This crate provides
//!
//! - the instance model, benefit evaluation and text formats ([`instance`]),
//! - an exact memoized solver over connected subtrees plus a brute-force
//!   oracle ([`exact`]),
//! - the layered `(1 - 1/L)` approximation for binary trees ([`layered`]),
//! - star / Nested Neighborhoods / edge-biclique reductions ([`star`]),
//! - subtree counting and harmonic-ratio reports ([`analysis`]),
//! - seeded generators ([`gen`]).

pub mod analysis;
pub mod error;
pub mod exact;
pub mod gen;
pub mod instance;
pub mod layered;
pub mod star;

pub use error::{Diagnostic, Error, Result};
pub use exact::{oracle_solve, reconstruct, solve_exact, ExactLimits, ExactResult, ExactSolver};
pub use instance::{
    evaluate, lcp_length, parse_cp, serialize_cp, validate, Assignment, BenefitReport, CpInstance, Label, RawInstance,
};
pub use layered::{choose_block_height, decompose, solve_approx, ApproxResult, LayerDecomposition};
pub use star::{
    biclique_to_nn, extract_prefix_biclique, nn_to_star, parse_nn, serialize_nn, solve_ebcs_exact, solve_nn_exact,
    star_to_nn, tight_family, translate_cp_to_nn, translate_nn_to_cp, Biclique, NnInstance, NnSolution,
};
