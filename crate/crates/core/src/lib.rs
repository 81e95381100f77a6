//! Threshold set representations of bounded-degree uniform hypergraphs.
//!
//! A hypergraph on vertices `0..n` is represented by assigning each vertex
//! a finite set so that an r-tuple of vertices is an edge exactly when
//! their sets share at least `k` elements. This crate builds such
//! representations with a randomized construction whose ground-set size is
//! `O(delta^3 ln n)` (better for linear hypergraphs), verifies candidates
//! exhaustively, computes exact minima on tiny instances by search, and
//! evaluates the counting argument showing sizes `(delta/4) ln n` are
//! unavoidable.
//!
//! The pipeline: [`decompose`] splits the edge set into matchings,
//! [`build_representation`] certifies one random family per matching and
//! assembles vertex sets from segment-shifted unions, resampling until
//! [`verify_representation`] accepts. [`theta_k_exact`] and
//! [`theta_tilde_exact`] give ground truth where exhaustive search is
//! feasible, and the [`counting`] module certifies the lower bound.

pub mod bounds;
pub mod builder;
pub mod chernoff;
pub mod counting;
pub mod decompose;
pub mod error;
pub mod generate;
pub mod hypergraph;
pub mod oracle;
pub mod params;
pub mod representation;
pub mod verify;

mod seed;
mod sets;

pub use bounds::{check_size_against_bound, theorem1_bound, A, EPSILON};
pub use builder::{
    assemble_representation, build_representation, check_linear_ratio, BuildOptions,
};
pub use chernoff::{gen_verified_family, verify_family, ChernoffFamily, FamilyParams};
pub use counting::{verify_counting_argument, CountReport};
pub use decompose::{decompose, verify_decomposition, MatchingDecomposition};
pub use error::{Error, Result};
pub use generate::{gen_random_linear, gen_union_of_matchings};
pub use hypergraph::{parse_hypergraph, Hypergraph};
pub use oracle::{
    representation_from_supports, theta_k_exact, theta_tilde_exact, OracleLimits, OracleResult,
};
pub use params::{select_params, Mode, RepParams};
pub use representation::{parse_representation, RepMeta, Representation};
pub use verify::{sampled_verify, verify_representation, VerificationReport};
