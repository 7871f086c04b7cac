//! General position polynomials of finite graphs.
//!
//! A set of vertices is in *general position* when no three of its members
//! lie on a common shortest path. Writing a_i for the number of such sets of
//! size i, the general position polynomial of a graph is Σ a_i x^i; its
//! degree is the gp number, the size of a largest general position set.
//!
//! This crate computes the polynomial three ways — pruned exact enumeration
//! ([`gp_polynomial`]), closed forms for the named families
//! ([`closed_form`]), and inclusion-exclusion over maximal sets
//! ([`psi_inclusion_exclusion`]) — and provides the unimodality and
//! log-concavity predicates used to study the coefficient sequences, the
//! family builders, and the graph operations (disjoint union, join,
//! Cartesian product, corona) with their polynomial identities.
//!
//! ```
//! use gpoly::{gp_polynomial, FamilySpec};
//!
//! let petersen = FamilySpec::Petersen.build().unwrap();
//! let census = gp_polynomial(&petersen);
//! assert_eq!(census.polynomial().to_string(),
//!            "1 + 10 x + 45 x^2 + 90 x^3 + 80 x^4 + 30 x^5 + 5 x^6");
//! assert_eq!(census.gp_number(), 6);
//! ```
//!
//! All counting is exact: coefficients are arbitrary-precision integers and
//! there is no floating point anywhere. Values are immutable after
//! construction and safe to share across threads; the enumeration engine
//! may fan its top-level branches out over a thread pool, with a result
//! identical to the sequential one.

mod closed;
mod distance;
mod engine;
mod error;
mod family;
mod graph;
mod poly;
mod tree;
mod vertex_set;

pub use closed::{
    broom_threshold, clique_polynomial, closed_form, grid_maximum_gp_count, icliques_polynomial,
    psi_join,
};
pub use distance::{distance_matrix, Distance, DistanceMatrix};
pub use engine::{
    collinear_triples, gp_number, gp_polynomial, intersection_census, is_general_position,
    is_general_position_with, maximal_gp_sets, psi_inclusion_exclusion,
    psi_inclusion_exclusion_with_limit, CollinearTriples, GpCensus, IntersectionCensus,
    DEFAULT_MAX_MAXIMAL_SETS,
};
pub use error::{Error, Result};
pub use family::{
    broom, complete, complete_bipartite, cycle, kneser2, path, petersen, spider, tstar, FamilySpec,
};
pub use graph::Graph;
pub use poly::{binomial, double_factorial_odd, Polynomial};
pub use tree::{
    tree_canonical_code, tree_centers, trees_equal_nonisomorphic_check, trees_isomorphic,
    TreePairCheck,
};
pub use vertex_set::VertexSet;
