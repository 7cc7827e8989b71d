//! Exact inertia of weighted forests, cycles, and unicyclic graphs.
//!
//! The inertia of a weighted graph is the triple of positive, negative and
//! zero eigenvalue counts of its adjacency matrix. For forests it is
//! determined by the matching number; weighted cycles have a closed form
//! driven by the exact cancellation pattern of their weight products; a
//! general unicyclic graph decomposes along a cycle vertex saturated in its
//! own pendant tree. Every result can be cross-checked against an
//! independent congruence-elimination oracle, and the characterization
//! theorems (minimal index, two positive/negative eigenvalues, small rank)
//! are verified by exhaustive enumeration of small graphs.
//!
//! All arithmetic is exact. The core is generic over the [`Scalar`] type;
//! the [`Rat`] alias (arbitrary-precision rationals) is what the CLI and
//! verification sweeps instantiate, since the cycle classification hinges
//! on equalities that floating point cannot test.

#![forbid(unsafe_code)]

pub mod canon;
pub mod charpoly;
pub mod congruence;
pub mod error;
pub mod family;
pub mod graph;
pub mod inertia;
pub mod io;
pub mod matching;
pub mod scalar;
pub mod theorems;
pub mod verify;

pub use canon::{
    canonical_form, enumerate_forests, enumerate_trees, enumerate_unicyclic, CanonicalGraph,
};
pub use charpoly::{char_poly, interpolation_charpoly, sachs_coefficients, CharPoly};
pub use congruence::{congruence_inertia, SymMatrix};
pub use error::{Error, Result};
pub use family::{make_family, Family};
pub use graph::{
    build_graph, classify_structure, Edge, GraphClass, RootedPendantTree, WeightedGraph,
};
pub use inertia::{
    classify_cycle, cycle_inertia, forest_inertia, inertia, reduce_pendant, reduce_twin,
    unicyclic_inertia, CycleType, CycleWeights, Inertia,
};
pub use matching::{
    is_saturated, matching_number, max_matching_forest, max_matching_unicyclic, MatchingResult,
};
pub use scalar::Scalar;
pub use theorems::{
    census, check_max_nullity, check_min_negative_index, check_min_positive_index,
    check_negative_index_two, check_nullity_n4, check_positive_index_two, check_rank_2_3,
    check_rank_5, CensusEntry, CensusFilter, Verdict,
};
pub use verify::{run_verification, VerificationReport};

/// Exact rational scalar used by the CLI and the verification sweeps.
pub type Rat = num_rational::BigRational;

/// Weighted graph over exact rationals.
pub type RatGraph = WeightedGraph<Rat>;

/// Symmetric rational matrix.
pub type RatMatrix = SymMatrix<Rat>;

/// Characteristic polynomial with exact rational coefficients.
pub type RatCharPoly = CharPoly<Rat>;
