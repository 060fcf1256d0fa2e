//! Irreducible cyclic orbit codes on finite Grassmannians.
//!
//! The crate builds constant dimension codes as orbits of cyclic matrix
//! groups generated by companion matrices of irreducible polynomials,
//! predicts their cardinality and minimum distance from difference
//! multisets of field exponents, constructs spread codes, computes
//! Plücker embeddings and their orbits, and decides ball and Schubert
//! membership from Plücker coordinates.
//!
//! Everything is exact arithmetic over prime fields F_q; all values are
//! immutable after construction and safe to share across threads.

pub mod error;
mod factor;
pub mod gf;
pub mod linalg;
pub mod orbit;
pub mod pluecker;

pub use error::{Error, Result};
pub use gf::{ExtElem, ExtField, PolyFq, DEFAULT_LOG_CAP};
pub use linalg::{companion_matrix, grassmannian, vector_mul, MatFq, Subspace};
pub use orbit::{
    build_spread_code, design_starting_point, difference_multiset, enumerate_orbit, exponent_set,
    min_distance_from_start, min_distance_pairwise, predict_params, predict_params_nonprimitive,
    predict_params_primitive, spread_starting_point, vector_orbit_partition, DesignResult,
    DifferenceMultiset, OrbitCode, Prediction, VectorOrbitPartition,
};
pub use pluecker::{
    ball_center0_violation, ball_membership, ball_membership_center0, ball_membership_via_center,
    extend_to_basis, grassmann_pluecker_ok, multi_indices, multiindex_dominated, multiindex_leq,
    pluecker_embed, pluecker_orbit, schubert_membership, schubert_membership_vanishing,
    schubert_violation, wedge_from_subspace, wedge_star, wedge_star_alpha, wedge_to_point, Flag,
    MultiIndex, PlueckerPoint, WedgeElement,
};
