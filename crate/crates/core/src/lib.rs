//! Exact tropical convexity.
//!
//! Max-plus and min-plus spans of finitely many points, the residuation
//! bracket and domination, dominator matrices and Kleene stars, and a
//! decision procedure for whether a max-plus polytope is a polytrope (convex
//! in the ordinary Euclidean sense). All arithmetic is over exact rationals.

pub mod cli;
pub mod error;
pub mod kleene;
pub mod polytope;
pub mod random;
pub mod residuation;
pub mod scalar;
pub mod semiring;

pub use error::Error;
pub use kleene::{
    classify, dominator, dominator_dual, duality_chi, duality_rho, is_kleene_star, is_min_plus_convex,
    min_plus_hull, verify_dominator_relation, Classification, KleeneStar,
};
pub use polytope::{polytope_equal, projectivise, reduce_generators, sample_euclidean_midpoints, ProjectivePoint};
pub use residuation::{bracket, dominates_at, dominates_polytope_at, member, principal_projection, Polytope};
pub use scalar::Scalar;
pub use semiring::{leq, negate_transpose, scale, trop_add, trop_mat_mul, Flavor, TropMatrix, TropVector};
