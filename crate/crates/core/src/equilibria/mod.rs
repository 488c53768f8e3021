//! Shadowing matrices and static equilibrium counts.
//!
//! Vertex vectors `r_i` and face vectors `q_i` are measured from the centre
//! of mass, which sits at the origin. All norm comparisons use squared
//! norms so that every predicate stays rational.

mod config;
mod hull;
mod shadow;
mod simplex;

pub use config::{ConfigDocument, ConfigKind, FaceConfig, PointConfig};
pub use hull::{hull_vertices, is_hull_vertex};
pub use shadow::{
    count_stable, count_unstable, face_shadow_matrix, face_shadow_sign, shadow_sign, stable_equilibria,
    unstable_equilibria, vertex_shadow_matrix, EquilibriumReport, ShadowMatrix,
};
pub use simplex::{dawson_tips, simplex_area_vectors, simplex_face_vectors, simplex_volume};

use crate::ratcore::RatError;

#[derive(Debug, thiserror::Error)]
pub enum EquilibriaError {
    #[error("need at least {min} points, found {found}")]
    TooFewPoints { min: usize, found: usize },
    #[error("point {index} has dimension {found}, expected {expected}")]
    WrongDimension { index: usize, expected: usize, found: usize },
    #[error("face vector {0} is zero")]
    ZeroFaceVector(usize),
    #[error("simplex vertices are affinely dependent")]
    DegenerateSimplex,
    #[error("reference point is not strictly inside the simplex")]
    OutsideSimplex,
    #[error("expected a {expected} document, found {found}")]
    KindMismatch { expected: ConfigKind, found: ConfigKind },
    #[error("invalid configuration document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Rational(#[from] RatError),
}
