//! Exact rational geometry: points, polytopes, planar cones, half-spaces.
//!
//! Nothing here uses floating point. Polytopes of affine dimension at most 3 are
//! supported in any ambient rank; cones are planar.

pub mod cone;
pub mod linalg;
pub mod polytope;
pub mod scalar;

use thiserror::Error;

pub use cone::{
    angle_cmp, cone_contains, is_strictly_convex, tangent_cone, Cone, ConeShape, Direction,
};
pub use polytope::{Halfplane, Point, Polytope, Sense};
pub use scalar::{format_scalar, int, parse_scalar, ratio, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("empty point list")]
    EmptyInput,
    #[error("dimension mismatch: expected rank {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("affine dimension {0} is not supported (at most 3)")]
    UnsupportedDimension(usize),
    #[error("unsupported ambient rank {0} (planar operation)")]
    UnsupportedRank(usize),
    #[error("point {0} is not contained in the polytope")]
    NotContained(String),
    #[error("cones have different apexes {0} and {1}")]
    ApexMismatch(String, String),
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("vector {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),
    #[error("malformed rational {0:?}")]
    BadRational(String),
}
