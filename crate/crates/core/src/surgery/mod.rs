//! Constructions on x-rays: gluing along a slice, products, and parametric
//! deformations of fixed images.

mod family;
mod glue;
mod product;

use std::fmt;

use thiserror::Error;

use crate::exactgeom::scalar::{dot_int, format_scalar, is_primitive};
use crate::exactgeom::{GeomError, Point, Scalar};
use crate::xray::XRayError;

pub use family::{
    chamber_survey, fig2_family, instantiate, make_family, walls, AffineMap, InstantiationResult,
    LinearForm, ParamFamily, SurveyReport, SurveyRow,
};
pub use glue::{clip_above, clip_below, glue, strip_epsilon};
pub use product::product;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("slice normal {0:?} is not a nonzero primitive vector")]
    BadNormal(Vec<i64>),
    #[error("stratum {stratum} has vertex {point} on the slice")]
    VertexOnSlice { stratum: String, point: String },
    #[error("germ mismatch along the slice: {0}")]
    GermMismatch(String),
    #[error("merged image of {a} and {b} is not convex")]
    NonConvexMerge { a: String, b: String },
    #[error("glued x-ray is not valid:\n{0}")]
    InvalidResult(String),
    #[error("no image given for fixed stratum {0}")]
    MissingImage(String),
    #[error("{0} is not a fixed stratum")]
    UnknownStratum(String),
    #[error("images of {pair:?} below {stratum} differ outside the annihilator of its stabilizer")]
    ConstraintViolation {
        stratum: String,
        pair: (String, String),
    },
    #[error("image of {stratum} at the reference parameters is {found}, expected {expected}")]
    ReferenceMismatch {
        stratum: String,
        expected: String,
        found: String,
    },
    #[error("expected {expected} parameters, found {found}")]
    ParamCount { expected: usize, found: usize },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    XRay(#[from] XRayError),
}

/// The slice `{p : <normal, p> = level}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceSpec {
    normal: Vec<i64>,
    level: Scalar,
}

impl SliceSpec {
    pub fn new(normal: Vec<i64>, level: Scalar) -> Result<Self, SurgeryError> {
        if !is_primitive(&normal) {
            return Err(SurgeryError::BadNormal(normal));
        }
        Ok(SliceSpec { normal, level })
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn level(&self) -> &Scalar {
        &self.level
    }

    /// `<normal, p> - level`.
    pub fn offset(&self, p: &Point) -> Scalar {
        dot_int(p.coords(), &self.normal) - &self.level
    }
}

impl fmt::Display for SliceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n: Vec<String> = self.normal.iter().map(i64::to_string).collect();
        write!(f, "<({}), p> = {}", n.join(","), format_scalar(&self.level))
    }
}
