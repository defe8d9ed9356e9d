//! Exact combinatorics of x-rays of Hamiltonian torus actions.
//!
//! An x-ray is a poset of orbit-type strata, each carrying a convex moment-image
//! polytope and the Lie-algebra lattice of its stabilizer. This crate decides
//! compatibility of polytopes and cones with an x-ray, the extension criterion,
//! and builds x-rays from toric data, by gluing along a slice, by products, and
//! from parameter families of fixed-point images.

pub mod builtins;
pub mod compat;
pub mod exactgeom;
pub mod render;
pub mod surgery;
pub mod toric;
pub mod xray;

pub use compat::{
    cone_from_support, decide_extension_criterion, enumerate_compatible_cones,
    enumerate_compatible_polytopes, enumerate_compatible_polytopes_oracle, find_extension,
    is_compatible_cone, is_compatible_polytope, minimal_support, non_extendable_cones, CompatError,
    Face, FaceAssignment, Verdict, WeightList,
};
pub use exactgeom::{
    cone_contains, int, is_strictly_convex, parse_scalar, ratio, tangent_cone, Cone, ConeShape,
    GeomError, Halfplane, Point, Polytope, Scalar, Sense,
};
pub use render::{render_svg, RenderStyle};
pub use surgery::{
    chamber_survey, clip_above, clip_below, fig2_family, glue, instantiate, make_family, product,
    walls, AffineMap, InstantiationResult, LinearForm, ParamFamily, SliceSpec, SurgeryError,
    SurveyReport, SurveyRow,
};
pub use toric::{is_delzant, xray_from_toric, LatticePolytope, SubtorusEmbedding, ToricError};
pub use xray::{
    isomorphic, load, save, transform, validate, Stabilizer, Stratum, ValidationReport, Violation,
    XRay, XRayError, XRayIso,
};
