use std::fmt;

use crate::exactgeom::polytope::segment_covered;
use crate::exactgeom::{Point, Polytope};

use super::XRay;

/// One violated x-ray invariant, naming the offending strata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// An edge direction of the image pairs nonzero with a stabilizer generator.
    Perpendicularity { stratum: String },
    /// `lower <= upper` but the image of `lower` is not inside that of `upper`.
    ImageNotMonotone { lower: String, upper: String },
    /// `lower <= upper` but the stabilizer of `upper` is not inside that of `lower`.
    StabilizerNotMonotone { lower: String, upper: String },
    /// There is not exactly one maximal stratum.
    NoUniqueMaximum { maximal: Vec<String> },
    /// The maximal stratum has a nontrivial stabilizer.
    MaximumNotEffective { stratum: String },
    /// The image is not the hull of the fixed images below it.
    HullProperty { stratum: String },
    /// A boundary edge of a two-dimensional image is not covered by lower strata.
    BoundaryCoverage { stratum: String, edge: Polytope },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Perpendicularity { stratum } => {
                write!(
                    f,
                    "perpendicularity: image of {stratum} is not annihilated by its stabilizer"
                )
            }
            Violation::ImageNotMonotone { lower, upper } => {
                write!(
                    f,
                    "image monotonicity: {lower} <= {upper} but image not contained"
                )
            }
            Violation::StabilizerNotMonotone { lower, upper } => {
                write!(f, "stabilizer monotonicity: {lower} <= {upper} but stabilizer of {upper} not contained in that of {lower}")
            }
            Violation::NoUniqueMaximum { maximal } => {
                write!(f, "maximum: maximal strata are [{}]", maximal.join(", "))
            }
            Violation::MaximumNotEffective { stratum } => {
                write!(f, "maximum: {stratum} has a nontrivial stabilizer")
            }
            Violation::HullProperty { stratum } => {
                write!(
                    f,
                    "hull property: image of {stratum} is not the hull of its fixed images"
                )
            }
            Violation::BoundaryCoverage { stratum, edge } => {
                write!(
                    f,
                    "boundary coverage: edge {edge} of {stratum} is not covered by lower strata"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_boundary_coverage_violation(&self) -> bool {
        self.violations
            .iter()
            .any(|v| matches!(v, Violation::BoundaryCoverage { .. }))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every structural invariant; violations are returned as data.
pub fn validate(x: &XRay) -> ValidationReport {
    let mut violations = Vec::new();
    let n = x.len();
    let strata = x.strata();

    for s in strata {
        let vs = s.polytope.vertices();
        if let Some(base) = vs.first() {
            if vs[1..]
                .iter()
                .any(|v| !s.stabilizer.annihilates(&v.minus(base)))
            {
                violations.push(Violation::Perpendicularity {
                    stratum: s.id.clone(),
                });
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            if !x.lt(i, j) {
                continue;
            }
            let (lo, hi) = (&strata[i], &strata[j]);
            if !lo.polytope.is_subset_of(&hi.polytope) {
                violations.push(Violation::ImageNotMonotone {
                    lower: lo.id.clone(),
                    upper: hi.id.clone(),
                });
            }
            if !hi.stabilizer.is_sublattice_of(&lo.stabilizer) {
                violations.push(Violation::StabilizerNotMonotone {
                    lower: lo.id.clone(),
                    upper: hi.id.clone(),
                });
            }
        }
    }

    let maximal: Vec<usize> = (0..n).filter(|&i| !(0..n).any(|j| x.lt(i, j))).collect();
    if maximal.len() == 1 {
        let top = &strata[maximal[0]];
        if top.stabilizer.rank() != 0 {
            violations.push(Violation::MaximumNotEffective {
                stratum: top.id.clone(),
            });
        }
    } else {
        violations.push(Violation::NoUniqueMaximum {
            maximal: maximal.iter().map(|&i| strata[i].id.clone()).collect(),
        });
    }

    for (i, s) in strata.iter().enumerate() {
        let fixed: Vec<Point> = x
            .fixed_below(i)
            .into_iter()
            .flat_map(|f| strata[f].polytope.vertices().to_vec())
            .collect();
        let ok = !fixed.is_empty() && Polytope::hull(&fixed).is_ok_and(|h| h == s.polytope);
        if !ok {
            violations.push(Violation::HullProperty {
                stratum: s.id.clone(),
            });
        }
    }

    for (i, s) in strata.iter().enumerate() {
        if s.polytope.dim() != 2 {
            continue;
        }
        let pieces: Vec<Polytope> = (0..n)
            .filter(|&j| x.lt(j, i) && strata[j].polytope.dim() <= 1)
            .map(|j| strata[j].polytope.clone())
            .collect();
        for edge in s.polytope.faces(1) {
            let (a, b) = (&edge.vertices()[0], &edge.vertices()[1]);
            if !segment_covered(a, b, &pieces) {
                violations.push(Violation::BoundaryCoverage {
                    stratum: s.id.clone(),
                    edge,
                });
            }
        }
    }

    ValidationReport { violations }
}
