use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::compat::{decide_extension_criterion, Verdict};
use crate::exactgeom::linalg::rank;
use crate::exactgeom::scalar::{dot_int, format_scalar};
use crate::exactgeom::{int, Point, Polytope, Scalar};
use crate::xray::{validate, Stratum, ValidationReport, XRay};

use super::SurgeryError;

/// `q -> L q + b` from parameters `q ∈ Q^p` to `Q^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: Vec<Vec<Scalar>>,
    pub offset: Vec<Scalar>,
}

impl AffineMap {
    pub fn new(linear: Vec<Vec<Scalar>>, offset: Vec<Scalar>) -> Self {
        assert_eq!(
            linear.len(),
            offset.len(),
            "one linear row per output coordinate"
        );
        AffineMap { linear, offset }
    }

    /// Integer coefficients: rows `[c_1, .., c_p, b]`.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let linear = rows
            .iter()
            .map(|r| r[..r.len() - 1].iter().map(|&c| int(c)).collect())
            .collect();
        let offset = rows.iter().map(|r| int(r[r.len() - 1])).collect();
        AffineMap { linear, offset }
    }

    pub fn params(&self) -> usize {
        self.linear.first().map_or(0, Vec::len)
    }

    pub fn eval(&self, q: &[Scalar]) -> Point {
        Point::new(
            self.linear
                .iter()
                .zip(&self.offset)
                .map(|(row, b)| row.iter().zip(q).map(|(c, x)| c * x).sum::<Scalar>() + b)
                .collect(),
        )
    }

    fn minus(&self, other: &AffineMap) -> AffineMap {
        let linear = self
            .linear
            .iter()
            .zip(&other.linear)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a - b).collect())
            .collect();
        let offset = self
            .offset
            .iter()
            .zip(&other.offset)
            .map(|(a, b)| a - b)
            .collect();
        AffineMap { linear, offset }
    }
}

/// A reference x-ray whose fixed images move affinely with parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamFamily {
    reference: XRay,
    params: usize,
    reference_params: Vec<Scalar>,
    images: BTreeMap<String, AffineMap>,
}

impl ParamFamily {
    pub fn reference(&self) -> &XRay {
        &self.reference
    }

    pub fn params(&self) -> usize {
        self.params
    }

    pub fn reference_params(&self) -> &[Scalar] {
        &self.reference_params
    }

    pub fn image(&self, id: &str) -> Option<&AffineMap> {
        self.images.get(id)
    }
}

pub fn make_family(
    x: &XRay,
    images: BTreeMap<String, AffineMap>,
    reference_params: Vec<Scalar>,
) -> Result<ParamFamily, SurgeryError> {
    let p = reference_params.len();
    for id in images.keys() {
        if !x.index_of(id).is_some_and(|i| x.is_fixed(i)) {
            return Err(SurgeryError::UnknownStratum(id.clone()));
        }
    }
    for f in x.fixed_indices() {
        let id = &x.stratum(f).id;
        let m = images
            .get(id)
            .ok_or_else(|| SurgeryError::MissingImage(id.clone()))?;
        if m.linear.len() != x.rank() {
            return Err(SurgeryError::RankMismatch {
                expected: x.rank(),
                found: m.linear.len(),
            });
        }
        if m.linear.iter().any(|r| r.len() != p) {
            return Err(SurgeryError::ParamCount {
                expected: p,
                found: m.params(),
            });
        }
    }
    // Differences of fixed images below a stratum must be annihilated by its
    // stabilizer for every parameter value.
    for (i, s) in x.strata().iter().enumerate() {
        let fixed = x.fixed_below(i);
        for (n, &f) in fixed.iter().enumerate() {
            for &g in &fixed[n + 1..] {
                let (fid, gid) = (&x.stratum(f).id, &x.stratum(g).id);
                let d = images[fid].minus(&images[gid]);
                let ok = s.stabilizer.generators().iter().all(|gen| {
                    (0..p).all(|c| {
                        let col: Vec<Scalar> = d.linear.iter().map(|r| r[c].clone()).collect();
                        dot_int(&col, gen).is_zero()
                    }) && dot_int(&d.offset, gen).is_zero()
                });
                if !ok {
                    return Err(SurgeryError::ConstraintViolation {
                        stratum: s.id.clone(),
                        pair: (fid.clone(), gid.clone()),
                    });
                }
            }
        }
    }
    for f in x.fixed_indices() {
        let s = x.stratum(f);
        let found = images[&s.id].eval(&reference_params);
        let expected = &s.polytope.vertices()[0];
        if &found != expected {
            return Err(SurgeryError::ReferenceMismatch {
                stratum: s.id.clone(),
                expected: expected.to_string(),
                found: found.to_string(),
            });
        }
    }
    Ok(ParamFamily {
        reference: x.clone(),
        params: p,
        reference_params,
        images,
    })
}

/// The two-parameter deformation of `fig2` with `φ(F6) = (s, t)`, reference `(1, 3)`.
pub fn fig2_family() -> ParamFamily {
    let x = crate::builtins::fig2();
    let rows: [(&str, [[i64; 3]; 2]); 6] = [
        ("F1", [[0, 0, 0], [0, 0, 0]]),
        ("F2", [[1, 1, 0], [0, 0, 0]]),
        ("F3", [[1, 0, 0], [1, 0, 0]]),
        ("F4", [[-1, 1, 0], [1, 0, 0]]),
        ("F5", [[0, 0, 0], [0, 1, 0]]),
        ("F6", [[1, 0, 0], [0, 1, 0]]),
    ];
    let images = rows
        .iter()
        .map(|(id, r)| (id.to_string(), AffineMap::from_ints(&[&r[0], &r[1]])))
        .collect();
    make_family(&x, images, vec![int(1), int(3)]).expect("fig2 family is consistent")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstantiationResult {
    Realizable(XRay),
    Unrealizable {
        xray: XRay,
        report: ValidationReport,
    },
    /// Strata whose image lost dimension.
    Degenerate(Vec<String>),
}

impl InstantiationResult {
    pub fn label(&self) -> &'static str {
        match self {
            InstantiationResult::Realizable(_) => "realizable",
            InstantiationResult::Unrealizable { .. } => "unrealizable",
            InstantiationResult::Degenerate(_) => "degenerate",
        }
    }

    pub fn xray(&self) -> Option<&XRay> {
        match self {
            InstantiationResult::Realizable(x)
            | InstantiationResult::Unrealizable { xray: x, .. } => Some(x),
            InstantiationResult::Degenerate(_) => None,
        }
    }
}

/// Rebuilds every image as the hull of its moved fixed images.
pub fn instantiate(
    fam: &ParamFamily,
    params: &[Scalar],
) -> Result<InstantiationResult, SurgeryError> {
    if params.len() != fam.params {
        return Err(SurgeryError::ParamCount {
            expected: fam.params,
            found: params.len(),
        });
    }
    let x = &fam.reference;
    let moved: BTreeMap<usize, Point> = x
        .fixed_indices()
        .into_iter()
        .map(|f| (f, fam.images[&x.stratum(f).id].eval(params)))
        .collect();
    let mut strata = Vec::with_capacity(x.len());
    let mut collapsed = Vec::new();
    for (i, s) in x.strata().iter().enumerate() {
        let pts: Vec<Point> = x.fixed_below(i).iter().map(|f| moved[f].clone()).collect();
        let p = Polytope::hull(&pts)?;
        if p.dim() < s.polytope.dim() {
            collapsed.push(s.id.clone());
        }
        strata.push(Stratum::new(s.id.clone(), s.stabilizer.clone(), p));
    }
    if !collapsed.is_empty() {
        return Ok(InstantiationResult::Degenerate(collapsed));
    }
    let out = XRay::new(x.rank(), strata, x.relations())?;
    let report = validate(&out);
    Ok(if report.is_valid() {
        InstantiationResult::Realizable(out)
    } else {
        InstantiationResult::Unrealizable { xray: out, report }
    })
}

/// Primitive integer affine form `Σ c_i q_i + constant`, first nonzero entry positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl LinearForm {
    /// Normalizes a rational form; `None` if it is identically zero.
    pub fn from_rational(coeffs: &[Scalar], constant: &Scalar) -> Option<LinearForm> {
        let all: Vec<&Scalar> = coeffs.iter().chain(std::iter::once(constant)).collect();
        let lcm = all
            .iter()
            .fold(num_bigint::BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<num_bigint::BigInt> = all
            .iter()
            .map(|c| (*c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(num_bigint::BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return None;
        }
        let first = ints.iter().find(|c| !c.is_zero()).expect("nonzero form");
        let g = if first.is_negative() { -g } else { g };
        let vals: Vec<i64> = ints
            .iter()
            .map(|c| i64::try_from(c / &g).expect("form coefficient fits in i64"))
            .collect();
        Some(LinearForm {
            coeffs: vals[..coeffs.len()].to_vec(),
            constant: vals[coeffs.len()],
        })
    }

    pub fn eval(&self, q: &[Scalar]) -> Scalar {
        dot_int(q, &self.coeffs) + int(self.constant)
    }

    fn names(p: usize) -> Vec<String> {
        if p == 2 {
            vec!["s".into(), "t".into()]
        } else {
            (1..=p).map(|i| format!("q{i}")).collect()
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = LinearForm::names(self.coeffs.len());
        let mut out = String::new();
        let terms = self
            .coeffs
            .iter()
            .zip(&names)
            .filter(|(c, _)| **c != 0)
            .map(|(c, n)| (*c, n.clone()))
            .chain((self.constant != 0).then(|| (self.constant, String::new())));
        for (c, n) in terms {
            let mag = c.abs();
            let body = match (mag, n.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => n,
                (_, false) => format!("{mag}{n}"),
            };
            if out.is_empty() {
                out = if c < 0 { format!("-{body}") } else { body };
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        write!(f, "{out}")
    }
}

/// Hyperplanes in parameter space on which two fixed images of a
/// positive-dimensional stratum meet.
pub fn walls(fam: &ParamFamily) -> BTreeSet<LinearForm> {
    let x = &fam.reference;
    let mut out = BTreeSet::new();
    for (i, s) in x.strata().iter().enumerate() {
        if s.polytope.dim() < 1 {
            continue;
        }
        let fixed = x.fixed_below(i);
        for (n, &f) in fixed.iter().enumerate() {
            for &g in &fixed[n + 1..] {
                let d = fam.images[&x.stratum(f).id].minus(&fam.images[&x.stratum(g).id]);
                // The locus d(q) = 0 is a hyperplane iff the augmented system has rank 1.
                let aug: Vec<Vec<Scalar>> = d
                    .linear
                    .iter()
                    .zip(&d.offset)
                    .map(|(r, b)| {
                        r.iter()
                            .cloned()
                            .chain(std::iter::once(b.clone()))
                            .collect()
                    })
                    .collect();
                if rank(&d.linear) != 1 || rank(&aug) != 1 {
                    continue;
                }
                let (row, b) = d
                    .linear
                    .iter()
                    .zip(&d.offset)
                    .find(|(r, _)| r.iter().any(|c| !c.is_zero()))
                    .expect("rank one");
                if let Some(form) = LinearForm::from_rational(row, b) {
                    out.insert(form);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub params: Vec<Scalar>,
    pub on_walls: Vec<LinearForm>,
    pub result: InstantiationResult,
    pub verdict: Option<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
}

impl fmt::Display for SurveyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<14} {:<14} {:<10} detail",
            "params", "result", "criterion"
        )?;
        for row in &self.rows {
            let params: Vec<String> = row.params.iter().map(format_scalar).collect();
            let criterion = match &row.verdict {
                Some(Verdict::Satisfied) => "satisfied",
                Some(Verdict::FailsWith { .. }) => "fails",
                None => "-",
            };
            let detail = match (&row.result, &row.verdict) {
                (_, Some(Verdict::FailsWith { witness, .. })) => format!("witness {witness}"),
                (InstantiationResult::Unrealizable { report, .. }, _) => report
                    .violations
                    .first()
                    .map(|v| v.to_string())
                    .unwrap_or_default(),
                (InstantiationResult::Degenerate(ids), _) => {
                    let walls: Vec<String> =
                        row.on_walls.iter().map(|w| format!("{w} = 0")).collect();
                    format!("on wall {}; collapsed {}", walls.join(", "), ids.join(", "))
                }
                _ => String::new(),
            };
            writeln!(
                f,
                "{:<14} {:<14} {:<10} {}",
                format!("({})", params.join(",")),
                row.result.label(),
                criterion,
                detail
            )?;
        }
        Ok(())
    }
}

/// Instantiates each sample and decides the criterion where realizable.
/// Samples on walls are reported, not rejected.
pub fn chamber_survey(
    fam: &ParamFamily,
    samples: &[Vec<Scalar>],
) -> Result<SurveyReport, SurgeryError> {
    let ws = walls(fam);
    let mut rows = Vec::with_capacity(samples.len());
    for q in samples {
        let result = instantiate(fam, q)?;
        let verdict = match &result {
            InstantiationResult::Realizable(x) => Some(
                decide_extension_criterion(x)
                    .expect("realizable instances are valid rank-2 x-rays"),
            ),
            _ => None,
        };
        let on_walls = ws.iter().filter(|w| w.eval(q).is_zero()).cloned().collect();
        rows.push(SurveyRow {
            params: q.clone(),
            on_walls,
            result,
            verdict,
        });
    }
    Ok(SurveyReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::fig2;
    use crate::xray::{isomorphic, transform};

    fn q(s: i64, t: i64) -> Vec<Scalar> {
        vec![int(s), int(t)]
    }

    #[test]
    fn reference_and_mirror() {
        let fam = fig2_family();
        let InstantiationResult::Realizable(x) = instantiate(&fam, &q(1, 3)).unwrap() else {
            panic!("reference instance");
        };
        assert!(isomorphic(&x, &fig2()).is_some());
        let InstantiationResult::Realizable(m) = instantiate(&fam, &q(-1, -3)).unwrap() else {
            panic!("mirror instance");
        };
        let neg = transform(&fig2(), &[vec![-1, 0], vec![0, -1]], &Point::origin(2)).unwrap();
        assert!(isomorphic(&m, &neg).is_some());
    }

    #[test]
    fn fig2_walls() {
        let got: Vec<String> = walls(&fig2_family())
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(got, ["t", "s - t", "s", "s + t", "2s - t"]);
    }

    #[test]
    fn chambers() {
        let fam = fig2_family();
        match instantiate(&fam, &q(2, 1)).unwrap() {
            InstantiationResult::Unrealizable { report, .. } => {
                assert!(report.has_boundary_coverage_violation(), "{report}")
            }
            other => panic!("expected unrealizable, got {}", other.label()),
        }
        assert!(matches!(
            instantiate(&fam, &q(1, 1)).unwrap(),
            InstantiationResult::Degenerate(_)
        ));
        let report = chamber_survey(&fam, &[q(2, 3), q(1, 2)]).unwrap();
        assert!(matches!(
            report.rows[0].verdict,
            Some(Verdict::FailsWith { .. })
        ));
        assert_eq!(report.rows[1].on_walls.len(), 1);
    }

    #[test]
    fn family_constraints() {
        let x = fig2();
        let mut images: BTreeMap<String, AffineMap> = fig2_family().images.clone();
        images.insert("F2".into(), AffineMap::from_ints(&[&[1, 1, 0], &[0, 0, 1]]));
        let err = make_family(&x, images, q(1, 3)).unwrap_err();
        assert!(
            matches!(err, SurgeryError::ConstraintViolation { ref stratum, .. } if stratum == "E1"),
            "{err}"
        );
        let constant: BTreeMap<String, AffineMap> = x
            .fixed_indices()
            .into_iter()
            .map(|f| {
                let v = x.stratum(f).polytope.vertices()[0].coords().to_vec();
                (x.stratum(f).id.clone(), AffineMap::new(vec![vec![]; 2], v))
            })
            .collect();
        let fam = make_family(&x, constant, vec![]).unwrap();
        assert!(walls(&fam).is_empty());
    }
}
