use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::exactgeom::{Halfplane, Polytope, Scalar, Sense};
use crate::xray::{isomorphic, validate, Stratum, XRay};

use super::{SliceSpec, SurgeryError};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Below,
    Above,
    Crossing,
}

fn check_rank(x: &XRay, slice: &SliceSpec) -> Result<(), SurgeryError> {
    if slice.normal().len() != x.rank() {
        return Err(SurgeryError::RankMismatch {
            expected: x.rank(),
            found: slice.normal().len(),
        });
    }
    Ok(())
}

fn side(s: &Stratum, slice: &SliceSpec) -> Result<Side, SurgeryError> {
    let (mut below, mut above) = (false, false);
    for v in s.polytope.vertices() {
        let o = slice.offset(v);
        if o.is_zero() {
            return Err(SurgeryError::VertexOnSlice {
                stratum: s.id.clone(),
                point: v.to_string(),
            });
        }
        if o.is_negative() {
            below = true;
        } else {
            above = true;
        }
    }
    Ok(match (below, above) {
        (true, true) => Side::Crossing,
        (true, false) => Side::Below,
        _ => Side::Above,
    })
}

/// Half the smallest nonzero level distance `|<η, v> - c|` over all vertices.
pub fn strip_epsilon(xs: &[&XRay], slice: &SliceSpec) -> Option<Scalar> {
    xs.iter()
        .flat_map(|x| x.strata())
        .flat_map(|s| s.polytope.vertices())
        .map(|v| slice.offset(v).abs())
        .filter(|d| !d.is_zero())
        .min()
        .map(|d| d / Scalar::from_integer(2.into()))
}

fn half(slice: &SliceSpec, level: Scalar, sense: Sense) -> Halfplane {
    Halfplane::new(slice.normal().to_vec(), level, sense).expect("slice normal is primitive")
}

fn clip_to(x: &XRay, hs: &[Halfplane]) -> Result<XRay, SurgeryError> {
    Ok(x.filter_map_polytopes(|s| {
        let mut p = s.polytope.clone();
        for h in hs {
            p = p.clip(h)?;
        }
        Ok((!p.is_empty()).then_some(p))
    })?)
}

/// The part of `x` on the low side of the slice, with a thin collar beyond it
/// so that the germ along the slice is kept.
pub fn clip_below(x: &XRay, slice: &SliceSpec) -> Result<XRay, SurgeryError> {
    check_rank(x, slice)?;
    let eps = strip_epsilon(&[x], slice).unwrap_or_else(|| Scalar::from_integer(1.into()));
    clip_to(x, &[half(slice, slice.level() + eps, Sense::Le)])
}

/// The part of `x` on the high side of the slice, with a collar.
pub fn clip_above(x: &XRay, slice: &SliceSpec) -> Result<XRay, SurgeryError> {
    check_rank(x, slice)?;
    let eps = strip_epsilon(&[x], slice).unwrap_or_else(|| Scalar::from_integer(1.into()));
    clip_to(x, &[half(slice, slice.level() - eps, Sense::Ge)])
}

fn mismatch_detail(sa: &XRay, sb: &XRay) -> String {
    for (p, q, name) in [(sa, sb, "A"), (sb, sa, "B")] {
        for s in p.strata() {
            if !q
                .strata()
                .iter()
                .any(|t| t.polytope == s.polytope && t.stabilizer == s.stabilizer)
            {
                return match q.strata().iter().find(|t| t.polytope == s.polytope) {
                    Some(t) => format!(
                        "{name}:{} has stabilizer {} but {} has {}",
                        s.id, s.stabilizer, t.id, t.stabilizer
                    ),
                    None => format!(
                        "{name}:{} with strip image {} has no counterpart",
                        s.id, s.polytope
                    ),
                };
            }
        }
    }
    "strip strata match but their order relations differ".to_string()
}

/// Glues the part of `a` below the slice to the part of `b` above it.
///
/// The two must agree on a thin strip around the slice; strata crossing the
/// slice are merged with their counterparts.
pub fn glue(a: &XRay, b: &XRay, slice: &SliceSpec) -> Result<XRay, SurgeryError> {
    check_rank(a, slice)?;
    check_rank(b, slice)?;
    let sides_a = a
        .strata()
        .iter()
        .map(|s| side(s, slice))
        .collect::<Result<Vec<_>, _>>()?;
    let sides_b = b
        .strata()
        .iter()
        .map(|s| side(s, slice))
        .collect::<Result<Vec<_>, _>>()?;

    let eps = strip_epsilon(&[a, b], slice)
        .ok_or_else(|| SurgeryError::GermMismatch("no vertices off the slice".to_string()))?;
    let strip = [
        half(slice, slice.level() - &eps, Sense::Ge),
        half(slice, slice.level() + &eps, Sense::Le),
    ];
    let (strip_a, strip_b) = (clip_to(a, &strip)?, clip_to(b, &strip)?);
    let iso = isomorphic(&strip_a, &strip_b)
        .ok_or_else(|| SurgeryError::GermMismatch(mismatch_detail(&strip_a, &strip_b)))?;

    let below = half(slice, slice.level().clone(), Sense::Le);
    let above = half(slice, slice.level().clone(), Sense::Ge);

    // Output strata with the index pair they come from.
    let mut strata = Vec::new();
    let mut origin: Vec<(Option<usize>, Option<usize>)> = Vec::new();
    for (i, s) in a.strata().iter().enumerate() {
        if sides_a[i] == Side::Below {
            strata.push(Stratum::new(
                format!("A:{}", s.id),
                s.stabilizer.clone(),
                s.polytope.clone(),
            ));
            origin.push((Some(i), None));
        }
    }
    for (j, s) in b.strata().iter().enumerate() {
        if sides_b[j] == Side::Above {
            strata.push(Stratum::new(
                format!("B:{}", s.id),
                s.stabilizer.clone(),
                s.polytope.clone(),
            ));
            origin.push((None, Some(j)));
        }
    }
    let matched: BTreeMap<&str, &str> = iso
        .map
        .iter()
        .map(|(x, y)| (x.as_str(), y.as_str()))
        .collect();
    for (i, s) in a.strata().iter().enumerate() {
        if sides_a[i] != Side::Crossing {
            continue;
        }
        let j = matched
            .get(s.id.as_str())
            .and_then(|id| b.index_of(id))
            .expect("crossing strata appear in the strip");
        let t = b.stratum(j);
        let lo = s.polytope.clip(&below)?;
        let hi = t.polytope.clip(&above)?;
        let pts: Vec<_> = lo.vertices().iter().chain(hi.vertices()).cloned().collect();
        let merged = Polytope::hull(&pts)?;
        if merged.clip(&below)? != lo || merged.clip(&above)? != hi {
            return Err(SurgeryError::NonConvexMerge {
                a: s.id.clone(),
                b: t.id.clone(),
            });
        }
        strata.push(Stratum::new(
            format!("{}+{}", s.id, t.id),
            s.stabilizer.clone(),
            merged,
        ));
        origin.push((Some(i), Some(j)));
    }

    let mut order = Vec::new();
    for (p, op) in origin.iter().enumerate() {
        for (q, oq) in origin.iter().enumerate() {
            if p == q {
                continue;
            }
            let via_a = matches!((op.0, oq.0), (Some(x), Some(y)) if a.le(x, y));
            let via_b = matches!((op.1, oq.1), (Some(x), Some(y)) if b.le(x, y));
            if via_a || via_b {
                order.push((strata[p].id.clone(), strata[q].id.clone()));
            }
        }
    }
    let out = XRay::new(a.rank(), strata, order)?;
    let report = validate(&out);
    if !report.is_valid() {
        return Err(SurgeryError::InvalidResult(report.to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{ex21, ex22, fig2};
    use crate::exactgeom::{ratio, Point};
    use crate::xray::transform;

    fn horizontal(c: Scalar) -> SliceSpec {
        SliceSpec::new(vec![0, 1], c).unwrap()
    }

    #[test]
    fn ex21_and_ex22_give_fig2() {
        let g = glue(&ex21(), &ex22(), &horizontal(ratio(3, 2))).unwrap();
        assert!(isomorphic(&g, &fig2()).is_some());
        let merged = g.get("E8+E5").unwrap();
        assert_eq!(
            merged.polytope.vertices(),
            &[Point::from_ints(&[0, 3]), Point::from_ints(&[2, 1])]
        );
    }

    #[test]
    fn shifted_top_mismatches() {
        let shifted = transform(
            &ex22(),
            &[vec![1, 0], vec![0, 1]],
            &Point::from_ints(&[1, 0]),
        )
        .unwrap();
        let err = glue(&ex21(), &shifted, &horizontal(ratio(3, 2))).unwrap_err();
        assert!(matches!(err, SurgeryError::GermMismatch(_)), "{err}");
    }

    #[test]
    fn regluing_clips() {
        let x = ex21();
        let s = horizontal(ratio(3, 2));
        let g = glue(
            &clip_below(&x, &s).unwrap(),
            &clip_above(&x, &s).unwrap(),
            &s,
        )
        .unwrap();
        assert!(isomorphic(&g, &x).is_some());
    }

    #[test]
    fn slice_through_fixed_point() {
        let err = glue(&ex21(), &ex22(), &horizontal(ratio(1, 1))).unwrap_err();
        assert!(matches!(err, SurgeryError::VertexOnSlice { .. }));
    }
}
