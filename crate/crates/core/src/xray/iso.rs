use std::collections::BTreeMap;

use crate::exactgeom::linalg::{det_int, inverse, to_rational};
use crate::exactgeom::{GeomError, Point};

use super::{Stratum, XRay, XRayError};

/// A stratum bijection preserving order, polytopes and stabilizers exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XRayIso {
    pub map: BTreeMap<String, String>,
}

impl XRayIso {
    pub fn inverse(&self) -> XRayIso {
        XRayIso {
            map: self
                .map
                .iter()
                .map(|(a, b)| (b.clone(), a.clone()))
                .collect(),
        }
    }
}

/// Applies `p -> U p + b` to every polytope and the inverse transpose of `U`
/// to every stabilizer.
pub fn transform(x: &XRay, u: &[Vec<i64>], b: &Point) -> Result<XRay, XRayError> {
    let k = x.rank();
    if u.len() != k || u.iter().any(|r| r.len() != k) {
        return Err(GeomError::DimensionMismatch {
            expected: k,
            found: u.len(),
        }
        .into());
    }
    if b.rank() != k {
        return Err(GeomError::DimensionMismatch {
            expected: k,
            found: b.rank(),
        }
        .into());
    }
    let det = det_int(u);
    if det.abs() != 1 {
        return Err(XRayError::NotUnimodular(det));
    }
    let inv = inverse(&to_rational(u)).expect("unimodular matrix is invertible");
    let inv_t: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let e = &inv[j][i];
                    assert!(e.is_integer(), "inverse of a unimodular matrix is integral");
                    i64::try_from(e.to_integer()).expect("entry fits in i64")
                })
                .collect()
        })
        .collect();
    let mut strata = Vec::with_capacity(x.len());
    for s in x.strata() {
        strata.push(Stratum::new(
            s.id.clone(),
            s.stabilizer.map(&inv_t),
            s.polytope.map_affine(u, b)?,
        ));
    }
    XRay::new(k, strata, x.relations())
}

/// Finds an isomorphism `x -> y`, if any.
pub fn isomorphic(x: &XRay, y: &XRay) -> Option<XRayIso> {
    if x.rank() != y.rank() || x.len() != y.len() {
        return None;
    }
    let n = x.len();
    let candidates: Vec<Vec<usize>> = x
        .strata()
        .iter()
        .map(|s| {
            (0..n)
                .filter(|&j| {
                    let t = y.stratum(j);
                    t.polytope == s.polytope && t.stabilizer == s.stabilizer
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    // Most constrained first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| candidates[i].len());

    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !extend(x, y, &order, &candidates, 0, &mut assign, &mut used) {
        return None;
    }
    let map = (0..n)
        .map(|i| (x.stratum(i).id.clone(), y.stratum(assign[i]).id.clone()))
        .collect();
    Some(XRayIso { map })
}

fn extend(
    x: &XRay,
    y: &XRay,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    assign: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&i) = order.get(depth) else {
        return true;
    };
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| {
            let q = assign[p];
            x.le(p, i) == y.le(q, j) && x.le(i, p) == y.le(j, q)
        });
        if !consistent {
            continue;
        }
        assign[i] = j;
        used[j] = true;
        if extend(x, y, order, candidates, depth + 1, assign, used) {
            return true;
        }
        used[j] = false;
        assign[i] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::Polytope;
    use crate::xray::Stabilizer;

    fn square() -> XRay {
        let c = [(0, 0), (1, 0), (1, 1), (0, 1)];
        let pt = |x: i64, y: i64| Point::from_ints(&[x, y]);
        let mut strata: Vec<Stratum> = c
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| {
                Stratum::new(
                    format!("F{}", i + 1),
                    Stabilizer::full(2),
                    Polytope::point(pt(x, y)),
                )
            })
            .collect();
        let mut order = Vec::new();
        for i in 0..4 {
            let (a, b) = (c[i], c[(i + 1) % 4]);
            let stab = vec![vec![(b.1 - a.1), -(b.0 - a.0)]];
            let id = format!("E{}", i + 1);
            strata.push(Stratum::new(
                id.clone(),
                Stabilizer::new(2, stab).unwrap(),
                Polytope::segment(pt(a.0, a.1), pt(b.0, b.1)).unwrap(),
            ));
            order.push((format!("F{}", i + 1), id.clone()));
            order.push((format!("F{}", (i + 1) % 4 + 1), id.clone()));
            order.push((id, "M".to_string()));
        }
        let hull = Polytope::hull(&c.iter().map(|&(x, y)| pt(x, y)).collect::<Vec<_>>()).unwrap();
        strata.push(Stratum::new("M", Stabilizer::trivial(2), hull));
        XRay::new(2, strata, order).unwrap()
    }

    #[test]
    fn transform_round_trip() {
        let x = square();
        let u = vec![vec![1, 1], vec![0, 1]];
        let ui = vec![vec![1, -1], vec![0, 1]];
        let b = Point::from_ints(&[3, -2]);
        let y = transform(&x, &u, &b).unwrap();
        assert!(crate::xray::validate(&y).is_valid());
        let back = transform(&y, &ui, &Point::origin(2)).unwrap();
        let back = transform(
            &back,
            &[vec![1, 0], vec![0, 1]],
            &Point::from_ints(&[-5, 2]),
        )
        .unwrap();
        assert_eq!(back, x);
        assert!(matches!(
            transform(&x, &[vec![2, 0], vec![0, 1]], &b),
            Err(XRayError::NotUnimodular(2))
        ));
    }

    #[test]
    fn renamed_copy_is_isomorphic() {
        let x = square();
        let y = x.rename(|id| format!("z{id}")).unwrap();
        let iso = isomorphic(&x, &y).unwrap();
        assert_eq!(iso.map["M"], "zM");
        assert_eq!(isomorphic(&y, &x).unwrap(), iso.inverse());
        let shifted = transform(&x, &[vec![1, 0], vec![0, 1]], &Point::from_ints(&[1, 0])).unwrap();
        assert!(isomorphic(&x, &shifted).is_none());
    }
}
