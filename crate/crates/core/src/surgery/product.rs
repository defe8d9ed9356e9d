use crate::xray::{Stratum, XRay};

use super::SurgeryError;

/// Product x-ray for the product torus: images multiply, stabilizers add,
/// and the order is componentwise. Stratum `(a, b)` is named `a*b`.
pub fn product(a: &XRay, b: &XRay) -> Result<XRay, SurgeryError> {
    let name = |i: usize, j: usize| format!("{}*{}", a.stratum(i).id, b.stratum(j).id);
    let mut strata = Vec::with_capacity(a.len() * b.len());
    for (i, s) in a.strata().iter().enumerate() {
        for (j, t) in b.strata().iter().enumerate() {
            strata.push(Stratum::new(
                name(i, j),
                s.stabilizer.direct_sum(&t.stabilizer),
                s.polytope.product(&t.polytope)?,
            ));
        }
    }
    let mut order = Vec::new();
    for i in 0..a.len() {
        for j in 0..b.len() {
            for i2 in 0..a.len() {
                for j2 in 0..b.len() {
                    if (i, j) != (i2, j2) && a.le(i, i2) && b.le(j, j2) {
                        order.push((name(i, j), name(i2, j2)));
                    }
                }
            }
        }
    }
    Ok(XRay::new(a.rank() + b.rank(), strata, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{fig2, segment};
    use crate::xray::validate;

    #[test]
    fn square_from_segments() {
        let sq = product(&segment(), &segment()).unwrap();
        assert_eq!(sq.rank(), 2);
        assert_eq!(sq.fixed_indices().len(), 4);
        assert_eq!(sq.len(), 9);
        assert!(validate(&sq).is_valid());
    }

    #[test]
    fn fig2_times_segment() {
        let p = product(&fig2(), &segment()).unwrap();
        assert_eq!(p.rank(), 3);
        assert_eq!(p.fixed_indices().len(), 12);
        assert!(validate(&p).is_valid());
    }
}
