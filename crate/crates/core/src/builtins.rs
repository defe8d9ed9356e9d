//! Named reference x-rays.
//!
//! `ex21`, `ex22` and `fig2` are rank-2 x-rays of Hamiltonian `T^2` actions on
//! six-manifolds; `segment` is the rank-1 x-ray of `S^2` with its rotation
//! action, two fixed points over `0` and `1`.

use crate::exactgeom::{Point, Polytope};
use crate::xray::{Stabilizer, Stratum, XRay};

pub const NAMES: [&str; 4] = ["ex21", "ex22", "fig2", "segment"];

type Edge = ((i64, i64), (i64, i64), [i64; 2]);

fn pt(c: (i64, i64)) -> Point {
    Point::from_ints(&[c.0, c.1])
}

/// Fixed strata `F1..`, edge strata `E1..` and a top stratum `M`; the order is
/// image containment of fixed points in edges, and everything below `M`.
fn planar(fixed: &[(i64, i64)], edges: &[Edge], top: &[(i64, i64)]) -> XRay {
    let mut strata = Vec::new();
    let mut order = Vec::new();
    for (i, &c) in fixed.iter().enumerate() {
        let id = format!("F{}", i + 1);
        strata.push(Stratum::new(
            id.clone(),
            Stabilizer::full(2),
            Polytope::point(pt(c)),
        ));
        order.push((id, "M".to_string()));
    }
    for (i, &(a, b, g)) in edges.iter().enumerate() {
        let id = format!("E{}", i + 1);
        let seg = Polytope::segment(pt(a), pt(b)).expect("distinct endpoints");
        for (j, &c) in fixed.iter().enumerate() {
            if seg.contains(&pt(c)) {
                order.push((format!("F{}", j + 1), id.clone()));
            }
        }
        let stab = Stabilizer::new(2, vec![g.to_vec()]).expect("nonzero generator");
        strata.push(Stratum::new(id.clone(), stab, seg));
        order.push((id, "M".to_string()));
    }
    let hull =
        Polytope::hull(&top.iter().map(|&c| pt(c)).collect::<Vec<_>>()).expect("planar hull");
    strata.push(Stratum::new("M", Stabilizer::trivial(2), hull));
    XRay::new(2, strata, order).expect("builtin data is consistent")
}

pub fn ex21() -> XRay {
    planar(
        &[(0, 0), (4, 0), (1, 1), (2, 1), (1, 2), (0, 4)],
        &[
            ((0, 0), (4, 0), [0, 1]),
            ((0, 0), (0, 4), [1, 0]),
            ((0, 4), (4, 0), [1, 1]),
            ((4, 0), (2, 1), [1, 2]),
            ((2, 1), (1, 1), [0, 1]),
            ((1, 1), (1, 2), [1, 0]),
            ((1, 2), (0, 4), [2, 1]),
            ((2, 1), (1, 2), [1, 1]),
            ((0, 0), (1, 1), [1, -1]),
        ],
        &[(0, 0), (4, 0), (0, 4)],
    )
}

pub fn ex22() -> XRay {
    planar(
        &[(0, 0), (1, 0), (3, 0), (4, 0), (0, 3), (1, 3)],
        &[
            ((0, 0), (4, 0), [0, 1]),
            ((0, 0), (0, 3), [1, 0]),
            ((0, 3), (1, 3), [0, 1]),
            ((4, 0), (1, 3), [1, 1]),
            ((0, 3), (3, 0), [1, 1]),
            ((1, 0), (1, 3), [1, 0]),
        ],
        &[(0, 0), (4, 0), (1, 3), (0, 3)],
    )
}

pub fn fig2() -> XRay {
    planar(
        &[(0, 0), (4, 0), (1, 1), (2, 1), (0, 3), (1, 3)],
        &[
            ((0, 0), (4, 0), [0, 1]),
            ((0, 0), (0, 3), [1, 0]),
            ((0, 3), (1, 3), [0, 1]),
            ((4, 0), (1, 3), [1, 1]),
            ((2, 1), (0, 3), [1, 1]),
            ((4, 0), (2, 1), [1, 2]),
            ((2, 1), (1, 1), [0, 1]),
            ((1, 1), (1, 3), [1, 0]),
            ((0, 0), (1, 1), [1, -1]),
        ],
        &[(0, 0), (4, 0), (1, 3), (0, 3)],
    )
}

pub fn segment() -> XRay {
    let p = |x: i64| Point::from_ints(&[x]);
    let strata = vec![
        Stratum::new("F1", Stabilizer::full(1), Polytope::point(p(0))),
        Stratum::new("F2", Stabilizer::full(1), Polytope::point(p(1))),
        Stratum::new(
            "M",
            Stabilizer::trivial(1),
            Polytope::segment(p(0), p(1)).expect("segment"),
        ),
    ];
    XRay::new(1, strata, [("F1", "M"), ("F2", "M")]).expect("segment x-ray")
}

pub fn by_name(name: &str) -> Option<XRay> {
    match name {
        "ex21" => Some(ex21()),
        "ex22" => Some(ex22()),
        "fig2" => Some(fig2()),
        "segment" => Some(segment()),
        _ => None,
    }
}
