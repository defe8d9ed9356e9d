//! Values computed once by independent means and frozen here.

use xray_core::builtins::{ex21, ex22, fig2, segment};
use xray_core::{
    decide_extension_criterion, enumerate_compatible_cones, enumerate_compatible_polytopes,
    fig2_family, instantiate, int, non_extendable_cones, product, ratio, walls, Point, Polytope,
    Verdict,
};

fn pts(v: &[[i64; 2]]) -> Polytope {
    Polytope::hull(&v.iter().map(|p| Point::from_ints(p)).collect::<Vec<_>>()).unwrap()
}

#[test]
fn compatible_polytope_counts() {
    let table = [
        ("ex21", ex21(), [6, 9, 5]),
        ("ex22", ex22(), [6, 11, 5]),
        ("fig2", fig2(), [6, 9, 4]),
    ];
    for (name, x, counts) in table {
        for (d, want) in counts.iter().enumerate() {
            let got = enumerate_compatible_polytopes(&x, d as isize)
                .unwrap()
                .len();
            assert_eq!(got, *want, "{name} dimension {d}");
        }
    }
}

#[test]
fn ex21_contains_small_triangle() {
    let list = enumerate_compatible_polytopes(&ex21(), 2).unwrap();
    assert!(list.contains(&pts(&[[1, 1], [2, 1], [1, 2]])));
}

#[test]
fn fig2_non_extendable_cones() {
    let got: Vec<String> = non_extendable_cones(&fig2())
        .unwrap()
        .iter()
        .map(|(c, _)| c.to_string())
        .collect();
    assert_eq!(
        got,
        [
            "apex (0,3) sector (0,-1) (1,-1)",
            "apex (1,1) sector (1,0) (0,1)",
            "apex (1,3) sector (0,-1) (1,-1)",
            "apex (2,1) sector (-1,1) (-1,0)",
        ]
    );
    match decide_extension_criterion(&fig2()).unwrap() {
        Verdict::FailsWith { witness, .. } => assert_eq!(witness.to_string(), got[0]),
        Verdict::Satisfied => panic!("fig2 satisfies the criterion"),
    }
    assert!(non_extendable_cones(&ex21()).unwrap().is_empty());
    assert!(non_extendable_cones(&ex22()).unwrap().is_empty());
}

#[test]
fn cone_lists_are_nonempty() {
    for x in [ex21(), ex22(), fig2()] {
        let cones = enumerate_compatible_cones(&x).unwrap();
        assert!(cones.iter().all(|c| c.is_strictly_convex()));
        assert!(cones.len() >= x.fixed_indices().len());
    }
}

#[test]
fn wall_names() {
    let names: Vec<String> = walls(&fig2_family())
        .iter()
        .map(|w| w.to_string())
        .collect();
    assert_eq!(names, ["t", "s - t", "s", "s + t", "2s - t"]);
}

#[test]
fn labels_across_walls() {
    let fam = fig2_family();
    let at = |s, t| instantiate(&fam, &[s, t]).unwrap().label();
    assert_eq!(at(int(1), int(3)), "realizable");
    assert_eq!(at(int(2), int(1)), "unrealizable");
    assert_eq!(at(int(1), int(0)), "degenerate");
    assert_eq!(at(ratio(1, 2), ratio(1, 2)), "degenerate");
}

#[test]
fn product_sizes() {
    let p = product(&ex21(), &segment()).unwrap();
    assert_eq!(p.len(), 48);
    assert_eq!(p.fixed_indices().len(), 12);
    let sq = product(&segment(), &segment()).unwrap();
    assert_eq!(sq.len(), 9);
}
