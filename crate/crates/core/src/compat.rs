//! Compatibility of polytopes and cones with an x-ray, and the extension criterion.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::exactgeom::scalar::sign;
use crate::exactgeom::{cone_contains, tangent_cone, Cone, GeomError, Point, Polytope, Scalar};
use crate::xray::{validate, XRay};

/// Largest number of point-image strata the subset oracle accepts.
pub const ORACLE_LIMIT: usize = 16;
const SUPPORT_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompatError {
    #[error("unsupported ambient rank {0}; compatibility is planar")]
    UnsupportedRank(usize),
    #[error("polytope dimension {0} is not 0, 1 or 2")]
    BadDimension(isize),
    #[error("oracle refuses {0} point-image strata (limit {ORACLE_LIMIT})")]
    OracleTooLarge(usize),
    #[error("x-ray is not valid:\n{0}")]
    InvalidXRay(String),
    #[error("cone {0} is not compatible with the x-ray")]
    NotCompatible(String),
    #[error("cone {0} is not strictly convex")]
    NotStrictlyConvex(String),
    #[error("cone {0} does not have its apex at the origin")]
    NotAtOrigin(String),
    #[error("weight {0} is zero")]
    ZeroWeight(usize),
    #[error("weight {index} has {found} entries, expected 2")]
    WeightRank { index: usize, found: usize },
    #[error("too many weights ({0}) for an exhaustive support search")]
    TooManyWeights(usize),
    #[error("minimal supports are not unique: {0:?}")]
    AmbiguousSupport(Vec<Vec<usize>>),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A face of a polytope or of a cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Face {
    Polytope(Polytope),
    Cone(Cone),
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Face::Polytope(p) => write!(f, "{p}"),
            Face::Cone(c) => write!(f, "{c}"),
        }
    }
}

/// Stratum ids chosen for every face, lowest dimension first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceAssignment {
    pub entries: Vec<(Face, String)>,
}

impl FaceAssignment {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn stratum_of(&self, face: &Face) -> Option<&str> {
        self.entries
            .iter()
            .find(|(f, _)| f == face)
            .map(|(_, id)| id.as_str())
    }
}

impl fmt::Display for FaceAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (face, id) in &self.entries {
            writeln!(f, "  {face} -> {id}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Satisfied,
    FailsWith {
        witness: Cone,
        assignment: FaceAssignment,
    },
}

impl Verdict {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, Verdict::Satisfied)
    }
}

/// Nonzero planar weight vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightList {
    weights: Vec<[i64; 2]>,
}

impl WeightList {
    pub fn new(weights: Vec<Vec<i64>>) -> Result<Self, CompatError> {
        let mut out = Vec::with_capacity(weights.len());
        for (index, w) in weights.iter().enumerate() {
            if w.len() != 2 {
                return Err(CompatError::WeightRank {
                    index,
                    found: w.len(),
                });
            }
            if w[0] == 0 && w[1] == 0 {
                return Err(CompatError::ZeroWeight(index));
            }
            out.push([w[0], w[1]]);
        }
        Ok(WeightList { weights: out })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[[i64; 2]] {
        &self.weights
    }
}

fn check_rank(x: &XRay) -> Result<(), CompatError> {
    if x.rank() != 2 {
        return Err(CompatError::UnsupportedRank(x.rank()));
    }
    Ok(())
}

/// Backtracking over faces (lowest dimension first). `contains` lists pairs
/// `(i, j)` with face `i` inside face `j`; the chosen strata must satisfy
/// `X_i <= X_j` for each.
fn solve(x: &XRay, candidates: &[Vec<usize>], contains: &[(usize, usize)]) -> Option<Vec<usize>> {
    fn go(
        x: &XRay,
        candidates: &[Vec<usize>],
        contains: &[(usize, usize)],
        k: usize,
        assign: &mut Vec<usize>,
    ) -> bool {
        if k == candidates.len() {
            return true;
        }
        for &c in &candidates[k] {
            let ok = contains.iter().all(|&(i, j)| {
                if j == k && i < k {
                    x.le(assign[i], c)
                } else if i == k && j < k {
                    x.le(c, assign[j])
                } else {
                    true
                }
            });
            if ok {
                assign.push(c);
                if go(x, candidates, contains, k + 1, assign) {
                    return true;
                }
                assign.pop();
            }
        }
        false
    }
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let mut assign = Vec::with_capacity(candidates.len());
    go(x, candidates, contains, 0, &mut assign).then_some(assign)
}

fn to_assignment(x: &XRay, faces: Vec<Face>, chosen: Vec<usize>) -> FaceAssignment {
    FaceAssignment {
        entries: faces
            .into_iter()
            .zip(chosen)
            .map(|(f, i)| (f, x.stratum(i).id.clone()))
            .collect(),
    }
}

pub fn is_compatible_polytope(
    delta: &Polytope,
    x: &XRay,
) -> Result<Option<FaceAssignment>, CompatError> {
    check_rank(x)?;
    if delta.rank() != 2 {
        return Err(GeomError::DimensionMismatch {
            expected: 2,
            found: delta.rank(),
        }
        .into());
    }
    if delta.is_empty() {
        return Err(GeomError::EmptyInput.into());
    }
    let faces = delta.all_faces();
    let candidates: Vec<Vec<usize>> = faces
        .iter()
        .map(|f| {
            (0..x.len())
                .filter(|&i| {
                    let img = &x.stratum(i).polytope;
                    img.dim() == f.dim() && f.is_subset_of(img)
                })
                .collect()
        })
        .collect();
    let mut contains = Vec::new();
    for (i, a) in faces.iter().enumerate() {
        for (j, b) in faces.iter().enumerate() {
            if a.dim() < b.dim() && a.is_subset_of(b) {
                contains.push((i, j));
            }
        }
    }
    Ok(solve(x, &candidates, &contains)
        .map(|chosen| to_assignment(x, faces.into_iter().map(Face::Polytope).collect(), chosen)))
}

pub fn is_compatible_cone(c: &Cone, x: &XRay) -> Result<Option<FaceAssignment>, CompatError> {
    check_rank(x)?;
    let apex = c.apex();
    let faces = c.faces();
    // Tangent cones at the apex of every stratum image through it.
    let tangents: Vec<Option<Cone>> = x
        .strata()
        .iter()
        .map(|s| {
            if s.polytope.contains(apex) {
                tangent_cone(&s.polytope, apex).ok()
            } else {
                None
            }
        })
        .collect();
    let mut candidates = Vec::with_capacity(faces.len());
    for f in &faces {
        let mut cs = Vec::new();
        for (i, t) in tangents.iter().enumerate() {
            if let Some(t) = t {
                if x.stratum(i).polytope.dim() == f.dim() as isize && cone_contains(t, f)? {
                    cs.push(i);
                }
            }
        }
        candidates.push(cs);
    }
    let mut contains = Vec::new();
    for (i, a) in faces.iter().enumerate() {
        for (j, b) in faces.iter().enumerate() {
            if a.dim() < b.dim() && cone_contains(b, a)? {
                contains.push((i, j));
            }
        }
    }
    Ok(solve(x, &candidates, &contains)
        .map(|chosen| to_assignment(x, faces.into_iter().map(Face::Cone).collect(), chosen)))
}

/// Distinct images of point-image strata, sorted.
fn point_images(x: &XRay) -> Vec<Point> {
    let set: BTreeSet<Point> = x
        .point_image_indices()
        .into_iter()
        .map(|i| x.stratum(i).polytope.vertices()[0].clone())
        .collect();
    set.into_iter().collect()
}

fn check_dim(d: isize) -> Result<(), CompatError> {
    if !(0..=2).contains(&d) {
        return Err(CompatError::BadDimension(d));
    }
    Ok(())
}

fn keep_compatible(x: &XRay, polys: BTreeSet<Polytope>) -> Result<Vec<Polytope>, CompatError> {
    let mut out = Vec::new();
    for p in polys {
        if is_compatible_polytope(&p, x)?.is_some() {
            out.push(p);
        }
    }
    Ok(out)
}

fn cross3(o: &Point, a: &Point, b: &Point) -> Scalar {
    let u = a.minus(o);
    let v = b.minus(o);
    &u[0] * &v[1] - &u[1] * &v[0]
}

/// All `d`-dimensional compatible polytopes, sorted and without duplicates.
///
/// Vertices of a compatible polytope are point images and its edges are
/// compatible segments, so polygons are found as convex counterclockwise
/// cycles in the graph of compatible segments.
pub fn enumerate_compatible_polytopes(x: &XRay, d: isize) -> Result<Vec<Polytope>, CompatError> {
    check_rank(x)?;
    check_dim(d)?;
    let pts = point_images(x);
    let n = pts.len();
    if d == 0 {
        return keep_compatible(x, pts.into_iter().map(Polytope::point).collect());
    }
    let mut adj = vec![vec![false; n]; n];
    let mut segments = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let s = Polytope::segment(pts[i].clone(), pts[j].clone())?;
            if is_compatible_polytope(&s, x)?.is_some() {
                adj[i][j] = true;
                adj[j][i] = true;
                segments.insert(s);
            }
        }
    }
    if d == 1 {
        return Ok(segments.into_iter().collect());
    }

    let mut found = BTreeSet::new();
    for start in 0..n {
        let mut path = vec![start];
        cycles(&pts, &adj, &mut path, &mut found)?;
    }
    keep_compatible(x, found)
}

fn cycles(
    pts: &[Point],
    adj: &[Vec<bool>],
    path: &mut Vec<usize>,
    found: &mut BTreeSet<Polytope>,
) -> Result<(), CompatError> {
    let start = path[0];
    let last = *path.last().expect("nonempty path");
    for next in 0..pts.len() {
        if !adj[last][next] {
            continue;
        }
        if path.len() >= 2 {
            let prev = path[path.len() - 2];
            if sign(&cross3(&pts[prev], &pts[last], &pts[next])) <= 0 {
                continue;
            }
        }
        if next == start {
            if path.len() >= 3 {
                let cyc: Vec<Point> = path.iter().map(|&i| pts[i].clone()).collect();
                let hull = Polytope::hull(&cyc)?;
                if hull.dim() == 2 && hull.vertices().len() == cyc.len() {
                    // The closing turn at `start` must also be a left turn.
                    if sign(&cross3(&pts[last], &pts[start], &pts[path[1]])) > 0 {
                        found.insert(hull);
                    }
                }
            }
            continue;
        }
        // Vertices after the first are lexicographically larger, so each
        // polygon is traced once from its smallest vertex.
        if pts[next] < pts[start] || path.contains(&next) {
            continue;
        }
        path.push(next);
        cycles(pts, adj, path, found)?;
        path.pop();
    }
    Ok(())
}

/// Reference enumeration: hulls of all subsets of point images.
pub fn enumerate_compatible_polytopes_oracle(
    x: &XRay,
    d: isize,
) -> Result<Vec<Polytope>, CompatError> {
    check_rank(x)?;
    check_dim(d)?;
    let count = x.point_image_indices().len();
    if count > ORACLE_LIMIT {
        return Err(CompatError::OracleTooLarge(count));
    }
    let pts = point_images(x);
    let mut hulls = BTreeSet::new();
    for mask in 1u32..(1u32 << pts.len()) {
        let subset: Vec<Point> = (0..pts.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| pts[i].clone())
            .collect();
        let h = Polytope::hull(&subset)?;
        if h.dim() == d {
            hulls.insert(h);
        }
    }
    keep_compatible(x, hulls)
}

/// All strictly convex compatible cones in canonical order.
pub fn enumerate_compatible_cones(x: &XRay) -> Result<Vec<Cone>, CompatError> {
    check_rank(x)?;
    let mut out = BTreeSet::new();
    for apex in point_images(x) {
        let mut dirs = BTreeSet::new();
        for s in x.strata() {
            if s.polytope.dim() == 1 && s.polytope.contains(&apex) {
                for g in tangent_cone(&s.polytope, &apex)?.generators() {
                    dirs.insert(*g);
                }
            }
        }
        let dirs: Vec<[i64; 2]> = dirs.into_iter().collect();
        let mut cands = vec![Cone::point(apex.clone())?];
        for &a in &dirs {
            cands.push(Cone::ray(apex.clone(), a)?);
        }
        for (i, &a) in dirs.iter().enumerate() {
            for &b in &dirs[i + 1..] {
                if a[0] * b[1] - a[1] * b[0] != 0 {
                    cands.push(Cone::sector(apex.clone(), a, b)?);
                }
            }
        }
        for c in cands {
            if c.is_strictly_convex() && is_compatible_cone(&c, x)?.is_some() {
                out.insert(c);
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn require_extendable_input(c: &Cone, x: &XRay) -> Result<(), CompatError> {
    check_rank(x)?;
    if is_compatible_cone(c, x)?.is_none() {
        return Err(CompatError::NotCompatible(c.to_string()));
    }
    if !c.is_strictly_convex() {
        return Err(CompatError::NotStrictlyConvex(c.to_string()));
    }
    Ok(())
}

fn extension_in(c: &Cone, catalog: &[Polytope]) -> Result<Option<Polytope>, CompatError> {
    for p in catalog {
        if p.contains(c.apex()) && &tangent_cone(p, c.apex())? == c {
            return Ok(Some(p.clone()));
        }
    }
    Ok(None)
}

/// A compatible polytope agreeing with `c` near its apex, if one exists.
pub fn find_extension(c: &Cone, x: &XRay) -> Result<Option<Polytope>, CompatError> {
    require_extendable_input(c, x)?;
    let catalog = enumerate_compatible_polytopes(x, c.dim() as isize)?;
    extension_in(c, &catalog)
}

/// Every compatible strictly convex cone without an extension, in canonical order.
pub fn non_extendable_cones(x: &XRay) -> Result<Vec<(Cone, FaceAssignment)>, CompatError> {
    check_rank(x)?;
    let report = validate(x);
    if !report.is_valid() {
        return Err(CompatError::InvalidXRay(report.to_string()));
    }
    let mut catalogs = BTreeMap::new();
    for d in 0..=2 {
        catalogs.insert(d, enumerate_compatible_polytopes(x, d)?);
    }
    let mut out = Vec::new();
    for c in enumerate_compatible_cones(x)? {
        if extension_in(&c, &catalogs[&(c.dim() as isize)])?.is_none() {
            let assignment = is_compatible_cone(&c, x)?.expect("enumerated cones are compatible");
            out.push((c, assignment));
        }
    }
    Ok(out)
}

pub fn decide_extension_criterion(x: &XRay) -> Result<Verdict, CompatError> {
    Ok(match non_extendable_cones(x)?.into_iter().next() {
        None => Verdict::Satisfied,
        Some((witness, assignment)) => Verdict::FailsWith {
            witness,
            assignment,
        },
    })
}

/// Cone at the origin spanned by the weights indexed by `j` (0-based).
pub fn cone_from_support(w: &WeightList, j: &BTreeSet<usize>) -> Cone {
    let dirs: Vec<[i64; 2]> = j.iter().map(|&i| w.weights[i]).collect();
    Cone::from_int_directions(Point::origin(2), &dirs).expect("weights are nonzero and planar")
}

/// The inclusion-minimal index set whose weights span `c`.
///
/// Minimal sets of equal size are resolved to the lexicographically smallest;
/// minimal sets of different sizes are reported as ambiguous.
pub fn minimal_support(c: &Cone, w: &WeightList) -> Result<Option<BTreeSet<usize>>, CompatError> {
    if c.apex() != &Point::origin(2) {
        return Err(CompatError::NotAtOrigin(c.to_string()));
    }
    let n = w.len();
    if n > SUPPORT_LIMIT {
        return Err(CompatError::TooManyWeights(n));
    }
    let reps: Vec<u32> = (0u32..(1u32 << n))
        .filter(|&mask| {
            let j: BTreeSet<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            &cone_from_support(w, &j) == c
        })
        .collect();
    let minimal: Vec<Vec<usize>> = reps
        .iter()
        .filter(|&&m| !reps.iter().any(|&r| r != m && r & m == r))
        .map(|&m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect();
    let Some(size) = minimal.first().map(Vec::len) else {
        return Ok(None);
    };
    if minimal.iter().any(|m| m.len() != size) {
        let mut all = minimal;
        all.sort();
        return Err(CompatError::AmbiguousSupport(all));
    }
    Ok(minimal.into_iter().min().map(|m| m.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{ex21, ex22, fig2};

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(&[x, y])
    }

    fn poly(pts: &[(i64, i64)]) -> Polytope {
        Polytope::hull(&pts.iter().map(|&(x, y)| p(x, y)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn polytope_examples() {
        let a = is_compatible_polytope(&poly(&[(0, 0), (4, 0), (0, 4)]), &ex21())
            .unwrap()
            .unwrap();
        assert_eq!(a.len(), 7);
        assert!(
            is_compatible_polytope(&poly(&[(0, 0), (3, 0), (0, 3)]), &ex22())
                .unwrap()
                .is_some()
        );
        assert!(is_compatible_polytope(&poly(&[(0, 0), (1, 3)]), &fig2())
            .unwrap()
            .is_none());
    }

    #[test]
    fn cone_examples() {
        let x = fig2();
        let c = Cone::sector(p(2, 1), [-1, 0], [-1, 1]).unwrap();
        assert!(is_compatible_cone(&c, &x).unwrap().is_some());
        assert_eq!(find_extension(&c, &x).unwrap(), None);
        let q = Cone::sector(p(0, 0), [1, 0], [0, 1]).unwrap();
        assert_eq!(
            find_extension(&q, &x).unwrap(),
            Some(poly(&[(0, 0), (4, 0), (1, 3), (0, 3)]))
        );
        let r = Cone::ray(p(1, 1), [1, 1]).unwrap();
        assert!(is_compatible_cone(&r, &x).unwrap().is_none());
        assert!(matches!(
            find_extension(&r, &x),
            Err(CompatError::NotCompatible(_))
        ));
        let pt = Cone::point(p(4, 0)).unwrap();
        assert_eq!(
            find_extension(&pt, &x).unwrap(),
            Some(Polytope::point(p(4, 0)))
        );
    }

    #[test]
    fn cones_at_origin() {
        let cones = enumerate_compatible_cones(&fig2()).unwrap();
        let at0: Vec<String> = cones
            .iter()
            .filter(|c| c.apex() == &p(0, 0))
            .map(|c| c.to_string())
            .collect();
        assert_eq!(at0.len(), 7, "{at0:?}");
        assert!(cones.iter().all(|c| c.apex() != &p(1, 2)));
    }

    #[test]
    fn supports() {
        let w = WeightList::new(vec![vec![1, 1], vec![2, 2], vec![1, 0]]).unwrap();
        let ray = Cone::ray(Point::origin(2), [1, 1]).unwrap();
        assert_eq!(
            minimal_support(&ray, &w).unwrap(),
            Some(BTreeSet::from([0]))
        );
        let w = WeightList::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let back = Cone::ray(Point::origin(2), [-1, 0]).unwrap();
        assert_eq!(minimal_support(&back, &w).unwrap(), None);
        let w = WeightList::new(vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let quad = Cone::sector(Point::origin(2), [1, 0], [0, 1]).unwrap();
        assert_eq!(
            minimal_support(&quad, &w).unwrap(),
            Some(BTreeSet::from([0, 1]))
        );
        let w = WeightList::new(vec![
            vec![1, 0],
            vec![0, 1],
            vec![-1, -1],
            vec![-1, 0],
            vec![0, -1],
        ])
        .unwrap();
        let plane = Cone::full_plane(Point::origin(2)).unwrap();
        assert!(matches!(
            minimal_support(&plane, &w),
            Err(CompatError::AmbiguousSupport(_))
        ));
        assert!(matches!(
            WeightList::new(vec![vec![0, 0]]),
            Err(CompatError::ZeroWeight(0))
        ));
    }

    #[test]
    fn weight_cones() {
        let w = WeightList::new(vec![vec![4, 0], vec![0, 4], vec![1, 1]]).unwrap();
        let c = cone_from_support(&w, &BTreeSet::from([0, 2]));
        assert_eq!(c, Cone::sector(Point::origin(2), [1, 0], [1, 1]).unwrap());
        assert_eq!(
            cone_from_support(&w, &BTreeSet::new()),
            Cone::point(Point::origin(2)).unwrap()
        );
    }
}
