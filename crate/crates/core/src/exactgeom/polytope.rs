//! Points and convex polytopes in V-representation.
//!
//! A polytope of affine dimension `d <= 3` may live in any ambient rank. All
//! computations happen in a coordinate projection that is injective on the
//! affine hull: the pivot columns of the row-reduced difference vectors.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::linalg::{rank, rref};
use super::scalar::{dot_int, format_scalar, int, sign, Scalar};
use super::GeomError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&x| int(x)).collect())
    }

    pub fn origin(rank: usize) -> Self {
        Point(vec![Scalar::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    /// `self - other` as a vector.
    pub fn minus(&self, other: &Point) -> Vec<Scalar> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn plus(&self, v: &[Scalar]) -> Point {
        Point(self.0.iter().zip(v).map(|(a, b)| a + b).collect())
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Scalar) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        )
    }

    pub fn project(&self, idx: &[usize]) -> Vec<Scalar> {
        idx.iter().map(|&i| self.0[i].clone()).collect()
    }

    /// Concatenation, used for product polytopes.
    pub fn concat(&self, other: &Point) -> Point {
        let mut c = self.0.clone();
        c.extend(other.0.iter().cloned());
        Point(c)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_scalar(c))?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Le,
    Ge,
}

/// `<normal, x> <= level` or `>= level`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Halfplane {
    normal: Vec<i64>,
    level: Scalar,
    sense: Sense,
}

impl Halfplane {
    pub fn new(normal: Vec<i64>, level: Scalar, sense: Sense) -> Result<Self, GeomError> {
        if !super::scalar::is_primitive(&normal) {
            return Err(GeomError::NotPrimitive(normal));
        }
        Ok(Halfplane {
            normal,
            level,
            sense,
        })
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn level(&self) -> &Scalar {
        &self.level
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    /// Signed slack: nonnegative iff `p` satisfies the constraint.
    fn slack(&self, p: &Point) -> Scalar {
        let v = dot_int(p.coords(), &self.normal);
        match self.sense {
            Sense::Le => &self.level - v,
            Sense::Ge => v - &self.level,
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        !self.slack(p).is_negative()
    }
}

/// A convex polytope given by its extreme points in canonical order.
///
/// Canonical order: lexicographically smallest vertex first; for dimension 2 the
/// remaining vertices follow the counterclockwise boundary walk (in the injective
/// coordinate projection), otherwise they are sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope {
    rank: usize,
    vertices: Vec<Point>,
    dim: isize,
}

impl Ord for Polytope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then(self.dim.cmp(&other.dim))
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Polytope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Affine frame of a point set: base point, pivot coordinates, dimension.
struct Frame {
    base: Point,
    pivots: Vec<usize>,
    rows: Vec<Vec<Scalar>>,
}

impl Frame {
    fn of(points: &[Point]) -> Frame {
        let base = points[0].clone();
        let diffs: Vec<Vec<Scalar>> = points[1..].iter().map(|p| p.minus(&base)).collect();
        let (rows, pivots) = if diffs.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            rref(&diffs)
        };
        Frame { base, pivots, rows }
    }

    fn dim(&self) -> usize {
        self.pivots.len()
    }

    fn in_affine_hull(&self, p: &Point) -> bool {
        let v = p.minus(&self.base);
        if self.rows.is_empty() {
            return v.iter().all(Zero::is_zero);
        }
        let mut ext = self.rows.clone();
        ext.push(v);
        rank(&ext) == self.rows.len()
    }
}

fn cross2(o: &[Scalar], a: &[Scalar], b: &[Scalar]) -> Scalar {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn cross3(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot3(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// Counterclockwise hull of distinct 2D points (monotone chain); returns indices.
fn hull2_indices(pts: &[Vec<Scalar>]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && !cross2(
                &pts[lower[lower.len() - 2]],
                &pts[lower[lower.len() - 1]],
                &pts[i],
            )
            .is_positive()
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && !cross2(
                &pts[upper[upper.len() - 2]],
                &pts[upper[upper.len() - 1]],
                &pts[i],
            )
            .is_positive()
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Facets of a full-dimensional 3D point set: (inward normal, offset, member indices).
fn facets3(pts: &[Vec<Scalar>]) -> Vec<(Vec<Scalar>, Scalar, Vec<usize>)> {
    let n = pts.len();
    let mut out: Vec<(Vec<Scalar>, Scalar, Vec<usize>)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let nrm = cross3(&sub(&pts[j], &pts[i]), &sub(&pts[k], &pts[i]));
                if nrm.iter().all(Zero::is_zero) {
                    continue;
                }
                let off = dot3(&nrm, &pts[i]);
                let signs: Vec<i8> = pts.iter().map(|p| sign(&(dot3(&nrm, p) - &off))).collect();
                let pos = signs.iter().any(|&s| s > 0);
                let neg = signs.iter().any(|&s| s < 0);
                if pos && neg {
                    continue;
                }
                let members: Vec<usize> = (0..n).filter(|&m| signs[m] == 0).collect();
                if out.iter().any(|f| f.2 == members) {
                    continue;
                }
                let (nrm, off) = if neg {
                    (nrm.iter().map(|x| -x).collect(), -off)
                } else {
                    (nrm, off)
                };
                out.push((nrm, off, members));
            }
        }
    }
    out
}

impl Polytope {
    pub fn empty(rank: usize) -> Self {
        Polytope {
            rank,
            vertices: Vec::new(),
            dim: -1,
        }
    }

    pub fn point(p: Point) -> Self {
        Polytope {
            rank: p.rank(),
            vertices: vec![p],
            dim: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Canonical convex hull of a nonempty point list of uniform rank.
    pub fn hull(points: &[Point]) -> Result<Polytope, GeomError> {
        let first = points.first().ok_or(GeomError::EmptyInput)?;
        let rank = first.rank();
        if let Some(p) = points.iter().find(|p| p.rank() != rank) {
            return Err(GeomError::DimensionMismatch {
                expected: rank,
                found: p.rank(),
            });
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let frame = Frame::of(&pts);
        let vertices = match frame.dim() {
            0 => pts,
            1 => vec![pts[0].clone(), pts[pts.len() - 1].clone()],
            2 => {
                let proj: Vec<Vec<Scalar>> = pts.iter().map(|p| p.project(&frame.pivots)).collect();
                let walk = hull2_indices(&proj);
                let start = (0..walk.len())
                    .min_by(|&a, &b| pts[walk[a]].cmp(&pts[walk[b]]))
                    .unwrap();
                (0..walk.len())
                    .map(|i| pts[walk[(start + i) % walk.len()]].clone())
                    .collect()
            }
            3 => {
                let proj: Vec<Vec<Scalar>> = pts.iter().map(|p| p.project(&frame.pivots)).collect();
                let mut keep = vec![false; pts.len()];
                for (_, _, members) in facets3(&proj) {
                    let sub: Vec<Point> = members.iter().map(|&m| pts[m].clone()).collect();
                    let face = Polytope::hull(&sub)?;
                    for m in members {
                        if face.vertices.contains(&pts[m]) {
                            keep[m] = true;
                        }
                    }
                }
                pts.into_iter()
                    .zip(keep)
                    .filter_map(|(p, k)| k.then_some(p))
                    .collect()
            }
            d => return Err(GeomError::UnsupportedDimension(d)),
        };
        Ok(Polytope {
            rank,
            dim: frame.dim() as isize,
            vertices,
        })
    }

    pub fn segment(a: Point, b: Point) -> Result<Polytope, GeomError> {
        Polytope::hull(&[a, b])
    }

    fn frame(&self) -> Frame {
        Frame::of(&self.vertices)
    }

    /// Membership test, exact.
    pub fn contains(&self, p: &Point) -> bool {
        if p.rank() != self.rank || self.is_empty() {
            return false;
        }
        let frame = self.frame();
        if !frame.in_affine_hull(p) {
            return false;
        }
        let q = p.project(&frame.pivots);
        let proj: Vec<Vec<Scalar>> = self
            .vertices
            .iter()
            .map(|v| v.project(&frame.pivots))
            .collect();
        match self.dim {
            0 => true,
            1 => {
                let (a, b) = (&proj[0][0], &proj[1][0]);
                let x = &q[0];
                (a <= x && x <= b) || (b <= x && x <= a)
            }
            2 => (0..proj.len())
                .all(|i| !cross2(&proj[i], &proj[(i + 1) % proj.len()], &q).is_negative()),
            _ => facets3(&proj)
                .iter()
                .all(|(n, off, _)| !(dot3(n, &q) - off).is_negative()),
        }
    }

    pub fn is_subset_of(&self, other: &Polytope) -> bool {
        self.vertices.iter().all(|v| other.contains(v))
    }

    /// All faces of dimension `d` in canonical order; `[self]` for `d == dim`.
    pub fn faces(&self, d: isize) -> Vec<Polytope> {
        if d < 0 || d > self.dim {
            return Vec::new();
        }
        if d == self.dim {
            return vec![self.clone()];
        }
        let mut out: Vec<Polytope> = match (self.dim, d) {
            (_, 0) => self.vertices.iter().cloned().map(Polytope::point).collect(),
            (2, 1) => (0..self.vertices.len())
                .map(|i| {
                    let a = self.vertices[i].clone();
                    let b = self.vertices[(i + 1) % self.vertices.len()].clone();
                    Polytope::segment(a, b).expect("edge of a valid polygon")
                })
                .collect(),
            (3, 2) => self.facets3(),
            (3, 1) => self.facets3().iter().flat_map(|f| f.faces(1)).collect(),
            _ => unreachable!("dimension bounded by 3"),
        };
        out.sort();
        out.dedup();
        out
    }

    fn facets3(&self) -> Vec<Polytope> {
        let frame = self.frame();
        let proj: Vec<Vec<Scalar>> = self
            .vertices
            .iter()
            .map(|v| v.project(&frame.pivots))
            .collect();
        facets3(&proj)
            .into_iter()
            .map(|(_, _, members)| {
                let pts: Vec<Point> = members.iter().map(|&m| self.vertices[m].clone()).collect();
                Polytope::hull(&pts).expect("facet of a valid polytope")
            })
            .collect()
    }

    /// Every face of every dimension, lowest dimension first.
    pub fn all_faces(&self) -> Vec<Polytope> {
        (0..=self.dim).flat_map(|d| self.faces(d)).collect()
    }

    /// Intersection with a closed half-space.
    pub fn clip(&self, h: &Halfplane) -> Result<Polytope, GeomError> {
        if h.normal.len() != self.rank {
            return Err(GeomError::DimensionMismatch {
                expected: self.rank,
                found: h.normal.len(),
            });
        }
        let mut keep: Vec<Point> = self
            .vertices
            .iter()
            .filter(|v| h.contains(v))
            .cloned()
            .collect();
        let edges: Vec<Polytope> = match self.dim {
            d if d < 1 => Vec::new(),
            1 => vec![self.clone()],
            _ => self.faces(1),
        };
        for e in edges {
            let (a, b) = (&e.vertices[0], &e.vertices[1]);
            let (sa, sb) = (h.slack(a), h.slack(b));
            if sign(&sa) * sign(&sb) < 0 {
                let t = &sa / (&sa - &sb);
                keep.push(a.lerp(b, &t));
            }
        }
        if keep.is_empty() {
            Ok(Polytope::empty(self.rank))
        } else {
            Polytope::hull(&keep)
        }
    }

    /// Image under `p -> U p + b`.
    pub fn map_affine(&self, u: &[Vec<i64>], b: &Point) -> Result<Polytope, GeomError> {
        if self.is_empty() {
            return Ok(self.clone());
        }
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| {
                Point::new(
                    u.iter()
                        .zip(b.coords())
                        .map(|(row, bi)| dot_int(v.coords(), row) + bi)
                        .collect(),
                )
            })
            .collect();
        Polytope::hull(&pts)
    }

    /// Cartesian product embedded in the direct sum of the ambient spaces.
    pub fn product(&self, other: &Polytope) -> Result<Polytope, GeomError> {
        if self.is_empty() || other.is_empty() {
            return Ok(Polytope::empty(self.rank + other.rank));
        }
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| a.concat(b)))
            .collect();
        Polytope::hull(&pts)
    }
}

/// Parameter `t` with `q = a + t (b - a)`, if `q` lies on the line through `a != b`.
pub fn line_parameter(a: &Point, b: &Point, q: &Point) -> Option<Scalar> {
    let d = b.minus(a);
    let i = d.iter().position(|x| !x.is_zero())?;
    let t = (&q.coords()[i] - &a.coords()[i]) / &d[i];
    (a.lerp(b, &t) == *q).then_some(t)
}

/// Whether the segment `[a, b]` lies in the union of `pieces`.
///
/// Pieces of dimension at most 1 are handled in any rank; two-dimensional pieces
/// only in rank 2. Pieces meeting the segment in a single point are ignored,
/// which is exact for closed pieces covering a segment of positive length.
pub fn segment_covered(a: &Point, b: &Point, pieces: &[Polytope]) -> bool {
    if a == b {
        return pieces.iter().any(|p| p.contains(a));
    }
    let zero = Scalar::zero();
    let one = Scalar::from_integer(1.into());
    let mut intervals: Vec<(Scalar, Scalar)> = Vec::new();
    for piece in pieces {
        let section = match piece.dim() {
            1 => piece.clone(),
            2 if piece.rank() == 2 => match line_section(piece, a, b) {
                Some(s) => s,
                None => continue,
            },
            _ => continue,
        };
        if section.dim() != 1 {
            continue;
        }
        let ts: Option<Vec<Scalar>> = section
            .vertices()
            .iter()
            .map(|v| line_parameter(a, b, v))
            .collect();
        let Some(mut ts) = ts else { continue };
        ts.sort();
        let lo = ts[0].clone().max(zero.clone());
        let hi = ts[1].clone().min(one.clone());
        if lo < hi {
            intervals.push((lo, hi));
        }
    }
    intervals.sort();
    let mut reach = zero;
    for (lo, hi) in intervals {
        if lo > reach {
            return false;
        }
        if hi > reach {
            reach = hi;
        }
    }
    reach == one
}

/// Intersection of a planar polytope with the line through `a != b`.
fn line_section(p: &Polytope, a: &Point, b: &Point) -> Option<Polytope> {
    let d = b.minus(a);
    let normal = super::scalar::primitive_direction(&[-d[1].clone(), d[0].clone()])?;
    let level = dot_int(a.coords(), &normal);
    let le = Halfplane::new(normal.clone(), level.clone(), Sense::Le).ok()?;
    let ge = Halfplane::new(normal, level, Sense::Ge).ok()?;
    p.clip(&le).ok()?.clip(&ge).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::scalar::ratio;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(&[x, y])
    }

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| p(x, y)).collect()
    }

    #[test]
    fn hull_examples() {
        let h = Polytope::hull(&pts(&[(0, 0)])).unwrap();
        assert_eq!(h.dim(), 0);
        let h = Polytope::hull(&pts(&[(0, 0), (4, 0), (1, 0), (3, 0), (0, 3), (1, 3)])).unwrap();
        assert_eq!(
            h.vertices(),
            pts(&[(0, 0), (4, 0), (1, 3), (0, 3)]).as_slice()
        );
        assert_eq!(h.dim(), 2);
        let h = Polytope::hull(&pts(&[(0, 0), (4, 0), (1, 1), (2, 1), (0, 3), (1, 3)])).unwrap();
        assert_eq!(
            h.vertices(),
            pts(&[(0, 0), (4, 0), (1, 3), (0, 3)]).as_slice()
        );
    }

    #[test]
    fn hull_rejects_mixed_rank_and_empty() {
        assert!(matches!(
            Polytope::hull(&[p(0, 0), Point::from_ints(&[1, 2, 3])]),
            Err(GeomError::DimensionMismatch { .. })
        ));
        assert!(matches!(Polytope::hull(&[]), Err(GeomError::EmptyInput)));
    }

    #[test]
    fn collinear_hull_keeps_endpoints() {
        let h = Polytope::hull(&pts(&[(3, 3), (1, 1), (2, 2), (0, 0)])).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(h.vertices(), pts(&[(0, 0), (3, 3)]).as_slice());
    }

    #[test]
    fn faces_examples() {
        let seg = Polytope::segment(p(0, 0), p(4, 0)).unwrap();
        assert_eq!(
            seg.faces(0),
            vec![Polytope::point(p(0, 0)), Polytope::point(p(4, 0))]
        );
        let quad = Polytope::hull(&pts(&[(0, 0), (4, 0), (1, 3), (0, 3)])).unwrap();
        assert_eq!(quad.faces(1).len(), 4);
        let tri = Polytope::hull(&pts(&[(0, 0), (4, 0), (0, 4)])).unwrap();
        assert_eq!(tri.faces(2), vec![tri.clone()]);
        assert!(tri.faces(3).is_empty());
        assert!(tri.faces(-1).is_empty());
    }

    #[test]
    fn three_dimensional_faces() {
        let cube: Vec<Point> = (0..8)
            .map(|i| Point::from_ints(&[i & 1, (i >> 1) & 1, (i >> 2) & 1]))
            .collect();
        let mut with_center = cube.clone();
        with_center.push(Point::new(vec![ratio(1, 2), ratio(1, 2), ratio(1, 2)]));
        let c = Polytope::hull(&with_center).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.faces(2).len(), 6);
        assert_eq!(c.faces(1).len(), 12);
        assert_eq!(c.faces(0).len(), 8);
        assert!(c.contains(&Point::new(vec![ratio(1, 3), ratio(1, 2), int(1)])));
        assert!(!c.contains(&Point::new(vec![ratio(1, 3), ratio(1, 2), ratio(3, 2)])));
    }

    #[test]
    fn clip_examples() {
        let t_le = Halfplane::new(vec![0, 1], ratio(3, 2), Sense::Le).unwrap();
        let seg = Polytope::segment(p(0, 0), p(0, 4)).unwrap();
        assert_eq!(
            seg.clip(&t_le).unwrap(),
            Polytope::segment(p(0, 0), Point::new(vec![int(0), ratio(3, 2)])).unwrap()
        );
        let tri = Polytope::hull(&pts(&[(0, 0), (4, 0), (0, 4)])).unwrap();
        let clipped = tri.clip(&t_le).unwrap();
        assert_eq!(
            clipped.vertices(),
            &[
                p(0, 0),
                p(4, 0),
                Point::new(vec![ratio(5, 2), ratio(3, 2)]),
                Point::new(vec![int(0), ratio(3, 2)]),
            ]
        );
        assert!(Polytope::point(p(0, 3)).clip(&t_le).unwrap().is_empty());
    }

    #[test]
    fn coverage() {
        let segs = vec![
            Polytope::segment(p(0, 0), p(2, 0)).unwrap(),
            Polytope::segment(p(2, 0), p(4, 0)).unwrap(),
        ];
        assert!(segment_covered(&p(0, 0), &p(4, 0), &segs));
        assert!(segment_covered(&p(1, 0), &p(3, 0), &segs));
        assert!(!segment_covered(&p(0, 0), &p(5, 0), &segs));
        assert!(!segment_covered(&p(0, 0), &p(4, 0), &segs[..1]));
        let tri = Polytope::hull(&pts(&[(0, 0), (4, 0), (0, 4)])).unwrap();
        assert!(segment_covered(
            &p(0, 0),
            &p(2, 2),
            std::slice::from_ref(&tri)
        ));
        assert!(!segment_covered(&p(0, 0), &p(3, 3), &[tri]));
    }

    #[test]
    fn containment() {
        let quad = Polytope::hull(&pts(&[(0, 0), (4, 0), (1, 3), (0, 3)])).unwrap();
        assert!(quad.contains(&p(2, 1)));
        assert!(quad.contains(&p(4, 0)));
        assert!(!quad.contains(&p(3, 2)));
        let seg = Polytope::segment(p(0, 0), p(2, 2)).unwrap();
        assert!(seg.contains(&p(1, 1)));
        assert!(!seg.contains(&p(1, 0)));
        assert!(!seg.contains(&p(3, 3)));
    }
}
