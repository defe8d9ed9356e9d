//! Closed convex cones in the plane, with an apex and primitive generators.

use std::cmp::Ordering;
use std::fmt;

use super::polytope::{Point, Polytope};
use super::scalar::{primitive_direction, Scalar};
use super::GeomError;

/// Primitive integer direction in the plane.
pub type Direction = [i64; 2];

fn cross(a: &Direction, b: &Direction) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn dotd(a: &Direction, b: &Direction) -> i64 {
    a[0] * b[0] + a[1] * b[1]
}

fn neg(a: &Direction) -> Direction {
    [-a[0], -a[1]]
}

fn half(a: &Direction) -> u8 {
    if a[1] > 0 || (a[1] == 0 && a[0] > 0) {
        0
    } else {
        1
    }
}

/// Counterclockwise angle order starting at the positive first axis.
pub fn angle_cmp(a: &Direction, b: &Direction) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

fn to_direction(v: &[Scalar]) -> Option<Direction> {
    primitive_direction(v).map(|d| [d[0], d[1]])
}

/// Shape of a planar cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConeShape {
    Point,
    Ray,
    Line,
    Sector,
    HalfPlane,
    Plane,
}

/// A closed convex cone `apex + C` in the plane.
///
/// Generators are primitive and stored canonically:
/// - point: none; ray: `[d]`; line: `[d, -d]` with `d` in the upper half-turn;
/// - sector: `[a, b]` with the cone swept counterclockwise from `a` to `b` (angle < pi);
/// - half-plane: `[d, -d]` with the cone swept counterclockwise from `d` to `-d`;
/// - plane: none, with `full` set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    apex: Point,
    generators: Vec<Direction>,
    dim: usize,
    full: bool,
}

impl Cone {
    pub fn point(apex: Point) -> Result<Cone, GeomError> {
        check_rank(&apex)?;
        Ok(Cone {
            apex,
            generators: Vec::new(),
            dim: 0,
            full: false,
        })
    }

    pub fn full_plane(apex: Point) -> Result<Cone, GeomError> {
        check_rank(&apex)?;
        Ok(Cone {
            apex,
            generators: Vec::new(),
            dim: 2,
            full: true,
        })
    }

    /// The closed half-plane swept counterclockwise from `boundary` to `-boundary`.
    pub fn half_plane(apex: Point, boundary: [i64; 2]) -> Result<Cone, GeomError> {
        check_rank(&apex)?;
        let d = primitive(boundary)?;
        Ok(Cone {
            apex,
            generators: vec![d, neg(&d)],
            dim: 2,
            full: false,
        })
    }

    pub fn ray(apex: Point, d: [i64; 2]) -> Result<Cone, GeomError> {
        Cone::from_int_directions(apex, &[d])
    }

    /// Positive span of two directions (a sector, ray or line).
    pub fn sector(apex: Point, a: [i64; 2], b: [i64; 2]) -> Result<Cone, GeomError> {
        Cone::from_int_directions(apex, &[a, b])
    }

    pub fn from_int_directions(apex: Point, dirs: &[[i64; 2]]) -> Result<Cone, GeomError> {
        let ds = dirs
            .iter()
            .map(|&d| primitive(d))
            .collect::<Result<Vec<_>, _>>()?;
        Cone::from_primitive(apex, ds)
    }

    /// Positive hull of rational direction vectors; zero vectors are ignored.
    pub fn from_directions(apex: Point, dirs: &[Vec<Scalar>]) -> Result<Cone, GeomError> {
        let ds = dirs.iter().filter_map(|v| to_direction(v)).collect();
        Cone::from_primitive(apex, ds)
    }

    fn from_primitive(apex: Point, mut ds: Vec<Direction>) -> Result<Cone, GeomError> {
        check_rank(&apex)?;
        ds.sort_by(angle_cmp);
        ds.dedup();
        let n = ds.len();
        match n {
            0 => return Cone::point(apex),
            1 => {
                return Ok(Cone {
                    apex,
                    generators: ds,
                    dim: 1,
                    full: false,
                })
            }
            2 if cross(&ds[0], &ds[1]) == 0 => {
                // Opposite directions; angle order puts the upper one first.
                return Ok(Cone {
                    apex,
                    generators: ds,
                    dim: 1,
                    full: false,
                });
            }
            _ => {}
        }
        for i in 0..n {
            let u = ds[i];
            let v = ds[(i + 1) % n];
            let c = cross(&u, &v);
            if c < 0 || (c == 0 && dotd(&u, &v) > 0) {
                // Gap wider than pi (the second case only occurs for n == 1).
                return Ok(Cone {
                    apex,
                    generators: vec![v, u],
                    dim: 2,
                    full: false,
                });
            }
            if c == 0 {
                // Gap of exactly pi: the cone is the half-plane from v to u = -v.
                return Ok(Cone {
                    apex,
                    generators: vec![v, u],
                    dim: 2,
                    full: false,
                });
            }
        }
        Cone::full_plane(apex)
    }

    pub fn apex(&self) -> &Point {
        &self.apex
    }

    pub fn generators(&self) -> &[Direction] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn shape(&self) -> ConeShape {
        match (self.dim, self.generators.len(), self.full) {
            (0, _, _) => ConeShape::Point,
            (1, 1, _) => ConeShape::Ray,
            (1, _, _) => ConeShape::Line,
            (2, _, true) => ConeShape::Plane,
            (2, 2, false) if cross(&self.generators[0], &self.generators[1]) > 0 => {
                ConeShape::Sector
            }
            _ => ConeShape::HalfPlane,
        }
    }

    /// True iff the cone contains no line.
    pub fn is_strictly_convex(&self) -> bool {
        matches!(
            self.shape(),
            ConeShape::Point | ConeShape::Ray | ConeShape::Sector
        )
    }

    /// Whether the direction `d` (nonzero) points into the cone from the apex.
    pub fn contains_direction(&self, d: &Direction) -> bool {
        let g = &self.generators;
        match self.shape() {
            ConeShape::Point => false,
            ConeShape::Ray => cross(&g[0], d) == 0 && dotd(&g[0], d) > 0,
            ConeShape::Line => cross(&g[0], d) == 0,
            ConeShape::Sector => cross(&g[0], d) >= 0 && cross(d, &g[1]) >= 0,
            ConeShape::HalfPlane => cross(&g[0], d) >= 0,
            ConeShape::Plane => true,
        }
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        match to_direction(&p.minus(&self.apex)) {
            None => true,
            Some(d) => self.contains_direction(&d),
        }
    }

    /// A finite set of directions whose positive span is the cone.
    pub fn spanning_directions(&self) -> Vec<Direction> {
        let g = &self.generators;
        match self.shape() {
            ConeShape::HalfPlane => vec![g[0], [-g[0][1], g[0][0]], g[1]],
            ConeShape::Plane => vec![[1, 0], [0, 1], [-1, 0], [0, -1]],
            _ => g.clone(),
        }
    }

    /// Faces ordered by dimension: apex, rays, then the cone; for cones with a
    /// lineality space the minimal face is that line (or the plane itself).
    pub fn faces(&self) -> Vec<Cone> {
        let mk = |generators: Vec<Direction>, dim| Cone {
            apex: self.apex.clone(),
            generators,
            dim,
            full: false,
        };
        let g = &self.generators;
        match self.shape() {
            ConeShape::Point | ConeShape::Line | ConeShape::Plane => vec![self.clone()],
            ConeShape::Ray => vec![mk(Vec::new(), 0), self.clone()],
            ConeShape::Sector => vec![
                mk(Vec::new(), 0),
                mk(vec![g[0]], 1),
                mk(vec![g[1]], 1),
                self.clone(),
            ],
            ConeShape::HalfPlane => {
                let line = Cone::from_primitive(self.apex.clone(), g.clone())
                    .expect("rank checked at construction");
                vec![line, self.clone()]
            }
        }
    }

    /// Translate to a new apex (same directions).
    pub fn with_apex(&self, apex: Point) -> Cone {
        Cone {
            apex,
            ..self.clone()
        }
    }
}

impl Ord for Cone {
    /// Apex lexicographic, then dimension, then generators in angle order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.apex
            .cmp(&other.apex)
            .then(self.dim.cmp(&other.dim))
            .then(self.full.cmp(&other.full))
            .then_with(|| {
                for (a, b) in self.generators.iter().zip(&other.generators) {
                    let o = angle_cmp(a, b);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                self.generators.len().cmp(&other.generators.len())
            })
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "apex {} ", self.apex)?;
        match self.shape() {
            ConeShape::Point => write!(f, "point"),
            ConeShape::Plane => write!(f, "plane"),
            shape => {
                let name = match shape {
                    ConeShape::Ray => "ray",
                    ConeShape::Line => "line",
                    ConeShape::Sector => "sector",
                    _ => "half-plane",
                };
                write!(f, "{name}")?;
                for g in &self.generators {
                    write!(f, " ({},{})", g[0], g[1])?;
                }
                Ok(())
            }
        }
    }
}

fn check_rank(apex: &Point) -> Result<(), GeomError> {
    if apex.rank() != 2 {
        return Err(GeomError::UnsupportedRank(apex.rank()));
    }
    Ok(())
}

fn primitive(d: [i64; 2]) -> Result<Direction, GeomError> {
    let v = super::scalar::make_primitive(&d);
    if v == [0, 0] {
        return Err(GeomError::ZeroDirection);
    }
    Ok([v[0], v[1]])
}

/// The cone of directions from `v` into `p`.
pub fn tangent_cone(p: &Polytope, v: &Point) -> Result<Cone, GeomError> {
    if p.rank() != 2 {
        return Err(GeomError::UnsupportedRank(p.rank()));
    }
    if !p.contains(v) {
        return Err(GeomError::NotContained(v.to_string()));
    }
    let dirs: Vec<Vec<Scalar>> = p.vertices().iter().map(|w| w.minus(v)).collect();
    Cone::from_directions(v.clone(), &dirs)
}

/// `inner ⊆ outer` as point sets; both cones must share the apex.
pub fn cone_contains(outer: &Cone, inner: &Cone) -> Result<bool, GeomError> {
    if outer.apex != inner.apex {
        return Err(GeomError::ApexMismatch(
            outer.apex.to_string(),
            inner.apex.to_string(),
        ));
    }
    Ok(inner
        .spanning_directions()
        .iter()
        .all(|d| outer.contains_direction(d)))
}

pub fn is_strictly_convex(c: &Cone) -> bool {
    c.is_strictly_convex()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(&[x, y])
    }

    fn quad() -> Polytope {
        Polytope::hull(&[p(0, 0), p(4, 0), p(1, 3), p(0, 3)]).unwrap()
    }

    #[test]
    fn tangent_cone_examples() {
        let c = tangent_cone(&quad(), &p(0, 3)).unwrap();
        assert_eq!(c.shape(), ConeShape::Sector);
        assert_eq!(c.generators(), &[[0, -1], [1, 0]]);
        let seg = Polytope::segment(p(0, 0), p(4, 0)).unwrap();
        let c = tangent_cone(&seg, &p(4, 0)).unwrap();
        assert_eq!(c, Cone::ray(p(4, 0), [-1, 0]).unwrap());
        let c = tangent_cone(&quad(), &p(2, 1)).unwrap();
        assert!(c.is_full());
        assert!(matches!(
            tangent_cone(&quad(), &p(5, 5)),
            Err(GeomError::NotContained(_))
        ));
    }

    #[test]
    fn tangent_cone_on_edges() {
        let seg = Polytope::segment(p(0, 0), p(4, 0)).unwrap();
        assert_eq!(
            tangent_cone(&seg, &p(1, 0)).unwrap().shape(),
            ConeShape::Line
        );
        let c = tangent_cone(&quad(), &p(2, 0)).unwrap();
        assert_eq!(c, Cone::half_plane(p(2, 0), [1, 0]).unwrap());
        assert!(!c.is_strictly_convex());
    }

    #[test]
    fn containment_examples() {
        let a = p(0, 3);
        let outer = Cone::sector(a.clone(), [0, -1], [1, 0]).unwrap();
        let inner = Cone::sector(a.clone(), [0, -1], [1, -1]).unwrap();
        assert!(cone_contains(&outer, &inner).unwrap());
        assert!(!cone_contains(&inner, &outer).unwrap());
        let o = p(0, 0);
        let quadrant = Cone::sector(o.clone(), [1, 0], [0, 1]).unwrap();
        assert!(cone_contains(&quadrant, &Cone::ray(o.clone(), [1, 1]).unwrap()).unwrap());
        assert!(!cone_contains(&quadrant, &Cone::ray(o.clone(), [-1, 0]).unwrap()).unwrap());
        assert!(matches!(
            cone_contains(&quadrant, &Cone::point(a).unwrap()),
            Err(GeomError::ApexMismatch(..))
        ));
        let hp = Cone::half_plane(o.clone(), [1, 0]).unwrap();
        assert!(cone_contains(&hp, &quadrant).unwrap());
        assert!(!cone_contains(&quadrant, &hp).unwrap());
        assert!(cone_contains(&Cone::full_plane(o.clone()).unwrap(), &hp).unwrap());
    }

    #[test]
    fn strict_convexity() {
        let o = p(2, 1);
        assert!(Cone::point(o.clone()).unwrap().is_strictly_convex());
        assert!(Cone::sector(o.clone(), [-1, 0], [-1, 1])
            .unwrap()
            .is_strictly_convex());
        assert!(!Cone::half_plane(o.clone(), [1, 0])
            .unwrap()
            .is_strictly_convex());
        assert!(!Cone::sector(o.clone(), [1, 0], [-1, 0])
            .unwrap()
            .is_strictly_convex());
        assert!(!Cone::full_plane(o).unwrap().is_strictly_convex());
    }

    #[test]
    fn canonical_form_ignores_multiples_and_order() {
        let o = p(0, 0);
        let a = Cone::sector(o.clone(), [2, 0], [3, 3]).unwrap();
        let b = Cone::sector(o.clone(), [1, 1], [1, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.generators(), &[[1, 0], [1, 1]]);
        // a sector straddling the positive axis keeps counterclockwise order
        let c = Cone::sector(o.clone(), [1, 1], [1, -1]).unwrap();
        assert_eq!(c.generators(), &[[1, -1], [1, 1]]);
        assert!(c.contains_direction(&[1, 0]));
        assert!(!c.contains_direction(&[-1, 0]));
        let three = Cone::from_int_directions(o.clone(), &[[1, 0], [0, 1], [-1, 0]]).unwrap();
        assert_eq!(three, Cone::half_plane(o.clone(), [1, 0]).unwrap());
        let all = Cone::from_int_directions(o.clone(), &[[1, 0], [0, 1], [-1, -1]]).unwrap();
        assert!(all.is_full());
    }

    #[test]
    fn faces_of_sector() {
        let c = Cone::sector(p(0, 0), [1, 0], [0, 1]).unwrap();
        let f = c.faces();
        assert_eq!(f.len(), 4);
        assert_eq!(f[0].shape(), ConeShape::Point);
        assert_eq!(f[1], Cone::ray(p(0, 0), [1, 0]).unwrap());
        assert_eq!(f[3], c);
    }

    #[test]
    fn rejects_other_ranks() {
        assert!(matches!(
            Cone::point(Point::from_ints(&[1, 2, 3])),
            Err(GeomError::UnsupportedRank(3))
        ));
    }
}
