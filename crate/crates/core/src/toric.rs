//! X-rays of toric manifolds restricted to a subtorus.
//!
//! A face `F` of the moment polytope has stabilizer `s_F = {x : ι x ∈ span(normals
//! of facets containing F)}` in the small torus. Strata are connected unions of
//! closed faces sharing a stabilizer, projected by `ιᵀ`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactgeom::linalg::{det_int, integer_kernel, rank_int};
use crate::exactgeom::polytope::segment_covered;
use crate::exactgeom::scalar::{dot_int, format_scalar, make_primitive};
use crate::exactgeom::{parse_scalar, GeomError, Point, Polytope};
use crate::xray::{Stabilizer, Stratum, XRay, XRayError};

pub const FORMAT: &str = "lp/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("vertex {0} is not a lattice point")]
    NotIntegral(String),
    #[error("polytope of dimension {dim} is not full-dimensional in rank {rank}")]
    NotFullDimensional { dim: isize, rank: usize },
    #[error("dimension {0} is not supported (1 to 3)")]
    UnsupportedDimension(usize),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("embedding columns are linearly dependent")]
    DependentColumns,
    #[error("projected stratum {0} is not convex")]
    NonConvex(String),
    #[error("{context}: {message}")]
    Parse { context: String, message: String },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    XRay(#[from] XRayError),
}

fn parse_err(context: impl Into<String>, message: impl ToString) -> ToricError {
    ToricError::Parse {
        context: context.into(),
        message: message.to_string(),
    }
}

/// A full-dimensional polytope with lattice vertices, dimension 1 to 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    polytope: Polytope,
    facets: Vec<(Vec<i64>, Polytope)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LpDoc {
    format: String,
    dim: usize,
    vertices: Vec<Vec<String>>,
}

impl LatticePolytope {
    /// Convex hull of integer points.
    pub fn new(points: &[Vec<i64>]) -> Result<Self, ToricError> {
        let pts: Vec<Point> = points.iter().map(|p| Point::from_ints(p)).collect();
        Self::from_points(&pts)
    }

    fn from_points(pts: &[Point]) -> Result<Self, ToricError> {
        let polytope = Polytope::hull(pts)?;
        let d = polytope.rank();
        if !(1..=3).contains(&d) {
            return Err(ToricError::UnsupportedDimension(d));
        }
        if polytope.dim() != d as isize {
            return Err(ToricError::NotFullDimensional {
                dim: polytope.dim(),
                rank: d,
            });
        }
        if let Some(v) = polytope
            .vertices()
            .iter()
            .find(|v| v.coords().iter().any(|c| !c.is_integer()))
        {
            return Err(ToricError::NotIntegral(v.to_string()));
        }
        let facets = polytope
            .faces(d as isize - 1)
            .into_iter()
            .map(|f| (outward_normal(&polytope, &f), f))
            .collect();
        Ok(LatticePolytope { polytope, facets })
    }

    pub fn dim(&self) -> usize {
        self.polytope.rank()
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn vertices(&self) -> &[Point] {
        self.polytope.vertices()
    }

    /// Facets with their primitive outward normals.
    pub fn facets(&self) -> &[(Vec<i64>, Polytope)] {
        &self.facets
    }

    /// Every face, lowest dimension first.
    pub fn face_lattice(&self) -> Vec<Polytope> {
        self.polytope.all_faces()
    }

    /// Outward normals of the facets containing `face`.
    pub fn normals_at(&self, face: &Polytope) -> Vec<Vec<i64>> {
        self.facets
            .iter()
            .filter(|(_, f)| face.is_subset_of(f))
            .map(|(n, _)| n.clone())
            .collect()
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self, ToricError> {
        let doc: LpDoc = serde_json::from_slice(bytes)
            .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e))?;
        if doc.format != FORMAT {
            return Err(parse_err(
                "format",
                format!("expected {FORMAT:?}, found {:?}", doc.format),
            ));
        }
        let mut pts = Vec::new();
        for (i, v) in doc.vertices.iter().enumerate() {
            if v.len() != doc.dim {
                return Err(parse_err(
                    format!("vertices[{i}]"),
                    format!("expected {} coordinates, found {}", doc.dim, v.len()),
                ));
            }
            let coords = v
                .iter()
                .map(|c| parse_scalar(c).map_err(|e| parse_err(format!("vertices[{i}]"), e)))
                .collect::<Result<Vec<_>, _>>()?;
            pts.push(Point::new(coords));
        }
        if pts.is_empty() {
            return Err(parse_err("vertices", "empty vertex list"));
        }
        Self::from_points(&pts)
    }

    pub fn to_json(&self) -> Vec<u8> {
        let doc = LpDoc {
            format: FORMAT.to_string(),
            dim: self.dim(),
            vertices: self
                .vertices()
                .iter()
                .map(|v| v.coords().iter().map(format_scalar).collect())
                .collect(),
        };
        let mut out = serde_json::to_vec(&doc).expect("lattice polytope serializes");
        out.push(b'\n');
        out
    }
}

fn outward_normal(p: &Polytope, facet: &Polytope) -> Vec<i64> {
    let vs = facet.vertices();
    let int = |x: &Point| -> Vec<i64> {
        x.coords()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).expect("lattice coordinate fits in i64"))
            .collect()
    };
    let base = int(&vs[0]);
    let diffs: Vec<Vec<i64>> = vs[1..]
        .iter()
        .map(|v| int(v).iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    let ker = integer_kernel(&diffs, p.rank());
    assert_eq!(ker.len(), 1, "a facet has a one-dimensional normal space");
    let mut n = make_primitive(&ker[0]);
    let level = dot_int(vs[0].coords(), &n);
    let inside = p
        .vertices()
        .iter()
        .map(|v| dot_int(v.coords(), &n))
        .find(|l| *l != level)
        .expect("full-dimensional polytope has a vertex off each facet");
    if inside > level {
        n.iter_mut().for_each(|x| *x = -*x);
    }
    n
}

/// Every vertex has exactly `d` facet normals forming a lattice basis.
pub fn is_delzant(p: &LatticePolytope) -> bool {
    p.vertices().iter().all(|v| {
        let normals = p.normals_at(&Polytope::point(v.clone()));
        normals.len() == p.dim() && det_int(&normals).abs() == 1
    })
}

/// Integer `d × k` matrix whose columns embed the small torus lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtorusEmbedding {
    rows: Vec<Vec<i64>>,
}

impl SubtorusEmbedding {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, ToricError> {
        let k = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != k) {
            return Err(ToricError::RankMismatch {
                expected: k,
                found: r.len(),
            });
        }
        if k == 0 {
            return Err(ToricError::DependentColumns);
        }
        if rank_int(&rows) != k {
            return Err(ToricError::DependentColumns);
        }
        Ok(SubtorusEmbedding { rows })
    }

    pub fn identity(d: usize) -> Self {
        SubtorusEmbedding {
            rows: (0..d)
                .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    /// Parses `"1,0;1,0;0,1"` (rows separated by `;`).
    pub fn parse(s: &str) -> Result<Self, ToricError> {
        let rows = s
            .split(';')
            .enumerate()
            .map(|(i, row)| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|e| parse_err(format!("embedding row {i}"), e))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows)
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn k(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn transpose(&self) -> Vec<Vec<i64>> {
        (0..self.k())
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect()
    }
}

/// Stabilizer of a face: the part of the small torus acting through the
/// normals of the facets that contain it.
pub fn stabilizer_of_face(
    p: &LatticePolytope,
    face: &Polytope,
    iota: &SubtorusEmbedding,
) -> Stabilizer {
    let d = p.dim();
    let normals = p.normals_at(face);
    // Rows of `annihilator` cut out span(normals).
    let annihilator = integer_kernel(&normals, d);
    let a_iota: Vec<Vec<i64>> = annihilator
        .iter()
        .map(|a| {
            (0..iota.k())
                .map(|j| (0..d).map(|i| a[i] * iota.rows[i][j]).sum())
                .collect()
        })
        .collect();
    Stabilizer::new(iota.k(), integer_kernel(&a_iota, iota.k()))
        .expect("kernel basis is independent")
}

fn components(faces: &[Polytope], members: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in members {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            for &g in members {
                if !seen.contains(&g)
                    && (faces[f].is_subset_of(&faces[g]) || faces[g].is_subset_of(&faces[f]))
                {
                    seen.insert(g);
                    comp.push(g);
                    stack.push(g);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Checks that the projected union equals its hull along the hull boundary.
fn assert_convex(image: &Polytope, pieces: &[Polytope]) -> bool {
    match image.dim() {
        0 => true,
        1 => segment_covered(&image.vertices()[0], &image.vertices()[1], pieces),
        2 if image.rank() == 2 => image.faces(1).iter().all(|e| {
            let v = e.vertices();
            segment_covered(&v[0], &v[1], pieces)
        }),
        // Higher-dimensional images: the union contains the whole polytope face.
        _ => pieces.iter().any(|p| p == image),
    }
}

pub fn xray_from_toric(p: &LatticePolytope, iota: &SubtorusEmbedding) -> Result<XRay, ToricError> {
    if iota.d() != p.dim() {
        return Err(ToricError::RankMismatch {
            expected: p.dim(),
            found: iota.d(),
        });
    }
    let k = iota.k();
    let pi = iota.transpose();
    let origin = Point::origin(k);
    let faces = p.face_lattice();
    let stabs: Vec<Stabilizer> = faces
        .iter()
        .map(|f| stabilizer_of_face(p, f, iota))
        .collect();
    let realized: BTreeSet<&Stabilizer> = stabs.iter().collect();

    struct Piece {
        faces: Vec<usize>,
        stabilizer: Stabilizer,
        image: Polytope,
    }
    let mut pieces = Vec::new();
    for s in realized {
        let members: Vec<usize> = (0..faces.len())
            .filter(|&f| s.is_sublattice_of(&stabs[f]))
            .collect();
        for comp in components(&faces, &members) {
            // Only components where `s` is attained are strata of type `s`.
            if !comp.iter().any(|&f| &stabs[f] == s) {
                continue;
            }
            let images = comp
                .iter()
                .map(|&f| faces[f].map_affine(&pi, &origin))
                .collect::<Result<Vec<_>, _>>()?;
            let pts: Vec<Point> = images.iter().flat_map(|i| i.vertices().to_vec()).collect();
            let image = Polytope::hull(&pts)?;
            if !assert_convex(&image, &images) {
                return Err(ToricError::NonConvex(image.to_string()));
            }
            pieces.push(Piece {
                faces: comp,
                stabilizer: s.clone(),
                image,
            });
        }
    }

    // Deterministic ids: sort by image, then stabilizer, then number per kind.
    pieces.sort_by(|a, b| a.image.cmp(&b.image).then(a.stabilizer.cmp(&b.stabilizer)));
    let body = faces.len() - 1;
    let mut counters: BTreeMap<char, usize> = BTreeMap::new();
    let mut ids = Vec::with_capacity(pieces.len());
    for piece in &pieces {
        if piece.faces.contains(&body) && piece.stabilizer.rank() == 0 {
            ids.push("M".to_string());
            continue;
        }
        let kind = if piece.stabilizer.is_full() {
            'F'
        } else {
            match piece.image.dim() {
                0 => 'P',
                1 => 'E',
                2 => 'R',
                _ => 'B',
            }
        };
        let n = counters.entry(kind).or_insert(0);
        *n += 1;
        ids.push(format!("{kind}{n}"));
    }
    let mut order = Vec::new();
    for (i, a) in pieces.iter().enumerate() {
        for (j, b) in pieces.iter().enumerate() {
            if i != j && a.faces.iter().all(|f| b.faces.contains(f)) {
                order.push((ids[i].clone(), ids[j].clone()));
            }
        }
    }
    let strata = pieces
        .into_iter()
        .zip(&ids)
        .map(|(piece, id)| Stratum::new(id.clone(), piece.stabilizer, piece.image))
        .collect();
    Ok(XRay::new(k, strata, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::ex22;
    use crate::xray::{isomorphic, validate};

    fn prism() -> LatticePolytope {
        let mut v = Vec::new();
        for m in [0, 1] {
            for (u, w) in [(0, 0), (3, 0), (0, 3)] {
                v.push(vec![m, u, w]);
            }
        }
        LatticePolytope::new(&v).unwrap()
    }

    fn cube() -> LatticePolytope {
        let mut v = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    v.push(vec![x, y, z]);
                }
            }
        }
        LatticePolytope::new(&v).unwrap()
    }

    #[test]
    fn face_counts() {
        let count = |p: &LatticePolytope, d| p.polytope().faces(d).len();
        let pr = prism();
        assert_eq!((count(&pr, 0), count(&pr, 1), count(&pr, 2)), (6, 9, 5));
        let c = cube();
        assert_eq!((count(&c, 0), count(&c, 1), count(&c, 2)), (8, 12, 6));
        let sq = LatticePolytope::new(&[vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(sq.face_lattice().len(), 9);
    }

    #[test]
    fn face_stabilizers() {
        let p = prism();
        let iota = SubtorusEmbedding::parse("1,0;1,0;0,1").unwrap();
        let bottom = p
            .facets()
            .iter()
            .find(|(n, _)| n == &vec![0, 0, -1])
            .unwrap()
            .1
            .clone();
        assert_eq!(
            stabilizer_of_face(&p, &bottom, &iota).generators(),
            &[vec![0, 1]]
        );
        assert_eq!(stabilizer_of_face(&p, p.polytope(), &iota).rank(), 0);
        let v = Polytope::point(p.vertices()[0].clone());
        assert!(stabilizer_of_face(&p, &v, &iota).is_full());
    }

    #[test]
    fn prism_gives_ex22() {
        let x =
            xray_from_toric(&prism(), &SubtorusEmbedding::parse("1,0;1,0;0,1").unwrap()).unwrap();
        assert!(validate(&x).is_valid());
        assert!(isomorphic(&x, &ex22()).is_some());
    }

    #[test]
    fn cube_fixed_edges() {
        let x =
            xray_from_toric(&cube(), &SubtorusEmbedding::parse("1,0;0,1;0,0").unwrap()).unwrap();
        assert!(validate(&x).is_valid());
        assert_eq!(x.fixed_indices().len(), 4);
    }

    #[test]
    fn full_torus_is_face_lattice() {
        let sq = LatticePolytope::new(&[vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        let x = xray_from_toric(&sq, &SubtorusEmbedding::identity(2)).unwrap();
        assert_eq!(x.len(), 9);
        assert_eq!(x.fixed_indices().len(), 4);
        assert!(validate(&x).is_valid());
    }

    #[test]
    fn delzant() {
        assert!(is_delzant(&prism()));
        assert!(is_delzant(
            &LatticePolytope::new(&[vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap()
        ));
        assert!(!is_delzant(
            &LatticePolytope::new(&[vec![0, 0], vec![1, 0], vec![0, 2]]).unwrap()
        ));
    }

    #[test]
    fn json_round_trip() {
        let p = prism();
        assert_eq!(LatticePolytope::from_json(&p.to_json()).unwrap(), p);
        let bad = br#"{"format":"lp/1","dim":2,"vertices":[["0","0"],["1/2","0"],["0","1"]]}"#;
        assert!(matches!(
            LatticePolytope::from_json(bad),
            Err(ToricError::NotIntegral(_))
        ));
    }
}
