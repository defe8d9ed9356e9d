//! The x-ray data model: a poset of strata, each with a moment-image polytope
//! and a stabilizer lattice.

mod io;
mod iso;
mod stabilizer;
mod validate;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactgeom::{GeomError, Polytope};

pub use io::{load, save};
pub use iso::{isomorphic, transform, XRayIso};
pub use stabilizer::Stabilizer;
pub use validate::{validate, ValidationReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum XRayError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("stabilizer generators {0:?} are linearly dependent")]
    DependentGenerators(Vec<Vec<i64>>),
    #[error("duplicate stratum id {0:?}")]
    DuplicateId(String),
    #[error("unknown stratum id {0:?} in order relation")]
    UnknownId(String),
    #[error("order relation has a cycle through {0:?}")]
    Cycle(String),
    #[error("{context}: {message}")]
    Parse { context: String, message: String },
    #[error("transform matrix is not unimodular (det = {0})")]
    NotUnimodular(i64),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// One closed orbit-type stratum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Stratum {
    pub id: String,
    pub stabilizer: Stabilizer,
    pub polytope: Polytope,
}

impl Stratum {
    pub fn new(id: impl Into<String>, stabilizer: Stabilizer, polytope: Polytope) -> Self {
        Stratum {
            id: id.into(),
            stabilizer,
            polytope,
        }
    }

    pub fn is_fixed(&self) -> bool {
        self.stabilizer.is_full()
    }
}

/// A finite poset of strata. Strata are kept sorted by id; the order is stored
/// as its reflexive-transitive closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XRay {
    rank: usize,
    strata: Vec<Stratum>,
    le: Vec<Vec<bool>>,
}

impl XRay {
    /// Builds an x-ray from strata and any generating set of order pairs `(lower, upper)`.
    pub fn new<I, S>(rank: usize, mut strata: Vec<Stratum>, order: I) -> Result<XRay, XRayError>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        for s in &strata {
            if s.stabilizer.ambient() != rank {
                return Err(XRayError::RankMismatch {
                    expected: rank,
                    found: s.stabilizer.ambient(),
                });
            }
            if s.polytope.rank() != rank {
                return Err(XRayError::RankMismatch {
                    expected: rank,
                    found: s.polytope.rank(),
                });
            }
        }
        strata.sort_by(|a, b| a.id.cmp(&b.id));
        if let Some(w) = strata.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(XRayError::DuplicateId(w[0].id.clone()));
        }
        let index: BTreeMap<&str, usize> = strata
            .iter()
            .enumerate()
            .map(|(i, s)| (s.id.as_str(), i))
            .collect();
        let n = strata.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in order {
            let lookup = |id: &str| {
                index
                    .get(id)
                    .copied()
                    .ok_or_else(|| XRayError::UnknownId(id.to_string()))
            };
            let (i, j) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            le[i][j] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if le[i][j] && le[j][i] {
                    return Err(XRayError::Cycle(strata[i].id.clone()));
                }
            }
        }
        Ok(XRay { rank, strata, le })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum(&self, i: usize) -> &Stratum {
        &self.strata[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.strata.binary_search_by(|s| s.id.as_str().cmp(id)).ok()
    }

    pub fn get(&self, id: &str) -> Option<&Stratum> {
        self.index_of(id).map(|i| &self.strata[i])
    }

    /// `strata[i] <= strata[j]` in the closed order.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le[i][j]
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.strata[i].is_fixed()
    }

    pub fn fixed_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_fixed(i)).collect()
    }

    /// Indices of fixed strata `F <= strata[i]`.
    pub fn fixed_below(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&f| self.is_fixed(f) && self.le[f][i])
            .collect()
    }

    /// Indices of strata whose image is a single point.
    pub fn point_image_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.strata[i].polytope.dim() == 0)
            .collect()
    }

    /// Covering pairs `(lower, upper)` (the transitive reduction), sorted by ids.
    pub fn covers(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((self.strata[i].id.clone(), self.strata[j].id.clone()));
                }
            }
        }
        out
    }

    /// All strict order pairs by id.
    pub fn relations(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) {
                    out.push((self.strata[i].id.clone(), self.strata[j].id.clone()));
                }
            }
        }
        out
    }

    /// Replaces every polytope; strata mapped to `None` are dropped with the
    /// induced order kept on the survivors.
    pub fn filter_map_polytopes<F>(&self, mut f: F) -> Result<XRay, XRayError>
    where
        F: FnMut(&Stratum) -> Result<Option<Polytope>, XRayError>,
    {
        let mut keep = Vec::new();
        let mut strata = Vec::new();
        for (i, s) in self.strata.iter().enumerate() {
            if let Some(p) = f(s)? {
                keep.push(i);
                strata.push(Stratum::new(s.id.clone(), s.stabilizer.clone(), p));
            }
        }
        let mut order = Vec::new();
        for &i in &keep {
            for &j in &keep {
                if self.lt(i, j) {
                    order.push((self.strata[i].id.clone(), self.strata[j].id.clone()));
                }
            }
        }
        XRay::new(self.rank, strata, order)
    }

    /// Renames strata through `f`, keeping everything else.
    pub fn rename<F: Fn(&str) -> String>(&self, f: F) -> Result<XRay, XRayError> {
        let strata: Vec<Stratum> = self
            .strata
            .iter()
            .map(|s| Stratum::new(f(&s.id), s.stabilizer.clone(), s.polytope.clone()))
            .collect();
        let order: Vec<(String, String)> = self
            .relations()
            .into_iter()
            .map(|(a, b)| (f(&a), f(&b)))
            .collect();
        XRay::new(self.rank, strata, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::Point;

    fn pt(id: &str, x: i64) -> Stratum {
        Stratum::new(
            id,
            Stabilizer::full(1),
            Polytope::point(Point::from_ints(&[x])),
        )
    }

    fn seg() -> Stratum {
        let p = Polytope::segment(Point::from_ints(&[0]), Point::from_ints(&[1])).unwrap();
        Stratum::new("M", Stabilizer::trivial(1), p)
    }

    #[test]
    fn closure_and_covers() {
        let x = XRay::new(
            1,
            vec![seg(), pt("A", 0), pt("B", 1)],
            [("A", "M"), ("B", "M")],
        )
        .unwrap();
        assert_eq!(x.strata()[0].id, "A");
        assert!(x.le(0, 2));
        assert!(!x.le(2, 0));
        assert_eq!(x.covers().len(), 2);
        assert_eq!(x.fixed_below(2), vec![0, 1]);
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            XRay::new(1, vec![seg(), pt("A", 0)], [("A", "E99")]),
            Err(XRayError::UnknownId(id)) if id == "E99"
        ));
        assert!(matches!(
            XRay::new(1, vec![pt("A", 0), pt("A", 1)], Vec::<(&str, &str)>::new()),
            Err(XRayError::DuplicateId(_))
        ));
        assert!(matches!(
            XRay::new(1, vec![seg(), pt("A", 0)], [("A", "M"), ("M", "A")]),
            Err(XRayError::Cycle(_))
        ));
    }
}
