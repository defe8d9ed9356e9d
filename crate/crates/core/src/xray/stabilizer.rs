use std::fmt;

use num_traits::Zero;

use crate::exactgeom::linalg::{in_span, rank_int, saturate, to_rational};
use crate::exactgeom::scalar::dot_int;
use crate::exactgeom::Scalar;

use super::XRayError;

/// Lie-algebra lattice of a connected stabilizer subgroup, as a saturated
/// sublattice of `Z^k` in Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stabilizer {
    ambient: usize,
    generators: Vec<Vec<i64>>,
}

impl Stabilizer {
    /// Builds the stabilizer spanned by linearly independent integer generators.
    /// The stored basis is that of the saturated lattice, so generators that
    /// span the same subgroup give identical values.
    pub fn new(ambient: usize, generators: Vec<Vec<i64>>) -> Result<Self, XRayError> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient) {
            return Err(XRayError::RankMismatch {
                expected: ambient,
                found: g.len(),
            });
        }
        if rank_int(&generators) != generators.len() {
            return Err(XRayError::DependentGenerators(generators));
        }
        Ok(Stabilizer {
            ambient,
            generators: saturate(&generators, ambient),
        })
    }

    pub fn trivial(ambient: usize) -> Self {
        Stabilizer {
            ambient,
            generators: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let generators = (0..ambient)
            .map(|i| (0..ambient).map(|j| i64::from(i == j)).collect())
            .collect();
        Stabilizer {
            ambient,
            generators,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient
    }

    /// Whether `v` lies in the annihilator of this lattice.
    pub fn annihilates(&self, v: &[Scalar]) -> bool {
        self.generators.iter().all(|g| dot_int(v, g).is_zero())
    }

    /// Lattice inclusion `self ⊆ other` (subspace inclusion, as both are saturated).
    pub fn is_sublattice_of(&self, other: &Stabilizer) -> bool {
        let rows = to_rational(&other.generators);
        to_rational(&self.generators)
            .iter()
            .all(|g| in_span(&rows, g))
    }

    /// Image under the contragredient action of a unimodular map, given the
    /// inverse-transpose matrix.
    pub fn map(&self, inv_transpose: &[Vec<i64>]) -> Stabilizer {
        let gens: Vec<Vec<i64>> = self
            .generators
            .iter()
            .map(|g| {
                inv_transpose
                    .iter()
                    .map(|row| row.iter().zip(g).map(|(a, b)| a * b).sum())
                    .collect()
            })
            .collect();
        Stabilizer::new(self.ambient, gens).expect("unimodular image of a lattice basis")
    }

    /// Direct sum with another stabilizer, in `Z^{k1} ⊕ Z^{k2}`.
    pub fn direct_sum(&self, other: &Stabilizer) -> Stabilizer {
        let ambient = self.ambient + other.ambient;
        let mut gens: Vec<Vec<i64>> = self
            .generators
            .iter()
            .map(|g| {
                let mut v = g.clone();
                v.resize(ambient, 0);
                v
            })
            .collect();
        gens.extend(other.generators.iter().map(|g| {
            let mut v = vec![0; self.ambient];
            v.extend(g);
            v
        }));
        Stabilizer::new(ambient, gens).expect("direct sum of independent generators")
    }
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "<>");
        }
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = g.iter().map(i64::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_basis() {
        let a = Stabilizer::new(2, vec![vec![-1, 1]]).unwrap();
        let b = Stabilizer::new(2, vec![vec![2, -2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.generators(), &[vec![1, -1]]);
        let full = Stabilizer::new(2, vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(full, Stabilizer::full(2));
        assert!(full.is_full());
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(matches!(
            Stabilizer::new(2, vec![vec![1, 0], vec![2, 0]]),
            Err(XRayError::DependentGenerators(_))
        ));
        assert!(matches!(
            Stabilizer::new(2, vec![vec![1, 0, 0]]),
            Err(XRayError::RankMismatch { .. })
        ));
    }

    #[test]
    fn inclusion_and_sums() {
        let h = Stabilizer::new(2, vec![vec![0, 1]]).unwrap();
        assert!(Stabilizer::trivial(2).is_sublattice_of(&h));
        assert!(h.is_sublattice_of(&Stabilizer::full(2)));
        assert!(!Stabilizer::full(2).is_sublattice_of(&h));
        let s = h.direct_sum(&Stabilizer::full(1));
        assert_eq!(s.generators(), &[vec![0, 1, 0], vec![0, 0, 1]]);
    }
}
