//! First homology of the closed surface, the intersection form and
//! Poincaré duality.
//!
//! Basis order is `[a1], [b1], ..., [ag], [bg]`. The sign convention is
//! `<[ai], [bi]> = +1`; together with the relator `[a1,b1]...[ag,bg]` this
//! fixes the conjugation direction under which the point-pushing identity
//! holds (see [`crate::endo::Conjugation`]).

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::FreeWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyClass(pub Vec<i64>);

/// A functional on `H_1`, given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CohomologyClass(pub Vec<i64>);

macro_rules! impl_vector_ops {
    ($t:ident) => {
        impl $t {
            pub fn zero(genus: usize) -> $t {
                $t(vec![0; 2 * genus])
            }

            pub fn basis(genus: usize, slot: usize) -> $t {
                let mut v = vec![0; 2 * genus];
                v[slot] = 1;
                $t(v)
            }

            pub fn genus(&self) -> usize {
                self.0.len() / 2
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            #[must_use]
            pub fn scale(&self, k: i64) -> $t {
                $t(self.0.iter().map(|x| k * x).collect())
            }
        }

        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                assert_eq!(self.0.len(), rhs.0.len(), "dimension mismatch");
                $t(self.0.iter().zip(&rhs.0).map(|(x, y)| x + y).collect())
            }
        }

        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                assert_eq!(self.0.len(), rhs.0.len(), "dimension mismatch");
                $t(self.0.iter().zip(&rhs.0).map(|(x, y)| x - y).collect())
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(-1)
            }
        }
    };
}

impl_vector_ops!(HomologyClass);
impl_vector_ops!(CohomologyClass);

impl CohomologyClass {
    /// Evaluate on a homology class.
    pub fn eval(&self, x: &HomologyClass) -> Result<i64> {
        check_dims(self.0.len(), x.0.len())?;
        Ok(self.0.iter().zip(&x.0).map(|(f, v)| f * v).sum())
    }
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

/// Signed letter counts.
pub fn abelianize(genus: usize, w: &FreeWord) -> HomologyClass {
    HomologyClass(w.exponent_sums(genus))
}

/// `x^T J y` with `J` block diagonal, blocks `[[0, 1], [-1, 0]]`.
pub fn intersection(x: &HomologyClass, y: &HomologyClass) -> Result<i64> {
    check_dims(x.0.len(), y.0.len())?;
    Ok(x.0
        .chunks_exact(2)
        .zip(y.0.chunks_exact(2))
        .map(|(p, q)| p[0] * q[1] - p[1] * q[0])
        .sum())
}

/// The functional `w -> <w, x>`.
pub fn poincare_delta(x: &HomologyClass) -> CohomologyClass {
    // <ai, x> = x_bi, <bi, x> = -x_ai
    CohomologyClass(x.0.chunks_exact(2).flat_map(|p| [p[1], -p[0]]).collect())
}

/// Inverse of [`poincare_delta`]; `J` is unimodular so this is exact over Z.
pub fn poincare_delta_inverse(f: &CohomologyClass) -> HomologyClass {
    HomologyClass(f.0.chunks_exact(2).flat_map(|p| [-p[1], p[0]]).collect())
}

/// Square integer matrix, row-major. Column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> IntMatrix {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        IntMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<IntMatrix> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dims(dim, row.len())?;
            entries.extend(row);
        }
        Ok(IntMatrix { dim, entries })
    }

    pub fn from_columns(columns: &[HomologyClass]) -> Result<IntMatrix> {
        let dim = columns.len();
        let mut entries = vec![0; dim * dim];
        for (j, col) in columns.iter().enumerate() {
            check_dims(dim, col.0.len())?;
            for (i, v) in col.0.iter().enumerate() {
                entries[i * dim + j] = *v;
            }
        }
        Ok(IntMatrix { dim, entries })
    }

    /// The standard symplectic form of rank `2 * genus`.
    pub fn symplectic(genus: usize) -> IntMatrix {
        let dim = 2 * genus;
        let mut m = IntMatrix {
            dim,
            entries: vec![0; dim * dim],
        };
        for i in 0..genus {
            m.set(2 * i, 2 * i + 1, 1);
            m.set(2 * i + 1, 2 * i, -1);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.dim + j] = v;
    }

    #[must_use]
    pub fn transpose(&self) -> IntMatrix {
        let mut t = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        check_dims(self.dim, other.dim)?;
        let n = self.dim;
        let mut out = IntMatrix {
            dim: n,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(l, j);
                }
            }
        }
        Ok(out)
    }

    #[must_use]
    pub fn negate(&self) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

/// Whether a homology action preserves (`+1`) or reverses (`-1`) the intersection form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Preserving => 1,
            Orientation::Reversing => -1,
        }
    }
}

/// `M^T J M = J` gives `Preserving`, `= -J` gives `Reversing`, anything else `None`.
pub fn is_symplectic_action(m: &IntMatrix) -> Option<Orientation> {
    if !m.dim().is_multiple_of(2) || m.dim() == 0 {
        return None;
    }
    let j = IntMatrix::symplectic(m.dim() / 2);
    let form = m.transpose().mul(&j).ok()?.mul(m).ok()?;
    if form == j {
        Some(Orientation::Preserving)
    } else if form == j.negate() {
        Some(Orientation::Reversing)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[i64]) -> HomologyClass {
        HomologyClass(v.to_vec())
    }

    #[test]
    fn abelianize_examples() {
        let rel = crate::word::surface_relator(2);
        assert!(abelianize(2, &rel).is_zero());
        assert_eq!(
            abelianize(2, &FreeWord::parse("a1", 2).unwrap()),
            h(&[1, 0, 0, 0])
        );
        assert_eq!(
            abelianize(2, &FreeWord::parse("a1 b1 a1", 2).unwrap()),
            h(&[2, 1, 0, 0])
        );
    }

    #[test]
    fn intersection_examples() {
        let a1 = HomologyClass::basis(2, 0);
        let b1 = HomologyClass::basis(2, 1);
        let a2 = HomologyClass::basis(2, 2);
        assert_eq!(intersection(&a1, &b1).unwrap(), 1);
        assert_eq!(intersection(&b1, &a1).unwrap(), -1);
        assert_eq!(intersection(&a1, &a2).unwrap(), 0);
        assert!(matches!(
            intersection(&a1, &HomologyClass::zero(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn delta_examples() {
        assert!(poincare_delta(&HomologyClass::zero(2)).is_zero());
        let b1 = HomologyClass::basis(2, 1);
        let a1 = HomologyClass::basis(2, 0);
        assert_eq!(poincare_delta(&b1).eval(&a1).unwrap(), 1);
        for slot in 0..4 {
            let e = HomologyClass::basis(2, slot);
            assert_eq!(poincare_delta_inverse(&poincare_delta(&e)), e);
        }
    }

    #[test]
    fn symplectic_types() {
        assert_eq!(
            is_symplectic_action(&IntMatrix::identity(4)),
            Some(Orientation::Preserving)
        );
        let swap = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(is_symplectic_action(&swap), Some(Orientation::Reversing));
        let scale = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(is_symplectic_action(&scale), None);
    }
}
