use crate::field::{Embedding, Field, Scalar};

use super::{LinalgError, Matrix};

/// Coordinate subspace of `F^n`, stored as an RREF basis with no zero rows,
/// so two subspaces are equal exactly when their representations are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(field: &Field, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        Subspace::from_matrix(&Matrix::from_rows(
            field,
            ambient,
            vectors.into_iter().collect(),
        ))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.field(), m.cols(), rows),
            pivots,
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: &Field, ambient: usize, indices: &[usize]) -> Subspace {
        Subspace::span(
            field,
            ambient,
            indices.iter().map(|&i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            }),
        )
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_iter().map(<[Scalar]>::to_vec).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        }
    }

    /// Coefficients of `v` in the RREF basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient {
            return None;
        }
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        for j in 0..self.ambient {
            let mut acc = v[j].clone();
            for (i, c) in coeffs.iter().enumerate() {
                let b = self.basis.get(i, j);
                if !c.is_zero() && !b.is_zero() {
                    acc = &acc - &(c * b);
                }
            }
            if !acc.is_zero() {
                return None;
            }
        }
        Some(coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.basis.row_iter().all(|v| self.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(Subspace::span(
            self.field(),
            self.ambient,
            self.basis
                .row_iter()
                .chain(other.basis.row_iter())
                .map(<[Scalar]>::to_vec),
        ))
    }

    /// `{y : <x, y> = 0 for all x in self}` in the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.rref_rank_kernel().kernel
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Basis vectors of `other` that extend the basis of `self` to a basis of
    /// `self + other` (a complement of `self` inside `other` when `self ⊆ other`).
    pub fn quotient_basis(&self, other: &Subspace) -> Result<Vec<Vec<Scalar>>, LinalgError> {
        self.check(other)?;
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in other.basis.row_iter() {
            if !acc.contains(v) {
                acc = acc.sum(&Subspace::span(self.field(), self.ambient, [v.to_vec()]))?;
                out.push(v.to_vec());
            }
        }
        Ok(out)
    }

    /// Image under a field embedding (still in RREF since pivots stay 1).
    pub fn embed(&self, emb: &Embedding) -> Subspace {
        Subspace {
            ambient: self.ambient,
            basis: self.basis.embed(emb),
            pivots: self.pivots.clone(),
        }
    }
}
