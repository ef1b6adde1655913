//! Replication checks for the structural statements, random and
//! constructor-built corpora, brute-force oracles, the counterexample hunt and
//! the full suite.

mod corpus;
mod hunt;
mod suite;

pub use corpus::{constructor_corpus_f2, random_corpus, CorpusEntry};
pub use hunt::{
    group_catalogue, hunt_counterexample, resume_hunt, verify_hunt_instances, Checkpoint,
    HuntError, HuntParams, HuntReport,
};
pub use suite::{
    criterion_names, reference_hunt_params, run_criterion, run_full_suite, run_suite_with, Hook,
    SuiteEntry, SuiteReport, HUNT_REGRESSION_INSTANCES,
};

use crate::algebra::{scalar_extension, AlgebraError, GradedAlgebra};
use crate::field::Embedding;
use crate::invariants::{self, DivisionStatus};
use crate::linalg::Matrix;
use crate::symmetry::{self, LinearFunctional, Mode, SymmetryError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Outcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail(_) => "fail",
            Outcome::Skipped(_) => "skipped",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Outcome::Pass => None,
            Outcome::Fail(s) | Outcome::Skipped(s) => Some(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplicateError {
    #[error("algebra is not graded division")]
    NotDivision,
    #[error("expected a trivially graded algebra")]
    NotTriviallyGraded,
    #[error("exhaustive search needs a finite field")]
    InfiniteField,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}

/// Whether `[K ⊗ A, K ⊗ A]` equals `K ⊗ [A, A]` for the degree-`m` extension
/// `K` of the field of `A`.
pub fn replicate_scalar_extension(a: &GradedAlgebra, m: usize) -> Result<bool, ReplicateError> {
    let big = scalar_extension(a, m)?;
    let lhs = invariants::commutator_subspace(&big);
    let rhs = invariants::commutator_subspace(a);
    if m == 1 {
        return Ok(lhs == rhs);
    }
    let emb = Embedding::new(a.field(), big.field())?;
    Ok(lhs == rhs.embed(&emb))
}

/// Checks `dim_ℓ [D, D] = dim_ℓ D - 1` over the center `ℓ` of a division
/// algebra `D`.
pub fn replicate_commutator_dim(d: &GradedAlgebra) -> Result<Outcome, ReplicateError> {
    if !d.is_trivially_graded() {
        return Err(ReplicateError::NotTriviallyGraded);
    }
    let verdict = invariants::is_graded_division(d);
    match verdict.status {
        DivisionStatus::No => return Err(ReplicateError::NotDivision),
        DivisionStatus::Unknown => {
            return Ok(Outcome::Skipped(
                verdict
                    .reason
                    .unwrap_or_else(|| "division undecided".into()),
            ))
        }
        DivisionStatus::Yes => {}
    }
    let l = invariants::center(d).dim();
    let c = invariants::commutator_subspace(d).dim();
    if d.dim() % l != 0 || c % l != 0 {
        return Ok(Outcome::Fail(format!(
            "dimensions {} and {} are not multiples of dim center {}",
            d.dim(),
            c,
            l
        )));
    }
    if c / l + 1 == d.dim() / l {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Fail(format!(
            "dim [D,D] = {} but dim D = {} over a center of dim {}",
            c / l,
            d.dim() / l,
            l
        )))
    }
}

/// For a graded division algebra with `char k ∤ |G|`, checks that its center
/// is a symmetric algebra.
pub fn replicate_center_theorem(a: &GradedAlgebra) -> Result<Outcome, ReplicateError> {
    let p = a.field().characteristic() as usize;
    if p != 0 && a.group().order() % p == 0 {
        return Ok(Outcome::Skipped(format!(
            "characteristic {} divides |G| = {}",
            p,
            a.group().order()
        )));
    }
    let verdict = invariants::is_graded_division(a);
    match verdict.status {
        DivisionStatus::No => return Err(ReplicateError::NotDivision),
        DivisionStatus::Unknown => {
            return Ok(Outcome::Skipped(
                verdict
                    .reason
                    .unwrap_or_else(|| "division undecided".into()),
            ))
        }
        DivisionStatus::Yes => {}
    }
    let z = a.subspace_algebra(&invariants::center(a), false)?;
    let v = symmetry::decide_form_existence(&z, Mode::Symmetric)?;
    if v.is_yes() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Fail(format!(
            "center of dim {} is not symmetric: {:?}",
            z.dim(),
            v.refutation
        )))
    }
}

/// Enumerates the whole trace space of a mode over a finite field and returns
/// the first functional (in enumeration order) with a nonsingular Gram
/// matrix. `Ok(None)` means no such functional exists over the base field.
pub fn exhaustive_form_search(
    a: &GradedAlgebra,
    mode: Mode,
    limit: u64,
) -> Result<Option<LinearFunctional>, ReplicateError> {
    let b = if mode.is_graded() {
        a.clone()
    } else {
        a.ungrade()
    };
    let field = b.field();
    let q = field.order().ok_or(ReplicateError::InfiniteField)?;
    let basis = symmetry::trace_space(&b, mode).basis_vectors();
    let m = basis.len() as u32;
    let total = q
        .checked_pow(m)
        .filter(|&t| t <= limit)
        .ok_or(ReplicateError::Symmetry(SymmetryError::Linalg(
            crate::linalg::LinalgError::TooManyUnknowns(m as usize),
        )))?;
    for code in 1..total {
        let mut c = code;
        let mut coords = vec![field.zero(); b.dim()];
        for v in &basis {
            let t = field.element_at(c % q);
            c /= q;
            for (x, y) in coords.iter_mut().zip(v) {
                *x = &*x + &(&t * y);
            }
        }
        let l = LinearFunctional::new(coords);
        if symmetry::gram_matrix(&b, &l).rank() == b.dim() {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// Scans every nonzero element of every homogeneous component and checks it
/// is invertible. `None` if some component is too large to scan.
pub fn exhaustive_homogeneous_scan(a: &GradedAlgebra, limit: u64) -> Option<bool> {
    let field = a.field();
    let q = field.order()?;
    for g in a.group().elements() {
        let idx = a.component_indices(g);
        let total = q.checked_pow(idx.len() as u32).filter(|&t| t <= limit)?;
        for code in 1..total {
            let mut c = code;
            let mut v = a.zero().into_coords();
            for &i in &idx {
                v[i] = field.element_at(c % q);
                c /= q;
            }
            if a.left_mult_matrix(&v).rank() < a.dim() {
                return Some(false);
            }
        }
    }
    Some(true)
}

/// A random invertible matrix drawn by rejection.
pub(crate) fn random_invertible<R: rand::Rng>(
    field: &crate::field::Field,
    n: usize,
    rng: &mut R,
) -> Matrix {
    let q = field.order().expect("finite field");
    loop {
        let rows = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| field.element_at(rng.gen_range(0..q)))
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(field, n, rows);
        if m.rank() == n {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::*;
    use crate::field::Field;
    use crate::group::GroupTable;

    #[test]
    fn scalar_extension_of_matrices() {
        let m2 = matrix_algebra(&Field::prime(2).unwrap(), 2).unwrap();
        assert!(replicate_scalar_extension(&m2, 2).unwrap());
        assert!(replicate_scalar_extension(&m2, 1).unwrap());
        let c = group_algebra(&Field::prime(3).unwrap(), &GroupTable::cyclic(3).unwrap()).unwrap();
        assert!(replicate_scalar_extension(&c, 3).unwrap());
    }

    #[test]
    fn commutator_dim_cases() {
        let q = Field::rationals();
        let h = quaternion_algebra(&q, &q.from_i64(-1), &q.from_i64(-1))
            .unwrap()
            .ungrade();
        assert_eq!(replicate_commutator_dim(&h).unwrap(), Outcome::Pass);
        let f4 = extension_field_algebra(&Field::galois(2, 2).unwrap()).unwrap();
        assert_eq!(replicate_commutator_dim(&f4).unwrap(), Outcome::Pass);
        let m2 = matrix_algebra(&q, 2).unwrap();
        assert_eq!(
            replicate_commutator_dim(&m2),
            Err(ReplicateError::NotDivision)
        );
        let graded = quaternion_algebra(&q, &q.from_i64(-1), &q.from_i64(-1)).unwrap();
        assert_eq!(
            replicate_commutator_dim(&graded),
            Err(ReplicateError::NotTriviallyGraded)
        );
    }

    #[test]
    fn center_theorem_gates() {
        let q = Field::rationals();
        let h = quaternion_algebra(&q, &q.from_i64(-1), &q.from_i64(-1)).unwrap();
        assert_eq!(replicate_center_theorem(&h).unwrap(), Outcome::Pass);
        assert!(matches!(
            replicate_center_theorem(&cyclic_algebra(3).unwrap()).unwrap(),
            Outcome::Skipped(_)
        ));
        let f9 = Field::galois(3, 2).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        let spec = frobenius_twisted_spec(&f9, &c2, &[0, 1], &vec![f9.one(); 4]).unwrap();
        assert_eq!(
            replicate_center_theorem(&crossed_product(&spec).unwrap()).unwrap(),
            Outcome::Pass
        );
    }

    #[test]
    fn scans_agree_with_division_test() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(
            exhaustive_homogeneous_scan(&cyclic_algebra(2).unwrap(), 1 << 20),
            Some(true)
        );
        let ga = group_algebra(&f2, &GroupTable::cyclic(2).unwrap()).unwrap();
        assert_eq!(exhaustive_homogeneous_scan(&ga, 1 << 20), Some(true));
        assert_eq!(
            exhaustive_homogeneous_scan(&ga.ungrade(), 1 << 20),
            Some(false)
        );
    }

    #[test]
    fn exhaustive_search_on_small_cases() {
        let f2 = Field::prime(2).unwrap();
        let ga = group_algebra(&f2, &GroupTable::cyclic(2).unwrap()).unwrap();
        assert!(exhaustive_form_search(&ga, Mode::GradedSymmetric, 1 << 16)
            .unwrap()
            .is_some());
        let sw = trivial_extension(&sweedler_algebra(&Field::prime(3).unwrap()).unwrap()).unwrap();
        let z = sw
            .subspace_algebra(&invariants::center(&sw), false)
            .unwrap();
        assert!(exhaustive_form_search(&z, Mode::Frobenius, 1 << 16)
            .unwrap()
            .is_none());
    }
}
