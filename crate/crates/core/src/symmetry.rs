//! Existence of (graded) symmetric and Frobenius forms: trace spaces, Gram
//! pencils, the decision procedure with certificates, and the explicit
//! constructions of trace forms on crossed products and matrix algebras.
//!
//! For `λ` vanishing off degree `e`, the left kernel `{x : λ(Ax) = 0}` of the
//! form `λ(ab)` is a graded left ideal inside `Ker λ`, and every graded left
//! ideal inside `Ker λ` lies in it. So `Ker λ` contains no nonzero graded
//! left ideal exactly when the Gram matrix `λ(e_i e_j)` is nonsingular.

use std::fmt;

use crate::algebra::{good_matrix_algebra, CrossedProductSpec, GoodGradingSpec, GradedAlgebra};
use crate::field::Scalar;
use crate::invariants::{graded_commutator_space, is_graded_division};
use crate::linalg::{
    nonvanishing_point, pencil_det, GramPencil, LinalgError, Matrix, MultiPoly, PointSearch,
    Subspace,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("the trace space is zero")]
    EmptyTraceSpace,
    #[error("characteristic divides the group order")]
    CharacteristicDividesGroupOrder,
    #[error("mu is not symmetric on D")]
    AsymmetricMu,
    #[error("mu(1) = 0")]
    DegenerateMu,
    #[error("section is not normalized at {0}")]
    NotNormalized(usize),
    #[error("functional is not invariant under sigma({0})")]
    NotInvariant(usize),
    #[error("algebra does not match the good grading data")]
    NotAGoodMatrixAlgebra,
    #[error("functional has {got} coordinates, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    GradedSymmetric,
    GradedFrobenius,
    Symmetric,
    Frobenius,
}

impl Mode {
    pub const ALL: [Mode; 4] = [
        Mode::GradedSymmetric,
        Mode::GradedFrobenius,
        Mode::Symmetric,
        Mode::Frobenius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::GradedSymmetric => "graded-symmetric",
            Mode::GradedFrobenius => "graded-frobenius",
            Mode::Symmetric => "symmetric",
            Mode::Frobenius => "frobenius",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        Mode::ALL.into_iter().find(|m| m.name() == s)
    }

    pub fn is_graded(self) -> bool {
        matches!(self, Mode::GradedSymmetric | Mode::GradedFrobenius)
    }

    pub fn is_symmetric(self) -> bool {
        matches!(self, Mode::GradedSymmetric | Mode::Symmetric)
    }

    /// The symmetric mode with the same grading.
    pub fn symmetric(self) -> Mode {
        if self.is_graded() {
            Mode::GradedSymmetric
        } else {
            Mode::Symmetric
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `λ` with `λ(e_i) = coords[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctional {
    coords: Vec<Scalar>,
}

impl LinearFunctional {
    pub fn new(coords: Vec<Scalar>) -> LinearFunctional {
        LinearFunctional { coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn eval(&self, v: &[Scalar]) -> Scalar {
        let field = self.coords[0].field();
        self.coords
            .iter()
            .zip(v)
            .fold(field.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    fn check_len(&self, d: usize) -> Result<(), SymmetryError> {
        if self.coords.len() == d {
            Ok(())
        } else {
            Err(SymmetryError::WrongLength {
                expected: d,
                got: self.coords.len(),
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryStatus {
    Yes,
    No,
    NoOverBaseField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Refutation {
    TraceSpaceZero,
    GramDetIdenticallyZero,
    /// The Gram determinant vanishes on the base field; a witness exists over
    /// the extension of this degree (`None` if not found up to degree 3).
    NoPointOverField(Option<usize>),
}

impl Refutation {
    pub fn tag(self) -> &'static str {
        match self {
            Refutation::TraceSpaceZero => "trace-space-zero",
            Refutation::GramDetIdenticallyZero => "gram-det-identically-zero",
            Refutation::NoPointOverField(_) => "no-point-over-field",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub mode: Mode,
    pub status: SymmetryStatus,
    pub witness: Option<LinearFunctional>,
    pub refutation: Option<Refutation>,
    /// Rank of the Gram matrix of the witness (equals the dimension).
    pub gram_rank: Option<usize>,
    pub trace_space_dim: usize,
    /// The Gram determinant, when it was computed.
    pub determinant: Option<MultiPoly>,
    /// For graded division algebras in graded-symmetric mode: whether the
    /// graded commutator space is a proper subspace of `A_e`.
    pub division_criterion: Option<bool>,
}

impl SymmetryVerdict {
    pub fn is_yes(&self) -> bool {
        self.status == SymmetryStatus::Yes
    }

    fn refuted(mode: Mode, status: SymmetryStatus, r: Refutation, m: usize) -> SymmetryVerdict {
        SymmetryVerdict {
            mode,
            status,
            witness: None,
            refutation: Some(r),
            gram_rank: None,
            trace_space_dim: m,
            determinant: None,
            division_criterion: None,
        }
    }
}

fn for_mode(a: &GradedAlgebra, mode: Mode) -> GradedAlgebra {
    if mode.is_graded() {
        a.clone()
    } else {
        a.ungrade()
    }
}

/// Functionals vanishing on every `A_g`, `g != e`, and with `symmetric` also
/// on the graded commutator space. Vectors are coordinate rows `λ(e_i)`.
pub fn graded_trace_space(a: &GradedAlgebra, symmetric: bool) -> Subspace {
    let d = a.dim();
    let field = a.field();
    let e = a.group().identity();
    let mut constraints: Vec<Vec<Scalar>> = (0..d)
        .filter(|&i| a.degree(i) != e)
        .map(|i| a.basis_element(i).into_coords())
        .collect();
    if symmetric {
        constraints.extend(graded_commutator_space(a).basis_vectors());
    }
    if constraints.is_empty() {
        return Subspace::full(field, d);
    }
    Matrix::from_rows(field, d, constraints)
        .rref_rank_kernel()
        .kernel
}

/// The trace space for `mode` (ungrading first for the ungraded modes).
pub fn trace_space(a: &GradedAlgebra, mode: Mode) -> Subspace {
    graded_trace_space(&for_mode(a, mode), mode.is_symmetric())
}

/// The `d × d` pencil `(Σ_r t_r λ^(r)(e_i e_j))`.
pub fn gram_pencil(
    a: &GradedAlgebra,
    basis: &[LinearFunctional],
) -> Result<GramPencil, SymmetryError> {
    if basis.is_empty() {
        return Err(SymmetryError::EmptyTraceSpace);
    }
    let d = a.dim();
    for l in basis {
        l.check_len(d)?;
    }
    let mut p = GramPencil::zero(a.field(), d, basis.len());
    for i in 0..d {
        for j in 0..d {
            let terms = a.product_terms(i, j);
            if terms.is_empty() {
                continue;
            }
            let coeffs = basis
                .iter()
                .map(|l| {
                    terms
                        .iter()
                        .fold(a.field().zero(), |acc, (k, c)| &acc + &(c * &l.coords[*k]))
                })
                .collect();
            p.set_entry(i, j, coeffs);
        }
    }
    Ok(p)
}

/// The Gram matrix `λ(e_i e_j)`.
pub fn gram_matrix(a: &GradedAlgebra, l: &LinearFunctional) -> Matrix {
    gram_pencil(a, std::slice::from_ref(l))
        .expect("one functional")
        .evaluate(&[a.field().one()])
}

/// Decides whether `A` carries a nondegenerate functional of the given mode,
/// with a witness when it does.
pub fn decide_form_existence(
    a: &GradedAlgebra,
    mode: Mode,
) -> Result<SymmetryVerdict, SymmetryError> {
    decide_with(a, mode, true)
}

/// As [`decide_form_existence`]; `division_fast_path` controls whether the
/// graded-division criterion is evaluated alongside.
pub fn decide_with(
    a: &GradedAlgebra,
    mode: Mode,
    division_fast_path: bool,
) -> Result<SymmetryVerdict, SymmetryError> {
    let b = for_mode(a, mode);
    let l = graded_trace_space(&b, mode.is_symmetric());
    let m = l.dim();
    if m == 0 {
        return Ok(SymmetryVerdict::refuted(
            mode,
            SymmetryStatus::No,
            Refutation::TraceSpaceZero,
            0,
        ));
    }
    let basis: Vec<LinearFunctional> = l
        .basis_vectors()
        .into_iter()
        .map(LinearFunctional::new)
        .collect();
    let pencil = gram_pencil(&b, &basis)?;
    let det = match pencil_det(&pencil) {
        Err(LinalgError::TooManyUnknowns(k)) if !mode.is_symmetric() => {
            // L_sym ⊆ L, so a symmetric witness is also a Frobenius witness
            let sym = decide_with(a, mode.symmetric(), false)?;
            if sym.is_yes() {
                return Ok(SymmetryVerdict {
                    mode,
                    trace_space_dim: m,
                    determinant: None,
                    ..sym
                });
            }
            return Err(LinalgError::TooManyUnknowns(k).into());
        }
        det => det?,
    };
    let division_criterion =
        if division_fast_path && mode == Mode::GradedSymmetric && is_graded_division(&b).is_yes() {
            let ae = b.homogeneous_component(b.group().identity());
            Some(graded_commutator_space(&b).dim() < ae.dim())
        } else {
            None
        };
    if det.is_zero() {
        let mut v = SymmetryVerdict::refuted(
            mode,
            SymmetryStatus::No,
            Refutation::GramDetIdenticallyZero,
            m,
        );
        v.determinant = Some(det);
        v.division_criterion = division_criterion;
        return Ok(v);
    }
    let verdict = match nonvanishing_point(&det, b.field())? {
        PointSearch::Point(t) => {
            let field = b.field();
            let coords = (0..b.dim())
                .map(|k| {
                    basis
                        .iter()
                        .zip(&t)
                        .fold(field.zero(), |acc, (l, c)| &acc + &(c * &l.coords[k]))
                })
                .collect();
            let w = LinearFunctional::new(coords);
            let rank = pencil.evaluate(&t).rank();
            assert_eq!(
                rank,
                b.dim(),
                "nonvanishing determinant must give full rank"
            );
            SymmetryVerdict {
                mode,
                status: SymmetryStatus::Yes,
                witness: Some(w),
                refutation: None,
                gram_rank: Some(rank),
                trace_space_dim: m,
                determinant: Some(det),
                division_criterion,
            }
        }
        PointSearch::NoneOverField { witness } => SymmetryVerdict {
            determinant: Some(det),
            division_criterion,
            ..SymmetryVerdict::refuted(
                mode,
                SymmetryStatus::NoOverBaseField,
                Refutation::NoPointOverField(witness.map(|w| w.degree)),
                m,
            )
        },
        PointSearch::IdenticallyZero => unreachable!("determinant checked nonzero"),
    };
    Ok(verdict)
}

/// Independent recheck of a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    /// Basis vectors of degree `!= e` where `λ` is nonzero (graded modes).
    pub off_degree: Vec<usize>,
    /// Basis pairs with `λ([e_i, e_j]) != 0` (symmetric modes).
    pub asymmetric_pairs: Vec<(usize, usize)>,
    pub gram_rank: usize,
    pub dim: usize,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.off_degree.is_empty() && self.asymmetric_pairs.is_empty() && self.gram_rank == self.dim
    }
}

pub fn verify_certificate(
    a: &GradedAlgebra,
    l: &LinearFunctional,
    mode: Mode,
) -> Result<CertificateReport, SymmetryError> {
    let d = a.dim();
    l.check_len(d)?;
    let off_degree = if mode.is_graded() {
        (0..d)
            .filter(|&i| a.degree(i) != a.group().identity() && !l.coords[i].is_zero())
            .collect()
    } else {
        Vec::new()
    };
    let mut asymmetric_pairs = Vec::new();
    if mode.is_symmetric() {
        for i in 0..d {
            for j in i + 1..d {
                let c = a.commutator_vec(a.basis_element(i).coords(), a.basis_element(j).coords());
                if !l.eval(&c).is_zero() {
                    asymmetric_pairs.push((i, j));
                }
            }
        }
    }
    Ok(CertificateReport {
        off_degree,
        asymmetric_pairs,
        gram_rank: gram_matrix(a, l).rank(),
        dim: d,
    })
}

/// `{x : λ(Ax) = 0}`, the kernel of the Gram matrix.
pub fn left_kernel(a: &GradedAlgebra, l: &LinearFunctional) -> Subspace {
    gram_matrix(a, l).rref_rank_kernel().kernel
}

/// Whether `s` is a left ideal spanned by its homogeneous components.
pub fn is_graded_left_ideal(a: &GradedAlgebra, s: &Subspace) -> bool {
    let pieces: usize = crate::invariants::support(a)
        .into_iter()
        .map(|g| {
            s.intersect(&a.homogeneous_component(g))
                .expect("same ambient")
                .dim()
        })
        .sum();
    if pieces != s.dim() {
        return false;
    }
    s.basis_vectors()
        .iter()
        .all(|v| (0..a.dim()).all(|i| s.contains(&a.mul_vec(a.basis_element(i).coords(), v))))
}

/// Checks the Gram reduction on one functional vanishing off `e`: its left
/// kernel is a graded left ideal inside `Ker λ`.
pub fn check_left_kernel_reduction(a: &GradedAlgebra, l: &LinearFunctional) -> bool {
    let n = left_kernel(a, l);
    is_graded_left_ideal(a, &n) && n.basis_vectors().iter().all(|v| l.eval(v).is_zero())
}

fn is_symmetric_on(d: &GradedAlgebra, l: &LinearFunctional) -> bool {
    (0..d.dim()).all(|i| {
        (i + 1..d.dim()).all(|j| {
            l.eval(&d.commutator_vec(d.basis_element(i).coords(), d.basis_element(j).coords()))
                .is_zero()
        })
    })
}

fn compose_sigma(spec: &CrossedProductSpec, g: usize, l: &LinearFunctional) -> LinearFunctional {
    // (λ∘σ(g))(d_i) = λ(row i of sigma[g])
    LinearFunctional::new(spec.sigma[g].row_iter().map(|r| l.eval(r)).collect())
}

/// `λ = Σ_g μ∘σ(g)` on `D`, which is symmetric, `σ`-invariant and has
/// `λ(1) = |G| μ(1)`.
pub fn average_functional(
    spec: &CrossedProductSpec,
    mu: &LinearFunctional,
) -> Result<LinearFunctional, SymmetryError> {
    let d = &spec.coefficients;
    mu.check_len(d.dim())?;
    let n = spec.group.order();
    let p = d.field().characteristic() as usize;
    if p != 0 && n % p == 0 {
        return Err(SymmetryError::CharacteristicDividesGroupOrder);
    }
    if !is_symmetric_on(d, mu) {
        return Err(SymmetryError::AsymmetricMu);
    }
    if mu.eval(d.unit()).is_zero() {
        return Err(SymmetryError::DegenerateMu);
    }
    let field = d.field();
    let mut sum = vec![field.zero(); d.dim()];
    for g in 0..n {
        for (s, c) in sum.iter_mut().zip(compose_sigma(spec, g, mu).coords) {
            *s = &*s + &c;
        }
    }
    let l = LinearFunctional::new(sum);
    debug_assert!(is_symmetric_on(d, &l));
    debug_assert!((0..n).all(|h| compose_sigma(spec, h, &l) == l));
    debug_assert_eq!(
        l.eval(d.unit()),
        &field.from_i64(n as i64) * &mu.eval(d.unit())
    );
    Ok(l)
}

/// `λ̄(Σ a_g ḡ) = λ(a_e)` on the crossed product of a normalized spec.
pub fn lift_functional(
    spec: &CrossedProductSpec,
    l: &LinearFunctional,
) -> Result<LinearFunctional, SymmetryError> {
    let d = &spec.coefficients;
    l.check_len(d.dim())?;
    let g = &spec.group;
    if spec.alpha(0, 0) != d.unit() {
        return Err(SymmetryError::NotNormalized(0));
    }
    for x in g.elements() {
        if g.mul(x, x) != g.identity() && spec.alpha(x, g.inv(x)) != d.unit() {
            return Err(SymmetryError::NotNormalized(x));
        }
    }
    if let Some(h) = g.elements().find(|&h| compose_sigma(spec, h, l) != *l) {
        return Err(SymmetryError::NotInvariant(h));
    }
    if !is_symmetric_on(d, l) {
        return Err(SymmetryError::AsymmetricMu);
    }
    let field = d.field();
    let mut coords = l.coords.clone();
    coords.resize(d.dim() * g.order(), field.zero());
    Ok(LinearFunctional::new(coords))
}

/// `Λ = λ∘tr` on `M_n(Δ)(σ_1, …, σ_n)`.
pub fn matrix_trace_functional(
    m: &GradedAlgebra,
    spec: &GoodGradingSpec,
    l: &LinearFunctional,
) -> Result<LinearFunctional, SymmetryError> {
    l.check_len(spec.delta.dim())?;
    match good_matrix_algebra(spec) {
        Ok(built) if built == *m => {}
        _ => return Err(SymmetryError::NotAGoodMatrixAlgebra),
    }
    let n = spec.n;
    let dd = spec.delta.dim();
    let field = m.field();
    let coords = (0..m.dim())
        .map(|k| {
            let (ij, a) = (k / dd, k % dd);
            if ij / n == ij % n {
                l.coords[a].clone()
            } else {
                field.zero()
            }
        })
        .collect();
    Ok(LinearFunctional::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::*;
    use crate::field::Field;
    use crate::group::GroupTable;
    use crate::invariants::center;
    use proptest::prelude::*;

    #[test]
    fn trace_space_examples() {
        let f2 = Field::prime(2).unwrap();
        let ga = group_algebra(&f2, &GroupTable::cyclic(2).unwrap()).unwrap();
        assert_eq!(
            graded_trace_space(&ga, true),
            Subspace::coordinate(&f2, 2, &[0])
        );
        let c3 = cyclic_algebra(3).unwrap();
        assert_eq!(graded_trace_space(&c3, true).dim(), 1);
        let f5 = Field::prime(5).unwrap();
        let m2 = matrix_algebra(&f5, 2).unwrap();
        let l = graded_trace_space(&m2, true);
        // trace: e11 + e22
        let tr = vec![f5.one(), f5.zero(), f5.zero(), f5.one()];
        assert_eq!(l, Subspace::span(&f5, 4, vec![tr]));
    }

    #[test]
    fn gram_pencil_examples() {
        let f3 = Field::prime(3).unwrap();
        let k = scalars(&f3, &GroupTable::trivial());
        let p = gram_pencil(&k, &[LinearFunctional::new(vec![f3.one()])]).unwrap();
        assert_eq!(p.entry(0, 0), &[f3.one()]);
        let ga = group_algebra(&f3, &GroupTable::cyclic(2).unwrap()).unwrap();
        let p = gram_pencil(&ga, &[LinearFunctional::new(vec![f3.one(), f3.zero()])]).unwrap();
        assert_eq!(
            p.evaluate(&[f3.one()]),
            Matrix::from_i64(&f3, &[&[1, 0], &[0, 1]])
        );
        assert_eq!(gram_pencil(&ga, &[]), Err(SymmetryError::EmptyTraceSpace));
    }

    #[test]
    fn decisions() {
        let q = Field::rationals();
        let h = quaternion_algebra(&q, &q.from_i64(-1), &q.from_i64(-1)).unwrap();
        let v = decide_form_existence(&h, Mode::GradedSymmetric).unwrap();
        assert!(v.is_yes());
        assert_eq!(v.division_criterion, Some(true));
        assert!(
            verify_certificate(&h, v.witness.as_ref().unwrap(), Mode::GradedSymmetric)
                .unwrap()
                .passed()
        );
        for p in [2, 3, 5] {
            let f = Field::prime(p).unwrap();
            let ga = group_algebra(&f, &GroupTable::cyclic(p as usize).unwrap()).unwrap();
            assert!(decide_form_existence(&ga, Mode::GradedSymmetric)
                .unwrap()
                .is_yes());
        }
    }

    #[test]
    fn sweedler_center_is_not_frobenius() {
        let f3 = Field::prime(3).unwrap();
        let t = trivial_extension(&sweedler_algebra(&f3).unwrap()).unwrap();
        let z = t.subspace_algebra(&center(&t), false).unwrap();
        assert_eq!(z.dim(), 3);
        let v = decide_form_existence(&z, Mode::Frobenius).unwrap();
        assert_eq!(v.status, SymmetryStatus::No);
        assert_eq!(v.refutation, Some(Refutation::GramDetIdenticallyZero));
    }

    #[test]
    fn certificates() {
        let f3 = Field::prime(3).unwrap();
        let ga = group_algebra(&f3, &GroupTable::cyclic(2).unwrap()).unwrap();
        let e = LinearFunctional::new(vec![f3.one(), f3.zero()]);
        assert!(verify_certificate(&ga, &e, Mode::GradedSymmetric)
            .unwrap()
            .passed());
        let z = LinearFunctional::new(vec![f3.zero(), f3.zero()]);
        assert_eq!(
            verify_certificate(&ga, &z, Mode::GradedSymmetric)
                .unwrap()
                .gram_rank,
            0
        );
        let f5 = Field::prime(5).unwrap();
        let m2 = matrix_algebra(&f5, 2).unwrap();
        let tr = LinearFunctional::new(vec![f5.one(), f5.zero(), f5.zero(), f5.one()]);
        let r = verify_certificate(&m2, &tr, Mode::Symmetric).unwrap();
        assert!(r.passed());
        assert_eq!(r.gram_rank, 4);
        let bad = LinearFunctional::new(vec![f5.one(), f5.one(), f5.zero(), f5.zero()]);
        assert!(!verify_certificate(&m2, &bad, Mode::Symmetric)
            .unwrap()
            .asymmetric_pairs
            .is_empty());
    }

    fn f9_spec() -> CrossedProductSpec {
        let f9 = Field::galois(3, 2).unwrap();
        frobenius_twisted_spec(
            &f9,
            &GroupTable::cyclic(2).unwrap(),
            &[0, 1],
            &vec![f9.one(); 4],
        )
        .unwrap()
    }

    #[test]
    fn averaging_on_f9() {
        // F_9 = F_3[t]/(t^2+1), t^3 = -t: μ = dual of 1 gives λ(1) = 2, λ(t) = 0
        let spec = f9_spec();
        let f3 = Field::prime(3).unwrap();
        let mu = LinearFunctional::new(vec![f3.one(), f3.zero()]);
        let l = average_functional(&spec, &mu).unwrap();
        assert_eq!(l.coords(), &[f3.from_i64(2), f3.zero()]);
        let lifted = lift_functional(&spec, &l).unwrap();
        let a = crossed_product(&spec).unwrap();
        assert!(verify_certificate(&a, &lifted, Mode::GradedSymmetric)
            .unwrap()
            .passed());
        let bad = LinearFunctional::new(vec![f3.zero(), f3.one()]);
        assert_eq!(
            lift_functional(&spec, &bad),
            Err(SymmetryError::NotInvariant(1))
        );
        assert_eq!(
            average_functional(&spec, &LinearFunctional::new(vec![f3.zero(), f3.one()])),
            Err(SymmetryError::DegenerateMu)
        );
    }

    #[test]
    fn averaging_needs_invertible_order() {
        let spec = cyclic_algebra_spec(3).unwrap();
        let f3 = Field::prime(3).unwrap();
        let mu = LinearFunctional::new(vec![f3.one(), f3.zero(), f3.zero()]);
        assert_eq!(
            average_functional(&spec, &mu),
            Err(SymmetryError::CharacteristicDividesGroupOrder)
        );
    }

    #[test]
    fn trivial_sigma_average_scales() {
        let f5 = Field::prime(5).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        let spec = CrossedProductSpec {
            coefficients: scalars(&f5, &GroupTable::trivial()),
            group: c2,
            sigma: vec![Matrix::identity(&f5, 1); 2],
            alpha: vec![vec![f5.one()]; 4],
        };
        let mu = LinearFunctional::new(vec![f5.from_i64(3)]);
        assert_eq!(
            average_functional(&spec, &mu).unwrap().coords(),
            &[f5.from_i64(6)]
        );
    }

    #[test]
    fn matrix_trace_examples() {
        let f2 = Field::prime(2).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        let spec = GoodGradingSpec {
            n: 2,
            sigmas: vec![0, 1],
            delta: scalars(&f2, &c2),
        };
        let m = good_matrix_algebra(&spec).unwrap();
        let big =
            matrix_trace_functional(&m, &spec, &LinearFunctional::new(vec![f2.one()])).unwrap();
        assert_eq!(big.coords(), &[f2.one(), f2.zero(), f2.zero(), f2.one()]);
        assert!(verify_certificate(&m, &big, Mode::GradedSymmetric)
            .unwrap()
            .passed());
        let other = good_matrix_algebra(&GoodGradingSpec {
            n: 2,
            sigmas: vec![0, 0],
            delta: scalars(&f2, &c2),
        })
        .unwrap();
        assert_eq!(
            matrix_trace_functional(&other, &spec, &LinearFunctional::new(vec![f2.one()])),
            Err(SymmetryError::NotAGoodMatrixAlgebra)
        );
    }

    #[test]
    fn left_kernel_of_degenerate_functional() {
        let f3 = Field::prime(3).unwrap();
        let s = sweedler_algebra(&f3).unwrap();
        let l = LinearFunctional::new(vec![f3.one(), f3.zero(), f3.zero(), f3.zero()]);
        let n = left_kernel(&s, &l);
        assert!(!n.is_zero());
        assert!(check_left_kernel_reduction(&s, &l));
    }

    proptest! {
        #[test]
        fn reduction_holds_on_trace_functionals(seed in 0u64..81) {
            // every functional in the graded trace space of F_3 C_2 ⊗ F_3 C_2
            let f3 = Field::prime(3).unwrap();
            let c2 = GroupTable::cyclic(2).unwrap();
            let ga = group_algebra(&f3, &c2).unwrap();
            let t = trivial_extension(&ga).unwrap();
            let l = graded_trace_space(&t, true);
            let basis = l.basis_vectors();
            let mut s = seed;
            let coeffs: Vec<Scalar> = basis.iter().map(|_| { let c = f3.from_i64((s % 3) as i64); s /= 3; c }).collect();
            let mut v = vec![f3.zero(); t.dim()];
            for (c, b) in coeffs.iter().zip(&basis) {
                for (x, y) in v.iter_mut().zip(b) { *x = &*x + &(c * y); }
            }
            prop_assert!(check_left_kernel_reduction(&t, &LinearFunctional::new(v)));
        }
    }
}
