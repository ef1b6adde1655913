//! Finite-dimensional `G`-graded algebras given by structure constants in a
//! homogeneous basis, and the constructions used throughout the crate.

mod constructors;
mod crossed;
mod good;

use std::fmt;

pub use constructors::{
    direct_product, extension_field_algebra, field_coords, field_from_coords, frobenius_matrix,
    group_algebra, matrix_algebra, matrix_subalgebra, quaternion_algebra, scalar_extension,
    scalars, sweedler_algebra, tensor_product, trivial_extension,
};
pub use crossed::{
    crossed_product, cyclic_algebra, cyclic_algebra_spec, frobenius_twisted_spec,
    normalize_section, section_spec, CrossedProductSpec,
};
pub use good::{good_matrix_algebra, GoodGradingSpec};

use crate::field::{Field, FieldError, Scalar};
use crate::group::{GroupError, GroupTable};
use crate::linalg::{Matrix, Subspace};

/// Every algebra in the crate has dimension at most this.
pub const MAX_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("invalid algebra: {0}")]
    Invalid(ValidationReport),
    #[error("malformed algebra data: {0}")]
    Shape(String),
    #[error("dimension {0} exceeds the limit of {MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error("element does not belong to this algebra")]
    OwnerMismatch,
    #[error("algebras are over different fields")]
    FieldMismatch,
    #[error("algebras are graded by different groups")]
    GroupMismatch,
    #[error("tensor products need an abelian grading group")]
    NonAbelianGroup,
    #[error("sigma and alpha are incompatible: {0}")]
    IncompatibleCocycleData(String),
    #[error("alpha({0}, {1}) is not invertible")]
    NonInvertibleAlpha(usize, usize),
    #[error("alpha(e, e) must be 1")]
    AlphaNotNormalized,
    #[error("sigma({0}) is not a unital algebra automorphism")]
    SigmaNotAutomorphism(usize),
    #[error("section element of degree {0} is not invertible")]
    NotGradedDivisionLike(usize),
    #[error("cyclic algebras are built for p in {{2, 3, 5, 7}}, not {0}")]
    UnsupportedPrime(u64),
    #[error("characteristic 2 is not allowed here")]
    CharacteristicTwo,
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("operation needs a finite field")]
    RationalsNotSupported,
    #[error("subspace is not closed: e_{0} e_{1} escapes")]
    NotClosed(usize, usize),
    #[error("subspace does not contain the unit")]
    UnitMissing,
    #[error("basis vector {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Outcome of [`GradedAlgebra::validate`]; empty lists mean the axiom holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// `(i, j, l)` with `(e_i e_j) e_l != e_i (e_j e_l)`.
    pub associativity: Vec<(usize, usize, usize)>,
    /// `i` with `1·e_i != e_i` or `e_i·1 != e_i`.
    pub unit: Vec<usize>,
    /// `(i, j, k)` with `c_ij^k != 0` but `deg k != deg i · deg j`.
    pub grading: Vec<(usize, usize, usize)>,
    pub unit_homogeneous: bool,
    /// Set when the scan stopped at its failure limit.
    pub truncated: bool,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.associativity.is_empty()
            && self.unit.is_empty()
            && self.grading.is_empty()
            && self.unit_homogeneous
    }

    fn failures(&self) -> usize {
        self.associativity.len() + self.unit.len() + self.grading.len()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "valid");
        }
        let mut parts = Vec::new();
        if !self.associativity.is_empty() {
            parts.push(format!("associativity fails at {:?}", self.associativity));
        }
        if !self.unit.is_empty() {
            parts.push(format!("unit law fails at {:?}", self.unit));
        }
        if !self.grading.is_empty() {
            parts.push(format!("grading law fails at {:?}", self.grading));
        }
        if !self.unit_homogeneous {
            parts.push("unit is not homogeneous of degree e".into());
        }
        if self.truncated {
            parts.push("(scan truncated)".into());
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// Element of an algebra, as a coordinate vector in its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

/// `A = ⊕_g A_g` with basis `e_0..e_{d-1}`, `e_i` homogeneous of degree
/// `degrees[i]`, and `e_i e_j = Σ_k c_ij^k e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    field: Field,
    group: GroupTable,
    degrees: Vec<usize>,
    /// Indexed by `i * dim + j`; sorted by `k`, no zero coefficients.
    sc: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
    labels: Vec<String>,
}

impl GradedAlgebra {
    /// Builds and validates an algebra. Repeated `(i, j, k)` entries are summed.
    pub fn new<I>(
        field: &Field,
        group: &GroupTable,
        degrees: Vec<usize>,
        products: I,
        unit: Vec<Scalar>,
        labels: Option<Vec<String>>,
    ) -> Result<GradedAlgebra, AlgebraError>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let a = GradedAlgebra::unchecked(field, group, degrees, products, unit, labels)?;
        let report = a.validate();
        if report.is_ok() {
            Ok(a)
        } else {
            Err(AlgebraError::Invalid(report))
        }
    }

    /// Assembles an algebra after shape checks only. The axioms are left to
    /// [`validate`](Self::validate); use this to inspect broken data.
    pub fn unchecked<I>(
        field: &Field,
        group: &GroupTable,
        degrees: Vec<usize>,
        products: I,
        unit: Vec<Scalar>,
        labels: Option<Vec<String>>,
    ) -> Result<GradedAlgebra, AlgebraError>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let d = degrees.len();
        if d == 0 {
            return Err(AlgebraError::Shape("the zero algebra has no unit".into()));
        }
        if d > MAX_DIM {
            return Err(AlgebraError::DimensionTooLarge(d));
        }
        if let Some(&g) = degrees.iter().find(|&&g| g >= group.order()) {
            return Err(AlgebraError::Shape(format!(
                "degree {} outside the group",
                g
            )));
        }
        if unit.len() != d || unit.iter().any(|x| x.field() != field) {
            return Err(AlgebraError::Shape(
                "unit vector has wrong length or field".into(),
            ));
        }
        let labels = match labels {
            Some(l) if l.len() != d => {
                return Err(AlgebraError::Shape(format!(
                    "{} labels for dimension {}",
                    l.len(),
                    d
                )))
            }
            Some(l) => l,
            None => (0..d).map(|i| format!("e{}", i)).collect(),
        };
        let mut dense: Vec<Vec<Scalar>> = Vec::new();
        let mut touched = vec![false; d * d];
        dense.resize_with(d * d, Vec::new);
        for (i, j, k, c) in products {
            if i >= d || j >= d || k >= d {
                return Err(AlgebraError::Shape(format!(
                    "index ({}, {}, {}) out of range",
                    i, j, k
                )));
            }
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch);
            }
            let slot = &mut dense[i * d + j];
            if !touched[i * d + j] {
                *slot = vec![field.zero(); d];
                touched[i * d + j] = true;
            }
            slot[k] = &slot[k] + &c;
        }
        let sc = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect::<Vec<_>>()
            })
            .collect();
        Ok(GradedAlgebra {
            field: field.clone(),
            group: group.clone(),
            degrees,
            sc,
            unit,
            labels,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// `e_i e_j` as sparse `(k, c_ij^k)` pairs.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sc[i * self.dim() + j]
    }

    /// All nonzero structure constants `(i, j, k, c)` sorted by `(i, j, k)`.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let d = self.dim();
        self.sc
            .iter()
            .enumerate()
            .flat_map(move |(ij, row)| row.iter().map(move |(k, c)| (ij / d, ij % d, *k, c)))
    }

    /// Replaces one structure constant without revalidating; for fault injection.
    pub fn with_structure_constant(
        &self,
        i: usize,
        j: usize,
        k: usize,
        c: Scalar,
    ) -> GradedAlgebra {
        let mut out = self.clone();
        let d = self.dim();
        let row = &mut out.sc[i * d + j];
        row.retain(|(kk, _)| *kk != k);
        if !c.is_zero() {
            row.push((k, c));
            row.sort_by_key(|(kk, _)| *kk);
        }
        out
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> GradedAlgebra {
        assert_eq!(labels.len(), self.dim(), "label count");
        self.labels = labels;
        self
    }

    /// Checks associativity, the unit law, the grading law and homogeneity
    /// of the unit, listing every violation.
    pub fn validate(&self) -> ValidationReport {
        self.validate_limited(usize::MAX)
    }

    /// Like [`validate`](Self::validate) but stops after `limit` failures.
    pub fn validate_limited(&self, limit: usize) -> ValidationReport {
        let d = self.dim();
        let g = &self.group;
        let mut report = ValidationReport {
            unit_homogeneous: true,
            ..Default::default()
        };
        let unit_deg: Vec<usize> = (0..d)
            .filter(|&i| !self.unit[i].is_zero())
            .map(|i| self.degrees[i])
            .collect();
        if unit_deg.iter().any(|&h| h != g.identity()) || unit_deg.is_empty() {
            report.unit_homogeneous = false;
        }
        for i in 0..d {
            for j in 0..d {
                for (k, _) in self.product_terms(i, j) {
                    if self.degrees[*k] != g.mul(self.degrees[i], self.degrees[j]) {
                        report.grading.push((i, j, *k));
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                report.unit.push(i);
            }
        }
        if report.failures() >= limit {
            report.truncated = true;
            return report;
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.product_terms(i, j);
                for l in 0..d {
                    let jl = self.product_terms(j, l);
                    let left = self.mul_sparse(ij, &[(l, self.field.one())]);
                    let right = self.mul_sparse(&[(i, self.field.one())], jl);
                    if left != right {
                        report.associativity.push((i, j, l));
                        if report.failures() >= limit {
                            report.truncated = true;
                            return report;
                        }
                    }
                }
            }
        }
        report
    }

    fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    fn mul_sparse(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in self.product_terms(*i, *j) {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }

    fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    /// Product of coordinate vectors (panics on length mismatch).
    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim(), "coordinate length");
        assert_eq!(y.len(), self.dim(), "coordinate length");
        self.mul_sparse(&Self::sparse(x), &Self::sparse(y))
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element, AlgebraError> {
        if coords.len() != self.dim() || coords.iter().any(|c| c.field() != &self.field) {
            return Err(AlgebraError::OwnerMismatch);
        }
        Ok(Element { coords })
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element {
            coords: self.basis_vector(i),
        }
    }

    pub fn one(&self) -> Element {
        Element {
            coords: self.unit.clone(),
        }
    }

    pub fn zero(&self) -> Element {
        Element {
            coords: vec![self.field.zero(); self.dim()],
        }
    }

    fn owns(&self, x: &Element) -> bool {
        x.coords.len() == self.dim() && x.coords.iter().all(|c| c.field() == &self.field)
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        if !self.owns(x) || !self.owns(y) {
            return Err(AlgebraError::OwnerMismatch);
        }
        Ok(Element {
            coords: self.mul_vec(&x.coords, &y.coords),
        })
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        Element {
            coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar, x: &Element) -> Element {
        Element {
            coords: x.coords.iter().map(|a| c * a).collect(),
        }
    }

    /// `xy - yx` on coordinate vectors.
    pub fn commutator_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let xy = self.mul_vec(x, y);
        let yx = self.mul_vec(y, x);
        xy.iter().zip(&yx).map(|(a, b)| a - b).collect()
    }

    /// Matrix of `v -> x v`; column `j` holds the coordinates of `x e_j`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        let xs = Self::sparse(x);
        for j in 0..d {
            let col = self.mul_sparse(&xs, &[(j, self.field.one())]);
            for (k, c) in col.into_iter().enumerate() {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Matrix of `v -> v x`; column `j` holds the coordinates of `e_j x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        let xs = Self::sparse(x);
        for j in 0..d {
            let col = self.mul_sparse(&[(j, self.field.one())], &xs);
            for (k, c) in col.into_iter().enumerate() {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Two-sided inverse, if `x` is invertible.
    pub fn inverse(&self, x: &Element) -> Option<Element> {
        let lx = self.left_mult_matrix(&x.coords);
        if lx.rank() < self.dim() {
            return None;
        }
        lx.solve(&self.unit).map(|coords| Element { coords })
    }

    /// Indices of basis vectors of degree `g`.
    pub fn component_indices(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == g).collect()
    }

    /// `A_g` as a coordinate subspace.
    pub fn homogeneous_component(&self, g: usize) -> Subspace {
        Subspace::coordinate(&self.field, self.dim(), &self.component_indices(g))
    }

    /// Degree of a nonzero vector when it is homogeneous.
    pub fn homogeneous_degree(&self, v: &[Scalar]) -> Option<usize> {
        let mut degs = (0..self.dim())
            .filter(|&i| !v[i].is_zero())
            .map(|i| self.degrees[i]);
        let first = degs.next()?;
        degs.all(|g| g == first).then_some(first)
    }

    /// Same algebra, graded by the trivial group.
    pub fn ungrade(&self) -> GradedAlgebra {
        GradedAlgebra {
            group: GroupTable::trivial(),
            degrees: vec![0; self.dim()],
            ..self.clone()
        }
    }

    pub fn is_trivially_graded(&self) -> bool {
        self.degrees.iter().all(|&g| g == 0)
    }

    /// The subalgebra spanned by `s`, on the RREF basis of `s`. With `graded`
    /// the basis vectors must be homogeneous and keep their degrees;
    /// otherwise the result is trivially graded.
    pub fn subspace_algebra(
        &self,
        s: &Subspace,
        graded: bool,
    ) -> Result<GradedAlgebra, AlgebraError> {
        if s.ambient_dim() != self.dim() {
            return Err(AlgebraError::Shape(
                "subspace has the wrong ambient dimension".into(),
            ));
        }
        let unit = s.coordinates(&self.unit).ok_or(AlgebraError::UnitMissing)?;
        let basis = s.basis_vectors();
        let degrees = if graded {
            basis
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    self.homogeneous_degree(v)
                        .ok_or(AlgebraError::NotHomogeneous(i))
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            vec![0; basis.len()]
        };
        let group = if graded {
            self.group.clone()
        } else {
            GroupTable::trivial()
        };
        let mut products = Vec::new();
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                let uv = self.mul_vec(u, v);
                let coords = s.coordinates(&uv).ok_or(AlgebraError::NotClosed(i, j))?;
                products.extend(coords.into_iter().enumerate().map(|(k, c)| (i, j, k, c)));
            }
        }
        let labels = basis
            .iter()
            .map(|v| {
                let nz: Vec<usize> = (0..self.dim()).filter(|&i| !v[i].is_zero()).collect();
                match nz.as_slice() {
                    [i] if v[*i].is_one() => self.labels[*i].clone(),
                    _ => {
                        let terms: Vec<String> = nz
                            .iter()
                            .map(|&i| format!("{}*{}", v[i], self.labels[i]))
                            .collect();
                        terms.join("+")
                    }
                }
            })
            .collect();
        GradedAlgebra::new(&self.field, &group, degrees, products, unit, Some(labels))
    }

    /// The same algebra on the basis `f_i = Σ_j p[i][j] e_j`; every row of
    /// `p` must be homogeneous.
    pub fn change_basis(&self, p: &Matrix) -> Result<GradedAlgebra, AlgebraError> {
        let d = self.dim();
        if p.rows() != d || p.cols() != d || p.rank() != d {
            return Err(AlgebraError::Shape(
                "change of basis must be invertible".into(),
            ));
        }
        let rows: Vec<Vec<Scalar>> = p.row_iter().map(<[Scalar]>::to_vec).collect();
        let degrees = rows
            .iter()
            .enumerate()
            .map(|(i, v)| {
                self.homogeneous_degree(v)
                    .ok_or(AlgebraError::NotHomogeneous(i))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let s = Subspace::span(&self.field, d, rows.clone());
        // coordinates in the new basis: solve y P = x, i.e. P^T y = x
        let pt = p.transpose();
        let to_new = |x: &[Scalar]| pt.solve(x).expect("basis spans the algebra");
        let mut products = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let y = to_new(&self.mul_vec(&rows[i], &rows[j]));
                products.extend(y.into_iter().enumerate().map(|(k, c)| (i, j, k, c)));
            }
        }
        debug_assert_eq!(s.dim(), d);
        GradedAlgebra::new(
            &self.field,
            &self.group,
            degrees,
            products,
            to_new(&self.unit),
            None,
        )
    }
}
