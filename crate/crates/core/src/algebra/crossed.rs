use crate::field::{Field, Scalar};
use crate::group::GroupTable;
use crate::linalg::Matrix;

use super::constructors::{extension_field_algebra, field_coords, frobenius_matrix};
use super::{AlgebraError, Element, GradedAlgebra, MAX_DIM};

/// Data of a crossed product `D^σ_α[G]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedProductSpec {
    /// The coefficient algebra, trivially graded.
    pub coefficients: GradedAlgebra,
    pub group: GroupTable,
    /// `sigma[g]` has the coordinates of `σ(g)(d_i)` in row `i`.
    pub sigma: Vec<Matrix>,
    /// `alpha[g * |G| + h]` holds the coordinates of `α(g, h)` in `D`.
    pub alpha: Vec<Vec<Scalar>>,
}

impl CrossedProductSpec {
    pub fn alpha(&self, g: usize, h: usize) -> &[Scalar] {
        &self.alpha[g * self.group.order() + h]
    }

    /// `σ(g)(v)` for a coordinate vector `v` of `D`.
    pub fn apply_sigma(&self, g: usize, v: &[Scalar]) -> Vec<Scalar> {
        let m = &self.sigma[g];
        let field = self.coefficients.field();
        let mut out = vec![field.zero(); m.cols()];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(m.row(i)) {
                *o = &*o + &(vi * c);
            }
        }
        out
    }

    fn check(&self) -> Result<(), AlgebraError> {
        let d = &self.coefficients;
        let n = self.group.order();
        let dd = d.dim();
        if !d.is_trivially_graded() {
            return Err(AlgebraError::Shape(
                "coefficient algebra must be trivially graded".into(),
            ));
        }
        if dd * n > MAX_DIM {
            return Err(AlgebraError::DimensionTooLarge(dd * n));
        }
        if self.sigma.len() != n || self.alpha.len() != n * n {
            return Err(AlgebraError::Shape(
                "sigma or alpha has the wrong length".into(),
            ));
        }
        for (g, m) in self.sigma.iter().enumerate() {
            if m.rows() != dd || m.cols() != dd || m.field() != d.field() || m.rank() != dd {
                return Err(AlgebraError::SigmaNotAutomorphism(g));
            }
            if self.apply_sigma(g, d.unit()) != d.unit() {
                return Err(AlgebraError::SigmaNotAutomorphism(g));
            }
            for i in 0..dd {
                for j in 0..dd {
                    let lhs = self.apply_sigma(g, &d.mul_vec(&m_unit(d, i), &m_unit(d, j)));
                    let rhs = d.mul_vec(m.row(i), m.row(j));
                    if lhs != rhs {
                        return Err(AlgebraError::SigmaNotAutomorphism(g));
                    }
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                let a = self.alpha(g, h);
                if a.len() != dd {
                    return Err(AlgebraError::Shape(
                        "alpha value has the wrong length".into(),
                    ));
                }
                let elem = d
                    .element(a.to_vec())
                    .map_err(|_| AlgebraError::FieldMismatch)?;
                if d.inverse(&elem).is_none() {
                    return Err(AlgebraError::NonInvertibleAlpha(g, h));
                }
            }
        }
        if self.alpha(0, 0) != d.unit() && !self.scaled_unit_allowed() {
            return Err(AlgebraError::AlphaNotNormalized);
        }
        Ok(())
    }

    /// `α(e, e) != 1` is accepted when `σ(e) = id` and `α(e, e)` is central;
    /// the unit is then `α(e, e)^{-1} ē`.
    fn scaled_unit_allowed(&self) -> bool {
        let d = &self.coefficients;
        let c = self.alpha(0, 0);
        self.sigma[0] == Matrix::identity(d.field(), d.dim())
            && (0..d.dim()).all(|i| d.mul_vec(c, &m_unit(d, i)) == d.mul_vec(&m_unit(d, i), c))
    }

    fn alpha_ee_inverse(&self) -> Vec<Scalar> {
        let d = &self.coefficients;
        let c = d.element(self.alpha(0, 0).to_vec()).expect("checked");
        d.inverse(&c).expect("checked").into_coords()
    }
}

fn m_unit(d: &GradedAlgebra, i: usize) -> Vec<Scalar> {
    d.basis_element(i).into_coords()
}

/// `D^σ_α[G]`: basis `(d_i, g)` at index `g * dim D + i`, of degree `g`, with
/// `(a ḡ)(b h̄) = a σ(g)(b) α(g, h) gh̄`. Incompatible `(σ, α)` show up as an
/// associativity or unit failure.
pub fn crossed_product(spec: &CrossedProductSpec) -> Result<GradedAlgebra, AlgebraError> {
    spec.check()?;
    let d = &spec.coefficients;
    let g = &spec.group;
    let (n, dd) = (g.order(), d.dim());
    let field = d.field();
    let mut products = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let alpha = spec.alpha(x, y);
            let xy = g.mul(x, y);
            for j in 0..dd {
                let sb = spec.sigma[x].row(j);
                let tail = d.mul_vec(sb, alpha);
                for i in 0..dd {
                    let v = d.mul_vec(&m_unit(d, i), &tail);
                    for (k, c) in v.into_iter().enumerate() {
                        if !c.is_zero() {
                            products.push((x * dd + i, y * dd + j, xy * dd + k, c));
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![field.zero(); n * dd];
    unit[..dd].clone_from_slice(&spec.alpha_ee_inverse());
    let labels = (0..n)
        .flat_map(|x| {
            d.labels().iter().map(move |l| match (l.as_str(), x) {
                (_, 0) => l.clone(),
                ("1", _) => g.label(x).to_string(),
                _ => format!("{}·{}", l, g.label(x)),
            })
        })
        .collect();
    let degrees = (0..n).flat_map(|x| std::iter::repeat(x).take(dd)).collect();
    let a = GradedAlgebra::unchecked(field, g, degrees, products, unit, Some(labels))?;
    if let Some(t) = section_failure(&a, n, dd) {
        return Err(AlgebraError::IncompatibleCocycleData(format!(
            "associativity fails at {:?}",
            t
        )));
    }
    let report = a.validate_limited(1);
    if !report.is_ok() {
        return Err(AlgebraError::IncompatibleCocycleData(report.to_string()));
    }
    Ok(a)
}

/// Associativity on the section triples `(ū_g, ū_h, ū_k)`, which catches a
/// broken cocycle without the full scan.
fn section_failure(a: &GradedAlgebra, n: usize, dd: usize) -> Option<(usize, usize, usize)> {
    let u = |g: usize| {
        let mut v = a.zero().into_coords();
        v[g * dd..(g + 1) * dd].clone_from_slice(&a.unit()[..dd]);
        v
    };
    let us: Vec<Vec<Scalar>> = (0..n).map(u).collect();
    for x in 0..n {
        for y in 0..n {
            let xy = a.mul_vec(&us[x], &us[y]);
            for z in 0..n {
                let yz = a.mul_vec(&us[y], &us[z]);
                if a.mul_vec(&xy, &us[z]) != a.mul_vec(&us[x], &yz) {
                    return Some((x * dd, y * dd, z * dd));
                }
            }
        }
    }
    None
}

/// Crossed-product data read off a homogeneous section `u_g` (one invertible
/// element of each degree): `σ(g)(a) = u_g a u_g^{-1}` and
/// `α(g, h) = u_g u_h u_{gh}^{-1}`. `basis` holds the images in `A_e` of the
/// basis of `D` and `to_d` reads an element of `A_e` back in `D`.
fn spec_from_section(
    a: &GradedAlgebra,
    coefficients: &GradedAlgebra,
    basis: &[Vec<Scalar>],
    to_d: &dyn Fn(&[Scalar]) -> Vec<Scalar>,
    section: &[Element],
) -> Result<CrossedProductSpec, AlgebraError> {
    let g = a.group();
    let n = g.order();
    if section.len() != n {
        return Err(AlgebraError::Shape(format!(
            "section has {} elements for |G| = {}",
            section.len(),
            n
        )));
    }
    let mut inverses = Vec::with_capacity(n);
    for (x, u) in section.iter().enumerate() {
        if a.homogeneous_degree(u.coords()) != Some(x) {
            return Err(AlgebraError::NotGradedDivisionLike(x));
        }
        inverses.push(a.inverse(u).ok_or(AlgebraError::NotGradedDivisionLike(x))?);
    }
    let in_ae = to_d;
    let sigma = (0..n)
        .map(|x| {
            let rows = basis
                .iter()
                .map(|b| {
                    in_ae(&a.mul_vec(&a.mul_vec(section[x].coords(), b), inverses[x].coords()))
                })
                .collect();
            Matrix::from_rows(a.field(), basis.len(), rows)
        })
        .collect();
    let mut alpha = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let uv = a.mul_vec(section[x].coords(), section[y].coords());
            alpha.push(in_ae(&a.mul_vec(&uv, inverses[g.mul(x, y)].coords())));
        }
    }
    Ok(CrossedProductSpec {
        coefficients: coefficients.clone(),
        group: g.clone(),
        sigma,
        alpha,
    })
}

/// Crossed-product data of a graded algebra with an invertible homogeneous
/// element in every degree; `D` is `A_e` rebuilt on its RREF basis.
pub fn section_spec(
    a: &GradedAlgebra,
    section: &[Element],
) -> Result<CrossedProductSpec, AlgebraError> {
    let ae = a.homogeneous_component(a.group().identity());
    let d = a.subspace_algebra(&ae, false)?;
    let to_d = |v: &[Scalar]| ae.coordinates(v).expect("degree-e element lies in A_e");
    spec_from_section(a, &d, &ae.basis_vectors(), &to_d, section)
}

/// Rescales the section so that `u_{g^{-1}} = u_g^{-1}` whenever `ord g > 2`:
/// of each pair `{g, g^{-1}}` the larger index is replaced. The section at
/// `e` becomes `1`, so the output always has `α(e, e) = 1`.
pub fn normalize_section(spec: &CrossedProductSpec) -> Result<CrossedProductSpec, AlgebraError> {
    let g = &spec.group;
    let involutive = g.elements().all(|x| g.mul(x, x) == g.identity());
    if involutive {
        return Ok(spec.clone());
    }
    let a = crossed_product(spec)?;
    let d = &spec.coefficients;
    let dd = d.dim();
    let base: Vec<Element> = g
        .elements()
        .map(|x| {
            if x == g.identity() {
                return a.one();
            }
            let mut v = a.zero().into_coords();
            v[x * dd..(x + 1) * dd].clone_from_slice(d.unit());
            a.element(v).expect("same algebra")
        })
        .collect();
    let mut section = base.clone();
    for x in g.elements() {
        let xi = g.inv(x);
        if xi < x && g.mul(x, x) != g.identity() {
            section[x] = a
                .inverse(&base[xi])
                .ok_or(AlgebraError::NotGradedDivisionLike(xi))?;
        }
    }
    // D -> A_e, b -> b·1 = (b α(e,e)^{-1}) ē
    let c = spec.alpha(0, 0).to_vec();
    let c_inv = spec.alpha_ee_inverse();
    let basis: Vec<Vec<Scalar>> = (0..dd)
        .map(|i| {
            let mut v = a.zero().into_coords();
            v[..dd].clone_from_slice(&d.mul_vec(&m_unit(d, i), &c_inv));
            v
        })
        .collect();
    let to_d = |v: &[Scalar]| d.mul_vec(&v[..dd], &c);
    spec_from_section(&a, d, &basis, &to_d, &section)
}

/// `K^σ_α[G]` over the prime field of `K`, with `σ(g) = Frob^{powers[g]}` and
/// scalar `α(g, h) = alpha[g * |G| + h] ∈ K^*`.
pub fn frobenius_twisted_spec(
    big: &Field,
    group: &GroupTable,
    powers: &[usize],
    alpha: &[Scalar],
) -> Result<CrossedProductSpec, AlgebraError> {
    let d = extension_field_algebra(big)?;
    let n = group.order();
    if powers.len() != n || alpha.len() != n * n {
        return Err(AlgebraError::Shape(
            "powers or alpha has the wrong length".into(),
        ));
    }
    if alpha.iter().any(|x| x.field() != big) {
        return Err(AlgebraError::FieldMismatch);
    }
    let k = big.prime_field();
    Ok(CrossedProductSpec {
        sigma: powers.iter().map(|&j| frobenius_matrix(big, j)).collect(),
        alpha: alpha.iter().map(|x| field_coords(x, &k)).collect(),
        coefficients: d,
        group: group.clone(),
    })
}

/// `(F_{p^p}/F_p, Frob, 1)` with `K = F_p[x]/(x^p - x - 1)`.
pub fn cyclic_algebra_spec(p: u64) -> Result<CrossedProductSpec, AlgebraError> {
    if ![2, 3, 5, 7].contains(&p) {
        return Err(AlgebraError::UnsupportedPrime(p));
    }
    let n = p as usize;
    let mut modulus = vec![0i64; n + 1];
    modulus[0] = -1;
    modulus[1] = -1;
    modulus[n] = 1;
    let big = Field::make(p, Some(&modulus))?;
    let group = GroupTable::cyclic(n)?;
    let powers: Vec<usize> = (0..n).collect();
    frobenius_twisted_spec(&big, &group, &powers, &vec![big.one(); n * n])
}

/// The cyclic algebra `K ⊕ Ky ⊕ … ⊕ Ky^{p-1}` with `ya = σ(a)y`, `y^p = 1`,
/// graded by `C_p`; basis `x^i y^j` at index `j * p + i`.
pub fn cyclic_algebra(p: u64) -> Result<GradedAlgebra, AlgebraError> {
    let a = crossed_product(&cyclic_algebra_spec(p)?)?;
    let n = p as usize;
    let pw = |v: &str, i: usize| match i {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{}^{}", v, i),
    };
    let labels = (0..n * n)
        .map(|k| {
            let s = format!("{}{}", pw("x", k % n), pw("y", k / n));
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        })
        .collect();
    Ok(a.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra, scalars};

    fn trivial_spec(
        d: &GradedAlgebra,
        g: &GroupTable,
        alpha: impl Fn(usize, usize) -> Scalar,
    ) -> CrossedProductSpec {
        let n = g.order();
        let dd = d.dim();
        let f = d.field();
        CrossedProductSpec {
            coefficients: d.clone(),
            group: g.clone(),
            sigma: vec![Matrix::identity(f, dd); n],
            alpha: (0..n * n)
                .map(|k| d.unit().iter().map(|c| c * &alpha(k / n, k % n)).collect())
                .collect(),
        }
    }

    #[test]
    fn degenerate_crossed_product_is_group_algebra() {
        let f2 = Field::prime(2).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        let d = scalars(&f2, &GroupTable::trivial());
        let a = crossed_product(&trivial_spec(&d, &c2, |_, _| f2.one())).unwrap();
        let b = group_algebra(&f2, &c2).unwrap();
        assert_eq!(
            a.structure_constants().collect::<Vec<_>>(),
            b.structure_constants().collect::<Vec<_>>()
        );
        assert_eq!(a.degrees(), b.degrees());
    }

    #[test]
    fn hamilton_quaternions_as_crossed_product() {
        let q = Field::rationals();
        let klein = GroupTable::klein();
        let d = scalars(&q, &GroupTable::trivial());
        // Klein index 2a+b; u_2 = i, u_1 = j, u_3 = k
        let sign = |g: usize, h: usize| -> i64 {
            let table = [[1, 1, 1, 1], [1, -1, -1, 1], [1, 1, -1, -1], [1, -1, 1, -1]];
            table[g][h]
        };
        let spec = trivial_spec(&d, &klein, |g, h| q.from_i64(sign(g, h)));
        let h = crossed_product(&spec).unwrap();
        let e = |i: usize| h.basis_element(i);
        let m = |x: &Element, y: &Element| h.multiply(x, y).unwrap();
        let minus = |x: &Element| h.scale(&q.from_i64(-1), x);
        let (i, j, k) = (e(2), e(1), e(3));
        assert_eq!(m(&i, &i), minus(&h.one()));
        assert_eq!(m(&j, &j), minus(&h.one()));
        assert_eq!(m(&i, &j), k);
        assert_eq!(m(&j, &i), minus(&k));
    }

    #[test]
    fn incompatible_and_noninvertible_alpha() {
        let f7 = Field::prime(7).unwrap();
        let c3 = GroupTable::cyclic(3).unwrap();
        let d = scalars(&f7, &GroupTable::trivial());
        let bad = trivial_spec(&d, &c3, |g, h| {
            if (g, h) == (1, 1) {
                f7.from_i64(2)
            } else {
                f7.one()
            }
        });
        assert!(matches!(
            crossed_product(&bad),
            Err(AlgebraError::IncompatibleCocycleData(_))
        ));
        let zero = trivial_spec(&d, &c3, |g, h| {
            if (g, h) == (1, 2) {
                f7.zero()
            } else {
                f7.one()
            }
        });
        assert_eq!(
            crossed_product(&zero),
            Err(AlgebraError::NonInvertibleAlpha(1, 2))
        );
    }

    #[test]
    fn normalize_constant_alpha_over_f7() {
        let f7 = Field::prime(7).unwrap();
        let c3 = GroupTable::cyclic(3).unwrap();
        let d = scalars(&f7, &GroupTable::trivial());
        let spec = trivial_spec(&d, &c3, |_, _| f7.from_i64(3));
        let a0 = crossed_product(&spec).unwrap();
        // unit is 3^{-1} ē = 5 ē
        assert_eq!(a0.unit()[0], f7.from_i64(5));
        assert_eq!(spec.alpha(1, 2), &[f7.from_i64(3)]);
        let norm = normalize_section(&spec).unwrap();
        for g in 0..3 {
            assert_eq!(norm.alpha(g, c3.inv(g)), &[f7.one()]);
        }
        // recompute u_g u_{g^{-1}} in the new crossed product
        let a = crossed_product(&norm).unwrap();
        let u = |g: usize| a.basis_element(g);
        assert_eq!(a.multiply(&u(1), &u(2)).unwrap(), a.one());
    }

    #[test]
    fn normalize_keeps_exponent_two_and_group_algebras() {
        let q = Field::rationals();
        let d = scalars(&q, &GroupTable::trivial());
        let klein = GroupTable::klein();
        let spec = trivial_spec(&d, &klein, |g, h| {
            if g == 3 && h == 3 {
                q.from_i64(-1)
            } else {
                q.one()
            }
        });
        assert_eq!(normalize_section(&spec).unwrap(), spec);
        let c5 = GroupTable::cyclic(5).unwrap();
        let ga = trivial_spec(&d, &c5, |_, _| q.one());
        assert_eq!(normalize_section(&ga).unwrap(), ga);
    }

    #[test]
    fn cyclic_algebra_relations() {
        assert_eq!(cyclic_algebra(11), Err(AlgebraError::UnsupportedPrime(11)));
        let a = cyclic_algebra(2).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.field().order(), Some(2));
        let a = cyclic_algebra(3).unwrap();
        assert_eq!(a.dim(), 9);
        let f3 = a.field().clone();
        let idx = |l: &str| a.labels().iter().position(|x| x == l).unwrap();
        let e = |l: &str| a.basis_element(idx(l));
        let m = |x: &Element, y: &Element| a.multiply(x, y).unwrap();
        // y x = (x + 1) y
        assert_eq!(m(&e("y"), &e("x")), a.add(&e("xy"), &e("y")));
        // y^3 = 1
        assert_eq!(m(&m(&e("y"), &e("y")), &e("y")), a.one());
        assert_eq!(m(&e("y"), &e("y")), e("y^2"));
        // x^3 = x + 1
        let x3 = m(&m(&e("x"), &e("x")), &e("x"));
        assert_eq!(x3, a.add(&e("x"), &a.one()));
        assert_eq!(f3.order(), Some(3));
    }

    #[test]
    fn section_spec_recovers_quaternions() {
        let q = Field::rationals();
        let h = crate::algebra::quaternion_algebra(&q, &q.from_i64(-1), &q.from_i64(-1)).unwrap();
        // Klein element x is carried by the basis vector of degree x
        let section: Vec<Element> = (0..4)
            .map(|g| h.basis_element(h.component_indices(g)[0]))
            .collect();
        let spec = section_spec(&h, &section).unwrap();
        let rebuilt = crossed_product(&spec).unwrap();
        assert_eq!(rebuilt.dim(), 4);
        assert_eq!(spec.alpha(2, 2), &[q.from_i64(-1)]);
        assert_eq!(spec.alpha(2, 1), &[q.one()]);
        assert_eq!(spec.alpha(1, 2), &[q.from_i64(-1)]);
    }

    #[test]
    fn f9_frobenius_crossed_product_validates() {
        let f9 = Field::galois(3, 2).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        let spec = frobenius_twisted_spec(&f9, &c2, &[0, 1], &vec![f9.one(); 4]).unwrap();
        let a = crossed_product(&spec).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.field().order(), Some(3));
        assert!(a.validate().is_ok());
    }
}
