use crate::field::{Field, Scalar};
use crate::group::GroupTable;
use crate::linalg::{Matrix, Subspace};

use super::{good_matrix_algebra, AlgebraError, GoodGradingSpec, GradedAlgebra, MAX_DIM};

type Products = Vec<(usize, usize, usize, Scalar)>;

fn unit_vector(field: &Field, d: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); d];
    v[i] = field.one();
    v
}

/// The one-dimensional algebra `k`, concentrated in degree `e` of `group`.
pub fn scalars(field: &Field, group: &GroupTable) -> GradedAlgebra {
    GradedAlgebra::new(
        field,
        group,
        vec![0],
        vec![(0, 0, 0, field.one())],
        vec![field.one()],
        Some(vec!["1".into()]),
    )
    .expect("k is an algebra")
}

/// `kG` with basis the group elements, each of its own degree.
pub fn group_algebra(field: &Field, group: &GroupTable) -> Result<GradedAlgebra, AlgebraError> {
    let n = group.order();
    let products: Products = group
        .elements()
        .flat_map(|g| group.elements().map(move |h| (g, h)))
        .map(|(g, h)| (g, h, group.mul(g, h), field.one()))
        .collect();
    GradedAlgebra::new(
        field,
        group,
        group.elements().collect(),
        products,
        unit_vector(field, n, group.identity()),
        Some(group.labels().to_vec()),
    )
}

/// `(a, b)_F` on the basis `1, i, j, k` with `i² = a`, `j² = b`, `ij = k = -ji`,
/// graded by the Klein group: `i`, `j`, `k` get the three involutions.
pub fn quaternion_algebra(
    field: &Field,
    a: &Scalar,
    b: &Scalar,
) -> Result<GradedAlgebra, AlgebraError> {
    if field.characteristic() == 2 {
        return Err(AlgebraError::CharacteristicTwo);
    }
    if a.field() != field || b.field() != field {
        return Err(AlgebraError::FieldMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Err(AlgebraError::ZeroParameter);
    }
    let one = field.one();
    let ab = a * b;
    let (e, i, j, k) = (0, 1, 2, 3);
    let mut products: Products = (0..4)
        .flat_map(|x| [(e, x, x, one.clone()), (x, e, x, one.clone())])
        .filter(|&(x, y, _, _)| !(x == e && y == e))
        .collect();
    products.push((e, e, e, one.clone()));
    products.extend([
        (i, i, e, a.clone()),
        (j, j, e, b.clone()),
        (k, k, e, -&ab),
        (i, j, k, one.clone()),
        (j, i, k, -&one),
        (i, k, j, a.clone()),
        (k, i, j, -a),
        (j, k, i, -b),
        (k, j, i, b.clone()),
    ]);
    GradedAlgebra::new(
        field,
        &GroupTable::klein(),
        vec![0, 2, 1, 3],
        products,
        unit_vector(field, 4, 0),
        Some(["1", "i", "j", "k"].map(String::from).to_vec()),
    )
}

/// The four-dimensional Hopf algebra generated by `c`, `x` with `c² = 1`,
/// `x² = 0`, `xc = -cx`, on the basis `1, c, x, cx`, trivially graded.
pub fn sweedler_algebra(field: &Field) -> Result<GradedAlgebra, AlgebraError> {
    if field.characteristic() == 2 {
        return Err(AlgebraError::CharacteristicTwo);
    }
    let one = field.one();
    let m1 = -&one;
    let (u, c, x, cx) = (0, 1, 2, 3);
    let mut products: Products = (0..4).map(|y| (u, y, y, one.clone())).collect();
    products.extend((1..4).map(|y| (y, u, y, one.clone())));
    products.extend([
        (c, c, u, one.clone()),
        (c, x, cx, one.clone()),
        (c, cx, x, one.clone()),
        (x, c, cx, m1.clone()),
        (cx, c, x, m1),
    ]);
    GradedAlgebra::new(
        field,
        &GroupTable::trivial(),
        vec![0; 4],
        products,
        unit_vector(field, 4, 0),
        Some(["1", "c", "x", "cx"].map(String::from).to_vec()),
    )
}

/// `A ⊕ A*` with `(a, f)(a', f') = (aa', af' + fa')`. The dual basis vector of
/// a degree-`g` basis vector has degree `g^{-1}`.
pub fn trivial_extension(a: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
    let d = a.dim();
    let field = a.field();
    let group = a.group();
    let mut products: Products = Vec::new();
    for (i, j, k, c) in a.structure_constants() {
        products.push((i, j, k, c.clone()));
        // e_j f_k picks up c_ij^k f_i, f_k e_i picks up c_ij^k f_j
        products.push((j, d + k, d + i, c.clone()));
        products.push((d + k, i, d + j, c.clone()));
    }
    let mut degrees = a.degrees().to_vec();
    degrees.extend(a.degrees().iter().map(|&g| group.inv(g)));
    let mut unit = a.unit().to_vec();
    unit.extend((0..d).map(|_| field.zero()));
    let mut labels = a.labels().to_vec();
    labels.extend(a.labels().iter().map(|l| format!("{}*", l)));
    GradedAlgebra::new(field, group, degrees, products, unit, Some(labels))
}

fn check_compatible(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<(), AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    if a.group() != b.group() {
        return Err(AlgebraError::GroupMismatch);
    }
    Ok(())
}

/// `A × B` with block-diagonal structure constants and unit `(1, 1)`.
pub fn direct_product(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
    check_compatible(a, b)?;
    let da = a.dim();
    if da + b.dim() > MAX_DIM {
        return Err(AlgebraError::DimensionTooLarge(da + b.dim()));
    }
    let mut products: Products = a
        .structure_constants()
        .map(|(i, j, k, c)| (i, j, k, c.clone()))
        .collect();
    products.extend(
        b.structure_constants()
            .map(|(i, j, k, c)| (da + i, da + j, da + k, c.clone())),
    );
    let degrees = a.degrees().iter().chain(b.degrees()).copied().collect();
    let unit = a.unit().iter().chain(b.unit()).cloned().collect();
    let labels = a
        .labels()
        .iter()
        .map(|l| format!("{}.0", l))
        .chain(b.labels().iter().map(|l| format!("{}.1", l)))
        .collect();
    GradedAlgebra::new(a.field(), a.group(), degrees, products, unit, Some(labels))
}

/// `A ⊗ B` on basis pairs `(i, j)` at index `i * dim B + j`, with degree
/// `deg i · deg j`; needs an abelian group.
pub fn tensor_product(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
    check_compatible(a, b)?;
    if !a.group().is_abelian() {
        return Err(AlgebraError::NonAbelianGroup);
    }
    let (da, db) = (a.dim(), b.dim());
    if da * db > MAX_DIM {
        return Err(AlgebraError::DimensionTooLarge(da * db));
    }
    let idx = |i: usize, j: usize| i * db + j;
    let mut products: Products = Vec::new();
    for (i, i2, k, c) in a.structure_constants() {
        for (j, j2, l, d) in b.structure_constants() {
            products.push((idx(i, j), idx(i2, j2), idx(k, l), c * d));
        }
    }
    let g = a.group();
    let mut degrees = Vec::with_capacity(da * db);
    let mut unit = Vec::with_capacity(da * db);
    let mut labels = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            degrees.push(g.mul(a.degree(i), b.degree(j)));
            unit.push(&a.unit()[i] * &b.unit()[j]);
            labels.push(format!("{}⊗{}", a.labels()[i], b.labels()[j]));
        }
    }
    GradedAlgebra::new(a.field(), g, degrees, products, unit, Some(labels))
}

/// `F_{p^{nm}} ⊗ A` for `A` over `F_{p^n}`: same basis and structure constants
/// read in the larger field.
pub fn scalar_extension(a: &GradedAlgebra, m: usize) -> Result<GradedAlgebra, AlgebraError> {
    let field = a.field();
    if !field.is_finite() {
        return Err(AlgebraError::RationalsNotSupported);
    }
    if m == 0 || field.extension_degree() * m > 6 {
        return Err(AlgebraError::Shape(format!(
            "extension degree {} out of range",
            m
        )));
    }
    if m == 1 {
        return Ok(a.clone());
    }
    let (big, emb) = field.extension(m)?;
    let products: Products = a
        .structure_constants()
        .map(|(i, j, k, c)| (i, j, k, emb.apply(c)))
        .collect();
    GradedAlgebra::new(
        &big,
        a.group(),
        a.degrees().to_vec(),
        products,
        a.unit().iter().map(|c| emb.apply(c)).collect(),
        Some(a.labels().to_vec()),
    )
}

/// Coordinates of `x ∈ F_{p^n}` over the prime field, in the basis `1, t, …`.
pub fn field_coords(x: &Scalar, prime: &Field) -> Vec<Scalar> {
    x.coeffs()
        .iter()
        .map(|&c| prime.from_i64(c as i64))
        .collect()
}

/// Inverse of [`field_coords`].
pub fn field_from_coords(big: &Field, coords: &[Scalar]) -> Scalar {
    let ints: Vec<i64> = coords.iter().map(|c| c.coeffs()[0] as i64).collect();
    big.from_coeffs(&ints)
        .expect("coordinate count matches the degree")
}

fn power_label(var: &str, i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => var.into(),
        _ => format!("{}^{}", var, i),
    }
}

/// A finite field `K = F_p[x]/(m)` as a trivially graded algebra over `F_p`,
/// on the basis `1, x, …, x^{n-1}`.
pub fn extension_field_algebra(big: &Field) -> Result<GradedAlgebra, AlgebraError> {
    if !big.is_finite() {
        return Err(AlgebraError::RationalsNotSupported);
    }
    let k = big.prime_field();
    let n = big.extension_degree();
    let powers: Vec<Scalar> = (0..2 * n).map(|i| big.generator().pow(i as u64)).collect();
    let mut products: Products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = if n == 1 {
                vec![k.one()]
            } else {
                field_coords(&powers[i + j], &k)
            };
            products.extend(c.into_iter().enumerate().map(|(l, c)| (i, j, l, c)));
        }
    }
    GradedAlgebra::new(
        &k,
        &GroupTable::trivial(),
        vec![0; n],
        products,
        unit_vector(&k, n, 0),
        Some((0..n).map(|i| power_label("x", i)).collect()),
    )
}

/// Matrix of `Frob^j` on `K` over `F_p`; row `i` holds the image of `x^i`.
pub fn frobenius_matrix(big: &Field, j: usize) -> Matrix {
    let k = big.prime_field();
    let n = big.extension_degree();
    let rows = (0..n)
        .map(|i| {
            let mut y = big.generator().pow(i as u64);
            for _ in 0..j {
                y = y.frobenius().expect("finite field");
            }
            field_coords(&y, &k)
        })
        .collect();
    Matrix::from_rows(&k, n, rows)
}

/// `M_n(F)`, trivially graded, on the matrix units `e11, e12, …`.
pub fn matrix_algebra(field: &Field, n: usize) -> Result<GradedAlgebra, AlgebraError> {
    let group = GroupTable::trivial();
    good_matrix_algebra(&GoodGradingSpec {
        n,
        sigmas: vec![0; n],
        delta: scalars(field, &group),
    })
}

/// The unital subalgebra of `M_n(F)` generated by `generators`, on the RREF
/// basis of its span (matrices flattened row by row), trivially graded.
pub fn matrix_subalgebra(
    field: &Field,
    n: usize,
    generators: &[Matrix],
) -> Result<GradedAlgebra, AlgebraError> {
    let flat =
        |m: &Matrix| -> Vec<Scalar> { m.row_iter().flat_map(|r| r.iter().cloned()).collect() };
    let unflat =
        |v: &[Scalar]| Matrix::from_rows(field, n, v.chunks(n).map(<[Scalar]>::to_vec).collect());
    if generators
        .iter()
        .any(|g| g.rows() != n || g.cols() != n || g.field() != field)
    {
        return Err(AlgebraError::Shape(
            "generators must be n×n over the field".into(),
        ));
    }
    let mut span = Subspace::span(
        field,
        n * n,
        std::iter::once(flat(&Matrix::identity(field, n))),
    );
    span = span
        .sum(&Subspace::span(field, n * n, generators.iter().map(flat)))
        .expect("same ambient");
    loop {
        let basis: Vec<Matrix> = span.basis_vectors().iter().map(|v| unflat(v)).collect();
        let products = basis
            .iter()
            .flat_map(|x| basis.iter().map(move |y| flat(&x.mul(y))));
        let next = span
            .sum(&Subspace::span(field, n * n, products))
            .expect("same ambient");
        if next.dim() == span.dim() {
            break;
        }
        span = next;
    }
    let d = span.dim();
    if d > MAX_DIM {
        return Err(AlgebraError::DimensionTooLarge(d));
    }
    let basis: Vec<Matrix> = span.basis_vectors().iter().map(|v| unflat(v)).collect();
    let mut products: Products = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let c = span.coordinates(&flat(&x.mul(y))).expect("closed");
            products.extend(c.into_iter().enumerate().map(|(k, c)| (i, j, k, c)));
        }
    }
    let unit = span
        .coordinates(&flat(&Matrix::identity(field, n)))
        .expect("contains 1");
    GradedAlgebra::new(
        field,
        &GroupTable::trivial(),
        vec![0; d],
        products,
        unit,
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn idx(a: &GradedAlgebra, label: &str) -> usize {
        a.labels().iter().position(|l| l == label).unwrap()
    }

    fn product(a: &GradedAlgebra, x: &str, y: &str) -> Vec<Scalar> {
        let (i, j) = (idx(a, x), idx(a, y));
        a.multiply(&a.basis_element(i), &a.basis_element(j))
            .unwrap()
            .into_coords()
    }

    #[test]
    fn group_algebra_examples() {
        let f2 = Field::prime(2).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        let a = group_algebra(&f2, &c2).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(
            a.mul_vec(
                &a.basis_element(1).into_coords(),
                &a.basis_element(1).into_coords()
            ),
            a.unit()
        );
        let q = Field::rationals();
        let k = group_algebra(&q, &GroupTable::klein()).unwrap();
        assert_eq!(k.dim(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(k.product_terms(i, j), k.product_terms(j, i));
            }
        }
    }

    #[test]
    fn quaternion_relations() {
        let q = Field::rationals();
        let h = quaternion_algebra(&q, &q.from_i64(-1), &q.from_i64(-1)).unwrap();
        let k = h.basis_element(3).into_coords();
        let minus_k: Vec<Scalar> = k.iter().map(|c| -c).collect();
        assert_eq!(product(&h, "i", "j"), k);
        assert_eq!(product(&h, "j", "i"), minus_k);
        let minus_one: Vec<Scalar> = h.unit().iter().map(|c| -c).collect();
        for x in ["i", "j", "k"] {
            assert_eq!(product(&h, x, x), minus_one);
        }
        // k² = -ab for general parameters
        let h2 = quaternion_algebra(&q, &q.from_i64(2), &q.from_i64(-3)).unwrap();
        assert_eq!(product(&h2, "k", "k")[0], q.from_i64(6));
        assert_eq!(
            quaternion_algebra(
                &Field::prime(2).unwrap(),
                &Field::prime(2).unwrap().one(),
                &Field::prime(2).unwrap().one()
            ),
            Err(AlgebraError::CharacteristicTwo)
        );
        assert_eq!(
            quaternion_algebra(&q, &q.zero(), &q.one()),
            Err(AlgebraError::ZeroParameter)
        );
    }

    #[test]
    fn sweedler_relations() {
        let q = Field::rationals();
        let s = sweedler_algebra(&q).unwrap();
        assert_eq!(product(&s, "c", "c"), s.unit());
        assert!(product(&s, "x", "x").iter().all(Scalar::is_zero));
        let cx = s.basis_element(3).into_coords();
        assert_eq!(
            product(&s, "x", "c"),
            cx.iter().map(|c| -c).collect::<Vec<_>>()
        );
        assert!(product(&s, "cx", "cx").iter().all(Scalar::is_zero));
    }

    #[test]
    fn trivial_extension_dual_half_squares_to_zero() {
        let f3 = Field::prime(3).unwrap();
        let s = sweedler_algebra(&f3).unwrap();
        let t = trivial_extension(&s).unwrap();
        assert_eq!(t.dim(), 8);
        for i in 4..8 {
            for j in 4..8 {
                assert!(t.product_terms(i, j).is_empty());
            }
        }
        // dual degrees are inverted
        let c3 = GroupTable::cyclic(3).unwrap();
        let g = trivial_extension(&group_algebra(&f3, &c3).unwrap()).unwrap();
        assert_eq!(g.degrees(), &[0, 1, 2, 0, 2, 1]);
    }

    #[test]
    fn direct_and_tensor_dimensions() {
        let f3 = Field::prime(3).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        let a = group_algebra(&f3, &c2).unwrap();
        assert_eq!(direct_product(&a, &a).unwrap().dim(), 4);
        let t = tensor_product(&a, &a).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.degrees(), &[0, 1, 1, 0]);
        assert_eq!(tensor_product(&a, &scalars(&f3, &c2)).unwrap().dim(), 2);
        let q = Field::rationals();
        assert_eq!(
            direct_product(&a, &group_algebra(&q, &c2).unwrap()),
            Err(AlgebraError::FieldMismatch)
        );
        let s3 = group_algebra(&f3, &GroupTable::sym3()).unwrap();
        assert_eq!(tensor_product(&s3, &s3), Err(AlgebraError::NonAbelianGroup));
    }

    #[test]
    fn scalar_extension_preserves_dimension() {
        let f2 = Field::prime(2).unwrap();
        let m2 = matrix_algebra(&f2, 2).unwrap();
        assert_eq!(scalar_extension(&m2, 1).unwrap(), m2);
        let e = scalar_extension(&m2, 2).unwrap();
        assert_eq!(e.dim(), 4);
        assert_eq!(e.field().order(), Some(4));
        assert_eq!(
            scalar_extension(&matrix_algebra(&Field::rationals(), 2).unwrap(), 2),
            Err(AlgebraError::RationalsNotSupported)
        );
    }

    #[test]
    fn extension_field_algebra_matches_field() {
        let f9 = Field::galois(3, 2).unwrap();
        let k = extension_field_algebra(&f9).unwrap();
        assert_eq!(k.dim(), 2);
        let f3 = f9.prime_field();
        for x in f9.elements() {
            for y in f9.elements() {
                let xy = k.mul_vec(&field_coords(&x, &f3), &field_coords(&y, &f3));
                assert_eq!(field_from_coords(&f9, &xy), &x * &y);
            }
        }
        // Frobenius on F_9 = F_3[t]/(t²+1): t -> t³ = -t
        let fr = frobenius_matrix(&f9, 1);
        assert_eq!(fr, Matrix::from_i64(&f3, &[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn matrix_subalgebra_of_upper_triangular() {
        let f2 = Field::prime(2).unwrap();
        let n = Matrix::from_i64(&f2, &[&[0, 1], &[0, 0]]);
        let a = matrix_subalgebra(&f2, 2, &[n]).unwrap();
        assert_eq!(a.dim(), 2);
        let e11 = Matrix::from_i64(&f2, &[&[1, 0], &[0, 0]]);
        assert_eq!(
            matrix_subalgebra(&f2, 2, &[e11, Matrix::from_i64(&f2, &[&[0, 1], &[0, 0]])])
                .unwrap()
                .dim(),
            3
        );
    }

    proptest! {
        #[test]
        fn every_small_group_algebra_validates(n in 1usize..9, p in prop::sample::select(vec![2u64, 3, 5])) {
            let f = Field::prime(p).unwrap();
            let a = group_algebra(&f, &GroupTable::cyclic(n).unwrap()).unwrap();
            prop_assert!(a.validate().is_ok());
            let t = trivial_extension(&a).unwrap();
            prop_assert_eq!(t.dim(), 2 * n);
        }
    }
}
