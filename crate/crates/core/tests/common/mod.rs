//! Small oracles shared by the integration tests. They only read structure
//! constants and use field arithmetic; all linear algebra is redone here.
#![allow(dead_code)]

use gradsym::algebra::GradedAlgebra;
use gradsym::field::{Field, Scalar};

/// Rank by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let pivot: Vec<Scalar> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    let ra = rank(a.to_vec());
    let rb = rank(b.to_vec());
    let both: Vec<Vec<Scalar>> = a.iter().chain(b).cloned().collect();
    ra == rb && rank(both) == ra
}

/// Dense products of basis vectors read from the structure constants:
/// `t[i][j]` is the coordinate vector of `e_i e_j`.
pub fn product_table(a: &GradedAlgebra) -> Vec<Vec<Vec<Scalar>>> {
    let d = a.dim();
    let f = a.field();
    let mut t = vec![vec![vec![f.zero(); d]; d]; d];
    for (i, j, k, c) in a.structure_constants() {
        t[i][j][k] = c.clone();
    }
    t
}

pub fn mul(t: &[Vec<Vec<Scalar>>], f: &Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let d = x.len();
    let mut out = vec![f.zero(); d];
    for i in 0..d {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..d {
            if y[j].is_zero() {
                continue;
            }
            let c = &x[i] * &y[j];
            for (o, s) in out.iter_mut().zip(&t[i][j]) {
                *o = &*o + &(&c * s);
            }
        }
    }
    out
}

pub fn unit(f: &Field, d: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); d];
    v[i] = f.one();
    v
}

pub fn dot(f: &Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(f.zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Rank of `(λ(e_i e_j))` for a multiplication given basis-wise.
pub fn gram_rank(
    d: usize,
    f: &Field,
    prod: impl Fn(usize, usize) -> Vec<Scalar>,
    w: &[Scalar],
) -> usize {
    rank(
        (0..d)
            .map(|i| (0..d).map(|j| dot(f, w, &prod(i, j))).collect())
            .collect(),
    )
}

/// Brute-force associativity and two-sided unit check from the table.
pub fn is_associative_unital(a: &GradedAlgebra) -> bool {
    let t = product_table(a);
    let f = a.field();
    let d = a.dim();
    let e = |i| unit(f, d, i);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if mul(&t, f, &t[i][j], &e(k)) != mul(&t, f, &e(i), &t[j][k]) {
                    return false;
                }
            }
        }
        if mul(&t, f, a.unit(), &e(i)) != e(i) || mul(&t, f, &e(i), a.unit()) != e(i) {
            return false;
        }
    }
    true
}
