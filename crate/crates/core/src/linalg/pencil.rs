use std::collections::HashMap;

use crate::field::{Field, Scalar};

use super::{LinalgError, Matrix, MultiPoly};

/// Largest block handled by cofactor expansion when more than one unknown
/// appears in it.
pub const MAX_COFACTOR_DIM: usize = 12;
/// Most unknowns a single block of a pencil may carry.
pub const MAX_UNKNOWNS: usize = 8;

/// Square matrix whose entries are homogeneous linear forms in `t1..tm`.
///
/// Used for Gram matrices `λ(e_i e_j)` with `λ = Σ t_r λ^(r)` and for the
/// left-multiplication matrix of a generic element of a subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramPencil {
    field: Field,
    dim: usize,
    nvars: usize,
    /// Row-major; each entry is a coefficient vector of length `nvars`.
    entries: Vec<Vec<Scalar>>,
}

impl GramPencil {
    pub fn zero(field: &Field, dim: usize, nvars: usize) -> GramPencil {
        GramPencil {
            field: field.clone(),
            dim,
            nvars,
            entries: vec![vec![field.zero(); nvars]; dim * dim],
        }
    }

    /// Builds the pencil `Σ_r t_r · mats[r]`.
    pub fn from_matrices(field: &Field, dim: usize, mats: &[Matrix]) -> GramPencil {
        let mut p = GramPencil::zero(field, dim, mats.len());
        for (r, m) in mats.iter().enumerate() {
            assert_eq!((m.rows(), m.cols()), (dim, dim), "pencil slice shape");
            for i in 0..dim {
                for j in 0..dim {
                    p.entries[i * dim + j][r] = m.get(i, j).clone();
                }
            }
        }
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Scalar] {
        &self.entries[i * self.dim + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, coeffs: Vec<Scalar>) {
        assert_eq!(coeffs.len(), self.nvars, "linear form length");
        self.entries[i * self.dim + j] = coeffs;
    }

    pub fn entry_poly(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly::linear(&self.field, self.entry(i, j))
    }

    fn entry_is_zero(&self, i: usize, j: usize) -> bool {
        self.entry(i, j).iter().all(Scalar::is_zero)
    }

    /// The scalar matrix obtained by substituting `t = point`.
    pub fn evaluate(&self, point: &[Scalar]) -> Matrix {
        assert_eq!(point.len(), self.nvars, "evaluation point length");
        let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v =
                    self.entry(i, j)
                        .iter()
                        .zip(point)
                        .fold(self.field.zero(), |acc, (c, x)| {
                            if c.is_zero() {
                                acc
                            } else {
                                &acc + &(c * x)
                            }
                        });
                m.set(i, j, v);
            }
        }
        m
    }

    /// Splits rows and columns into the connected components of the
    /// bipartite graph of nonzero entries. Returns `None` if some component
    /// is not square (then the determinant vanishes identically).
    fn blocks(&self) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
        let d = self.dim;
        let mut parent: Vec<usize> = (0..2 * d).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..d {
            for j in 0..d {
                if !self.entry_is_zero(i, j) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, d + j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut order: Vec<usize> = Vec::new();
        let mut groups: HashMap<usize, (Vec<usize>, Vec<usize>)> = HashMap::new();
        for node in 0..2 * d {
            let root = find(&mut parent, node);
            let entry = groups.entry(root).or_insert_with(|| {
                order.push(root);
                (Vec::new(), Vec::new())
            });
            if node < d {
                entry.0.push(node);
            } else {
                entry.1.push(node - d);
            }
        }
        let mut out = Vec::with_capacity(order.len());
        for root in order {
            let (rows, cols) = groups.remove(&root).unwrap();
            if rows.len() != cols.len() {
                return None;
            }
            out.push((rows, cols));
        }
        Some(out)
    }
}

fn permutation_sign(perm: &[usize]) -> bool {
    // true for even
    let mut seen = vec![false; perm.len()];
    let mut even = true;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len % 2 == 0 {
            even = !even;
        }
    }
    even
}

/// Exact determinant of a pencil as a polynomial in `t1..tm`.
///
/// Rows and columns are first permuted into the connected blocks of the
/// sparsity pattern. A block whose entries involve a single unknown `t_r` is
/// `det(C)·t_r^k` with `det(C)` from elimination; other blocks use cofactor
/// expansion memoized on the set of used columns.
pub fn pencil_det(p: &GramPencil) -> Result<MultiPoly, LinalgError> {
    let m = p.nvars;
    let zero = MultiPoly::zero(&p.field, m);
    if p.dim == 0 {
        return Ok(MultiPoly::constant(p.field.one(), m));
    }
    let Some(blocks) = p.blocks() else {
        return Ok(zero);
    };
    let row_perm: Vec<usize> = blocks.iter().flat_map(|(r, _)| r.iter().copied()).collect();
    let col_perm: Vec<usize> = blocks.iter().flat_map(|(_, c)| c.iter().copied()).collect();
    let mut det = MultiPoly::constant(p.field.one(), m);
    if permutation_sign(&row_perm) != permutation_sign(&col_perm) {
        det = det.neg();
    }
    for (rows, cols) in &blocks {
        let block = block_det(p, rows, cols)?;
        if block.is_zero() {
            return Ok(zero);
        }
        det = det.mul(&block);
    }
    Ok(det)
}

fn block_det(p: &GramPencil, rows: &[usize], cols: &[usize]) -> Result<MultiPoly, LinalgError> {
    let k = rows.len();
    let m = p.nvars;
    let used_vars: Vec<usize> = (0..m)
        .filter(|&r| {
            rows.iter()
                .any(|&i| cols.iter().any(|&j| !p.entry(i, j)[r].is_zero()))
        })
        .collect();
    if used_vars.len() > MAX_UNKNOWNS {
        return Err(LinalgError::TooManyUnknowns(used_vars.len()));
    }
    if used_vars.len() == 1 {
        let r = used_vars[0];
        let mut c = Matrix::zeros(&p.field, k, k);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                c.set(a, b, p.entry(i, j)[r].clone());
            }
        }
        let d = c.det();
        let mut e = vec![0; m];
        e[r] = k as u32;
        return Ok(MultiPoly::from_terms(&p.field, m, [(e, d)]));
    }
    if k > MAX_COFACTOR_DIM {
        return Err(LinalgError::DimensionTooLarge(k));
    }
    let entries: Vec<Vec<Option<MultiPoly>>> = rows
        .iter()
        .map(|&i| {
            cols.iter()
                .map(|&j| {
                    if p.entry_is_zero(i, j) {
                        None
                    } else {
                        Some(p.entry_poly(i, j))
                    }
                })
                .collect()
        })
        .collect();
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    Ok(cofactor(&entries, 0, 0, &mut memo, &p.field, m))
}

/// Determinant of rows `row..k` against the columns not in `used`.
fn cofactor(
    entries: &[Vec<Option<MultiPoly>>],
    row: usize,
    used: u32,
    memo: &mut HashMap<u32, MultiPoly>,
    field: &Field,
    m: usize,
) -> MultiPoly {
    let k = entries.len();
    if row == k {
        return MultiPoly::constant(field.one(), m);
    }
    if let Some(hit) = memo.get(&used) {
        return hit.clone();
    }
    let mut acc = MultiPoly::zero(field, m);
    let mut free_before = 0;
    for c in 0..k {
        if used & (1 << c) != 0 {
            continue;
        }
        if let Some(e) = &entries[row][c] {
            let minor = cofactor(entries, row + 1, used | (1 << c), memo, field, m);
            if !minor.is_zero() {
                let term = e.mul(&minor);
                acc = if free_before % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
        }
        free_before += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pencil(field: &Field, nvars: usize, rows: &[&[&[i64]]]) -> GramPencil {
        let d = rows.len();
        let mut p = GramPencil::zero(field, d, nvars);
        for (i, row) in rows.iter().enumerate() {
            for (j, coeffs) in row.iter().enumerate() {
                let mut v: Vec<Scalar> = coeffs.iter().map(|&c| field.from_i64(c)).collect();
                v.resize(nvars, field.zero());
                p.set_entry(i, j, v);
            }
        }
        p
    }

    #[test]
    fn pencil_det_examples() {
        let q = Field::rationals();
        let p = pencil(&q, 2, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[1, 0]]]);
        let det = pencil_det(&p).unwrap();
        assert_eq!(det.to_string(), "1*t1^2 + -1*t2^2");

        let diag = pencil(
            &q,
            1,
            &[
                &[&[1], &[0], &[0]],
                &[&[0], &[1], &[0]],
                &[&[0], &[0], &[1]],
            ],
        );
        assert_eq!(pencil_det(&diag).unwrap().to_string(), "1*t1^3");

        // [[t1,t2,t3],[t2,0,0],[t3,0,0]]
        let sweedler = pencil(
            &q,
            3,
            &[
                &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
                &[&[0, 1, 0], &[0], &[0]],
                &[&[0, 0, 1], &[0], &[0]],
            ],
        );
        assert!(pencil_det(&sweedler).unwrap().is_zero());
    }

    #[test]
    fn block_permutation_sign() {
        // Antidiagonal t1 pattern: det = -t1^2.
        let f5 = Field::prime(5).unwrap();
        let p = pencil(&f5, 1, &[&[&[0], &[1]], &[&[1], &[0]]]);
        assert_eq!(pencil_det(&p).unwrap().to_string(), "4*t1^2");
    }

    #[test]
    fn too_many_unknowns() {
        let q = Field::rationals();
        let n = MAX_UNKNOWNS + 1;
        let p = GramPencil::from_matrices(&q, 2, &vec![Matrix::identity(&q, 2); n]);
        assert_eq!(pencil_det(&p), Err(LinalgError::TooManyUnknowns(n)));
        // the limit applies per block: diag(t1, .., tn) is fine
        let diag: Vec<Matrix> = (0..n)
            .map(|r| {
                let mut d = Matrix::zeros(&q, n, n);
                d.set(r, r, q.one());
                d
            })
            .collect();
        let det = pencil_det(&GramPencil::from_matrices(&q, n, &diag)).unwrap();
        assert_eq!(det.total_degree(), Some(n as u32));
    }

    fn lcg(seed: &mut u64) -> u64 {
        *seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        *seed >> 33
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        // Determinant of the evaluated matrix (by elimination) agrees with the
        // evaluated symbolic determinant.
        #[test]
        fn det_commutes_with_evaluation(seed in any::<u64>(), d in 1usize..6, m in 1usize..4, density in 1u64..4) {
            let f7 = Field::prime(7).unwrap();
            let mut s = seed;
            let mut p = GramPencil::zero(&f7, d, m);
            for i in 0..d {
                for j in 0..d {
                    if lcg(&mut s) % 4 < density {
                        let v = (0..m).map(|_| f7.from_i64((lcg(&mut s) % 7) as i64)).collect();
                        p.set_entry(i, j, v);
                    }
                }
            }
            let det = pencil_det(&p).unwrap();
            for _ in 0..100 {
                let pt: Vec<Scalar> = (0..m).map(|_| f7.from_i64((lcg(&mut s) % 7) as i64)).collect();
                prop_assert_eq!(p.evaluate(&pt).det(), det.eval(&pt));
            }
        }
    }
}
