use super::{AlgebraError, GradedAlgebra, MAX_DIM};

/// Data of `M_n(Δ)(σ_1, …, σ_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodGradingSpec {
    pub n: usize,
    pub sigmas: Vec<usize>,
    pub delta: GradedAlgebra,
}

/// `M_n(Δ)` on the basis `e_ij ⊗ δ` (index `(i * n + j) * dim Δ + δ`), where
/// `e_ij ⊗ δ` has degree `σ_i^{-1} deg(δ) σ_j`. The degree-`g` component then
/// has `Δ_{σ_i g σ_j^{-1}}` in position `(i, j)`.
pub fn good_matrix_algebra(spec: &GoodGradingSpec) -> Result<GradedAlgebra, AlgebraError> {
    let GoodGradingSpec { n, sigmas, delta } = spec;
    let n = *n;
    let g = delta.group();
    if n == 0 || sigmas.len() != n {
        return Err(AlgebraError::Shape(format!(
            "{} sigmas for n = {}",
            sigmas.len(),
            n
        )));
    }
    if let Some(&s) = sigmas.iter().find(|&&s| s >= g.order()) {
        return Err(AlgebraError::Shape(format!(
            "sigma {} outside the group",
            s
        )));
    }
    let dd = delta.dim();
    let dim = n * n * dd;
    if dim > MAX_DIM {
        return Err(AlgebraError::DimensionTooLarge(dim));
    }
    let idx = |i: usize, j: usize, a: usize| (i * n + j) * dd + a;
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for (a, b, c, x) in delta.structure_constants() {
                    products.push((idx(i, j, a), idx(j, l, b), idx(i, l, c), x.clone()));
                }
            }
        }
    }
    let field = delta.field();
    let mut degrees = vec![0; dim];
    let mut unit = vec![field.zero(); dim];
    let mut labels = vec![String::new(); dim];
    for i in 0..n {
        for j in 0..n {
            for a in 0..dd {
                let k = idx(i, j, a);
                degrees[k] = g.mul(g.mul(g.inv(sigmas[i]), delta.degree(a)), sigmas[j]);
                if i == j {
                    unit[k] = delta.unit()[a].clone();
                }
                labels[k] = if dd == 1 {
                    format!("e{}{}", i + 1, j + 1)
                } else {
                    format!("e{}{}⊗{}", i + 1, j + 1, delta.labels()[a])
                };
            }
        }
    }
    GradedAlgebra::new(field, g, degrees, products, unit, Some(labels))
}
