use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::random_invertible;
use crate::algebra::*;
use crate::field::Field;
use crate::format::algebra_hash;
use crate::group::GroupTable;
use crate::invariants;
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub algebra: GradedAlgebra,
}

fn random_matrix(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let q = field.order().expect("finite field");
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| field.element_at(rng.gen_range(0..q)))
                .collect()
        })
        .collect();
    Matrix::from_rows(field, n, rows)
}

/// `count` random unital matrix subalgebras of dimension at most 5 over `F_2`
/// and `F_3` (alternating), each on a random basis. Deterministic in `seed`.
pub fn random_corpus(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fields = [
        Field::prime(2).expect("prime"),
        Field::prime(3).expect("prime"),
    ];
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let field = &fields[out.len() % 2];
        let n = rng.gen_range(2..=3);
        let gens: Vec<Matrix> = (0..rng.gen_range(1..=2))
            .map(|_| random_matrix(field, n, &mut rng))
            .collect();
        let a = matrix_subalgebra(field, n, &gens).expect("generators are n×n");
        if a.dim() > 5 {
            continue;
        }
        let p = random_invertible(field, a.dim(), &mut rng);
        let a = a.change_basis(&p).expect("invertible change of basis");
        out.push(CorpusEntry {
            name: format!("random-{}-{}-dim{}", out.len(), field, a.dim()),
            algebra: a,
        });
    }
    out
}

/// Every algebra of dimension at most 4 over `F_2` obtained from the
/// constructors on small groups, plus products, extensions, ungradings and
/// centers of those, without duplicates.
pub fn constructor_corpus_f2() -> Vec<CorpusEntry> {
    let f2 = Field::prime(2).expect("prime");
    let groups: Vec<(&str, GroupTable)> = vec![
        ("1", GroupTable::trivial()),
        ("C2", GroupTable::cyclic(2).expect("C2")),
        ("C3", GroupTable::cyclic(3).expect("C3")),
        ("C4", GroupTable::cyclic(4).expect("C4")),
        ("C2xC2", GroupTable::product(&[2, 2]).expect("C2xC2")),
    ];
    let mut base: Vec<CorpusEntry> = Vec::new();
    let push =
        |list: &mut Vec<CorpusEntry>, name: String, r: Result<GradedAlgebra, AlgebraError>| {
            if let Ok(a) = r {
                if a.dim() <= 4 {
                    list.push(CorpusEntry { name, algebra: a });
                }
            }
        };
    for (gn, g) in &groups {
        push(&mut base, format!("scalars[{}]", gn), Ok(scalars(&f2, g)));
        push(
            &mut base,
            format!("group_algebra[{}]", gn),
            group_algebra(&f2, g),
        );
        for s in 1..g.order() {
            let spec = GoodGradingSpec {
                n: 2,
                sigmas: vec![0, s],
                delta: scalars(&f2, g),
            };
            push(
                &mut base,
                format!("good_matrix[{}; e,{}]", gn, g.label(s)),
                good_matrix_algebra(&spec),
            );
        }
    }
    push(&mut base, "sweedler".into(), sweedler_algebra(&f2));
    push(&mut base, "M2".into(), matrix_algebra(&f2, 2));
    for d in 2..=3 {
        let big = Field::galois(2, d).expect("F_2^d");
        push(
            &mut base,
            format!("field F_2^{}", d),
            extension_field_algebra(&big),
        );
    }
    let e12 = Matrix::from_i64(&f2, &[&[0, 1], &[0, 0]]);
    let e11 = Matrix::from_i64(&f2, &[&[1, 0], &[0, 0]]);
    push(
        &mut base,
        "dual numbers".into(),
        matrix_subalgebra(&f2, 2, &[e12.clone()]),
    );
    push(
        &mut base,
        "upper triangular".into(),
        matrix_subalgebra(&f2, 2, &[e11, e12]),
    );
    push(&mut base, "cyclic_algebra(2)".into(), cyclic_algebra(2));
    let f4 = Field::galois(2, 2).expect("F_4");
    let c2 = GroupTable::cyclic(2).expect("C2");
    for powers in [[0, 0], [0, 1]] {
        for c in f4.elements().skip(1) {
            let alpha = vec![f4.one(), f4.one(), f4.one(), c.clone()];
            let r =
                frobenius_twisted_spec(&f4, &c2, &powers, &alpha).and_then(|s| crossed_product(&s));
            push(
                &mut base,
                format!("F4 crossed C2 sigma={:?} alpha={}", powers, c),
                r,
            );
        }
    }

    let small: Vec<CorpusEntry> = base
        .iter()
        .filter(|e| e.algebra.dim() <= 2)
        .cloned()
        .collect();
    let mut derived = Vec::new();
    for e in &small {
        push(
            &mut derived,
            format!("trivial_extension({})", e.name),
            trivial_extension(&e.algebra),
        );
    }
    for (i, x) in small.iter().enumerate() {
        for y in &small[i..] {
            if x.algebra.group() != y.algebra.group() {
                continue;
            }
            push(
                &mut derived,
                format!("{} x {}", x.name, y.name),
                direct_product(&x.algebra, &y.algebra),
            );
            push(
                &mut derived,
                format!("{} ⊗ {}", x.name, y.name),
                tensor_product(&x.algebra, &y.algebra),
            );
        }
    }
    base.extend(derived);
    let mut more = Vec::new();
    for e in &base {
        if !e.algebra.is_trivially_graded() {
            push(
                &mut more,
                format!("ungrade({})", e.name),
                Ok(e.algebra.ungrade()),
            );
        }
        let z = invariants::center(&e.algebra);
        if z.dim() < e.algebra.dim() {
            push(
                &mut more,
                format!("center({})", e.name),
                e.algebra.subspace_algebra(&z, false),
            );
        }
    }
    base.extend(more);

    let mut seen = BTreeSet::new();
    base.retain(|e| seen.insert(algebra_hash(&e.algebra)));
    base
}
