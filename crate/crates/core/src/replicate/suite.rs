//! Every acceptance check as one deterministic report.

use serde_json::{json, Value};

use super::*;
use crate::algebra::*;
use crate::field::{Field, Scalar};
use crate::format::{algebra_hash, Certificate};
use crate::group::GroupTable;
use crate::linalg::Subspace;
use crate::symmetry::{Refutation, SymmetryStatus};

/// Instances tested by the reference hunt (p = 2, K ∈ {F_2, F_4},
/// G ∈ {C_2, C_2×C_2, C_4}); frozen at the first verified run.
pub const HUNT_REGRESSION_INSTANCES: u64 = 97;

const NAMES: [&str; 14] = [
    "commutator-dimension",
    "matrix-commutators",
    "scalar-extension",
    "char0-division",
    "group-algebra",
    "cyclic-algebra",
    "good-matrix",
    "semisimple-closure",
    "sweedler-center",
    "division-trivial-extension-center",
    "center-theorem",
    "averaging-lifting",
    "oracle-equivalence",
    "hunt-regression",
];

pub fn criterion_names() -> &'static [&'static str] {
    &NAMES
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteEntry {
    pub id: usize,
    pub name: &'static str,
    pub outcome: Outcome,
    pub certificates: Vec<Value>,
}

impl SuiteEntry {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "outcome": self.outcome.tag(),
            "detail": self.outcome.detail(),
            "certificates": self.certificates,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.outcome.is_pass())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.entries.iter().filter(|e| e.outcome.is_pass()).count(),
            "total": self.entries.len(),
            "criteria": self.entries.iter().map(SuiteEntry::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Every algebra a criterion builds is passed through this before use.
pub type Hook<'a> = &'a (dyn Fn(&str, GradedAlgebra) -> GradedAlgebra + Sync);

struct Run<'a> {
    name: &'static str,
    hook: Hook<'a>,
    certificates: Vec<Value>,
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

impl Run<'_> {
    /// Applies the hook and rejects algebras that fail validation.
    fn take(&self, a: Result<GradedAlgebra, AlgebraError>) -> Result<GradedAlgebra, String> {
        let a = (self.hook)(self.name, a.map_err(err)?);
        let report = a.validate();
        ensure(report.is_ok(), || format!("invalid algebra: {}", report))?;
        Ok(a)
    }

    /// Decides the mode, requires `Yes`, rechecks and records the witness.
    fn expect_yes(&mut self, a: &GradedAlgebra, mode: Mode, what: &str) -> Check {
        let v = symmetry::decide_form_existence(a, mode).map_err(err)?;
        ensure(v.is_yes(), || {
            format!("{}: {} is {:?}", what, mode, v.status)
        })?;
        let w = v.witness.clone().ok_or("missing witness")?;
        let report = symmetry::verify_certificate(a, &w, mode).map_err(err)?;
        ensure(report.passed(), || {
            format!("{}: certificate does not verify", what)
        })?;
        self.certificates.push(json!({ "algebra": what, "certificate": Certificate::from_verdict(a, &v).to_json(a.field()) }));
        Ok(())
    }
}

fn q() -> Field {
    Field::rationals()
}

fn fp(p: u64) -> Result<Field, String> {
    Field::prime(p).map_err(err)
}

fn quaternions(a: i64, b: i64) -> Result<GradedAlgebra, AlgebraError> {
    let q = q();
    quaternion_algebra(&q, &q.from_i64(a), &q.from_i64(b))
}

fn c1(r: &mut Run) -> Check {
    for (a, b) in [(-1, -1), (-1, -3)] {
        let d = r.take(quaternions(a, b).map(|x| x.ungrade()))?;
        let c = invariants::commutator_subspace(&d).dim();
        ensure(c == 3 && d.dim() == 4, || {
            format!("({}, {}): dim [D,D] = {}", a, b, c)
        })?;
        ensure(invariants::center(&d).dim() == 1, || {
            format!("({}, {}): center is not Q", a, b)
        })?;
        let o = replicate_commutator_dim(&d).map_err(err)?;
        ensure(o.is_pass(), || format!("({}, {}): {:?}", a, b, o))?;
    }
    Ok(())
}

fn c2(r: &mut Run) -> Check {
    for (p, n, want) in [(5, 2, 3), (7, 3, 8)] {
        let m = r.take(matrix_algebra(&fp(p)?, n))?;
        let c = invariants::commutator_subspace(&m).dim();
        ensure(c == want, || format!("M_{}(F_{}): dim [M,M] = {}", n, p, c))?;
    }
    Ok(())
}

fn c3(r: &mut Run) -> Check {
    for e in random_corpus(0x5eed, 50) {
        let a = r.take(Ok(e.algebra))?;
        for m in [2, 3] {
            ensure(replicate_scalar_extension(&a, m).map_err(err)?, || {
                format!("{} fails for degree {}", e.name, m)
            })?;
        }
    }
    Ok(())
}

fn c4(r: &mut Run) -> Check {
    let h = r.take(quaternions(-1, -1))?;
    ensure(invariants::is_graded_division(&h).is_yes(), || {
        "quaternions are not graded division".into()
    })?;
    r.expect_yes(&h, Mode::GradedSymmetric, "quaternions(Q,-1,-1)")
}

fn c5(r: &mut Run) -> Check {
    for p in [2, 3, 5] {
        let a = r.take(group_algebra(
            &fp(p)?,
            &GroupTable::cyclic(p as usize).map_err(err)?,
        ))?;
        r.expect_yes(&a, Mode::GradedSymmetric, &format!("F_{}C_{}", p, p))?;
    }
    Ok(())
}

fn c6(r: &mut Run) -> Check {
    for p in [2u64, 3, 5] {
        let a = r.take(cyclic_algebra(p))?;
        let n = p as usize;
        // x^i sits at index i
        let want = Subspace::coordinate(a.field(), n * n, &(0..n - 1).collect::<Vec<_>>());
        let c = invariants::graded_commutator_space(&a);
        ensure(c == want, || {
            format!("cyclic({}): graded commutator space has dim {}", p, c.dim())
        })?;
        r.expect_yes(&a, Mode::GradedSymmetric, &format!("cyclic_algebra({})", p))?;
    }
    Ok(())
}

fn good_cases(field: &Field) -> Result<Vec<(String, GoodGradingSpec)>, String> {
    let c2 = GroupTable::cyclic(2).map_err(err)?;
    let c3 = GroupTable::cyclic(3).map_err(err)?;
    let k4 = GroupTable::product(&[2, 2]).map_err(err)?;
    let s3 = GroupTable::sym3();
    let cases = [
        (&c2, vec![0, 1]),
        (&c2, vec![0, 1, 1]),
        (&c3, vec![0, 1, 2]),
        (&k4, vec![0, 1, 2]),
        (&s3, vec![0, 3]),
        (&s3, vec![1, 2, 5]),
    ];
    Ok(cases
        .into_iter()
        .map(|(g, sigmas)| {
            let name = format!(
                "M_{}({}) {:?} over |G| = {}",
                sigmas.len(),
                field,
                sigmas,
                g.order()
            );
            (
                name,
                GoodGradingSpec {
                    n: sigmas.len(),
                    sigmas,
                    delta: scalars(field, g),
                },
            )
        })
        .collect())
}

fn c7(r: &mut Run) -> Check {
    for field in [fp(2)?, q()] {
        for (name, spec) in good_cases(&field)? {
            let m = r.take(good_matrix_algebra(&spec))?;
            let t = symmetry::matrix_trace_functional(
                &m,
                &spec,
                &LinearFunctional::new(vec![field.one()]),
            )
            .map_err(err)?;
            let report =
                symmetry::verify_certificate(&m, &t, Mode::GradedSymmetric).map_err(err)?;
            ensure(report.passed(), || {
                format!("{}: trace functional does not verify", name)
            })?;
            r.expect_yes(&m, Mode::GradedSymmetric, &name)?;
        }
    }
    Ok(())
}

fn c8(r: &mut Run) -> Check {
    let cases = good_cases(&q())?;
    for (i, (n1, s1)) in cases.iter().enumerate() {
        for (n2, s2) in &cases[i..] {
            if s1.delta.group() != s2.delta.group() {
                continue;
            }
            let a = good_matrix_algebra(s1)
                .and_then(|x| good_matrix_algebra(s2).and_then(|y| direct_product(&x, &y)));
            let a = r.take(a)?;
            r.expect_yes(&a, Mode::GradedSymmetric, &format!("{} x {}", n1, n2))?;
        }
    }
    Ok(())
}

fn c9(r: &mut Run) -> Check {
    for field in [fp(3)?, fp(5)?, q()] {
        let s = sweedler_algebra(&field).map_err(err)?;
        let t = r.take(trivial_extension(&s))?;
        let z = invariants::center(&t);
        ensure(z.dim() == 3, || {
            format!("{}: center has dim {}", field, z.dim())
        })?;
        let d = s.dim();
        let dual = Subspace::coordinate(&field, t.dim(), &(d..2 * d).collect::<Vec<_>>());
        let rad = z.intersect(&dual).map_err(err)?;
        ensure(rad.dim() == 2, || {
            format!("{}: radical part has dim {}", field, rad.dim())
        })?;
        let basis = rad.basis_vectors();
        for u in &basis {
            for v in &basis {
                ensure(t.mul_vec(u, v).iter().all(Scalar::is_zero), || {
                    format!("{}: radical is not square-zero", field)
                })?;
            }
        }
        let za = t.subspace_algebra(&z, false).map_err(err)?;
        let v = symmetry::decide_form_existence(&za, Mode::Frobenius).map_err(err)?;
        ensure(
            v.status == SymmetryStatus::No
                && v.refutation == Some(Refutation::GramDetIdenticallyZero),
            || format!("{}: center is {:?} {:?}", field, v.status, v.refutation),
        )?;
    }
    Ok(())
}

fn c10(r: &mut Run) -> Check {
    let t = r.take(quaternions(-1, -1).and_then(|h| trivial_extension(&h)))?;
    let z = invariants::center(&t);
    ensure(z.dim() == 2, || format!("center has dim {}", z.dim()))?;
    let za = t.subspace_algebra(&z, false).map_err(err)?;
    r.expect_yes(
        &za,
        Mode::Symmetric,
        "center of trivial_extension(quaternions(Q,-1,-1))",
    )
}

fn frob_specs() -> Result<Vec<(String, CrossedProductSpec)>, String> {
    let c2 = GroupTable::cyclic(2).map_err(err)?;
    [3u64, 5]
        .into_iter()
        .map(|p| {
            let big = Field::galois(p, 2).map_err(err)?;
            let spec =
                frobenius_twisted_spec(&big, &c2, &[0, 1], &vec![big.one(); 4]).map_err(err)?;
            Ok((format!("F_{}^Frob[C2]", p * p), spec))
        })
        .collect()
}

fn c11(r: &mut Run) -> Check {
    for (name, spec) in frob_specs()? {
        let a = r.take(crossed_product(&spec))?;
        let o = replicate_center_theorem(&a).map_err(err)?;
        ensure(o.is_pass(), || format!("{}: {:?}", name, o))?;
    }
    Ok(())
}

fn c12(r: &mut Run) -> Check {
    for (name, spec) in frob_specs()? {
        let d = &spec.coefficients;
        let f = d.field();
        let mut mu = vec![f.zero(); d.dim()];
        mu[0] = f.one();
        let mu = LinearFunctional::new(mu);
        let l = symmetry::average_functional(&spec, &mu).map_err(err)?;
        for g in spec.group.elements() {
            let moved: Vec<Scalar> = (0..d.dim())
                .map(|i| l.eval(&spec.apply_sigma(g, &d.basis_element(i).into_coords())))
                .collect();
            ensure(moved == l.coords(), || {
                format!("{}: average is not invariant under {}", name, g)
            })?;
        }
        let order = f.from_i64(spec.group.order() as i64);
        ensure(l.eval(d.unit()) == &order * &mu.eval(d.unit()), || {
            format!("{}: λ(1) != |G|μ(1)", name)
        })?;
        let a = r.take(crossed_product(&spec))?;
        let lifted = symmetry::lift_functional(&spec, &l).map_err(err)?;
        let report =
            symmetry::verify_certificate(&a, &lifted, Mode::GradedSymmetric).map_err(err)?;
        ensure(report.passed(), || {
            format!("{}: lifted functional does not verify", name)
        })?;
        r.certificates.push(json!({ "algebra": name, "algebra_hash": algebra_hash(&a), "lifted": lifted.coords().iter().map(|c| f.scalar_to_json(c)).collect::<Vec<_>>() }));
    }
    Ok(())
}

fn c13(r: &mut Run) -> Check {
    let mut compared = 0;
    for e in constructor_corpus_f2() {
        let a = r.take(Ok(e.algebra))?;
        for mode in Mode::ALL {
            let b = if mode.is_graded() {
                a.clone()
            } else {
                a.ungrade()
            };
            if symmetry::trace_space(&b, mode).dim() > 4 {
                continue;
            }
            let v = symmetry::decide_form_existence(&a, mode).map_err(err)?;
            let brute = exhaustive_form_search(&a, mode, 1 << 16).map_err(err)?;
            ensure(v.is_yes() == brute.is_some(), || {
                format!(
                    "{} in {} mode: decision {:?}, enumeration {}",
                    e.name,
                    mode,
                    v.status,
                    brute.is_some()
                )
            })?;
            compared += 1;
        }
    }
    ensure(compared > 0, || "nothing compared".into())
}

/// Parameters of the reference hunt.
pub fn reference_hunt_params() -> HuntParams {
    HuntParams {
        characteristic: 2,
        ext_degrees: vec![1, 2],
        groups: vec![
            GroupTable::cyclic(2).expect("C2"),
            GroupTable::product(&[2, 2]).expect("C2xC2"),
            GroupTable::cyclic(4).expect("C4"),
        ],
        alpha_bound: None,
        budget: None,
    }
}

fn c14(_: &mut Run) -> Check {
    let r = hunt_counterexample(&reference_hunt_params()).map_err(err)?;
    ensure(r.is_complete(), || "hunt did not finish".into())?;
    ensure(r.non_symmetric_instances.is_empty(), || {
        format!(
            "{} non-symmetric instances",
            r.non_symmetric_instances.len()
        )
    })?;
    ensure(r.criterion_mismatches.is_empty(), || {
        "criterion mismatch".into()
    })?;
    ensure(
        r.rescan_failures.is_empty() && r.division_rescanned == r.division_count,
        || "division rescan failed".into(),
    )?;
    ensure(r.instances_tested == HUNT_REGRESSION_INSTANCES, || {
        format!("instances_tested = {}", r.instances_tested)
    })
}

fn dispatch(id: usize, hook: Hook) -> SuiteEntry {
    let name = NAMES[id - 1];
    let mut run = Run {
        name,
        hook,
        certificates: Vec::new(),
    };
    let f: fn(&mut Run) -> Check = match id {
        1 => c1,
        2 => c2,
        3 => c3,
        4 => c4,
        5 => c5,
        6 => c6,
        7 => c7,
        8 => c8,
        9 => c9,
        10 => c10,
        11 => c11,
        12 => c12,
        13 => c13,
        _ => c14,
    };
    let outcome = match f(&mut run) {
        Ok(()) => Outcome::Pass,
        Err(msg) => Outcome::Fail(msg),
    };
    SuiteEntry {
        id,
        name,
        outcome,
        certificates: run.certificates,
    }
}

fn identity(_: &str, a: GradedAlgebra) -> GradedAlgebra {
    a
}

/// Runs one criterion by name.
pub fn run_criterion(name: &str) -> Option<SuiteEntry> {
    NAMES
        .iter()
        .position(|&n| n == name)
        .map(|i| dispatch(i + 1, &identity))
}

pub fn run_full_suite() -> SuiteReport {
    run_suite_with(&identity)
}

/// As [`run_full_suite`], with every algebra passed through `hook` first
/// (used for fault injection).
pub fn run_suite_with(hook: Hook) -> SuiteReport {
    SuiteReport {
        entries: (1..=NAMES.len()).map(|id| dispatch(id, hook)).collect(),
    }
}
