//! Canonical JSON forms: algebra spec files (raw structure constants or a
//! constructor call), certificates and verdicts.
//!
//! Objects serialize with sorted keys, scalars in the field's canonical form
//! and structure constants sorted by `(i, j, k)`, so equal algebras give
//! byte-identical files.

use std::path::Path;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{self, AlgebraError, CrossedProductSpec, GoodGradingSpec, GradedAlgebra};
use crate::field::{Field, Scalar};
use crate::group::GroupTable;
use crate::invariants::{self, DivisionCertificate, DivisionStatus, DivisionVerdict};
use crate::linalg::Matrix;
use crate::symmetry::{self, LinearFunctional, Mode, Refutation, SymmetryStatus, SymmetryVerdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    #[error("invalid algebra: {0}")]
    Validation(algebra::ValidationReport),
    #[error("construction failed: {0}")]
    Construction(AlgebraError),
    #[error("io error: {0}")]
    Io(String),
}

impl From<AlgebraError> for FormatError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Invalid(r) => FormatError::Validation(r),
            other => FormatError::Construction(other),
        }
    }
}

fn perr(path: &str, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        path: path.to_string(),
        message: message.into(),
    }
}

/// Compact canonical text of a JSON value.
pub fn canonical_string(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values serialize")
}

pub fn parse_json(text: &str) -> Result<Value, FormatError> {
    serde_json::from_str(text).map_err(|e| {
        perr(
            &format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

fn read_json(path: &Path) -> Result<Value, FormatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| FormatError::Io(format!("{}: {}", path.display(), e)))?;
    parse_json(&text)
}

/// The raw block of an algebra.
pub fn algebra_to_json(a: &GradedAlgebra) -> Value {
    let f = a.field();
    let sc: Vec<Value> = a
        .structure_constants()
        .map(|(i, j, k, c)| json!([i, j, k, f.scalar_to_json(c)]))
        .collect();
    json!({
        "field": f.to_json(),
        "group": a.group().to_json(),
        "dim": a.dim(),
        "degrees": a.degrees(),
        "unit": a.unit().iter().map(|c| f.scalar_to_json(c)).collect::<Vec<_>>(),
        "sc": sc,
        "labels": a.labels(),
    })
}

/// Hex SHA-256 of the canonical raw block.
pub fn algebra_hash(a: &GradedAlgebra) -> String {
    hex::encode(Sha256::digest(
        canonical_string(&algebra_to_json(a)).as_bytes(),
    ))
}

pub fn parse_algebra_file(path: &Path) -> Result<GradedAlgebra, FormatError> {
    algebra_from_json(&read_json(path)?)
}

pub fn parse_algebra_str(text: &str) -> Result<GradedAlgebra, FormatError> {
    algebra_from_json(&parse_json(text)?)
}

/// Parses either a raw block or a `{"constructor": name, ...}` block.
pub fn algebra_from_json(v: &Value) -> Result<GradedAlgebra, FormatError> {
    build(v, &Ctx::default(), "$")
}

#[derive(Clone, Default)]
struct Ctx {
    field: Option<Field>,
    group: Option<GroupTable>,
}

struct Obj<'a> {
    map: &'a Map<String, Value>,
    path: String,
    ctx: Ctx,
}

impl<'a> Obj<'a> {
    fn get(&self, key: &str) -> Result<&'a Value, FormatError> {
        self.map
            .get(key)
            .ok_or_else(|| perr(&self.path, format!("missing key {:?}", key)))
    }

    fn at(&self, key: &str) -> String {
        format!("{}.{}", self.path, key)
    }

    fn uint(&self, key: &str) -> Result<usize, FormatError> {
        self.get(key)?
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| perr(&self.at(key), "expected a nonnegative integer"))
    }

    fn uints(&self, key: &str) -> Result<Vec<usize>, FormatError> {
        let arr = self
            .get(key)?
            .as_array()
            .ok_or_else(|| perr(&self.at(key), "expected an array"))?;
        arr.iter()
            .enumerate()
            .map(|(i, x)| {
                x.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| perr(&format!("{}[{}]", self.at(key), i), "expected an integer"))
            })
            .collect()
    }

    fn field(&self) -> Result<Field, FormatError> {
        match self.map.get("field") {
            Some(v) => Field::from_json(v).map_err(|e| perr(&self.at("field"), e.to_string())),
            None => self
                .ctx
                .field
                .clone()
                .ok_or_else(|| perr(&self.path, "missing key \"field\"")),
        }
    }

    fn group(&self) -> Result<GroupTable, FormatError> {
        match self.map.get("group") {
            Some(v) => GroupTable::from_json(v).map_err(|e| perr(&self.at("group"), e.to_string())),
            None => self
                .ctx
                .group
                .clone()
                .ok_or_else(|| perr(&self.path, "missing key \"group\"")),
        }
    }

    fn scalar(&self, field: &Field, v: &Value, path: &str) -> Result<Scalar, FormatError> {
        field
            .scalar_from_json(v)
            .map_err(|e| perr(path, e.to_string()))
    }

    fn scalars(&self, field: &Field, v: &Value, path: &str) -> Result<Vec<Scalar>, FormatError> {
        let arr = v
            .as_array()
            .ok_or_else(|| perr(path, "expected an array"))?;
        arr.iter()
            .enumerate()
            .map(|(i, x)| self.scalar(field, x, &format!("{}[{}]", path, i)))
            .collect()
    }

    fn nested(&self, key: &str) -> Result<GradedAlgebra, FormatError> {
        build(self.get(key)?, &self.inner_ctx(), &self.at(key))
    }

    fn inner_ctx(&self) -> Ctx {
        Ctx {
            field: self.field().ok().or_else(|| self.ctx.field.clone()),
            group: self.group().ok().or_else(|| self.ctx.group.clone()),
        }
    }
}

fn build(v: &Value, ctx: &Ctx, path: &str) -> Result<GradedAlgebra, FormatError> {
    let map = v
        .as_object()
        .ok_or_else(|| perr(path, "expected an object"))?;
    let o = Obj {
        map,
        path: path.to_string(),
        ctx: ctx.clone(),
    };
    match map.get("constructor") {
        None => build_raw(&o),
        Some(Value::String(name)) => build_constructor(&o, name),
        Some(_) => Err(perr(&o.at("constructor"), "expected a string")),
    }
}

fn build_raw(o: &Obj) -> Result<GradedAlgebra, FormatError> {
    let field = o.field()?;
    let group = o.group()?;
    let dim = o.uint("dim")?;
    let degrees = o.uints("degrees")?;
    if degrees.len() != dim {
        return Err(perr(
            &o.at("degrees"),
            format!("{} degrees for dim {}", degrees.len(), dim),
        ));
    }
    let unit = o.scalars(&field, o.get("unit")?, &o.at("unit"))?;
    let sc = o
        .get("sc")?
        .as_array()
        .ok_or_else(|| perr(&o.at("sc"), "expected an array"))?;
    let mut products = Vec::with_capacity(sc.len());
    for (n, entry) in sc.iter().enumerate() {
        let p = format!("{}[{}]", o.at("sc"), n);
        let e = entry
            .as_array()
            .filter(|e| e.len() == 4)
            .ok_or_else(|| perr(&p, "expected [i, j, k, c]"))?;
        let idx = |x: &Value| {
            x.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| perr(&p, "index must be an integer"))
        };
        let (i, j, k) = (idx(&e[0])?, idx(&e[1])?, idx(&e[2])?);
        products.push((i, j, k, o.scalar(&field, &e[3], &p)?));
    }
    let labels = match o.map.get("labels") {
        None | Some(Value::Null) => None,
        Some(Value::Array(ls)) => Some(
            ls.iter()
                .map(|l| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| perr(&o.at("labels"), "expected strings"))
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
        Some(_) => return Err(perr(&o.at("labels"), "expected an array")),
    };
    Ok(GradedAlgebra::new(
        &field, &group, degrees, products, unit, labels,
    )?)
}

/// Names accepted in constructor blocks.
pub const CONSTRUCTORS: &[&str] = &[
    "group_algebra",
    "scalars",
    "cyclic_algebra",
    "quaternion_algebra",
    "sweedler_algebra",
    "matrix_algebra",
    "extension_field_algebra",
    "good_matrix_algebra",
    "crossed_product",
    "frobenius_crossed_product",
    "trivial_extension",
    "direct_product",
    "tensor_product",
    "scalar_extension",
    "ungrade",
    "center",
];

fn build_constructor(o: &Obj, name: &str) -> Result<GradedAlgebra, FormatError> {
    let a = match name {
        "group_algebra" => algebra::group_algebra(&o.field()?, &o.group()?)?,
        "scalars" => algebra::scalars(&o.field()?, &o.group()?),
        "cyclic_algebra" => algebra::cyclic_algebra(o.uint("p")? as u64)?,
        "quaternion_algebra" => {
            let f = o.field()?;
            let a = o.scalar(&f, o.get("a")?, &o.at("a"))?;
            let b = o.scalar(&f, o.get("b")?, &o.at("b"))?;
            algebra::quaternion_algebra(&f, &a, &b)?
        }
        "sweedler_algebra" => algebra::sweedler_algebra(&o.field()?)?,
        "matrix_algebra" => algebra::matrix_algebra(&o.field()?, o.uint("n")?)?,
        "extension_field_algebra" => algebra::extension_field_algebra(&o.field()?)?,
        "good_matrix_algebra" => {
            let delta = o.nested("delta")?;
            algebra::good_matrix_algebra(&GoodGradingSpec {
                n: o.uint("n")?,
                sigmas: o.uints("sigmas")?,
                delta,
            })?
        }
        "crossed_product" => algebra::crossed_product(&crossed_spec_from_json(o)?)?,
        "frobenius_crossed_product" => {
            let big = o.field()?;
            let alpha = o.scalars(&big, o.get("alpha")?, &o.at("alpha"))?;
            let spec =
                algebra::frobenius_twisted_spec(&big, &o.group()?, &o.uints("powers")?, &alpha)?;
            algebra::crossed_product(&spec)?
        }
        "trivial_extension" => algebra::trivial_extension(&o.nested("of")?)?,
        "direct_product" => algebra::direct_product(&o.nested("left")?, &o.nested("right")?)?,
        "tensor_product" => algebra::tensor_product(&o.nested("left")?, &o.nested("right")?)?,
        "scalar_extension" => algebra::scalar_extension(&o.nested("of")?, o.uint("m")?)?,
        "ungrade" => o.nested("of")?.ungrade(),
        "center" => {
            let a = o.nested("of")?;
            a.subspace_algebra(&invariants::center(&a), false)?
        }
        other => {
            return Err(perr(
                &o.at("constructor"),
                format!("unknown constructor {:?}", other),
            ))
        }
    };
    Ok(a)
}

fn crossed_spec_from_json(o: &Obj) -> Result<CrossedProductSpec, FormatError> {
    let d = o.nested("coefficients")?;
    let group = o.group()?;
    let f = d.field().clone();
    let sig = o
        .get("sigma")?
        .as_array()
        .ok_or_else(|| perr(&o.at("sigma"), "expected an array"))?;
    let sigma = sig
        .iter()
        .enumerate()
        .map(|(g, m)| {
            let p = format!("{}[{}]", o.at("sigma"), g);
            let rows = m.as_array().ok_or_else(|| perr(&p, "expected rows"))?;
            let rows = rows
                .iter()
                .enumerate()
                .map(|(i, r)| o.scalars(&f, r, &format!("{}[{}]", p, i)))
                .collect::<Result<Vec<_>, _>>()?;
            if rows.iter().any(|r| r.len() != d.dim()) {
                return Err(perr(&p, "rows must have length dim D"));
            }
            Ok(Matrix::from_rows(&f, d.dim(), rows))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let al = o
        .get("alpha")?
        .as_array()
        .ok_or_else(|| perr(&o.at("alpha"), "expected an array"))?;
    let alpha = al
        .iter()
        .enumerate()
        .map(|(n, x)| o.scalars(&f, x, &format!("{}[{}]", o.at("alpha"), n)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CrossedProductSpec {
        coefficients: d,
        group,
        sigma,
        alpha,
    })
}

/// Constructor block for crossed-product data, nesting the raw block of `D`.
pub fn crossed_spec_to_json(spec: &CrossedProductSpec) -> Value {
    let f = spec.coefficients.field();
    let sc = |v: &[Scalar]| v.iter().map(|c| f.scalar_to_json(c)).collect::<Vec<_>>();
    json!({
        "constructor": "crossed_product",
        "coefficients": algebra_to_json(&spec.coefficients),
        "group": spec.group.to_json(),
        "sigma": spec.sigma.iter().map(|m| m.row_iter().map(sc).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "alpha": spec.alpha.iter().map(|a| sc(a)).collect::<Vec<_>>(),
    })
}

fn status_name(s: SymmetryStatus) -> &'static str {
    match s {
        SymmetryStatus::Yes => "yes",
        SymmetryStatus::No => "no",
        SymmetryStatus::NoOverBaseField => "no-over-base-field",
    }
}

/// Certificate file contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub algebra_hash: String,
    pub mode: Mode,
    pub status: SymmetryStatus,
    pub witness: Option<Vec<Scalar>>,
    pub refutation: Option<Refutation>,
    pub gram_rank: Option<usize>,
}

impl Certificate {
    pub fn from_verdict(a: &GradedAlgebra, v: &SymmetryVerdict) -> Certificate {
        Certificate {
            algebra_hash: algebra_hash(a),
            mode: v.mode,
            status: v.status,
            witness: v.witness.as_ref().map(|w| w.coords().to_vec()),
            refutation: v.refutation,
            gram_rank: v.gram_rank,
        }
    }

    pub fn to_json(&self, field: &Field) -> Value {
        let ext = match self.refutation {
            Some(Refutation::NoPointOverField(d)) => json!(d),
            _ => Value::Null,
        };
        json!({
            "algebra_hash": self.algebra_hash,
            "mode": self.mode.name(),
            "status": status_name(self.status),
            "witness": self.witness.as_ref().map(|w| w.iter().map(|c| field.scalar_to_json(c)).collect::<Vec<_>>()),
            "refutation": self.refutation.map(Refutation::tag),
            "extension_degree": ext,
            "gram_rank": self.gram_rank,
        })
    }

    pub fn from_json(field: &Field, v: &Value) -> Result<Certificate, FormatError> {
        let str_at = |k: &str| {
            v.get(k)
                .and_then(Value::as_str)
                .ok_or_else(|| perr(&format!("$.{}", k), "expected a string"))
        };
        let mode = Mode::parse(str_at("mode")?).ok_or_else(|| perr("$.mode", "unknown mode"))?;
        let status = match str_at("status")? {
            "yes" => SymmetryStatus::Yes,
            "no" => SymmetryStatus::No,
            "no-over-base-field" => SymmetryStatus::NoOverBaseField,
            s => return Err(perr("$.status", format!("unknown status {:?}", s))),
        };
        let witness = match v.get("witness") {
            None | Some(Value::Null) => None,
            Some(Value::Array(cs)) => Some(
                cs.iter()
                    .enumerate()
                    .map(|(i, c)| {
                        field
                            .scalar_from_json(c)
                            .map_err(|e| perr(&format!("$.witness[{}]", i), e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            Some(_) => return Err(perr("$.witness", "expected an array or null")),
        };
        let refutation = match v.get("refutation").and_then(Value::as_str) {
            None => None,
            Some("trace-space-zero") => Some(Refutation::TraceSpaceZero),
            Some("gram-det-identically-zero") => Some(Refutation::GramDetIdenticallyZero),
            Some("no-point-over-field") => Some(Refutation::NoPointOverField(
                v.get("extension_degree")
                    .and_then(Value::as_u64)
                    .map(|d| d as usize),
            )),
            Some(s) => return Err(perr("$.refutation", format!("unknown refutation {:?}", s))),
        };
        Ok(Certificate {
            algebra_hash: str_at("algebra_hash")?.to_string(),
            mode,
            status,
            witness,
            refutation,
            gram_rank: v
                .get("gram_rank")
                .and_then(Value::as_u64)
                .map(|r| r as usize),
        })
    }
}

/// Result of checking a certificate against an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub hash_matches: bool,
    pub passed: bool,
    pub detail: String,
}

/// `yes` certificates are rechecked with [`symmetry::verify_certificate`];
/// refutations are rechecked by running the decision again.
pub fn check_certificate(
    a: &GradedAlgebra,
    cert: &Certificate,
) -> Result<CertificateCheck, FormatError> {
    let hash_matches = algebra_hash(a) == cert.algebra_hash;
    if !hash_matches {
        return Ok(CertificateCheck {
            hash_matches,
            passed: false,
            detail: "algebra hash differs".into(),
        });
    }
    match cert.status {
        SymmetryStatus::Yes => {
            let Some(w) = &cert.witness else {
                return Ok(CertificateCheck {
                    hash_matches,
                    passed: false,
                    detail: "yes without witness".into(),
                });
            };
            let report =
                symmetry::verify_certificate(a, &LinearFunctional::new(w.clone()), cert.mode)
                    .map_err(|e| perr("$.witness", e.to_string()))?;
            let rank_ok = cert.gram_rank == Some(report.gram_rank);
            Ok(CertificateCheck {
                hash_matches,
                passed: report.passed() && rank_ok,
                detail: format!(
                    "gram rank {} of {}, {} off-degree, {} asymmetric pairs",
                    report.gram_rank,
                    report.dim,
                    report.off_degree.len(),
                    report.asymmetric_pairs.len()
                ),
            })
        }
        _ => {
            let v = symmetry::decide_form_existence(a, cert.mode)
                .map_err(|e| perr("$", e.to_string()))?;
            let passed = v.status == cert.status && v.refutation == cert.refutation;
            Ok(CertificateCheck {
                hash_matches,
                passed,
                detail: format!("recomputed status {}", status_name(v.status)),
            })
        }
    }
}

pub fn verdict_to_json(a: &GradedAlgebra, v: &SymmetryVerdict) -> Value {
    let f = a.field();
    json!({
        "mode": v.mode.name(),
        "status": status_name(v.status),
        "witness": v.witness.as_ref().map(|w| w.coords().iter().map(|c| f.scalar_to_json(c)).collect::<Vec<_>>()),
        "refutation": v.refutation.map(Refutation::tag),
        "extension_degree": match v.refutation { Some(Refutation::NoPointOverField(d)) => json!(d), _ => Value::Null },
        "gram_rank": v.gram_rank,
        "trace_space_dim": v.trace_space_dim,
        "determinant": v.determinant.as_ref().map(|d| d.to_string()),
        "division_criterion": v.division_criterion,
    })
}

pub fn division_to_json(a: &GradedAlgebra, v: &DivisionVerdict) -> Value {
    let f = a.field();
    let coords = |x: &algebra::Element| {
        x.coords()
            .iter()
            .map(|c| f.scalar_to_json(c))
            .collect::<Vec<_>>()
    };
    let certificate = v.certificate.as_ref().map(|c| match c {
        DivisionCertificate::Scalars => json!({ "kind": "scalars" }),
        DivisionCertificate::Exhaustive { scanned } => {
            json!({ "kind": "exhaustive", "scanned": scanned })
        }
        DivisionCertificate::QuaternionNormForm { a, b } => {
            json!({ "kind": "quaternion-norm-form", "a": a.to_string(), "b": b.to_string() })
        }
        DivisionCertificate::IrreducibleMinimalPolynomial { coefficients } => json!({
            "kind": "irreducible-minimal-polynomial",
            "coefficients": coefficients.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    });
    json!({
        "status": match v.status { DivisionStatus::Yes => "yes", DivisionStatus::No => "no", DivisionStatus::Unknown => "unknown" },
        "certificate": certificate,
        "witness": v.witness.as_ref().map(coords),
        "units": v.units.iter().map(coords).collect::<Vec<_>>(),
        "reason": v.reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::*;

    fn samples() -> Vec<GradedAlgebra> {
        let q = Field::rationals();
        let f3 = Field::prime(3).unwrap();
        let f4 = Field::galois(2, 2).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        vec![
            group_algebra(&f3, &c2).unwrap(),
            cyclic_algebra(3).unwrap(),
            quaternion_algebra(&q, &q.from_i64(-1), &q.from_i64(-3)).unwrap(),
            trivial_extension(&sweedler_algebra(&q).unwrap()).unwrap(),
            scalar_extension(&matrix_algebra(&Field::prime(2).unwrap(), 2).unwrap(), 2).unwrap(),
            group_algebra(&f4, &GroupTable::sym3()).unwrap(),
            group_algebra(
                &f3,
                &GroupTable::from_table(vec![vec![0, 1], vec![1, 0]], None).unwrap(),
            )
            .unwrap(),
        ]
    }

    #[test]
    fn raw_round_trip_is_exact() {
        for a in samples() {
            let text = canonical_string(&algebra_to_json(&a));
            let b = parse_algebra_str(&text).unwrap();
            assert_eq!(a, b);
            assert_eq!(canonical_string(&algebra_to_json(&b)), text);
        }
    }

    #[test]
    fn constructor_blocks() {
        let a = parse_algebra_str(r#"{"constructor":"cyclic_algebra","p":3}"#).unwrap();
        assert_eq!(a.dim(), 9);
        let b = parse_algebra_str(
            r#"{"constructor":"trivial_extension","field":{"char":3},"of":{"constructor":"sweedler_algebra"}}"#,
        )
        .unwrap();
        assert_eq!(b.dim(), 8);
        let raw = r#"{"field":{"char":2,"degree":1},"group":{"kind":"cyclic","n":2},"dim":2,"degrees":[0,1],
            "unit":[1,0],"sc":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]]}"#;
        assert_eq!(parse_algebra_str(raw).unwrap().dim(), 2);
    }

    #[test]
    fn grading_violation_is_a_validation_error() {
        let raw = r#"{"field":{"char":2},"group":{"kind":"cyclic","n":2},"dim":2,"degrees":[0,1],
            "unit":[1,0],"sc":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,1,1]]}"#;
        match parse_algebra_str(raw) {
            Err(FormatError::Validation(r)) => assert_eq!(r.grading, vec![(1, 1, 1)]),
            other => panic!("{:?}", other),
        }
        assert!(matches!(
            parse_algebra_str("{\"dim\": }"),
            Err(FormatError::Parse { .. })
        ));
        match parse_algebra_str(r#"{"constructor":"cyclic_algebra"}"#) {
            Err(FormatError::Parse { path, .. }) => assert_eq!(path, "$"),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn certificate_round_trip() {
        let f3 = Field::prime(3).unwrap();
        let a = group_algebra(&f3, &GroupTable::cyclic(2).unwrap()).unwrap();
        let v = symmetry::decide_form_existence(&a, Mode::GradedSymmetric).unwrap();
        let cert = Certificate::from_verdict(&a, &v);
        let back = Certificate::from_json(&f3, &cert.to_json(&f3)).unwrap();
        assert_eq!(back, cert);
        let check = check_certificate(&a, &back).unwrap();
        assert!(check.passed && check.hash_matches);
        let other = group_algebra(&f3, &GroupTable::cyclic(3).unwrap()).unwrap();
        assert!(!check_certificate(&other, &back).unwrap().hash_matches);
    }

    #[test]
    fn crossed_spec_round_trip() {
        let spec = cyclic_algebra_spec(2).unwrap();
        let a = algebra_from_json(&crossed_spec_to_json(&spec)).unwrap();
        assert_eq!(a, crossed_product(&spec).unwrap());
    }
}
