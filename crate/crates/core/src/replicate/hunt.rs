//! Exhaustive search over crossed products `K^σ_α[G]` with `σ` a Frobenius
//! power and `α` a normalized cocycle with values in a subset of `K^*`.

use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::exhaustive_homogeneous_scan;
use crate::algebra::{
    crossed_product, field_coords, frobenius_twisted_spec, AlgebraError, CrossedProductSpec,
};
use crate::field::{Field, Scalar};
use crate::format::{self, canonical_string, FormatError};
use crate::group::GroupTable;
use crate::invariants::{is_graded_division, DivisionStatus};
use crate::symmetry::{decide_form_existence, Mode, Refutation, SymmetryError, SymmetryStatus};

const CHUNK: u64 = 4096;
const SCAN_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HuntError {
    #[error("invalid hunt parameters: {0}")]
    Params(String),
    #[error("bad checkpoint: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Format(#[from] FormatError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntParams {
    pub characteristic: u64,
    /// Degrees `m` of the coefficient fields `K = F_{p^m}`.
    pub ext_degrees: Vec<usize>,
    pub groups: Vec<GroupTable>,
    /// `α` takes values among the first `alpha_bound` units of `K` in
    /// enumeration order; `None` allows all of `K^*`.
    pub alpha_bound: Option<usize>,
    /// Most candidates examined by one run; `None` for no limit.
    pub budget: Option<u64>,
}

impl HuntParams {
    pub fn to_json(&self) -> Value {
        json!({
            "characteristic": self.characteristic,
            "ext_degrees": self.ext_degrees,
            "groups": self.groups.iter().map(GroupTable::to_json).collect::<Vec<_>>(),
            "alpha_bound": self.alpha_bound,
            "budget": self.budget,
        })
    }

    pub fn from_json(v: &Value) -> Result<HuntParams, HuntError> {
        let bad = |k: &str| HuntError::Checkpoint(format!("parameter {:?} is malformed", k));
        let characteristic = v
            .get("characteristic")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("characteristic"))?;
        let ext_degrees = v
            .get("ext_degrees")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("ext_degrees"))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| bad("ext_degrees"))
            })
            .collect::<Result<_, _>>()?;
        let groups = v
            .get("groups")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("groups"))?
            .iter()
            .map(|g| GroupTable::from_json(g).map_err(|_| bad("groups")))
            .collect::<Result<_, _>>()?;
        let opt = |k: &str| match v.get(k) {
            None | Some(Value::Null) => Ok(None),
            Some(x) => x.as_u64().map(Some).ok_or_else(|| bad(k)),
        };
        Ok(HuntParams {
            characteristic,
            ext_degrees,
            groups,
            alpha_bound: opt("alpha_bound")?.map(|x| x as usize),
            budget: opt("budget")?,
        })
    }
}

/// Groups of order `2..=max_order`: cyclic groups, then `C2×C2`, `S3`,
/// `C2×C4`, `C2×C2×C2` and `D4`, sorted by order.
pub fn group_catalogue(max_order: usize) -> Vec<GroupTable> {
    let mut gs: Vec<GroupTable> = (2..=max_order)
        .filter_map(|n| GroupTable::cyclic(n).ok())
        .collect();
    let extra = [
        GroupTable::product(&[2, 2]).ok(),
        Some(GroupTable::sym3()),
        GroupTable::product(&[2, 4]).ok(),
        GroupTable::product(&[2, 2, 2]).ok(),
        GroupTable::dihedral(4).ok(),
    ];
    gs.extend(
        extra
            .into_iter()
            .flatten()
            .filter(|g| g.order() <= max_order),
    );
    gs.sort_by_key(GroupTable::order);
    gs
}

/// One `(K, G, σ)` slice of the candidate space.
struct Block {
    big: Field,
    powers: Vec<usize>,
    alphabet: Vec<Scalar>,
    /// Positions `(g, h)` with `g, h != e`; the rest of `α` is 1.
    free: Vec<(usize, usize)>,
    count: u128,
    base: CrossedProductSpec,
}

struct Space {
    blocks: Vec<Block>,
    /// `starts[b]` is the global index of the first candidate of block `b`.
    starts: Vec<u128>,
    total: u128,
}

impl Space {
    fn new(params: &HuntParams) -> Result<Space, HuntError> {
        let p = params.characteristic;
        if ![2, 3, 5].contains(&p) {
            return Err(HuntError::Params(format!(
                "characteristic {} not in {{2, 3, 5}}",
                p
            )));
        }
        if params.ext_degrees.iter().any(|&m| m == 0 || m > 3) {
            return Err(HuntError::Params(
                "coefficient field degrees must lie in 1..=3".into(),
            ));
        }
        if params.groups.iter().any(|g| g.order() > 8) {
            return Err(HuntError::Params("groups must have order at most 8".into()));
        }
        if params.alpha_bound == Some(0) {
            return Err(HuntError::Params("alpha_bound must be positive".into()));
        }
        let mut blocks = Vec::new();
        for &m in &params.ext_degrees {
            let big = Field::galois(p, m).map_err(|e| HuntError::Params(e.to_string()))?;
            let alphabet: Vec<Scalar> = big
                .elements()
                .skip(1)
                .take(params.alpha_bound.unwrap_or(usize::MAX))
                .collect();
            for g in &params.groups {
                let n = g.order();
                if (m * n) as u64 % p != 0 {
                    continue;
                }
                let e = g.identity();
                let free: Vec<(usize, usize)> = g
                    .elements()
                    .filter(|&x| x != e)
                    .flat_map(|x| g.elements().filter(move |&y| y != e).map(move |y| (x, y)))
                    .collect();
                let count = (0..free.len())
                    .try_fold(1u128, |acc, _| acc.checked_mul(alphabet.len() as u128))
                    .unwrap_or(u128::MAX);
                for powers in g.homomorphisms_to_cyclic(m) {
                    let base = frobenius_twisted_spec(&big, g, &powers, &vec![big.one(); n * n])?;
                    blocks.push(Block {
                        big: big.clone(),
                        powers,
                        alphabet: alphabet.clone(),
                        free: free.clone(),
                        count,
                        base,
                    });
                }
            }
        }
        let mut starts = Vec::with_capacity(blocks.len());
        let mut total: u128 = 0;
        for b in &blocks {
            starts.push(total);
            total = total.saturating_add(b.count);
        }
        Ok(Space {
            blocks,
            starts,
            total,
        })
    }

    fn locate(&self, index: u128) -> (&Block, u128) {
        let b = self.starts.partition_point(|&s| s <= index) - 1;
        (&self.blocks[b], index - self.starts[b])
    }
}

impl Block {
    fn alpha(&self, mut local: u128) -> Vec<Scalar> {
        let n = self.base.group.order();
        let mut alpha = vec![self.big.one(); n * n];
        let q = self.alphabet.len() as u128;
        for &(x, y) in &self.free {
            alpha[x * n + y] = self.alphabet[(local % q) as usize].clone();
            local /= q;
        }
        alpha
    }

    /// `α(g, h) α(gh, k) = σ(g)(α(h, k)) α(g, hk)` for scalar `α`.
    fn is_cocycle(&self, alpha: &[Scalar]) -> bool {
        let g = &self.base.group;
        let n = g.order();
        let frob = |x: &Scalar, j: usize| {
            (0..j).fold(x.clone(), |y, _| y.frobenius().expect("finite field"))
        };
        g.elements().all(|x| {
            g.elements().all(|y| {
                g.elements().all(|z| {
                    let lhs = &alpha[x * n + y] * &alpha[g.mul(x, y) * n + z];
                    let rhs =
                        &frob(&alpha[y * n + z], self.powers[x]) * &alpha[x * n + g.mul(y, z)];
                    lhs == rhs
                })
            })
        })
    }

    fn spec_json(&self, alpha: &[Scalar]) -> Value {
        json!({
            "constructor": "frobenius_crossed_product",
            "field": self.big.to_json(),
            "group": self.base.group.to_json(),
            "powers": self.powers,
            "alpha": alpha.iter().map(|a| self.big.scalar_to_json(a)).collect::<Vec<_>>(),
        })
    }
}

enum Found {
    Incompatible,
    NotDivision,
    DivisionUnknown,
    Division {
        rescan: Option<bool>,
        status: SymmetryStatus,
        refutation: Option<Refutation>,
        mismatch: bool,
        spec: Value,
    },
}

fn examine(block: &Block, local: u128) -> Result<Found, HuntError> {
    let alpha = block.alpha(local);
    if !block.is_cocycle(&alpha) {
        return Ok(Found::Incompatible);
    }
    let k = block.big.prime_field();
    let spec = CrossedProductSpec {
        alpha: alpha.iter().map(|x| field_coords(x, &k)).collect(),
        ..block.base.clone()
    };
    let a = match crossed_product(&spec) {
        Ok(a) => a,
        Err(AlgebraError::IncompatibleCocycleData(_)) => return Ok(Found::Incompatible),
        Err(e) => return Err(e.into()),
    };
    let dv = is_graded_division(&a);
    match dv.status {
        DivisionStatus::No => return Ok(Found::NotDivision),
        DivisionStatus::Unknown => return Ok(Found::DivisionUnknown),
        DivisionStatus::Yes => {}
    }
    let v = decide_form_existence(&a, Mode::GradedSymmetric)?;
    let has_form = matches!(
        v.status,
        SymmetryStatus::Yes | SymmetryStatus::NoOverBaseField
    );
    Ok(Found::Division {
        rescan: exhaustive_homogeneous_scan(&a, SCAN_LIMIT),
        status: v.status,
        refutation: v.refutation,
        mismatch: v.division_criterion.is_some_and(|c| c != has_form),
        spec: block.spec_json(&alpha),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntReport {
    pub params: HuntParams,
    pub total_candidates: u128,
    /// Index of the first candidate not yet examined.
    pub next_index: u128,
    pub candidates_examined: u64,
    /// Candidates whose `α` is not a cocycle for `σ`.
    pub incompatible: u64,
    /// Crossed products actually built and tested.
    pub instances_tested: u64,
    pub not_division: u64,
    pub division_unknown: u64,
    pub division_count: u64,
    /// Division instances confirmed by scanning every homogeneous element.
    pub division_rescanned: u64,
    pub rescan_failures: Vec<Value>,
    pub symmetric: u64,
    /// Symmetric instances with `p | dim A`, outside the proven hypothesis.
    pub beyond_hypothesis: u64,
    pub non_symmetric_instances: Vec<Value>,
    pub no_base_field_point_instances: Vec<Value>,
    /// Instances where the commutator criterion and the pencil test disagree.
    pub criterion_mismatches: Vec<Value>,
    pub budget_exhausted: bool,
}

impl HuntReport {
    fn empty(params: &HuntParams, total: u128) -> HuntReport {
        HuntReport {
            params: params.clone(),
            total_candidates: total,
            next_index: 0,
            candidates_examined: 0,
            incompatible: 0,
            instances_tested: 0,
            not_division: 0,
            division_unknown: 0,
            division_count: 0,
            division_rescanned: 0,
            rescan_failures: vec![],
            symmetric: 0,
            beyond_hypothesis: 0,
            non_symmetric_instances: vec![],
            no_base_field_point_instances: vec![],
            criterion_mismatches: vec![],
            budget_exhausted: false,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.next_index >= self.total_candidates
    }

    fn absorb(&mut self, index: u128, found: Found) {
        self.candidates_examined += 1;
        self.next_index = index + 1;
        let Found::Division {
            rescan,
            status,
            refutation,
            mismatch,
            spec,
        } = found
        else {
            match found {
                Found::Incompatible => self.incompatible += 1,
                Found::NotDivision => {
                    self.instances_tested += 1;
                    self.not_division += 1;
                }
                _ => {
                    self.instances_tested += 1;
                    self.division_unknown += 1;
                }
            }
            return;
        };
        self.instances_tested += 1;
        self.division_count += 1;
        let entry = json!({
            "index": index.to_string(),
            "spec": spec,
            "status": match status {
                SymmetryStatus::Yes => "yes",
                SymmetryStatus::No => "no",
                SymmetryStatus::NoOverBaseField => "no-over-base-field",
            },
            "refutation": refutation.map(Refutation::tag),
        });
        match rescan {
            Some(true) => self.division_rescanned += 1,
            Some(false) => self.rescan_failures.push(entry.clone()),
            None => {}
        }
        match status {
            SymmetryStatus::Yes => {
                self.symmetric += 1;
                self.beyond_hypothesis += 1;
            }
            SymmetryStatus::No => self.non_symmetric_instances.push(entry.clone()),
            SymmetryStatus::NoOverBaseField => {
                self.no_base_field_point_instances.push(entry.clone())
            }
        }
        if mismatch {
            self.criterion_mismatches.push(entry);
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "parameters": self.params.to_json(),
            "total_candidates": self.total_candidates.to_string(),
            "next_index": self.next_index.to_string(),
            "candidates_examined": self.candidates_examined,
            "incompatible": self.incompatible,
            "instances_tested": self.instances_tested,
            "not_division": self.not_division,
            "division_unknown": self.division_unknown,
            "division_count": self.division_count,
            "division_rescanned": self.division_rescanned,
            "rescan_failures": self.rescan_failures,
            "symmetric": self.symmetric,
            "beyond_hypothesis": self.beyond_hypothesis,
            "non_symmetric_instances": self.non_symmetric_instances,
            "no_base_field_point_instances": self.no_base_field_point_instances,
            "criterion_mismatches": self.criterion_mismatches,
            "budget_exhausted": self.budget_exhausted,
            "complete": self.is_complete(),
        })
    }

    pub fn from_json(v: &Value) -> Result<HuntReport, HuntError> {
        let bad = |k: &str| HuntError::Checkpoint(format!("report field {:?} is malformed", k));
        let num = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(|| bad(k));
        let big = |k: &str| {
            v.get(k)
                .and_then(Value::as_str)
                .and_then(|s| s.parse::<u128>().ok())
                .ok_or_else(|| bad(k))
        };
        let list = |k: &str| {
            v.get(k)
                .and_then(Value::as_array)
                .cloned()
                .ok_or_else(|| bad(k))
        };
        Ok(HuntReport {
            params: HuntParams::from_json(v.get("parameters").ok_or_else(|| bad("parameters"))?)?,
            total_candidates: big("total_candidates")?,
            next_index: big("next_index")?,
            candidates_examined: num("candidates_examined")?,
            incompatible: num("incompatible")?,
            instances_tested: num("instances_tested")?,
            not_division: num("not_division")?,
            division_unknown: num("division_unknown")?,
            division_count: num("division_count")?,
            division_rescanned: num("division_rescanned")?,
            rescan_failures: list("rescan_failures")?,
            symmetric: num("symmetric")?,
            beyond_hypothesis: num("beyond_hypothesis")?,
            non_symmetric_instances: list("non_symmetric_instances")?,
            no_base_field_point_instances: list("no_base_field_point_instances")?,
            criterion_mismatches: list("criterion_mismatches")?,
            budget_exhausted: v
                .get("budget_exhausted")
                .and_then(Value::as_bool)
                .ok_or_else(|| bad("budget_exhausted"))?,
        })
    }
}

/// A report in progress plus the SHA-256 of its canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub report: HuntReport,
}

impl Checkpoint {
    pub fn to_json(&self) -> Value {
        let r = self.report.to_json();
        let hash = hex::encode(Sha256::digest(canonical_string(&r).as_bytes()));
        json!({ "report": r, "sha256": hash })
    }

    pub fn from_json(v: &Value) -> Result<Checkpoint, HuntError> {
        let r = v
            .get("report")
            .ok_or_else(|| HuntError::Checkpoint("missing report".into()))?;
        let stored = v
            .get("sha256")
            .and_then(Value::as_str)
            .ok_or_else(|| HuntError::Checkpoint("missing sha256".into()))?;
        let actual = hex::encode(Sha256::digest(canonical_string(r).as_bytes()));
        if stored != actual {
            return Err(HuntError::Checkpoint(format!(
                "hash mismatch: stored {}, computed {}",
                stored, actual
            )));
        }
        Ok(Checkpoint {
            report: HuntReport::from_json(r)?,
        })
    }
}

fn run(
    space: &Space,
    mut report: HuntReport,
    budget: Option<u64>,
) -> Result<HuntReport, HuntError> {
    let stop = match budget {
        Some(b) => space.total.min(report.next_index.saturating_add(b as u128)),
        None => space.total,
    };
    let mut start = report.next_index;
    while start < stop {
        let len = (stop - start).min(CHUNK as u128) as u64;
        let results: Vec<Result<Found, HuntError>> = (0..len)
            .into_par_iter()
            .map(|o| {
                let (block, local) = space.locate(start + o as u128);
                examine(block, local)
            })
            .collect();
        for (o, r) in results.into_iter().enumerate() {
            report.absorb(start + o as u128, r?);
        }
        start += len as u128;
    }
    report.budget_exhausted = !report.is_complete();
    Ok(report)
}

/// Runs the hunt from the first candidate. Candidates are processed in index
/// order in parallel chunks, so the report depends only on the parameters.
pub fn hunt_counterexample(params: &HuntParams) -> Result<HuntReport, HuntError> {
    let space = Space::new(params)?;
    run(
        &space,
        HuntReport::empty(params, space.total),
        params.budget,
    )
}

/// Continues a checkpointed run with a fresh budget.
pub fn resume_hunt(checkpoint: &Checkpoint, budget: Option<u64>) -> Result<HuntReport, HuntError> {
    let params = &checkpoint.report.params;
    let space = Space::new(params)?;
    if space.total != checkpoint.report.total_candidates {
        return Err(HuntError::Checkpoint(
            "candidate count differs from the parameters".into(),
        ));
    }
    run(&space, checkpoint.report.clone(), budget)
}

/// Rebuilds every listed instance and checks that its recorded status
/// reproduces. Returns the entries that do not.
pub fn verify_hunt_instances(report: &HuntReport) -> Result<Vec<Value>, HuntError> {
    let mut bad = Vec::new();
    let lists = [
        &report.non_symmetric_instances,
        &report.no_base_field_point_instances,
        &report.criterion_mismatches,
        &report.rescan_failures,
    ];
    for entry in lists.into_iter().flatten() {
        let spec = entry
            .get("spec")
            .ok_or_else(|| HuntError::Checkpoint("entry without spec".into()))?;
        let a = format::algebra_from_json(spec)?;
        let v = decide_form_existence(&a, Mode::GradedSymmetric)?;
        let status = match v.status {
            SymmetryStatus::Yes => "yes",
            SymmetryStatus::No => "no",
            SymmetryStatus::NoOverBaseField => "no-over-base-field",
        };
        if entry.get("status").and_then(Value::as_str) != Some(status)
            || !is_graded_division(&a).is_yes()
        {
            bad.push(entry.clone());
        }
    }
    Ok(bad)
}
