//! Finite groups as validated Cayley tables. Elements are dense indices
//! `0..N` and index `0` is always the identity.

use std::collections::BTreeSet;

use serde_json::{json, Value};

pub const MAX_GROUP_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("invalid group parameters: {0}")]
    InvalidParameter(String),
}

/// How a table was produced; named kinds serialize by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    /// Direct product of cyclic groups; the first factor varies slowest.
    Product(Vec<usize>),
    /// Dihedral group of order `2n`; element `r^i s^j` has index `j*n + i`.
    Dihedral(usize),
    /// Permutations of three points in lexicographic order of one-line notation.
    Sym3,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    kind: GroupKind,
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl GroupTable {
    pub fn cyclic(n: usize) -> Result<GroupTable, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter(
                "cyclic group of order 0".into(),
            ));
        }
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{}", i),
            })
            .collect();
        GroupTable::build(GroupKind::Cyclic(n), n, table, labels)
    }

    pub fn trivial() -> GroupTable {
        GroupTable::cyclic(1).expect("trivial group")
    }

    pub fn product(factors: &[usize]) -> Result<GroupTable, GroupError> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(GroupError::InvalidParameter(format!(
                "factors {:?}",
                factors
            )));
        }
        let order: usize = factors.iter().product();
        let decode = |mut k: usize| -> Vec<usize> {
            let mut out = vec![0; factors.len()];
            for (slot, &n) in out.iter_mut().zip(factors).rev() {
                *slot = k % n;
                k /= n;
            }
            out
        };
        let encode = |v: &[usize]| v.iter().zip(factors).fold(0, |acc, (&x, &n)| acc * n + x);
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let va = decode(a);
            for b in 0..order {
                let vb = decode(b);
                let sum: Vec<usize> = va
                    .iter()
                    .zip(&vb)
                    .zip(factors)
                    .map(|((x, y), n)| (x + y) % n)
                    .collect();
                table.push(encode(&sum));
            }
        }
        let labels = (0..order)
            .map(|k| {
                let parts: Vec<String> = decode(k).iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        GroupTable::build(GroupKind::Product(factors.to_vec()), order, table, labels)
    }

    pub fn klein() -> GroupTable {
        GroupTable::product(&[2, 2]).expect("klein group")
    }

    pub fn dihedral(n: usize) -> Result<GroupTable, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter(
                "dihedral group with n = 0".into(),
            ));
        }
        let order = 2 * n;
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (i, s) = (a % n, a / n);
            for b in 0..order {
                let (k, t) = (b % n, b / n);
                let rot = if s == 0 { (i + k) % n } else { (i + n - k) % n };
                table.push(((s + t) % 2) * n + rot);
            }
        }
        let labels = (0..order)
            .map(|a| match (a % n, a / n) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("r^{}", i),
                (0, _) => "s".to_string(),
                (i, _) => format!("r^{}s", i),
            })
            .collect();
        GroupTable::build(GroupKind::Dihedral(n), order, table, labels)
    }

    pub fn sym3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let mut table = Vec::with_capacity(36);
        for a in &perms {
            for b in &perms {
                // (ab)(x) = a(b(x))
                table.push(index([a[b[0]], a[b[1]], a[b[2]]]));
            }
        }
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|x| (x + 1).to_string()).collect())
            .collect();
        GroupTable::build(GroupKind::Sym3, 6, table, labels).expect("S3 table")
    }

    /// Validates an explicit Cayley table whose element `0` is the identity.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<GroupTable, GroupError> {
        let n = table.len();
        if table.iter().any(|row| row.len() != n) {
            return Err(GroupError::InvalidTable("table is not square".into()));
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(GroupError::InvalidTable(format!(
                    "{} labels for order {}",
                    l.len(),
                    n
                )))
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        GroupTable::build(GroupKind::Explicit, n, table.concat(), labels)
    }

    fn build(
        kind: GroupKind,
        order: usize,
        table: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<GroupTable, GroupError> {
        if order == 0 || order > MAX_GROUP_ORDER {
            return Err(GroupError::InvalidParameter(format!(
                "order {} outside 1..={}",
                order, MAX_GROUP_ORDER
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(GroupError::InvalidTable(format!(
                "entry {} out of range",
                bad
            )));
        }
        let at = |a: usize, b: usize| table[a * order + b];
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(GroupError::InvalidTable(format!(
                    "element 0 is not a two-sided identity (fails at {})",
                    a
                )));
            }
        }
        for a in 0..order {
            let row: BTreeSet<usize> = (0..order).map(|b| at(a, b)).collect();
            if row.len() != order {
                return Err(GroupError::InvalidTable(format!(
                    "row {} is not a permutation",
                    a
                )));
            }
            let col: BTreeSet<usize> = (0..order).map(|b| at(b, a)).collect();
            if col.len() != order {
                return Err(GroupError::InvalidTable(format!(
                    "column {} is not a permutation",
                    a
                )));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails at ({}, {}, {})",
                            a, b, c
                        )));
                    }
                }
            }
        }
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| at(a, b) == 0)
                    .expect("latin square row contains 0")
            })
            .collect();
        Ok(GroupTable {
            kind,
            order,
            table,
            inverse,
            labels,
        })
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn check(&self, g: usize) -> Result<(), GroupError> {
        if g < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange(g))
        }
    }

    /// Least `m >= 1` with `g^m = e`.
    pub fn element_order(&self, g: usize) -> Result<usize, GroupError> {
        self.check(g)?;
        let mut x = g;
        let mut m = 1;
        while x != 0 {
            x = self.mul(x, g);
            m += 1;
        }
        Ok(m)
    }

    /// Closure of `gens ∪ {e}` under products; sorted. In a finite group
    /// closure under products already gives closure under inverses.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Vec<usize>, GroupError> {
        for &g in gens {
            self.check(g)?;
        }
        let mut members: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(members.into_iter().collect())
    }

    /// All homomorphisms into the cyclic group `Z/n`, as image vectors.
    pub fn homomorphisms_to_cyclic(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let free = self.order - 1;
        let total = (n as u64).pow(free as u32);
        for code in 0..total {
            let mut img = vec![0usize; self.order];
            let mut c = code;
            for slot in img.iter_mut().skip(1) {
                *slot = (c % n as u64) as usize;
                c /= n as u64;
            }
            let is_hom = self.elements().all(|a| {
                self.elements()
                    .all(|b| img[self.mul(a, b)] == (img[a] + img[b]) % n)
            });
            if is_hom {
                out.push(img);
            }
        }
        out
    }

    /// Named kinds serialize by name and parameters; explicit tables in full.
    pub fn to_json(&self) -> Value {
        match &self.kind {
            GroupKind::Cyclic(n) => json!({ "kind": "cyclic", "n": n }),
            GroupKind::Product(f) => json!({ "kind": "product", "factors": f }),
            GroupKind::Dihedral(n) => json!({ "kind": "dihedral", "n": n }),
            GroupKind::Sym3 => json!({ "kind": "sym3" }),
            GroupKind::Explicit => {
                let rows: Vec<&[usize]> = self.table.chunks(self.order).collect();
                json!({ "order": self.order, "table": rows, "labels": self.labels })
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<GroupTable, GroupError> {
        let bad = |what: &str| GroupError::InvalidParameter(format!("group block: {}", what));
        let uint = |key: &str| v.get(key).and_then(Value::as_u64).map(|x| x as usize);
        match v.get("kind").and_then(Value::as_str) {
            Some("cyclic") => GroupTable::cyclic(uint("n").ok_or_else(|| bad("missing n"))?),
            Some("dihedral") => GroupTable::dihedral(uint("n").ok_or_else(|| bad("missing n"))?),
            Some("sym3") => Ok(GroupTable::sym3()),
            Some("product") => {
                let f = v
                    .get("factors")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("missing factors"))?
                    .iter()
                    .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("factor")))
                    .collect::<Result<Vec<_>, _>>()?;
                GroupTable::product(&f)
            }
            Some(other) => Err(bad(&format!("unknown kind {:?}", other))),
            None => {
                let rows = v
                    .get("table")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("table"))?;
                let table = rows
                    .iter()
                    .map(|r| {
                        r.as_array()
                            .ok_or_else(|| bad("row"))?
                            .iter()
                            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("entry")))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if let Some(n) = uint("order") {
                    if n != table.len() {
                        return Err(bad("order disagrees with table"));
                    }
                }
                let labels = match v.get("labels") {
                    Some(Value::Array(ls)) => Some(
                        ls.iter()
                            .map(|l| l.as_str().map(str::to_string).ok_or_else(|| bad("label")))
                            .collect::<Result<Vec<_>, _>>()?,
                    ),
                    _ => None,
                };
                GroupTable::from_table(table, labels)
            }
        }
    }
}
