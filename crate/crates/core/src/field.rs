//! Exact fields: prime fields `F_p`, extensions `F_p[t]/(m(t))`, and the
//! rationals.
//!
//! A [`Field`] is a cheap, clonable handle. Every [`Scalar`] carries the
//! handle of the field it lives in; arithmetic between scalars of different
//! fields is an error (checked API) or a panic (operator API), never a
//! coercion.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};
use smallvec::SmallVec;

/// Coefficients of an extension-field element, lowest degree first.
type Coeffs = SmallVec<[u32; 6]>;

/// Largest field order we are willing to enumerate when searching for roots.
const ROOT_SEARCH_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible: {0}")]
    ReducibleModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("operation undefined in characteristic zero")]
    CharacteristicZero,
    #[error("field too large: {0}")]
    TooLarge(String),
    #[error("cannot read scalar: {0}")]
    Parse(String),
}

/// Description of an exact field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldDesc {
    characteristic: u32,
    degree: usize,
    modulus: Option<Vec<u32>>,
}

impl FieldDesc {
    /// 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn extension_degree(&self) -> usize {
        self.degree
    }

    /// Monic modulus `[c0, ..., cn]` with `cn = 1`, absent for prime fields and `Q`.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }
}

/// Shared handle to a validated [`FieldDesc`].
#[derive(Clone)]
pub struct Field(Arc<FieldDesc>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.0;
        match (d.characteristic, &d.modulus) {
            (0, _) => write!(f, "Q"),
            (p, None) => write!(f, "F_{}", p),
            (p, Some(m)) => write!(f, "F_{}^{}[{}]", p, d.degree, fmt_poly(m, "t")),
        }
    }
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldDesc {
            characteristic: 0,
            degree: 1,
            modulus: None,
        }))
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Field::make(p, None)
    }

    /// Builds and validates a field. `modulus` lists coefficients lowest
    /// degree first; they are reduced mod `p`. A degree-one modulus yields the
    /// prime field itself.
    pub fn make(characteristic: u64, modulus: Option<&[i64]>) -> Result<Field, FieldError> {
        if characteristic == 0 {
            if modulus.is_some() {
                return Err(FieldError::InvalidModulus(
                    "extensions of Q are not supported".into(),
                ));
            }
            return Ok(Field::rationals());
        }
        if characteristic > u32::MAX as u64 || !is_prime(characteristic) {
            return Err(FieldError::NonPrimeCharacteristic(characteristic));
        }
        let p = characteristic as u32;
        let Some(raw) = modulus else {
            return Ok(Field(Arc::new(FieldDesc {
                characteristic: p,
                degree: 1,
                modulus: None,
            })));
        };
        let mut m: Vec<u32> = raw.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect();
        poly::trim(&mut m);
        if m.len() < 2 {
            return Err(FieldError::InvalidModulus(
                "degree must be at least 1".into(),
            ));
        }
        if *m.last().unwrap() != 1 {
            return Err(FieldError::InvalidModulus("modulus must be monic".into()));
        }
        let n = m.len() - 1;
        if n == 1 {
            return Ok(Field(Arc::new(FieldDesc {
                characteristic: p,
                degree: 1,
                modulus: None,
            })));
        }
        if (n as f64) * (p as f64).log2() >= 63.0 {
            return Err(FieldError::TooLarge(format!(
                "{}^{} does not fit in 63 bits",
                p, n
            )));
        }
        if let Some(factor) = poly::find_factor(&m, p) {
            return Err(FieldError::ReducibleModulus(factor));
        }
        Ok(Field(Arc::new(FieldDesc {
            characteristic: p,
            degree: n,
            modulus: Some(m),
        })))
    }

    /// `F_{p^n}` defined by the first irreducible monic polynomial of degree
    /// `n` in enumeration order (lower coefficients read as base-`p` digits).
    pub fn galois(p: u64, n: usize) -> Result<Field, FieldError> {
        if n <= 1 {
            return Field::prime(p);
        }
        Field::prime(p)?;
        let pu = p as u32;
        let count = (p as u128).pow(n as u32);
        if count > u64::MAX as u128 {
            return Err(FieldError::TooLarge(format!("{}^{}", p, n)));
        }
        for idx in 0..count as u64 {
            let mut m = digits(idx, pu, n);
            m.push(1);
            if poly::find_factor(&m, pu).is_none() {
                let m: Vec<i64> = m.iter().map(|&c| c as i64).collect();
                return Field::make(p, Some(&m));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn desc(&self) -> &FieldDesc {
        &self.0
    }

    pub fn characteristic(&self) -> u32 {
        self.0.characteristic
    }

    pub fn extension_degree(&self) -> usize {
        self.0.degree
    }

    pub fn is_rational(&self) -> bool {
        self.0.characteristic == 0
    }

    pub fn is_finite(&self) -> bool {
        !self.is_rational()
    }

    /// Number of elements, `None` for `Q`.
    pub fn order(&self) -> Option<u64> {
        if self.is_rational() {
            None
        } else {
            Some((self.0.characteristic as u64).pow(self.0.degree as u32))
        }
    }

    pub fn prime_field(&self) -> Field {
        match self.0.characteristic {
            0 => Field::rationals(),
            p => Field(Arc::new(FieldDesc {
                characteristic: p,
                degree: 1,
                modulus: None,
            })),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.0.characteristic {
            0 => self.wrap(Repr::Rat(BigRational::zero())),
            _ => self.wrap(Repr::Fq(SmallVec::from_elem(0, self.0.degree))),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// Image of an integer under the canonical map `Z -> F`.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.0.characteristic {
            0 => self.wrap(Repr::Rat(BigRational::from_integer(BigInt::from(n)))),
            p => {
                let mut c: Coeffs = SmallVec::from_elem(0, self.0.degree);
                c[0] = n.rem_euclid(p as i64) as u32;
                self.wrap(Repr::Fq(c))
            }
        }
    }

    /// Image of a rational number; fails in characteristic `p` when `p`
    /// divides the denominator.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar, FieldError> {
        match self.0.characteristic {
            0 => Ok(self.wrap(Repr::Rat(r.clone()))),
            p => {
                let reduce = |b: &BigInt| -> i64 {
                    b.mod_floor(&BigInt::from(p))
                        .to_i64()
                        .expect("reduced below p")
                };
                let num = self.from_i64(reduce(r.numer()));
                let den = self.from_i64(reduce(r.denom()));
                Ok(num * den.inv()?)
            }
        }
    }

    /// Element `c0 + c1 t + ...` of an extension field (coefficients reduced).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Scalar, FieldError> {
        let p = self.0.characteristic;
        if p == 0 {
            return Err(FieldError::CharacteristicZero);
        }
        let n = self.0.degree;
        if coeffs.len() > n {
            return Err(FieldError::Parse(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                n
            )));
        }
        let mut c: Coeffs = SmallVec::from_elem(0, n);
        for (slot, &v) in c.iter_mut().zip(coeffs) {
            *slot = v.rem_euclid(p as i64) as u32;
        }
        Ok(self.wrap(Repr::Fq(c)))
    }

    /// The class of `t` in an extension; `1` in a prime field.
    pub fn generator(&self) -> Scalar {
        if self.0.degree == 1 {
            return self.one();
        }
        let mut c: Coeffs = SmallVec::from_elem(0, self.0.degree);
        c[1] = 1;
        self.wrap(Repr::Fq(c))
    }

    /// The `index`-th element in enumeration order: coefficients are the
    /// base-`p` digits of `index`, lowest first. Index 0 is zero, index 1 is one.
    pub fn element_at(&self, index: u64) -> Scalar {
        let p = self.0.characteristic;
        assert!(p != 0, "Q is not enumerable");
        let c = digits(index, p, self.0.degree);
        self.wrap(Repr::Fq(c.into_iter().collect()))
    }

    pub fn index_of(&self, x: &Scalar) -> u64 {
        let p = self.0.characteristic as u64;
        match &x.repr {
            Repr::Fq(c) => c.iter().rev().fold(0u64, |acc, &d| acc * p + d as u64),
            Repr::Rat(_) => panic!("Q is not enumerable"),
        }
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        let order = self.order().expect("Q is not enumerable");
        (0..order).map(move |i| self.element_at(i))
    }

    /// Canonical JSON form: `{"char":p,"degree":n,"modulus":[...]}`, with the
    /// modulus omitted for prime fields and `{"char":0}` for `Q`.
    pub fn to_json(&self) -> Value {
        let d = &self.0;
        match (d.characteristic, &d.modulus) {
            (0, _) => json!({ "char": 0 }),
            (p, None) => json!({ "char": p, "degree": 1 }),
            (p, Some(m)) => json!({ "char": p, "degree": d.degree, "modulus": m }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Field, FieldError> {
        let p = v
            .get("char")
            .and_then(Value::as_u64)
            .ok_or_else(|| FieldError::Parse("field block needs integer \"char\"".into()))?;
        let degree = v.get("degree").and_then(Value::as_u64).unwrap_or(1);
        let modulus = match v.get("modulus") {
            None | Some(Value::Null) => None,
            Some(Value::Array(cs)) => Some(
                cs.iter()
                    .map(|c| {
                        c.as_i64()
                            .ok_or_else(|| FieldError::Parse("modulus coefficient".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            Some(_) => return Err(FieldError::Parse("modulus must be an array".into())),
        };
        let f = Field::make(p, modulus.as_deref())?;
        if f.extension_degree() as u64 != degree {
            return Err(FieldError::Parse(format!(
                "declared degree {} but modulus has degree {}",
                degree,
                f.extension_degree()
            )));
        }
        Ok(f)
    }

    /// Canonical JSON for a scalar: integer in `[0,p)` for prime fields,
    /// coefficient array for extensions, `"n"` or `"n/d"` string for `Q`.
    pub fn scalar_to_json(&self, x: &Scalar) -> Value {
        match &x.repr {
            Repr::Rat(r) => Value::String(r.to_string()),
            Repr::Fq(c) if self.0.degree == 1 => json!(c[0]),
            Repr::Fq(c) => json!(c.as_slice()),
        }
    }

    pub fn scalar_from_json(&self, v: &Value) -> Result<Scalar, FieldError> {
        match (self.0.characteristic, v) {
            (0, Value::String(s)) => parse_rational(s).map(|r| self.wrap(Repr::Rat(r))),
            (0, Value::Number(n)) => n
                .as_i64()
                .map(|n| self.from_i64(n))
                .ok_or_else(|| FieldError::Parse(format!("not an integer: {}", n))),
            (_, Value::Number(n)) => n
                .as_i64()
                .map(|n| self.from_i64(n))
                .ok_or_else(|| FieldError::Parse(format!("not an integer: {}", n))),
            (_, Value::Array(cs)) => {
                let cs = cs
                    .iter()
                    .map(|c| {
                        c.as_i64()
                            .ok_or_else(|| FieldError::Parse("coefficient".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                self.from_coeffs(&cs)
            }
            (_, Value::String(s)) => {
                let r = parse_rational(s)?;
                self.from_rational(&r)
            }
            _ => Err(FieldError::Parse(format!("unexpected scalar {}", v))),
        }
    }

    /// A degree-`r` extension of this finite field together with the
    /// embedding of `self` into it.
    pub fn extension(&self, r: usize) -> Result<(Field, Embedding), FieldError> {
        if self.is_rational() {
            return Err(FieldError::CharacteristicZero);
        }
        let big = Field::galois(self.characteristic() as u64, self.extension_degree() * r)?;
        let emb = Embedding::new(self, &big)?;
        Ok((big, emb))
    }

    fn wrap(&self, repr: Repr) -> Scalar {
        Scalar {
            field: self.clone(),
            repr,
        }
    }

    fn p(&self) -> u64 {
        self.0.characteristic as u64
    }

    fn mul_fq(&self, a: &[u32], b: &[u32]) -> Coeffs {
        let p = self.p();
        let n = self.0.degree;
        if n == 1 {
            return smallvec::smallvec![((a[0] as u64 * b[0] as u64) % p) as u32];
        }
        let m = self.0.modulus.as_ref().expect("extension has modulus");
        let mut prod: SmallVec<[u64; 12]> = SmallVec::from_elem(0, 2 * n - 1);
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai as u64 * bj as u64 % p) % p;
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let sub = c * m[i] as u64 % p;
                prod[k - n + i] = (prod[k - n + i] + p - sub) % p;
            }
        }
        prod[..n].iter().map(|&c| c as u32).collect()
    }
}

/// Embedding of a finite field into an extension of it, determined by the
/// image of the generator (the first root of the source modulus in the
/// target's enumeration order).
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    generator_image: Scalar,
}

impl Embedding {
    pub fn new(source: &Field, target: &Field) -> Result<Embedding, FieldError> {
        if source.characteristic() != target.characteristic() || source.is_rational() {
            return Err(FieldError::FieldMismatch(
                source.to_string(),
                target.to_string(),
            ));
        }
        if target.extension_degree() % source.extension_degree() != 0 {
            return Err(FieldError::FieldMismatch(
                source.to_string(),
                target.to_string(),
            ));
        }
        let generator_image = match source.desc().modulus() {
            None => target.one(),
            Some(m) => {
                let order = target.order().unwrap();
                if order > ROOT_SEARCH_LIMIT {
                    return Err(FieldError::TooLarge(format!("root search in {}", target)));
                }
                let coeffs: Vec<Scalar> = m.iter().map(|&c| target.from_i64(c as i64)).collect();
                target
                    .elements()
                    .find(|x| horner(&coeffs, x).is_zero())
                    .ok_or_else(|| {
                        FieldError::FieldMismatch(source.to_string(), target.to_string())
                    })?
            }
        };
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            generator_image,
        })
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn apply(&self, x: &Scalar) -> Scalar {
        assert_eq!(
            x.field, self.source,
            "embedding applied to a foreign scalar"
        );
        let coeffs: Vec<Scalar> = x
            .coeffs()
            .iter()
            .map(|&c| self.target.from_i64(c as i64))
            .collect();
        horner(&coeffs, &self.generator_image)
    }
}

fn horner(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field.zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Fq(Coeffs),
}

/// An element of an exact field, in canonical form.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    repr: Repr,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.field == other.field
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state)
    }
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Fq(c) => c.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Fq(c) => c[0] == 1 && c[1..].iter().all(|&x| x == 0),
        }
    }

    /// Coefficients over the prime field, lowest degree first.
    ///
    /// Panics for rationals.
    pub fn coeffs(&self) -> &[u32] {
        match &self.repr {
            Repr::Fq(c) => c,
            Repr::Rat(_) => panic!("rationals have no coefficient vector"),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            Repr::Fq(_) => None,
        }
    }

    /// True when the scalar lies in the prime field.
    pub fn is_prime_field_element(&self) -> bool {
        match &self.repr {
            Repr::Rat(_) => true,
            Repr::Fq(c) => c[1..].iter().all(|&x| x == 0),
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_eq(&self, other: &Scalar) -> Result<bool, FieldError> {
        self.check(other)?;
        Ok(self.repr == other.repr)
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.repr {
            Repr::Rat(r) => self.field.wrap(Repr::Rat(r.recip())),
            Repr::Fq(_) => {
                let q = self.field.order().unwrap();
                self.pow(q - 2)
            }
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `x -> x^p`.
    pub fn frobenius(&self) -> Result<Scalar, FieldError> {
        match self.field.characteristic() {
            0 => Err(FieldError::CharacteristicZero),
            p => Ok(self.pow(p as u64)),
        }
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Fq(a), Repr::Fq(b)) => {
                let p = self.field.p();
                Repr::Fq(
                    a.iter()
                        .zip(b)
                        .map(|(&x, &y)| ((x as u64 + y as u64) % p) as u32)
                        .collect(),
                )
            }
            _ => unreachable!("same field implies same representation"),
        };
        self.field.wrap(repr)
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Fq(a), Repr::Fq(b)) => Repr::Fq(self.field.mul_fq(a, b)),
            _ => unreachable!("same field implies same representation"),
        };
        self.field.wrap(repr)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{}", e))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{}", e))
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{}", e))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Fq(a) => {
                let p = self.field.p() as u32;
                Repr::Fq(a.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect())
            }
        };
        self.field.wrap(repr)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(r) => write!(f, "{}", r),
            Repr::Fq(c) if c.len() == 1 => write!(f, "{}", c[0]),
            Repr::Fq(c) => write!(f, "{}", fmt_poly(c, "t")),
        }
    }
}

fn fmt_poly(c: &[u32], var: &str) -> String {
    let mut parts = Vec::new();
    for (i, &x) in c.iter().enumerate().rev() {
        if x == 0 {
            continue;
        }
        let coef = if x == 1 && i > 0 {
            String::new()
        } else {
            x.to_string()
        };
        parts.push(match i {
            0 => coef,
            1 => format!("{}{}", coef, var),
            _ => format!("{}{}^{}", coef, var, i),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let bad = || FieldError::Parse(format!("not a rational: {:?}", s));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(FieldError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

fn digits(mut index: u64, p: u32, n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push((index % p as u64) as u32);
        index /= p as u64;
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomials over `F_p` (lowest degree first, no trailing zeros),
/// used only for modulus validation.
mod poly {
    use super::digits;

    /// Exhaustive divisor search up to this many candidate polynomials;
    /// beyond it the gcd-with-`x^(p^i) - x` test is used.
    const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p) as u64;
        let p64 = p as u64;
        while r.len() > db {
            let k = r.len() - 1;
            let c = r[k] as u64 * lead_inv % p64;
            for i in 0..=db {
                let sub = c * b[i] as u64 % p64;
                r[k - db + i] = ((r[k - db + i] as u64 + p64 - sub) % p64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let p64 = p as u64;
        let mut prod = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64 % p64) % p64) as u32;
            }
        }
        rem(&prod, m, p)
    }

    fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        let inv = inv_mod(*a.last().unwrap(), p) as u64;
        a.iter()
            .map(|&c| (c as u64 * inv % p as u64) as u32)
            .collect()
    }

    pub fn to_string(c: &[u32]) -> String {
        super::fmt_poly(c, "t")
    }

    /// Returns a description of a nontrivial factor of the monic `m`, or
    /// `None` when `m` is irreducible over `F_p`.
    pub fn find_factor(m: &[u32], p: u32) -> Option<String> {
        let n = m.len() - 1;
        let half = n / 2;
        let candidates = (p as u128).pow(half as u32);
        if n <= 6 && candidates <= EXHAUSTIVE_LIMIT as u128 {
            for d in 1..=half {
                let count = (p as u64).pow(d as u32);
                for idx in 0..count {
                    let mut f = digits(idx, p, d);
                    f.push(1);
                    if rem(m, &f, p).is_empty() {
                        return Some(format!("divisible by {}", to_string(&f)));
                    }
                }
            }
            return None;
        }
        // Rabin-style: an irreducible of degree n shares no factor with
        // x^(p^i) - x for 1 <= i <= n/2.
        let x = vec![0, 1];
        let mut h = x.clone();
        for i in 1..=half {
            h = powmod(&h, p as u64, m, p);
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = ((diff[1] as u64 + p as u64 - 1) % p as u64) as u32;
            trim(&mut diff);
            if diff.is_empty() {
                return Some(format!("x^({}^{}) = x modulo the polynomial", p, i));
            }
            let g = gcd(m, &diff, p);
            if g.len() > 1 {
                return Some(format!(
                    "common factor {} with x^({}^{}) - x",
                    to_string(&g),
                    p,
                    i
                ));
            }
        }
        None
    }

    fn powmod(a: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut base = rem(a, m, p);
        let mut acc = vec![1u32];
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &base, m, p);
            }
            e >>= 1;
            if e > 0 {
                base = mulmod(&base, &base, m, p);
            }
        }
        acc
    }
}
