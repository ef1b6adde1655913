use crate::field::{Embedding, Field, Scalar};

use super::{LinalgError, MultiPoly};

/// Exhaustive enumeration is refused above this many points.
pub const MAX_EXHAUSTIVE_POINTS: u128 = 10_000_000;
/// Largest extension degree tried when the base field has no point.
pub const MAX_EXTENSION_DEGREE: usize = 3;

/// A point over a proper extension, reported when the base field has none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionPoint {
    pub degree: usize,
    pub field: Field,
    pub point: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointSearch {
    Point(Vec<Scalar>),
    /// No point over the base field; `witness` holds the least extension
    /// degree `<= 3` with a point, if any.
    NoneOverField {
        witness: Option<ExtensionPoint>,
    },
    IdenticallyZero,
}

/// Finds the lexicographically first point of a deterministic grid at which
/// `p` does not vanish.
///
/// When the field has more than `deg p` elements the grid takes the first
/// `deg p + 1` field elements per variable, which always contains a
/// nonvanishing point. Otherwise the whole of `F^m` is scanned, and on
/// failure extensions of degree 2 and 3 are tried.
pub fn nonvanishing_point(p: &MultiPoly, field: &Field) -> Result<PointSearch, LinalgError> {
    let p = if p.field() == field {
        p.clone()
    } else if *p.field() == field.prime_field() {
        p.embed(&Embedding::new(p.field(), field).map_err(LinalgError::Field)?)
    } else {
        return Err(LinalgError::Field(crate::field::FieldError::FieldMismatch(
            p.field().to_string(),
            field.to_string(),
        )));
    };
    if p.is_zero() {
        return Ok(PointSearch::IdenticallyZero);
    }
    if let Some(pt) = search(&p, field)? {
        return Ok(PointSearch::Point(pt));
    }
    for r in 2..=MAX_EXTENSION_DEGREE {
        let (big, emb) = field.extension(r).map_err(LinalgError::Field)?;
        if let Some(pt) = search(&p.embed(&emb), &big)? {
            return Ok(PointSearch::NoneOverField {
                witness: Some(ExtensionPoint {
                    degree: r,
                    field: big,
                    point: pt,
                }),
            });
        }
    }
    Ok(PointSearch::NoneOverField { witness: None })
}

fn search(p: &MultiPoly, field: &Field) -> Result<Option<Vec<Scalar>>, LinalgError> {
    let m = p.nvars();
    let deg = p.total_degree().unwrap_or(0) as u64;
    let values: Vec<Scalar> = match field.order() {
        None => (0..=deg as i64).map(|v| field.from_i64(v)).collect(),
        Some(q) if q > deg => (0..=deg).map(|i| field.element_at(i)).collect(),
        Some(q) => {
            let points = (q as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
            if points > MAX_EXHAUSTIVE_POINTS {
                return Err(LinalgError::SearchSpaceTooLarge(points));
            }
            field.elements().collect()
        }
    };
    let mut idx = vec![0usize; m];
    loop {
        let pt: Vec<Scalar> = idx.iter().map(|&i| values[i].clone()).collect();
        if !p.eval(&pt).is_zero() {
            return Ok(Some(pt));
        }
        // odometer, last coordinate fastest
        let mut k = m;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
