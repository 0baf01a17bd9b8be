//! Exact dense linear algebra over ℚ and prime fields.
//!
//! Vectors are rows; a matrix `f` with `dim X` rows and `dim Y` columns is a map
//! `X → Y`, and "first `f`, then `g`" is the product `f·g`.

mod matrix;
pub mod poly;
mod scalar;

pub use matrix::{Coordinates, Matrix, Solution};
pub use scalar::{rat_signum, Field, Rat, Scalar};

use thiserror::Error;

/// Errors raised by the linear-algebra layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("characteristic {0} is neither 0 nor a prime at most 2^31")]
    BadCharacteristic(u64),
    #[error("denominator of {0} vanishes modulo {1}")]
    DenominatorVanishes(String, u32),
    #[error("bad scalar literal `{0}`")]
    BadLiteral(String),
    #[error("bad matrix literal: {0}")]
    BadMatrix(String),
}

/// Parses a matrix literal `[[a,b],[c,d]]` with integer or `p/q` entries.
///
/// A trailing `% p` reduces the entries modulo `p`; it must agree with `field`.
/// `[]` denotes a matrix without rows, whose column count is taken from `cols`.
pub fn parse_matrix(src: &str, field: Field, cols: Option<usize>) -> Result<Matrix, LinAlgError> {
    let bad = |m: &str| LinAlgError::BadMatrix(format!("{m} in `{src}`"));
    let (body, modulus) = match src.split_once('%') {
        Some((b, m)) => (b.trim(), Some(m.trim())),
        None => (src.trim(), None),
    };
    if let Some(m) = modulus {
        let p: u64 = m.parse().map_err(|_| bad("bad modulus"))?;
        if Field::with_characteristic(p)? != field {
            return Err(bad("modulus disagrees with the workspace field"));
        }
    }
    let inner = body
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad("missing outer brackets"))?
        .trim();
    if inner.is_empty() {
        return Ok(Matrix::zeros(field, 0, cols.unwrap_or(0)));
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rest = inner;
    loop {
        rest = rest.trim_start();
        let r = rest.strip_prefix('[').ok_or_else(|| bad("expected `[`"))?;
        let end = r.find(']').ok_or_else(|| bad("unclosed row"))?;
        let row_src = r[..end].trim();
        let row: Vec<Scalar> = if row_src.is_empty() {
            Vec::new()
        } else {
            row_src.split(',').map(|t| field.parse(t)).collect::<Result<_, _>>()?
        };
        rows.push(row);
        rest = r[end + 1..].trim_start();
        if rest.is_empty() {
            break;
        }
        rest = rest.strip_prefix(',').ok_or_else(|| bad("expected `,` between rows"))?;
    }
    let ncols = rows[0].len();
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(bad("ragged rows"));
    }
    if let Some(c) = cols {
        if c != ncols {
            return Err(bad(&format!("expected {c} columns, found {ncols}")));
        }
    }
    Ok(Matrix::from_rows(field, ncols, rows))
}
