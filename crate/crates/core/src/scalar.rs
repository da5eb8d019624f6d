//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`], an arbitrary-precision
//! rational kept in lowest terms with a positive denominator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number in canonical form.
pub type Scalar = BigRational;

/// Failure to read a rational from its textual form `"p"` or `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("division by zero in rational literal `{0}`")]
    DivisionByZero(String),
}

/// `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num/den` as a scalar. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt, ScalarParseError> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ScalarParseError::Malformed(whole.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| ScalarParseError::Malformed(whole.to_string()))
}

/// Parses `"p"` or `"p/q"` with integer `p`, `q`. Surrounding whitespace is
/// not accepted. A negative denominator is normalized away.
pub fn parse_scalar(s: &str) -> Result<Scalar, ScalarParseError> {
    if s.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    match s.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(s, s)?)),
        Some((n, d)) => {
            let n = parse_int(n, s)?;
            let d = parse_int(d, s)?;
            if d.is_zero() {
                return Err(ScalarParseError::DivisionByZero(s.to_string()));
            }
            Ok(Scalar::new(n, d))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Least common multiple of the denominators of `xs` (1 for an empty slice).
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    use num::Integer;
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn sign(x: &Scalar) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
