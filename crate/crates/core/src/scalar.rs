//! Scalar types that gap values are measured in.
//!
//! String detection is an equality test (a sum of gaps equals an end gap), so
//! every comparison in the crate goes through [`Scalar::approx_eq`] and
//! [`Scalar::approx_le`]. Exact scalars ignore the tolerance entirely; float
//! scalars treat `a` and `b` as equal iff `|a - b| <= tol * max(1, |a|, |b|)`.
//!
//! Changing the tolerance of a float space changes which sets are strings.
//! Strings are unstable under perturbation of the gaps, so this is inherent
//! to float input and not a rounding bug.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio, Rational64};
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use serde_json::Value;
use thiserror::Error;

/// How a space stores its gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

impl FromStr for Mode {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(ScalarParseError::UnknownMode(other.to_string())),
        }
    }
}

impl Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("cannot parse `{0}` as a number")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("rational literal `{0}` is not allowed in float mode")]
    RationalInFloatMode(String),
    #[error("non-finite value `{0}`")]
    NonFinite(String),
    #[error("value `{0}` does not fit the scalar type")]
    Overflow(String),
    #[error("expected a number or numeric string, found {0}")]
    WrongJsonType(String),
    #[error("unknown scalar mode `{0}` (expected exact or float)")]
    UnknownMode(String),
}

/// A number type usable as a gap value.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    const MODE: Mode;

    /// Equality under the space tolerance `tol`. Exact types ignore `tol`.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;

    /// `self <= other` under the space tolerance.
    fn approx_le(&self, other: &Self, tol: f64) -> bool {
        self <= other || self.approx_eq(other, tol)
    }

    /// `num / den`; panics on a zero denominator.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn parse_scalar(text: &str) -> Result<Self, ScalarParseError>;

    fn to_json(&self) -> Value;

    fn from_json(value: &Value) -> Result<Self, ScalarParseError> {
        match value {
            Value::String(s) => Self::parse_scalar(s),
            Value::Number(n) => Self::parse_scalar(&n.to_string()),
            other => Err(ScalarParseError::WrongJsonType(json_kind(other).to_string())),
        }
    }

    fn is_exact() -> bool {
        Self::MODE == Mode::Exact
    }
}

fn json_kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

/// Parses `p/q`, integers, decimals and scientific notation into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, ScalarParseError> {
    let t = text.trim();
    let malformed = || ScalarParseError::Malformed(text.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| malformed())?;
        let q: BigInt = q.trim().parse().map_err(|_| malformed())?;
        if q.is_zero() {
            return Err(ScalarParseError::ZeroDenominator(text.to_string()));
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = t[i + 1..].parse().map_err(|_| malformed())?;
            (&t[..i], e)
        }
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(malformed());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(malformed());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = all_digits.parse().map_err(|_| malformed())?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10u8);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

impl Scalar for BigRational {
    const MODE: Mode = Mode::Exact;

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn parse_scalar(text: &str) -> Result<Self, ScalarParseError> {
        parse_rational(text)
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Scalar for Rational64 {
    const MODE: Mode = Mode::Exact;

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn parse_scalar(text: &str) -> Result<Self, ScalarParseError> {
        let big = parse_rational(text)?;
        match (big.numer().to_i64(), big.denom().to_i64()) {
            (Some(p), Some(q)) => Ok(Ratio::new(p, q)),
            _ => Err(ScalarParseError::Overflow(text.to_string())),
        }
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

macro_rules! impl_float_scalar {
    ($($ty:ty),*) => {
        $(
            impl Scalar for $ty {
                const MODE: Mode = Mode::Float;

                fn approx_eq(&self, other: &Self, tol: f64) -> bool {
                    let (a, b) = (*self as f64, *other as f64);
                    let scale = 1f64.max(a.abs()).max(b.abs());
                    (a - b).abs() <= tol * scale
                }

                fn from_ratio(num: i64, den: i64) -> Self {
                    assert!(den != 0, "zero denominator");
                    (num as f64 / den as f64) as $ty
                }

                fn parse_scalar(text: &str) -> Result<Self, ScalarParseError> {
                    let t = text.trim();
                    if t.contains('/') {
                        return Err(ScalarParseError::RationalInFloatMode(text.to_string()));
                    }
                    let v: $ty = t
                        .parse()
                        .map_err(|_| ScalarParseError::Malformed(text.to_string()))?;
                    if !v.is_finite() {
                        return Err(ScalarParseError::NonFinite(text.to_string()));
                    }
                    Ok(v)
                }

                fn to_json(&self) -> Value {
                    serde_json::Number::from_f64(*self as f64)
                        .map(Value::Number)
                        .unwrap_or(Value::Null)
                }
            }
        )*
    };
}

impl_float_scalar!(f32, f64);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rational_forms() {
        let r = |s| parse_rational(s).unwrap();
        assert_eq!(r("3/5"), BigRational::from_ratio(3, 5));
        assert_eq!(r("-0.25"), BigRational::from_ratio(-1, 4));
        assert_eq!(r("12"), BigRational::from_ratio(12, 1));
        assert_eq!(r("1.5e2"), BigRational::from_ratio(150, 1));
        assert_eq!(r("2e-3"), BigRational::from_ratio(1, 500));
        assert_eq!(r(".5"), BigRational::from_ratio(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn float_tolerance_is_relative() {
        assert!(1.0f64.approx_eq(&(1.0 + 1e-10), 1e-9));
        assert!(!1.0f64.approx_eq(&(1.0 + 1e-8), 1e-9));
        assert!(1e6f64.approx_eq(&(1e6 + 1e-4), 1e-9));
        assert!(!1e6f64.approx_eq(&(1e6 + 1e-2), 1e-9));
        assert!(0.0f64.approx_le(&-1e-12, 1e-9));
    }

    #[test]
    fn exact_ignores_tolerance() {
        let a = BigRational::from_ratio(1, 3);
        let b = BigRational::from_ratio(1, 3) + BigRational::from_ratio(1, 1_000_000_000_000);
        assert!(!a.approx_eq(&b, 1.0));
        assert!(a.approx_le(&b, 0.0));
    }

    #[test]
    fn float_mode_rejects_rational_literals() {
        assert!(matches!(
            f64::parse_scalar("1/2"),
            Err(ScalarParseError::RationalInFloatMode(_))
        ));
        assert!(f64::parse_scalar("inf").is_err());
    }

    #[test]
    fn json_round_trip_exact() {
        let v = BigRational::from_ratio(-7, 12);
        assert_eq!(BigRational::from_json(&v.to_json()).unwrap(), v);
        let w = Rational64::from_ratio(5, 3);
        assert_eq!(Rational64::from_json(&w.to_json()).unwrap(), w);
    }
}
