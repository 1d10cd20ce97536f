//! Arbitrary-precision rationals and their text encoding.
//!
//! Rationals travel as strings `"p/q"` (or `"p"` for integers); plain JSON
//! integers are accepted on input as well.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exact rational scalar used everywhere in the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Parses `"p"`, `"-p"` or `"p/q"`; whitespace around the parts is ignored.
pub fn parse_q(text: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Q::new(num, den))
        }
        None => Ok(Q::from_integer(BigInt::from_str(text).map_err(|_| bad())?)),
    }
}

pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Converts an integral rational to `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

pub fn sign(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// A JSON scalar that may carry a rational: an integer or a `"p/q"` string.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Int(i64),
    Text(String),
    Float(f64),
}

impl RawScalar {
    fn into_q(self) -> Result<Q> {
        match self {
            RawScalar::Int(n) => Ok(q(n)),
            RawScalar::Text(s) => parse_q(&s),
            RawScalar::Float(f) => Err(Error::Parse(format!(
                "floating-point value {f} not accepted; encode rationals as \"p/q\""
            ))),
        }
    }
}

pub(crate) fn q_from_value<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
    RawScalar::deserialize(d)?.into_q().map_err(de::Error::custom)
}

/// Serde adapter for a single [`Q`].
pub mod serde_q {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        q_from_value(d)
    }
}

/// Serde adapter for `Vec<Q>`.
pub mod serde_q_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let text: Vec<String> = xs.iter().map(format_q).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let raw = Vec::<RawScalar>::deserialize(d)?;
        raw.into_iter()
            .map(|r| r.into_q().map_err(de::Error::custom))
            .collect()
    }
}

/// Serde adapter for `Vec<BigInt>`: JSON integers when they fit, strings otherwise.
pub mod serde_int_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        let vals: Vec<serde_json::Value> = xs
            .iter()
            .map(|x| match i64::try_from(x) {
                Ok(v) => serde_json::Value::from(v),
                Err(_) => serde_json::Value::from(x.to_string()),
            })
            .collect();
        vals.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<RawScalar>::deserialize(d)?;
        raw.into_iter()
            .map(|r| {
                let x = r.into_q().map_err(de::Error::custom)?;
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(de::Error::custom(format!(
                        "compact part must be integral, got {}",
                        format_q(&x)
                    )))
                }
            })
            .collect()
    }
}

/// Serializes a rational matrix as nested string arrays.
pub mod serde_q_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(rows: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(format_q).collect())
            .collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Q>>, D::Error> {
        let raw = Vec::<Vec<RawScalar>>::deserialize(d)?;
        raw.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|r| r.into_q().map_err(de::Error::custom))
                    .collect()
            })
            .collect()
    }
}
