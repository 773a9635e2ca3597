//! JSON encoding of arbitrary-precision integers.
//!
//! Integers are written as bare JSON numbers of any length. On input both
//! numbers and decimal strings are accepted, so values beyond the 53-bit
//! range of common JSON readers can be quoted.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Number, Value};

/// Reads an integer from a JSON number or decimal string.
pub fn from_value(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => parse_integer(&n.to_string()),
        Value::String(s) => parse_integer(s.trim()),
        _ => None,
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

pub fn to_value(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal is a JSON number"))
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    to_value(v).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let v = Value::deserialize(d)?;
    from_value(&v).ok_or_else(|| D::Error::custom(format!("expected an integer, found {v}")))
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(to_value).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let vs = Vec::<Value>::deserialize(d)?;
        vs.iter()
            .map(|v| {
                from_value(v)
                    .ok_or_else(|| D::Error::custom(format!("expected an integer, found {v}")))
            })
            .collect()
    }
}
