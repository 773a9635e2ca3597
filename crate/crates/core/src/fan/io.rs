//! Fan files: a UTF-8 JSON object
//!
//! ```json
//! { "rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]] }
//! ```
//!
//! Coordinates may be JSON numbers of any length or decimal strings. Ray
//! indices are 0-based. `"max_cones": [[]]` is the fan consisting of the
//! zero cone only. Unknown keys are rejected.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{Map, Value};

use super::{
    validate_fan, with_cone_index, with_ray_index, Cone, Fan, FanError, Finding, RayVector,
};
use crate::bigint_serde;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Divide non-primitive rays by the gcd of their coordinates instead of
    /// rejecting them.
    pub normalize_rays: bool,
}

const KEYS: [&str; 3] = ["rank", "rays", "max_cones"];

/// Parses and fully validates a fan file.
pub fn parse_fan(document: &str, opts: ParseOptions) -> Result<Fan, FanError> {
    let fan = parse_fan_unchecked(document, opts)?;
    match validate_fan(&fan).iter().find_map(Finding::to_error) {
        Some(e) => Err(e),
        None => Ok(fan),
    }
}

/// Parses a fan file, checking only what the ray and cone types enforce
/// (primitive nonzero rays, no repeated index inside a cone). Run
/// [`validate_fan`] on the result for the remaining checks.
pub fn parse_fan_unchecked(document: &str, opts: ParseOptions) -> Result<Fan, FanError> {
    let value: Value =
        serde_json::from_str(document).map_err(|e| FanError::Syntax(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| syntax("top level must be a JSON object"))?;
    check_keys(obj)?;

    let rank = field(obj, "rank")?;
    let rank = bigint_serde::from_value(rank)
        .and_then(|r| usize::try_from(r).ok())
        .ok_or_else(|| syntax("\"rank\" must be a nonnegative integer"))?;

    let rays = field(obj, "rays")?
        .as_array()
        .ok_or_else(|| syntax("\"rays\" must be an array"))?
        .iter()
        .enumerate()
        .map(|(i, v)| parse_ray(i, v, opts))
        .collect::<Result<Vec<_>, _>>()?;

    let cones = field(obj, "max_cones")?
        .as_array()
        .ok_or_else(|| syntax("\"max_cones\" must be an array"))?
        .iter()
        .enumerate()
        .map(|(k, v)| parse_cone(k, v))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(Fan::new_unchecked(rank, rays, cones))
}

fn syntax(msg: impl Into<String>) -> FanError {
    FanError::Syntax(msg.into())
}

fn check_keys(obj: &Map<String, Value>) -> Result<(), FanError> {
    match obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        Some(k) => Err(syntax(format!("unknown key {k:?}"))),
        None => Ok(()),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, FanError> {
    obj.get(key)
        .ok_or_else(|| syntax(format!("missing key {key:?}")))
}

fn parse_ray(i: usize, v: &Value, opts: ParseOptions) -> Result<RayVector, FanError> {
    let coords = v
        .as_array()
        .ok_or_else(|| syntax(format!("ray {i} must be an array of integers")))?
        .iter()
        .map(|c| {
            bigint_serde::from_value(c)
                .ok_or_else(|| syntax(format!("ray {i}: {c} is not an integer")))
        })
        .collect::<Result<Vec<BigInt>, _>>()?;
    let ray = if opts.normalize_rays {
        RayVector::normalized(coords)
    } else {
        RayVector::new(coords)
    };
    ray.map_err(|e| with_ray_index(e, i))
}

fn parse_cone(k: usize, v: &Value) -> Result<Cone, FanError> {
    let indices = v
        .as_array()
        .ok_or_else(|| syntax(format!("cone {k} must be an array of ray indices")))?
        .iter()
        .map(|c| {
            bigint_serde::from_value(c)
                .and_then(|i| usize::try_from(i).ok())
                .ok_or_else(|| syntax(format!("cone {k}: {c} is not a ray index")))
        })
        .collect::<Result<Vec<usize>, _>>()?;
    Cone::new(indices).map_err(|e| with_cone_index(e, k))
}

/// Serializes a fan in the file format, one line, newline-terminated.
pub fn to_json(fan: &Fan) -> String {
    fn list<T>(items: &[T], each: impl Fn(&T) -> String) -> String {
        let parts: Vec<String> = items.iter().map(each).collect();
        format!("[{}]", parts.join(", "))
    }
    let rays = list(fan.rays(), |r| list(r.coords(), |c| c.to_string()));
    let cones = list(fan.max_cones(), |c| {
        list(c.ray_indices(), |i| i.to_string())
    });
    let mut out = String::new();
    writeln!(
        out,
        "{{\"rank\": {}, \"rays\": {rays}, \"max_cones\": {cones}}}",
        fan.rank()
    )
    .unwrap();
    out
}
