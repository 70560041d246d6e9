//! Umbra specifications on the command line.
//!
//! A spec is either `@path.json` or a `.`-separated chain of tokens, each a
//! rational `c` (the umbra `c.upsilon`, moments `c^n`) or a registry name.
//! The chain is folded left to right with the dot product, so `2.catalan`
//! is `2.varsigma` and `singleton.-1` is `chi.-1`.

use std::fs;

use riordan::{Error, Named, Rational, Umbra};
use serde_json::Value;

pub fn parse_spec(text: &str, order: usize) -> Result<Umbra, String> {
    if let Some(path) = text.strip_prefix('@') {
        return from_file(path, order);
    }
    let mut acc: Option<Umbra> = None;
    for token in text.split('.') {
        let next = token_umbra(token, order)?;
        acc = Some(match acc {
            None => next,
            Some(prev) => prev.dot(&next).map_err(|e| e.to_string())?,
        });
    }
    acc.ok_or_else(|| "empty umbra spec".to_string())
}

fn token_umbra(token: &str, order: usize) -> Result<Umbra, String> {
    let token = token.trim();
    if token.is_empty() {
        return Err("empty token in umbra spec".into());
    }
    let starts_numeric = token
        .chars()
        .next()
        .is_some_and(|ch| ch.is_ascii_digit() || ch == '-' || ch == '+');
    if starts_numeric {
        let c: Rational = token.parse().map_err(|e: Error| e.to_string())?;
        return Ok(Umbra::scalar(&c, order));
    }
    token
        .parse::<Named>()
        .map(|name| name.umbra(order))
        .map_err(|e| e.to_string())
}

fn from_file(path: &str, order: usize) -> Result<Umbra, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
    let umbra = match value {
        Value::Array(items) => {
            let moments = items
                .iter()
                .map(json_rational)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| format!("{path}: {e}"))?;
            Umbra::from_moments(moments).map_err(|e| format!("{path}: {e}"))?
        }
        other => serde_json::from_value::<Umbra>(other).map_err(|e| format!("{path}: {e}"))?,
    };
    if umbra.order() < order {
        return Err(format!(
            "{path}: {} moments given, order {order} needs {}",
            umbra.order() + 1,
            order + 1
        ));
    }
    umbra.truncate(order).map_err(|e| e.to_string())
}

fn json_rational(v: &Value) -> Result<Rational, String> {
    match v {
        Value::String(s) => s.parse().map_err(|e: Error| e.to_string()),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from)
            .ok_or_else(|| format!("moment {n} is not an integer; write fractions as strings")),
        other => Err(format!("moment {other} is neither a string nor an integer")),
    }
}
