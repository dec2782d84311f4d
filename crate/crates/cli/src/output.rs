//! Deterministic JSON: keys in declaration order, floats at 12 significant
//! digits, magnitudes below 1e-10 printed as 0.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{Number, Value};

use crate::error::CliError;

const ZERO_CUTOFF: f64 = 1e-10;

pub fn round_float(x: f64) -> f64 {
    if x.abs() < ZERO_CUTOFF {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn normalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_float(n.as_f64().expect("f64 number"));
            Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(normalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, normalize(v))).collect()),
        other => other,
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    serde_json::to_string(&normalize(v)).expect("values serialize")
}

/// Formats a float the way [`json`] would.
pub fn fmt_float(x: f64) -> String {
    json(&x)
}

pub struct Sink {
    out: Box<dyn Write>,
}

impl Sink {
    pub fn open(path: Option<&Path>) -> Result<Self, CliError> {
        let out: Box<dyn Write> = match path {
            Some(p) => {
                Box::new(std::fs::File::create(p).map_err(|source| CliError::Io { path: p.to_path_buf(), source })?)
            }
            None => Box::new(std::io::stdout().lock()),
        };
        Ok(Sink { out })
    }

    pub fn line(&mut self, text: &str) -> Result<(), CliError> {
        writeln!(self.out, "{text}").map_err(|source| CliError::Io { path: "<output>".into(), source })
    }

    pub fn flush(&mut self) -> Result<(), CliError> {
        self.out.flush().map_err(|source| CliError::Io { path: "<output>".into(), source })
    }
}
