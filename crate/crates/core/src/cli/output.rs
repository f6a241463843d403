use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    ok: bool,
    report: &'a T,
}

/// Renders a report wrapped as `{command, ok, report}`.
pub fn render<T: Serialize>(format: Format, command: &str, ok: bool, report: &T) -> Result<String> {
    let value = serde_json::to_value(Envelope {
        command,
        ok,
        report,
    })
    .map_err(|e| Error::Internal(format!("serialisation failed: {e}")))?;
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("values always serialise");
            s.push('\n');
            s
        }
        Format::Csv => to_csv(&value),
    })
}

/// One `path,value` row per scalar leaf; object keys and array indices are
/// joined with `.`.
pub fn to_csv(value: &Value) -> String {
    let mut rows = Vec::new();
    flatten(value, String::new(), &mut rows);
    let mut out = String::from("path,value\n");
    for (path, v) in rows {
        out.push_str(&quote(&path));
        out.push(',');
        out.push_str(&quote(&v));
        out.push('\n');
    }
    out
}

fn flatten(value: &Value, path: String, rows: &mut Vec<(String, String)>) {
    let join = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(v, join(k), rows);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(v, join(&i.to_string()), rows);
            }
        }
        Value::Null => rows.push((path, String::new())),
        Value::String(s) => rows.push((path, s.clone())),
        other => rows.push((path, other.to_string())),
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
