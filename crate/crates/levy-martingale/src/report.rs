//! Versioned run reports with reproducible float formatting.
//!
//! Every command-line run emits one JSON report carrying the schema
//! version, the command, the raw invocation, the fully resolved
//! configuration (enough to re-run the computation), and the result
//! payload.  Floating-point values are serialized in scientific notation
//! with 17 significant digits, so a parsed report reproduces every `f64`
//! bit for bit; non-finite values become `null` (JSON has no spelling for
//! them).

use std::io::Write;

use serde::Serialize;

/// Report format version.
pub const SCHEMA_VERSION: u32 = 1;

/// Envelope around one command's result.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    /// The argv the run was started with.
    pub invocation: Vec<String>,
    /// Resolved configuration: catalog expansions applied, defaults
    /// filled in.
    pub config: serde_json::Value,
    pub result: serde_json::Value,
}

impl Report {
    pub fn new(
        command: &str,
        invocation: Vec<String>,
        config: serde_json::Value,
        result: serde_json::Value,
    ) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            invocation,
            config,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        to_json_sci(self)
    }
}

/// JSON formatter printing every float as `{:.16e}` (17 significant
/// digits: lossless for `f64`).
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.8e}")
    }
}

/// Serialize any value to JSON with the fixed float format.
pub fn to_json_sci<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

/// Render a JSON value as an indented key/value table for terminals.
///
/// Objects become `key: value` lines, nested structures indent, arrays of
/// scalars print inline, and arrays of objects print as dashed blocks.
/// This is a convenience view; the JSON report is the interface.
pub fn render_table(value: &serde_json::Value) -> String {
    let mut out = String::new();
    render(&mut out, value, 0);
    out
}

fn scalar(value: &serde_json::Value) -> Option<String> {
    match value {
        serde_json::Value::Null => Some("null".into()),
        serde_json::Value::Bool(b) => Some(b.to_string()),
        serde_json::Value::Number(n) => Some(n.to_string()),
        serde_json::Value::String(s) => Some(s.clone()),
        serde_json::Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        serde_json::Value::Object(_) => None,
    }
}

fn render(out: &mut String, value: &serde_json::Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        serde_json::Value::Object(map) => {
            for (key, val) in map {
                if let Some(s) = scalar(val) {
                    out.push_str(&format!("{pad}{key}: {s}\n"));
                } else {
                    out.push_str(&format!("{pad}{key}:\n"));
                    render(out, val, indent + 1);
                }
            }
        }
        serde_json::Value::Array(items) => {
            for item in items {
                if let Some(s) = scalar(item) {
                    out.push_str(&format!("{pad}- {s}\n"));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(out, item, indent + 1);
                }
            }
        }
        other => {
            if let Some(s) = scalar(other) {
                out.push_str(&format!("{pad}{s}\n"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn floats_round_trip_bit_for_bit() {
        for &v in &[
            0.5,
            std::f64::consts::PI,
            1.0 / 3.0,
            -2.2250738585072014e-308,
            6.02e23,
            -0.0,
        ] {
            let json = to_json_sci(&v);
            let back: f64 = serde_json::from_str(&json).unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{v} -> {json}");
        }
    }

    #[test]
    fn non_finite_floats_become_null() {
        assert_eq!(to_json_sci(&f64::NAN), "null");
        assert_eq!(to_json_sci(&f64::INFINITY), "null");
    }

    #[test]
    fn report_envelope_carries_schema_and_payload() {
        let report = Report::new(
            "describe",
            vec!["levy-mtg".into(), "describe".into(), "brownian".into()],
            json!({"process": "brownian"}),
            json!({"sigma2": 1.0}),
        );
        let text = report.to_json();
        assert!(text.starts_with("{\"schema\":1,"));
        assert!(text.contains("1.0000000000000000e0"));
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["command"], "describe");
    }

    #[test]
    fn tables_render_nested_structures() {
        let value = json!({
            "verdict": "martingale-function",
            "alpha": 5.0,
            "roots": [{"lambda": -1.0}, {"lambda": 1.0}],
            "domain": [null, 1.5],
        });
        let table = render_table(&value);
        assert!(table.contains("verdict: martingale-function"));
        assert!(table.contains("domain: [null, 1.5]"));
        assert!(table.contains("lambda: -1"));
    }
}
