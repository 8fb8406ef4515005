//! The machine-readable output envelope shared by every subcommand.
//!
//! Shape (see schema/output.schema.json):
//! { command, inputs, result, diagnostics: { elapsed_ms, warnings, ... } }
//!
//! Counts and coefficients are rendered as decimal strings so consumers
//! never face native-integer overflow; timings stay out of `result` to keep
//! it byte-deterministic.

use std::time::Duration;

use chaincount::{LatticePoint, PPolynomial};
use serde_json::{json, Map, Value};

pub fn polynomial_json(poly: &PPolynomial, var: &str) -> Value {
    let coefficients: Map<String, Value> = poly
        .terms()
        .map(|(degree, coeff)| (degree.to_string(), Value::String(coeff.to_string())))
        .collect();
    json!({
        "variable": var,
        "coefficients": coefficients,
        "degree": poly.degree(),
        "rendered": poly.render(var),
    })
}

pub fn point_json(point: LatticePoint) -> Value {
    json!({ "x": point.x, "y": point.y })
}

pub fn envelope(
    command: &str,
    inputs: Value,
    result: Value,
    mut diagnostics: Map<String, Value>,
    warnings: &[String],
    elapsed: Duration,
) -> Value {
    diagnostics.insert("elapsed_ms".to_string(), json!(elapsed.as_millis() as u64));
    diagnostics.insert("warnings".to_string(), json!(warnings));
    json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "diagnostics": diagnostics,
    })
}
