//! Polytope files and atomic output.
//!
//! A polytope file is JSON: `{"ambient_dim": n, "vertices": [[..], ..]}`
//! with integer coordinates of any size.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use thiserror::Error;

use crate::lattice::{LatticePolytope, LatticeVector};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: malformed JSON: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{path}: {message}")]
    Format { path: String, message: String },
}

fn format_err(path: &Path, message: impl Into<String>) -> InputError {
    InputError::Format { path: path.display().to_string(), message: message.into() }
}

pub fn parse_polytope(text: &str, path: &Path) -> Result<LatticePolytope, InputError> {
    let value: Value =
        serde_json::from_str(text).map_err(|source| InputError::Json { path: path.display().to_string(), source })?;
    let dim = value
        .get("ambient_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| format_err(path, "missing or invalid \"ambient_dim\""))? as usize;
    let vertices = value
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| format_err(path, "missing or invalid \"vertices\""))?;
    let mut points = Vec::with_capacity(vertices.len());
    for (i, v) in vertices.iter().enumerate() {
        let coords = v.as_array().ok_or_else(|| format_err(path, format!("vertex {i} is not an array")))?;
        if coords.len() != dim {
            return Err(format_err(path, format!("vertex {i} has {} coordinates, expected {dim}", coords.len())));
        }
        let parsed: Option<Vec<BigInt>> = coords
            .iter()
            .map(|c| c.as_number().and_then(|n| BigInt::from_str(&n.to_string()).ok()))
            .collect();
        let parsed = parsed.ok_or_else(|| format_err(path, format!("vertex {i} has a non-integer coordinate")))?;
        points.push(LatticeVector::new(parsed));
    }
    if dim == 0 {
        return Err(format_err(path, "ambient_dim must be positive"));
    }
    LatticePolytope::convex_hull(&points).map_err(|e| format_err(path, e.to_string()))
}

pub fn read_polytope(path: &Path) -> Result<LatticePolytope, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
    parse_polytope(&text, path)
}

fn big(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

pub fn polytope_json(p: &LatticePolytope) -> String {
    let vertices: Vec<Value> = p.vertices().iter().map(|v| Value::Array(v.coords().iter().map(big).collect())).collect();
    serde_json::to_string_pretty(&json!({ "ambient_dim": p.ambient_dim(), "vertices": vertices })).expect("serializes")
        + "\n"
}

/// Write via a temporary file in the target directory, then rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
