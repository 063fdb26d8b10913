//! Field files: `key = value` lines with keys `q` and `g`; `#` starts a
//! comment.
//!
//! ```text
//! q = 3
//! g = x^2 - T
//! ```

use std::path::Path;

use crate::ffpoly::{parse_bipoly, FqField};

use super::{FunctionFieldExt, SplitError};

pub fn read_field_file(path: &Path) -> Result<FunctionFieldExt, SplitError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SplitError::Io(format!("{}: {e}", path.display())))?;
    parse_field_file(&text)
}

pub fn parse_field_file(text: &str) -> Result<FunctionFieldExt, SplitError> {
    let mut q = None;
    let mut g = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| SplitError::Parse(format!("line {}: {msg}", lineno + 1));
        let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
        let value = value.trim();
        match key.trim() {
            "q" => q = Some(value.parse::<u64>().map_err(|_| err(format!("bad field order {value:?}")))?),
            "g" => g = Some(value.to_string()),
            other => return Err(err(format!("unknown key {other:?}"))),
        }
    }
    let q = q.ok_or_else(|| SplitError::Parse("missing `q =` line".into()))?;
    let g = g.ok_or_else(|| SplitError::Parse("missing `g =` line".into()))?;
    let field = FqField::of_order(q)?;
    FunctionFieldExt::new(parse_bipoly(&field, &g)?)
}
