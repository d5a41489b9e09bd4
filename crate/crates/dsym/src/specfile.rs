//! Parsing of `--spec` arguments and custom specialization files.

use std::collections::BTreeMap;
use std::path::Path;

use dsym_core::{ASpec, CustomSpec, Rational};

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("unknown specialization {0:?}; expected zero, shifted, frobenius, generic:<seed> or custom:<file>")]
    Unknown(String),
    #[error("bad seed {0:?}")]
    Seed(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

pub fn parse_spec(arg: &str) -> Result<ASpec, SpecError> {
    match arg {
        "zero" => return Ok(ASpec::Zero),
        "shifted" => return Ok(ASpec::Shifted),
        "frobenius" => return Ok(ASpec::Frobenius),
        _ => {}
    }
    if let Some(seed) = arg.strip_prefix("generic:") {
        let seed = seed.parse().map_err(|_| SpecError::Seed(seed.to_string()))?;
        return Ok(ASpec::Generic { seed });
    }
    if let Some(path) = arg.strip_prefix("custom:") {
        return read_custom(Path::new(path)).map(ASpec::Custom);
    }
    Err(SpecError::Unknown(arg.to_string()))
}

pub fn read_custom(path: &Path) -> Result<CustomSpec, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io { path: path.display().to_string(), source })?;
    parse_custom(&text)
}

/// Lines are `i = value` or `default = p*i + q`; `#` starts a comment.
pub fn parse_custom(text: &str) -> Result<CustomSpec, SpecError> {
    let mut values = BTreeMap::new();
    let mut default = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let fail = |message: String| SpecError::Line { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| fail("expected `key = value`".into()))?;
        let (key, value) = (key.trim(), value.trim());
        if key == "default" {
            default = Some(parse_affine(value).ok_or_else(|| fail(format!("default must be p*i + q, got {value:?}")))?);
            continue;
        }
        let index: i32 = key.parse().map_err(|_| fail(format!("bad index {key:?}")))?;
        let v: Rational = value.parse().map_err(|_| fail(format!("bad value {value:?}")))?;
        if values.insert(index, v).is_some() {
            return Err(fail(format!("index {index} given twice")));
        }
    }
    Ok(CustomSpec { values, default })
}

/// Accepts `q`, `p*i`, `p*i + q`, `p*i - q`, `i`, `-i + q`.
fn parse_affine(text: &str) -> Option<(Rational, Rational)> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(pos) = compact.find('i') else {
        return Some((Rational::zero(), compact.parse().ok()?));
    };
    let (head, tail) = (&compact[..pos], &compact[pos + 1..]);
    let slope = match head.strip_suffix('*').unwrap_or(head) {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        s => s.parse().ok()?,
    };
    let offset = match tail {
        "" => Rational::zero(),
        t => t.strip_prefix('+').unwrap_or(t).parse().ok()?,
    };
    Some((slope, offset))
}
