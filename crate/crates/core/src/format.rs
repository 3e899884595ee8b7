//! Point-set file formats: a JSON array of `"p/q"` strings, or CSV with
//! one value per line.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::{make_set, PointSet};

/// Parses either format. Input whose first non-blank character is `[`
/// is read as JSON, anything else as CSV.
pub fn parse_set(text: &str) -> Result<PointSet> {
    if text.trim_start().starts_with('[') {
        parse_json(text)
    } else {
        parse_csv(text)
    }
}

pub fn parse_json(text: &str) -> Result<PointSet> {
    let values: Vec<String> = serde_json::from_str(text).map_err(|e| Error::Parse {
        input: truncate(text),
        reason: e.to_string(),
    })?;
    values
        .iter()
        .map(|s| s.parse::<Rational>())
        .collect::<Result<Vec<_>>>()
        .map(make_set)
}

/// Blank lines and lines starting with `#` are skipped.
pub fn parse_csv(text: &str) -> Result<PointSet> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.trim_end_matches(',').parse::<Rational>())
        .collect::<Result<Vec<_>>>()
        .map(make_set)
}

pub fn to_json(set: &PointSet) -> String {
    serde_json::to_string(set.points()).expect("strings always serialize")
}

pub fn to_csv(set: &PointSet) -> String {
    set.iter().map(|x| format!("{x}\n")).collect()
}

fn truncate(text: &str) -> String {
    text.chars().take(40).collect()
}
