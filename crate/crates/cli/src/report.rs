//! JSON and CSV rendering shared by all commands.

use boxcover::{DimensionReport, Rational};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Rounds to 6 significant digits. Reports only carry rounded floats,
/// which keeps them stable across platforms whose last-bit rounding of
/// `ln` differs.
pub fn sig6(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.5e}").parse().expect("formatted float parses")
}

/// A verification verdict with its evidence.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport<T> {
    pub check_name: &'static str,
    pub passed: bool,
    pub details: T,
}

/// Text to emit plus the verdict, if the command produces one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub text: String,
    pub passed: Option<bool>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types always serialize")
}

/// Compact, rounded view of a [`DimensionReport`].
#[derive(Debug, Clone, Serialize)]
pub struct FitSummary {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub window: [Rational; 2],
    pub truncation_gap: Option<Rational>,
    pub valid: bool,
}

impl From<&DimensionReport> for FitSummary {
    fn from(rep: &DimensionReport) -> Self {
        FitSummary {
            slope: sig6(rep.slope),
            intercept: sig6(rep.intercept),
            r2: sig6(rep.r_squared),
            window: [rep.delta_max.clone(), rep.delta_min.clone()],
            truncation_gap: rep.truncation_gap.clone(),
            valid: rep.valid,
        }
    }
}
