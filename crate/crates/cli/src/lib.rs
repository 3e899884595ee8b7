//! Library side of the `boxcover` command-line tool.

pub mod commands;
pub mod error;
pub mod report;
pub mod specs;
pub mod verify;

pub use error::{CliError, Result};
pub use report::{Format, Rendered};

pub const EXIT_OK: i32 = 0;
/// A verification ran to completion and its check failed.
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
/// The requested scales reach below the set's resolution.
pub const EXIT_WINDOW: i32 = 3;

/// Renders a verification report. Only JSON is supported.
pub fn render_verify<T: serde::Serialize>(
    report: &report::VerifyReport<T>,
    format: Format,
) -> Result<Rendered> {
    match format {
        Format::Json => Ok(Rendered {
            text: report::to_json(report),
            passed: Some(report.passed),
        }),
        Format::Csv => Err(CliError::Input(
            "verify commands only support --format json".into(),
        )),
    }
}

impl Rendered {
    pub fn exit_code(&self) -> i32 {
        match self.passed {
            Some(false) => EXIT_FAILED,
            _ => EXIT_OK,
        }
    }
}
