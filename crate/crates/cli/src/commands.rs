//! `set`, `cover` and `dim`.

use boxcover::dimension::window_violation;
use boxcover::{estimate_dimension, min_cover, PointSet, Rational, ScaleSchedule};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::report::{sig6, to_json, FitSummary, Format, Rendered};
use crate::specs::{ScaleSpec, SetSpec};

/// Longest default schedule, used when a set has no resolution limit.
pub const MAX_DEFAULT_STEPS: usize = 60;

pub fn parse_delta(text: &str) -> Result<Rational> {
    let delta: Rational = text
        .parse()
        .map_err(|e| CliError::Input(format!("--delta: {e}")))?;
    if !delta.is_positive() {
        return Err(CliError::Input(format!("--delta must be positive, got {delta}")));
    }
    Ok(delta)
}

/// `geo:1/4:1/2:steps` with as many steps as the set's resolution allows.
pub fn default_schedule(f: &PointSet) -> Result<ScaleSchedule> {
    let floor = f.min_gap().unwrap_or_else(Rational::zero);
    Ok(ScaleSchedule::down_to(
        Rational::new(1, 4)?,
        Rational::new(1, 2)?,
        &floor,
        MAX_DEFAULT_STEPS,
    )?)
}

pub fn emit_set(spec: &SetSpec, format: Format) -> Result<Rendered> {
    let set = spec.build()?;
    let text = match format {
        Format::Json => boxcover::format::to_json(&set),
        Format::Csv => boxcover::format::to_csv(&set),
    };
    Ok(Rendered { text, passed: None })
}

#[derive(Serialize)]
struct Left<'a> {
    left: &'a Rational,
}

#[derive(Serialize)]
struct CoverJson<'a> {
    delta: &'a Rational,
    intervals: Vec<Left<'a>>,
    count: usize,
}

pub fn cover(spec: &SetSpec, delta: &Rational, format: Format) -> Result<Rendered> {
    let set = spec.build()?;
    let cover = min_cover(&set, delta)?;
    let text = match format {
        Format::Json => to_json(&CoverJson {
            delta: cover.delta(),
            intervals: cover.lefts().iter().map(|left| Left { left }).collect(),
            count: cover.len(),
        }),
        Format::Csv => {
            let mut out = String::from("left,right\n");
            for (a, b) in cover.intervals() {
                out.push_str(&format!("{a},{b}\n"));
            }
            out
        }
    };
    Ok(Rendered { text, passed: None })
}

#[derive(Debug, Serialize)]
pub struct DimJson {
    pub set: String,
    pub size: usize,
    pub schedule: String,
    #[serde(flatten)]
    pub fit: FitSummary,
    pub samples: Vec<(Rational, usize)>,
}

/// Fits the dimension of `spec` over `scales`, or the default schedule.
/// A schedule reaching below the set's resolution is an error unless
/// `force` is set, in which case the report says `valid: false`.
pub fn dim_report(spec: &SetSpec, scales: Option<&ScaleSpec>, force: bool) -> Result<DimJson> {
    let set = spec.build()?;
    let scales = match scales {
        Some(s) => s.clone(),
        None => default_schedule(&set)?.into(),
    };
    if !force {
        if let Some((scale, gap)) = window_violation(&set, &scales.schedule) {
            return Err(CliError::Window {
                message: format!(
                    "scale {scale} in {} is below the resolution {gap} of {}; \
                     use fewer steps or --force",
                    scales.text,
                    set.label().unwrap_or("the set")
                ),
                required_max: None,
            });
        }
    }
    let rep = estimate_dimension(&set, &scales.schedule)?;
    Ok(DimJson {
        set: set.label().unwrap_or("set").to_string(),
        size: set.len(),
        schedule: scales.text,
        fit: FitSummary::from(&rep),
        samples: rep.samples,
    })
}

pub fn dim(spec: &SetSpec, scales: Option<&ScaleSpec>, force: bool, format: Format) -> Result<Rendered> {
    let report = dim_report(spec, scales, force)?;
    let text = match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut out = String::from("delta,count,log_inv_delta,log_count\n");
            for (delta, count) in &report.samples {
                out.push_str(&format!(
                    "{delta},{count},{},{}\n",
                    sig6(-delta.ln()),
                    sig6((*count as f64).ln())
                ));
            }
            out
        }
    };
    Ok(Rendered { text, passed: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_json_shape() {
        let out = cover(&SetSpec::Reciprocal(3), &"1/6".parse().unwrap(), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "delta": "1/6",
                "intervals": [{"left": "1/3"}, {"left": "1"}],
                "count": 2
            })
        );
    }

    #[test]
    fn cover_csv() {
        let out = cover(&SetSpec::Reciprocal(3), &"1/6".parse().unwrap(), Format::Csv).unwrap();
        assert_eq!(out.text, "left,right\n1/3,1/2\n1,7/6\n");
    }

    #[test]
    fn delta_must_be_positive() {
        assert!(parse_delta("0").is_err());
        assert!(parse_delta("-1/2").is_err());
        assert!(parse_delta("x").is_err());
    }

    #[test]
    fn default_schedule_respects_resolution() {
        let set = boxcover::reciprocal_integers(100).unwrap();
        let s = default_schedule(&set).unwrap();
        assert!(s.smallest() >= set.min_gap().unwrap());
        assert!(s.smallest() * Rational::new(1, 2).unwrap() < set.min_gap().unwrap());
    }

    #[test]
    fn window_violation_is_an_error_unless_forced() {
        let spec = SetSpec::Reciprocal(10);
        let scales: ScaleSpec = "geo:1/4:1/2:12".parse().unwrap();
        let err = dim_report(&spec, Some(&scales), false).unwrap_err();
        assert_eq!(err.exit_code(), crate::EXIT_WINDOW);
        let forced = dim_report(&spec, Some(&scales), true).unwrap();
        assert!(!forced.fit.valid);
    }
}
