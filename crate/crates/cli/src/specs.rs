//! Parsing of set specifiers (`reciprocal:m`, `primepow:p:K`,
//! `smooth:p1,p2,...:m`, `cantor:depth`, `file:PATH`) and scale
//! specifiers (`geo:<d0>:<ratio>:<steps>`, `pow3:<steps>`).

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use boxcover::{
    cantor_endpoints, prime_power_reciprocals, reciprocal_integers, smooth_reciprocals, PointSet,
    Rational, ScaleSchedule,
};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetSpec {
    Reciprocal(u64),
    PrimePow(u64, u32),
    Smooth(Vec<u64>, u64),
    Cantor(u32),
    File(PathBuf),
}

fn bad(input: &str, why: impl fmt::Display) -> CliError {
    CliError::Input(format!("invalid specifier {input:?}: {why}"))
}

fn num<T: FromStr>(input: &str, field: &str) -> Result<T> {
    field
        .trim()
        .parse()
        .map_err(|_| bad(input, format!("{field:?} is not a non-negative integer")))
}

/// Comma-separated list of integers, as taken by `--primes`.
pub fn parse_list(input: &str) -> Result<Vec<u64>> {
    input
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| num(input, s))
        .collect()
}

impl FromStr for SetSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| bad(s, "expected <kind>:<params>"))?;
        let parts: Vec<&str> = rest.split(':').collect();
        match (kind, parts.as_slice()) {
            ("reciprocal", [m]) => Ok(SetSpec::Reciprocal(num(s, m)?)),
            ("primepow", [p, k]) => Ok(SetSpec::PrimePow(num(s, p)?, num(s, k)?)),
            ("smooth", [primes, m]) => Ok(SetSpec::Smooth(parse_list(primes)?, num(s, m)?)),
            ("cantor", [depth]) => Ok(SetSpec::Cantor(num(s, depth)?)),
            // paths may themselves contain ':'
            ("file", _) if !rest.is_empty() => Ok(SetSpec::File(PathBuf::from(rest))),
            ("reciprocal" | "primepow" | "smooth" | "cantor" | "file", _) => {
                Err(bad(s, "wrong number of parameters"))
            }
            _ => Err(bad(s, format!("unknown set kind {kind:?}"))),
        }
    }
}

impl SetSpec {
    pub fn build(&self) -> Result<PointSet> {
        Ok(match self {
            SetSpec::Reciprocal(m) => reciprocal_integers(*m)?,
            SetSpec::PrimePow(p, k) => prime_power_reciprocals(*p, *k)?,
            SetSpec::Smooth(primes, m) => smooth_reciprocals(primes, *m)?,
            SetSpec::Cantor(depth) => {
                if *depth > 24 {
                    return Err(CliError::Input(format!(
                        "cantor depth {depth} exceeds the supported maximum of 24"
                    )));
                }
                cantor_endpoints(*depth)
            }
            SetSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                boxcover::format::parse_set(&text)?.with_label(format!("file:{}", path.display()))
            }
        })
    }
}

/// A parsed scale schedule together with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleSpec {
    pub text: String,
    pub schedule: ScaleSchedule,
}

impl FromStr for ScaleSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let rational = |field: &str| -> Result<Rational> {
            field.parse().map_err(|e| bad(s, e))
        };
        let schedule = match parts.as_slice() {
            ["geo", d0, ratio, steps] => {
                ScaleSchedule::new(rational(d0)?, rational(ratio)?, num(s, steps)?)
            }
            ["pow3", steps] => ScaleSchedule::pow3(num(s, steps)?),
            _ => return Err(bad(s, "expected geo:<d0>:<ratio>:<steps> or pow3:<steps>")),
        }
        .map_err(|e| bad(s, e))?;
        Ok(ScaleSpec {
            text: s.to_string(),
            schedule,
        })
    }
}

impl From<ScaleSchedule> for ScaleSpec {
    fn from(schedule: ScaleSchedule) -> Self {
        ScaleSpec {
            text: schedule.to_string(),
            schedule,
        }
    }
}
