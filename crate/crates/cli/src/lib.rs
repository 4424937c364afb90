//! Library half of the `projineq` binary: input ingestion, report layout, the
//! seeded verification harness, and the command implementations.

pub mod commands;
pub mod fuzz;
pub mod input;
pub mod report;

use thiserror::Error;

pub const EXIT_OK: i32 = 0;
/// Malformed input: unreadable files, bad JSON/CSV, invalid flags or weights.
pub const EXIT_INPUT: i32 = 2;
/// Structurally inconsistent input: mismatched dimensions or outcome counts.
pub const EXIT_DIMENSION: i32 = 3;
/// Degenerate input such as a zero direction vector.
pub const EXIT_DEGENERATE: i32 = 4;
/// A verified property was violated beyond tolerance.
pub const EXIT_VIOLATION: i32 = 5;

/// Command-level failure, bucketed by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Dimension(String),
    #[error("{0}")]
    Degenerate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Dimension(_) => EXIT_DIMENSION,
            CliError::Degenerate(_) => EXIT_DEGENERATE,
        }
    }
}

impl From<projineq_core::Error> for CliError {
    fn from(err: projineq_core::Error) -> Self {
        use projineq_core::Error as E;
        match err {
            E::DimensionMismatch { .. } | E::LengthMismatch { .. } | E::MismatchedSpaces => {
                CliError::Dimension(err.to_string())
            }
            E::ZeroDirection => CliError::Degenerate(err.to_string()),
            _ => CliError::Input(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Input(err.to_string())
    }
}

/// Tolerance resolution: explicit flag, then `PROJINEQ_TOLERANCE`, then the
/// library default.
pub fn resolve_tolerance(flag: Option<f64>) -> Result<f64, CliError> {
    let validate = |value: f64, origin: &str| {
        if value.is_finite() && value > 0.0 {
            Ok(value)
        } else {
            Err(CliError::Input(format!(
                "tolerance from {origin} must be a positive finite number, got {value}"
            )))
        }
    };
    if let Some(value) = flag {
        return validate(value, "--tolerance");
    }
    if let Ok(raw) = std::env::var("PROJINEQ_TOLERANCE") {
        let value = raw.parse::<f64>().map_err(|_| {
            CliError::Input(format!("PROJINEQ_TOLERANCE is not a number: {raw:?}"))
        })?;
        return validate(value, "PROJINEQ_TOLERANCE");
    }
    Ok(projineq_core::default_rel_tol())
}
