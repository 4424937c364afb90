//! Input ingestion: JSON documents for exact vector/projector specs and CSV
//! tables for sample data.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use projineq_core::{DiscreteRandomVariable64, ProbabilitySpace64, Projector64, Vector64};

use crate::CliError;

pub const INPUT_VERSION: u32 = 1;

/// Document accepted by `projineq bounds`: vectors `x`, `y` and either a
/// spanning set for the subspace or a single direction `z`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsInput {
    #[serde(default = "default_version")]
    pub version: u32,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<Vec<f64>>,
}

fn default_version() -> u32 {
    INPUT_VERSION
}

/// Validated bounds instance. `direction` is the normalized `z` when the
/// projector is one-dimensional, which is what the classical witnesses need.
pub struct BoundsInstance {
    pub x: Vector64,
    pub y: Vector64,
    pub projector: Projector64,
    pub direction: Option<Vector64>,
}

pub fn read_bounds_input(path: &Path) -> Result<BoundsInput, CliError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_bounds_input(&raw)
}

pub fn parse_bounds_input(raw: &str) -> Result<BoundsInput, CliError> {
    let input: BoundsInput = serde_json::from_str(raw)
        .map_err(|e| CliError::Input(format!("malformed JSON input: {e}")))?;
    if input.version != INPUT_VERSION {
        return Err(CliError::Input(format!(
            "unsupported input version {} (expected {INPUT_VERSION})",
            input.version
        )));
    }
    Ok(input)
}

impl BoundsInput {
    pub fn build(&self) -> Result<BoundsInstance, CliError> {
        let x = Vector64::new(self.x.clone()).map_err(|e| describe("x", e))?;
        let y = Vector64::new(self.y.clone()).map_err(|e| describe("y", e))?;
        if y.dim() != x.dim() {
            return Err(CliError::Dimension(format!(
                "x has dimension {} but y has dimension {}",
                x.dim(),
                y.dim()
            )));
        }
        let (projector, direction) = match (&self.span, &self.z) {
            (Some(_), Some(_)) => {
                return Err(CliError::Input(
                    "provide either a spanning set or a direction z, not both".into(),
                ))
            }
            (None, None) => {
                return Err(CliError::Input(
                    "input must contain a spanning set (span) or a direction (z)".into(),
                ))
            }
            (Some(span), None) => {
                let vectors = span
                    .iter()
                    .map(|coords| Vector64::new(coords.clone()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| describe("span", e))?;
                let p = if vectors.is_empty() {
                    Projector64::zero(x.dim()).map_err(CliError::from)?
                } else {
                    Projector64::from_spanning_set(&vectors).map_err(CliError::from)?
                };
                // a rank-one span determines a direction for the classical witnesses
                let direction = (p.rank() == 1).then(|| p.basis()[0].clone());
                (p, direction)
            }
            (None, Some(z)) => {
                let z = Vector64::new(z.clone()).map_err(|e| describe("z", e))?;
                let p = Projector64::rank_one(&z).map_err(CliError::from)?;
                let direction = Some(p.basis()[0].clone());
                (p, direction)
            }
        };
        if projector.ambient_dim() != x.dim() {
            return Err(CliError::Dimension(format!(
                "projector lives in dimension {} but x has dimension {}",
                projector.ambient_dim(),
                x.dim()
            )));
        }
        Ok(BoundsInstance {
            x,
            y,
            projector,
            direction,
        })
    }
}

fn describe(field: &str, err: projineq_core::Error) -> CliError {
    match CliError::from(err) {
        CliError::Input(msg) => CliError::Input(format!("field {field:?}: {msg}")),
        CliError::Dimension(msg) => CliError::Dimension(format!("field {field:?}: {msg}")),
        CliError::Degenerate(msg) => CliError::Degenerate(format!("field {field:?}: {msg}")),
    }
}

/// CSV ingestion: header row required, one observation per row, `.` decimal
/// point. Returns the requested columns as variables on a shared space built
/// from the weight column (validated, not renormalized) or the equal-weight
/// empirical measure.
pub fn read_csv_variables(
    path: &Path,
    columns: &[String],
    weight_column: Option<&str>,
    tolerance: f64,
) -> Result<Vec<(String, DiscreteRandomVariable64)>, CliError> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| CliError::Input(format!("malformed CSV header: {e}")))?
        .iter()
        .map(str::to_string)
        .collect();

    let find = |name: &str| -> Result<usize, CliError> {
        headers.iter().position(|h| h == name).ok_or_else(|| {
            CliError::Input(format!(
                "column {name:?} not found; available columns: {}",
                headers.join(", ")
            ))
        })
    };
    let column_indices = columns
        .iter()
        .map(|c| find(c))
        .collect::<Result<Vec<_>, _>>()?;
    let weight_index = weight_column.map(find).transpose()?;

    let mut values: Vec<Vec<f64>> = vec![Vec::new(); columns.len()];
    let mut weights: Vec<f64> = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record =
            record.map_err(|e| CliError::Input(format!("malformed CSV row {}: {e}", row + 1)))?;
        let parse = |idx: usize, name: &str| -> Result<f64, CliError> {
            let cell = record.get(idx).ok_or_else(|| {
                CliError::Input(format!("row {} has no column {name:?}", row + 1))
            })?;
            let value: f64 = cell.trim().parse().map_err(|_| {
                CliError::Input(format!(
                    "row {}, column {name:?}: {cell:?} is not a number",
                    row + 1
                ))
            })?;
            if !value.is_finite() {
                return Err(CliError::Input(format!(
                    "row {}, column {name:?}: non-finite value {value}",
                    row + 1
                )));
            }
            Ok(value)
        };
        for (slot, (&idx, name)) in column_indices.iter().zip(columns).enumerate() {
            values[slot].push(parse(idx, name)?);
        }
        if let Some(idx) = weight_index {
            weights.push(parse(idx, weight_column.unwrap())?);
        }
    }
    let rows = values.first().map_or(0, Vec::len);
    if rows == 0 {
        return Err(CliError::Input("CSV contains no data rows".into()));
    }

    let space = if weight_index.is_some() {
        ProbabilitySpace64::with_tolerance(weights, tolerance).map_err(CliError::from)?
    } else {
        ProbabilitySpace64::uniform(rows).map_err(CliError::from)?
    };
    let space = Arc::new(space);
    columns
        .iter()
        .zip(values)
        .map(|(name, column)| {
            DiscreteRandomVariable64::new(Arc::clone(&space), column)
                .map(|v| (name.clone(), v))
                .map_err(CliError::from)
        })
        .collect()
}

/// Splits a `--cols A,B` argument.
pub fn parse_columns(raw: &str) -> Result<Vec<String>, CliError> {
    let cols: Vec<String> = raw
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    if cols.is_empty() {
        return Err(CliError::Input("--cols must name at least one column".into()));
    }
    Ok(cols)
}
