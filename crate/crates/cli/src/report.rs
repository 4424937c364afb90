//! Machine-readable report documents. Field order is fixed by the struct
//! definitions and every document carries an explicit version tag, so two
//! serializations of the same report are byte-identical.

use serde::{Deserialize, Serialize};

use projineq_core::dfun::BoundChainReport;
use projineq_core::pcov::InequalityWitness;
use projineq_core::prob::{SharpeEqualization, SharpeRatio};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ChainJson {
    pub lower: f64,
    pub middle: f64,
    pub upper: f64,
    pub slack_lower: f64,
    pub slack_upper: f64,
    pub holds: bool,
}

impl From<BoundChainReport<f64>> for ChainJson {
    fn from(chain: BoundChainReport<f64>) -> Self {
        Self {
            lower: chain.lower,
            middle: chain.middle,
            upper: chain.upper,
            slack_lower: chain.slack_lower,
            slack_upper: chain.slack_upper,
            holds: chain.holds,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WitnessJson {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

impl From<InequalityWitness<f64>> for WitnessJson {
    fn from(w: InequalityWitness<f64>) -> Self {
        Self {
            name: w.name.label().to_string(),
            lhs: w.lhs,
            rhs: w.rhs,
            slack: w.slack,
            holds: w.holds,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GapJson {
    pub gap: f64,
    pub bound: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BoundsReport {
    pub version: u32,
    pub kind: String,
    pub tolerance: f64,
    pub ambient_dim: usize,
    pub projector_rank: usize,
    pub d_function: f64,
    pub chain: ChainJson,
    pub identity_residual: f64,
    pub gap: GapJson,
    pub witnesses: Vec<WitnessJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ColumnJson {
    pub name: String,
    pub mean: f64,
    pub std: f64,
    pub l2_norm: f64,
    /// `None` renders as JSON `null`: the ratio is undefined for zero risk.
    pub sharpe: Option<f64>,
}

impl ColumnJson {
    pub fn new(name: &str, l2_norm: f64, sharpe: SharpeRatio<f64>) -> Self {
        Self {
            name: name.to_string(),
            mean: sharpe.mean,
            std: sharpe.sigma,
            l2_norm,
            sharpe: sharpe.value,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EqualizationJson {
    pub gap: f64,
    pub equalized: bool,
    pub sr_squared_gap: Option<f64>,
}

impl From<SharpeEqualization<f64>> for EqualizationJson {
    fn from(eq: SharpeEqualization<f64>) -> Self {
        Self {
            gap: eq.gap,
            equalized: eq.equalized,
            sr_squared_gap: eq.sr_squared_gap,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WalkerPairJson {
    pub x_column: String,
    pub y_column: String,
    pub e_xy: f64,
    pub chain: ChainJson,
    pub cs_bound: f64,
    pub improvement: f64,
    pub equalization: EqualizationJson,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WalkerReport {
    pub version: u32,
    pub kind: String,
    pub tolerance: f64,
    pub outcomes: usize,
    pub weighting: String,
    pub columns: Vec<ColumnJson>,
    pub pair: WalkerPairJson,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AveragedWalkerJson {
    pub averaged_bound: f64,
    pub walker_bound: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct HoelderCliReport {
    pub version: u32,
    pub kind: String,
    pub tolerance: f64,
    pub p: f64,
    pub q: f64,
    pub x_column: String,
    pub y_column: String,
    pub outcomes: usize,
    pub lhs: f64,
    pub refined: f64,
    pub classical: f64,
    pub young_term: f64,
    pub improvement: f64,
    pub holds: bool,
    /// Present only for `p = 2`, where the refined bound averages the
    /// Cauchy-Schwarz product with the full Walker bound.
    pub p2_comparison: Option<AveragedWalkerJson>,
}

/// Serializes a report and optionally writes it to a file.
pub fn write_json<T: Serialize>(report: &T, path: Option<&std::path::Path>) -> std::io::Result<()> {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(report)?;
        text.push('\n');
        std::fs::write(path, text)?;
    }
    Ok(())
}
