//! Discrete L² realization: finite weighted outcome spaces, expectations,
//! classical covariance as a one-dimensional projection covariance, Walker's
//! inequality and Sharpe-ratio diagnostics.

use std::sync::Arc;

use crate::dfun::BoundChainReport;
use crate::error::{Error, Result};
use crate::space::Vector;
use crate::Real;

/// Finite outcome space with nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilitySpace<R: Real> {
    weights: Vec<R>,
}

impl<R: Real> ProbabilitySpace<R> {
    pub fn new(weights: Vec<R>) -> Result<Self> {
        Self::with_tolerance(weights, crate::default_rel_tol())
    }

    /// Validates the weight sum against an explicit relative tolerance.
    pub fn with_tolerance(weights: Vec<R>, rel_tol: R) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut sum = R::zero();
        for (index, &w) in weights.iter().enumerate() {
            if !w.is_finite() {
                return Err(Error::NonFiniteValue { index });
            }
            if w < R::zero() {
                return Err(Error::NegativeWeight {
                    index,
                    value: w.to_f64().unwrap_or(f64::NAN),
                });
            }
            sum = sum + w;
        }
        if (sum - R::one()).abs() > rel_tol {
            return Err(Error::WeightSum {
                sum: sum.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { weights })
    }

    /// Equal-weight empirical measure on `outcomes` points.
    pub fn uniform(outcomes: usize) -> Result<Self> {
        if outcomes == 0 {
            return Err(Error::EmptySpace);
        }
        let w = R::from_usize(outcomes)
            .expect("outcome count representable")
            .recip();
        Ok(Self {
            weights: vec![w; outcomes],
        })
    }

    pub fn outcomes(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[R] {
        &self.weights
    }
}

/// Real-valued variable on a shared [`ProbabilitySpace`]. The space is held
/// by reference-counted pointer so alignment checks between variables are
/// cheap.
#[derive(Debug, Clone)]
pub struct DiscreteRandomVariable<R: Real> {
    space: Arc<ProbabilitySpace<R>>,
    values: Vec<R>,
}

impl<R: Real> DiscreteRandomVariable<R> {
    pub fn new(space: Arc<ProbabilitySpace<R>>, values: Vec<R>) -> Result<Self> {
        if values.len() != space.outcomes() {
            return Err(Error::LengthMismatch {
                values: values.len(),
                outcomes: space.outcomes(),
            });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        Ok(Self { space, values })
    }

    /// The constant variable `value · 1`.
    pub fn constant(space: Arc<ProbabilitySpace<R>>, value: R) -> Result<Self> {
        let outcomes = space.outcomes();
        Self::new(space, vec![value; outcomes])
    }

    pub fn space(&self) -> &Arc<ProbabilitySpace<R>> {
        &self.space
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// Pointer equality first, content equality as fallback.
    pub fn same_space(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.space, &other.space) || self.space == other.space
    }

    pub(crate) fn weighted_sum(&self, f: impl Fn(R) -> R) -> R {
        self.space
            .weights
            .iter()
            .zip(&self.values)
            .map(|(&w, &v)| w * f(v))
            .sum()
    }

    /// `E X = Σᵢ wᵢ xᵢ`; equals `⟨X, 1⟩` in the weighted inner product.
    pub fn expectation(&self) -> R {
        self.weighted_sum(|v| v)
    }

    /// `‖X‖₂ = sqrt(E X²)`.
    pub fn l2_norm(&self) -> R {
        self.weighted_sum(|v| v * v).sqrt()
    }

    /// `E X² − (E X)²`, clamped at zero when rounding drives it negative.
    pub fn variance(&self) -> R {
        let mean = self.expectation();
        (self.weighted_sum(|v| v * v) - mean * mean).max(R::zero())
    }

    pub fn std(&self) -> R {
        self.variance().sqrt()
    }

    /// Pointwise `|X|` on the same outcome space.
    pub fn abs(&self) -> Self {
        Self {
            space: Arc::clone(&self.space),
            values: self.values.iter().map(|v| v.abs()).collect(),
        }
    }

    /// Pointwise `|X|^e` on the same outcome space.
    pub fn abs_pow(&self, exponent: R) -> Self {
        Self {
            space: Arc::clone(&self.space),
            values: self
                .values
                .iter()
                .map(|v| v.abs().powf(exponent))
                .collect(),
        }
    }

    /// Embeds the variable into ℝ^m with coordinates `xᵢ√wᵢ`, so Euclidean
    /// inner products of embeddings realize `E(XY)`.
    pub fn euclidean_embedding(&self) -> Vector<R> {
        let coords = self
            .space
            .weights
            .iter()
            .zip(&self.values)
            .map(|(&w, &v)| v * w.sqrt())
            .collect();
        Vector::new(coords).expect("embedding of a valid variable is finite and nonempty")
    }

    /// Mean excess return per unit of risk; `value` is `None` when the
    /// standard deviation does not exceed `sigma_floor`.
    pub fn sharpe_ratio(&self, sigma_floor: R) -> SharpeRatio<R> {
        let mean = self.expectation();
        let sigma = self.std();
        let value = (sigma > sigma_floor).then(|| mean / sigma);
        SharpeRatio { value, sigma, mean }
    }
}

fn check_same_space<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
) -> Result<()> {
    if !x.same_space(y) {
        return Err(Error::MismatchedSpaces);
    }
    Ok(())
}

/// `⟨X,Y⟩ = E(XY)`.
pub fn l2_inner<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
) -> Result<R> {
    check_same_space(x, y)?;
    Ok(x.space
        .weights
        .iter()
        .zip(&x.values)
        .zip(&y.values)
        .map(|((&w, &a), &b)| w * a * b)
        .sum())
}

/// Classical covariance `E(XY) − EX·EY`; this is the projection covariance
/// for the rank-one projector onto the constant-one variable.
pub fn covariance<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
) -> Result<R> {
    Ok(l2_inner(x, y)? - x.expectation() * y.expectation())
}

/// `‖X‖₂²‖Y‖₂² − (|EX|σ_Y − |EY|σ_X)²` before clamping; nonnegative up to
/// rounding, exposed so harnesses can record the raw deficit.
pub fn walker_radicand<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
) -> Result<R> {
    check_same_space(x, y)?;
    let deflation = x.expectation().abs() * y.std() - y.expectation().abs() * x.std();
    let norms = x.l2_norm() * y.l2_norm();
    Ok(norms * norms - deflation * deflation)
}

/// Walker's bound on `|E(XY)|`: the Cauchy-Schwarz product deflated by the
/// mean/deviation mismatch, `sqrt(‖X‖₂²‖Y‖₂² − (|EX|σ_Y − |EY|σ_X)²)`.
pub fn walker_bound<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
) -> Result<R> {
    Ok(walker_radicand(x, y)?.max(R::zero()).sqrt())
}

/// The chain `|E(XY)| ≤ walker_bound ≤ ‖X‖₂‖Y‖₂`.
pub fn walker_chain<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
    rel_tol: R,
) -> Result<BoundChainReport<R>> {
    let lower = l2_inner(x, y)?.abs();
    let middle = walker_bound(x, y)?;
    let upper = x.l2_norm() * y.l2_norm();
    Ok(BoundChainReport::new(lower, middle, upper, rel_tol))
}

/// Sharpe ratio of a position; `value` is `None` when the risk is below the
/// floor and the ratio is undefined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpeRatio<R: Real> {
    pub value: Option<R>,
    pub sigma: R,
    pub mean: R,
}

/// Outcome of the equalization test for Walker's deflation term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpeEqualization<R: Real> {
    /// `|EX|σ_Y − |EY|σ_X`.
    pub gap: R,
    /// True when the gap vanishes relative to `‖X‖₂‖Y‖₂`, i.e. when Walker's
    /// bound collapses onto plain Cauchy-Schwarz.
    pub equalized: bool,
    /// `SR(X)² − SR(Y)²`, present only when both risks clear the floor.
    pub sr_squared_gap: Option<R>,
}

/// Walker's improvement vanishes exactly when `|EX|σ_Y = |EY|σ_X`, which for
/// positive risks says the squared Sharpe ratios of the two positions agree.
pub fn sharpe_equalization<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
    sigma_floor: R,
    rel_tol: R,
) -> Result<SharpeEqualization<R>> {
    check_same_space(x, y)?;
    let gap = x.expectation().abs() * y.std() - y.expectation().abs() * x.std();
    let scale = x.l2_norm() * y.l2_norm();
    let sx = x.sharpe_ratio(sigma_floor);
    let sy = y.sharpe_ratio(sigma_floor);
    let sr_squared_gap = match (sx.value, sy.value) {
        (Some(a), Some(b)) => Some(a * a - b * b),
        _ => None,
    };
    Ok(SharpeEqualization {
        gap,
        equalized: gap.abs() <= rel_tol * scale,
        sr_squared_gap,
    })
}
