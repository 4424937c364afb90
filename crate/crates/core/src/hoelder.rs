//! Lp norms, the Young-based product bound, and the refinement of Hölder's
//! inequality obtained by running Walker's estimate on the absolute powers
//! `U = |X|^{p/2}`, `V = |Y|^{q/2}`.

use crate::error::{Error, Result};
use crate::prob::{l2_inner, walker_bound, DiscreteRandomVariable};
use crate::{real, Real};

/// Hölder exponents `p, q > 1` with `1/p + 1/q = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugatePair<R: Real> {
    p: R,
    q: R,
}

impl<R: Real> ConjugatePair<R> {
    pub fn new(p: R, q: R) -> Result<Self> {
        Self::with_tolerance(p, q, crate::default_conj_tol())
    }

    /// Validates the conjugacy defect `|1/p + 1/q − 1|` against an explicit
    /// tolerance.
    pub fn with_tolerance(p: R, q: R, conj_tol: R) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() || p <= R::one() || q <= R::one() {
            return Err(Self::invalid(p, q));
        }
        let defect = (p.recip() + q.recip() - R::one()).abs();
        if defect > conj_tol {
            return Err(Self::invalid(p, q));
        }
        Ok(Self { p, q })
    }

    /// Builds `(p, p/(p−1))`.
    pub fn from_p(p: R) -> Result<Self> {
        if !p.is_finite() || p <= R::one() {
            return Err(Self::invalid(p, R::nan()));
        }
        Ok(Self {
            p,
            q: p / (p - R::one()),
        })
    }

    fn invalid(p: R, q: R) -> Error {
        Error::NonConjugateExponents {
            p: p.to_f64().unwrap_or(f64::NAN),
            q: q.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn p(&self) -> R {
        self.p
    }

    pub fn q(&self) -> R {
        self.q
    }
}

/// `‖X‖_p = (E|X|^p)^{1/p}` for `p ≥ 1`.
pub fn lp_norm<R: Real>(x: &DiscreteRandomVariable<R>, p: R) -> Result<R> {
    if !p.is_finite() || p < R::one() {
        return Err(Error::ExponentBelowOne {
            p: p.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(x.weighted_sum(|v| v.abs().powf(p)).powf(p.recip()))
}

/// The product bound obtained from Young's inequality,
/// `E|XY| ≤ (1/p² + 1/q²)‖X‖_p‖Y‖_q
///          + (2/pq)‖X‖_p^{1−p/2}‖Y‖_q^{1−q/2}·E(|X|^{p/2}|Y|^{q/2})`.
///
/// Returns zero when either norm vanishes (the product is then zero almost
/// everywhere and the negative exponents would be undefined).
pub fn young_intermediate_bound<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
    pair: &ConjugatePair<R>,
) -> Result<R> {
    let (p, q) = (pair.p(), pair.q());
    let two = R::one() + R::one();
    let u = x.abs_pow(p / two);
    let v = y.abs_pow(q / two);
    let cross = l2_inner(&u, &v)?;
    let norm_p = lp_norm(x, p)?;
    let norm_q = lp_norm(y, q)?;
    if norm_p == R::zero() || norm_q == R::zero() {
        return Ok(R::zero());
    }
    Ok(((p * p).recip() + (q * q).recip()) * norm_p * norm_q
        + (two / (p * q))
            * norm_p.powf(R::one() - p / two)
            * norm_q.powf(R::one() - q / two)
            * cross)
}

/// Evaluated refined Hölder chain `E|XY| ≤ refined ≤ ‖X‖_p‖Y‖_q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HoelderReport<R: Real> {
    /// `E|XY|`.
    pub lhs: R,
    /// The deflated product bound.
    pub refined: R,
    /// `‖X‖_p‖Y‖_q`.
    pub classical: R,
    /// Value of [`young_intermediate_bound`] on the same instance.
    pub young_term: R,
    /// `classical − refined`.
    pub improvement: R,
    pub holds: bool,
}

/// Refined Hölder bound
/// `E|XY| ≤ ‖X‖_p‖Y‖_q·[1/p² + 1/q²
///          + (2/pq)·sqrt(1 − ((σ_V·EU − σ_U·EV)/(‖U‖₂‖V‖₂))²)]`
/// with `U = |X|^{p/2}`, `V = |Y|^{q/2}`, so `‖U‖₂‖V‖₂ = ‖X‖_p^{p/2}‖Y‖_q^{q/2}`.
///
/// A degenerate instance (`‖X‖_p‖Y‖_q = 0`) yields the all-zero report, which
/// holds trivially.
pub fn refined_hoelder<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
    pair: &ConjugatePair<R>,
    rel_tol: R,
) -> Result<HoelderReport<R>> {
    let (p, q) = (pair.p(), pair.q());
    let two = R::one() + R::one();
    let lhs = l2_inner(&x.abs(), &y.abs())?;
    let norm_p = lp_norm(x, p)?;
    let norm_q = lp_norm(y, q)?;
    let classical = norm_p * norm_q;
    if classical == R::zero() {
        return Ok(HoelderReport {
            lhs: R::zero(),
            refined: R::zero(),
            classical: R::zero(),
            young_term: R::zero(),
            improvement: R::zero(),
            holds: true,
        });
    }
    let u = x.abs_pow(p / two);
    let v = y.abs_pow(q / two);
    let denom = u.l2_norm() * v.l2_norm();
    let ratio = (v.std() * u.expectation() - u.std() * v.expectation()) / denom;
    let radicand = (R::one() - ratio * ratio).max(R::zero());
    let refined =
        classical * ((p * p).recip() + (q * q).recip() + (two / (p * q)) * radicand.sqrt());
    let young_term = young_intermediate_bound(x, y, pair)?;
    let eps = rel_tol * classical;
    Ok(HoelderReport {
        lhs,
        refined,
        classical,
        young_term,
        improvement: classical - refined,
        holds: lhs <= refined + eps && refined <= classical + eps,
    })
}

/// The `p = q = 2` reduction of the refined Hölder bound next to the full
/// Walker bound on `|X|, |Y|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AveragedWalkerBound<R: Real> {
    /// `½‖X‖₂‖Y‖₂ + ½·walker`: the midpoint of Cauchy-Schwarz and the Walker
    /// bound, keeping half of the improvement.
    pub bound: R,
    /// Walker's bound on `E|XY|`, evaluated on the absolute variables.
    pub walker: R,
}

/// Bounds `E|XY|` by the average of the Cauchy-Schwarz product and Walker's
/// deflated bound; moments enter through `|X|` and `|Y|` because the refined
/// Hölder route works with absolute powers throughout.
pub fn averaged_walker_bound<R: Real>(
    x: &DiscreteRandomVariable<R>,
    y: &DiscreteRandomVariable<R>,
) -> Result<AveragedWalkerBound<R>> {
    let ax = x.abs();
    let ay = y.abs();
    let walker = walker_bound(&ax, &ay)?;
    let half = real::<R>(0.5);
    Ok(AveragedWalkerBound {
        bound: half * (ax.l2_norm() * ay.l2_norm() + walker),
        walker,
    })
}
