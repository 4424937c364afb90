//! Projection covariances and the enhanced Richard, Buzano and D inequalities,
//! with the classical one-dimensional forms alongside for tightness
//! comparison.

use std::fmt;

use crate::dfun::d_function;
use crate::error::{Error, Result};
use crate::space::{Projector, Vector};
use crate::Real;

/// Which inequality a witness evaluates. The labels follow the usual
/// shorthand: `e` marks the enhanced (projection) form of a classical bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessName {
    /// `|cov_P(x,y)| ≤ ‖P⊥x‖‖P⊥y‖`, labelled `D`.
    CovarianceBound,
    /// `|2⟨Px,y⟩ − ⟨x,y⟩| ≤ D(x,y|P)`, labelled `eR`.
    EnhancedRichard,
    /// `2|⟨Px,y⟩| ≤ D(x,y|P) + |⟨x,y⟩|`, labelled `eB`.
    EnhancedBuzano,
    /// `|⟨x,y⟩| ≤ ‖P⊥x‖‖P⊥y‖ + |⟨Px,y⟩|`, labelled `eD`.
    EnhancedD,
    /// `2|⟨x,z⟩⟨y,z⟩| ≤ ‖x‖‖y‖ + |⟨x,y⟩|`, labelled `B`.
    ClassicalBuzano,
    /// `|2⟨x,z⟩⟨y,z⟩ − ⟨x,y⟩| ≤ ‖x‖‖y‖`, labelled `R`.
    ClassicalRichard,
}

impl WitnessName {
    pub fn label(&self) -> &'static str {
        match self {
            WitnessName::CovarianceBound => "D",
            WitnessName::EnhancedRichard => "eR",
            WitnessName::EnhancedBuzano => "eB",
            WitnessName::EnhancedD => "eD",
            WitnessName::ClassicalBuzano => "B",
            WitnessName::ClassicalRichard => "R",
        }
    }
}

impl fmt::Display for WitnessName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Both sides of one inequality instance. Carrying the slack rather than a
/// bare pass flag lets a harness rank instances by tightness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityWitness<R: Real> {
    pub name: WitnessName,
    pub lhs: R,
    pub rhs: R,
    pub slack: R,
    pub holds: bool,
}

impl<R: Real> InequalityWitness<R> {
    /// Accepts `lhs ≤ rhs` up to `rel_tol · max(|lhs|, |rhs|, scale)`, where
    /// `scale` is the natural magnitude of the instance (usually `‖x‖‖y‖`).
    pub fn evaluate(name: WitnessName, lhs: R, rhs: R, scale: R, rel_tol: R) -> Self {
        let eps = rel_tol * lhs.abs().max(rhs.abs()).max(scale);
        Self {
            name,
            lhs,
            rhs,
            slack: rhs - lhs,
            holds: lhs <= rhs + eps,
        }
    }
}

/// `cov_P(x,y) = ⟨x − Px, y − Py⟩`.
pub fn p_covariance<R: Real>(p: &Projector<R>, x: &Vector<R>, y: &Vector<R>) -> Result<R> {
    let cx = p.complement_project(x)?;
    let cy = p.complement_project(y)?;
    cx.inner(&cy)
}

/// The expanded form `⟨x,y⟩ − ⟨Px,y⟩`; agrees with [`p_covariance`] up to
/// rounding and is kept as a separate arithmetic route for cross-checking.
pub fn p_covariance_expanded<R: Real>(
    p: &Projector<R>,
    x: &Vector<R>,
    y: &Vector<R>,
) -> Result<R> {
    let px = p.project(x)?;
    Ok(x.inner(y)? - px.inner(y)?)
}

/// `var_P(x) = ‖P⊥x‖²`, nonnegative by construction.
pub fn p_variance<R: Real>(p: &Projector<R>, x: &Vector<R>) -> Result<R> {
    Ok(p.complement_project(x)?.norm_squared())
}

/// `cov_z(x,y) = ⟨x,y⟩ − ⟨x,ẑ⟩⟨y,ẑ⟩` for the normalized direction `ẑ`.
///
/// Equals the projection covariance of the rank-one projector onto `z`; the
/// product form avoids materializing the projected vectors.
pub fn z_covariance<R: Real>(z: &Vector<R>, x: &Vector<R>, y: &Vector<R>) -> Result<R> {
    let norm = z.norm();
    if norm <= R::zero() {
        return Err(Error::ZeroDirection);
    }
    let zh = z.scale(norm.recip());
    Ok(x.inner(y)? - x.inner(&zh)? * y.inner(&zh)?)
}

/// `|cov_P(x,y)| ≤ ‖P⊥x‖‖P⊥y‖`.
pub fn covariance_bound<R: Real>(
    p: &Projector<R>,
    x: &Vector<R>,
    y: &Vector<R>,
    rel_tol: R,
) -> Result<InequalityWitness<R>> {
    let lhs = p_covariance(p, x, y)?.abs();
    let rhs = p.decoupling_vector(x)?.q() * p.decoupling_vector(y)?.q();
    let scale = x.norm() * y.norm();
    Ok(InequalityWitness::evaluate(
        WitnessName::CovarianceBound,
        lhs,
        rhs,
        scale,
        rel_tol,
    ))
}

/// `|2⟨Px,y⟩ − ⟨x,y⟩| ≤ D(x,y|P)`.
pub fn enhanced_richard<R: Real>(
    p: &Projector<R>,
    x: &Vector<R>,
    y: &Vector<R>,
    rel_tol: R,
) -> Result<InequalityWitness<R>> {
    let two = R::one() + R::one();
    let lhs = (two * p.project(x)?.inner(y)? - x.inner(y)?).abs();
    let rhs = d_function(p, x, y)?;
    let scale = x.norm() * y.norm();
    Ok(InequalityWitness::evaluate(
        WitnessName::EnhancedRichard,
        lhs,
        rhs,
        scale,
        rel_tol,
    ))
}

/// `2|⟨Px,y⟩| ≤ D(x,y|P) + |⟨x,y⟩|`.
pub fn enhanced_buzano<R: Real>(
    p: &Projector<R>,
    x: &Vector<R>,
    y: &Vector<R>,
    rel_tol: R,
) -> Result<InequalityWitness<R>> {
    let two = R::one() + R::one();
    let lhs = two * p.project(x)?.inner(y)?.abs();
    let rhs = d_function(p, x, y)? + x.inner(y)?.abs();
    let scale = x.norm() * y.norm();
    Ok(InequalityWitness::evaluate(
        WitnessName::EnhancedBuzano,
        lhs,
        rhs,
        scale,
        rel_tol,
    ))
}

/// `|⟨x,y⟩| ≤ ‖P⊥x‖‖P⊥y‖ + |⟨Px,y⟩|`; tighter than the decoupling bound
/// itself, though no longer of decoupled form.
pub fn enhanced_d<R: Real>(
    p: &Projector<R>,
    x: &Vector<R>,
    y: &Vector<R>,
    rel_tol: R,
) -> Result<InequalityWitness<R>> {
    let lhs = x.inner(y)?.abs();
    let rhs = p.decoupling_vector(x)?.q() * p.decoupling_vector(y)?.q()
        + p.project(x)?.inner(y)?.abs();
    let scale = x.norm() * y.norm();
    Ok(InequalityWitness::evaluate(
        WitnessName::EnhancedD,
        lhs,
        rhs,
        scale,
        rel_tol,
    ))
}

/// A classical one-dimensional witness together with the right-hand side of
/// its enhanced counterpart on the same instance, so callers can confirm the
/// enhanced bound is at least as tight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalComparison<R: Real> {
    pub witness: InequalityWitness<R>,
    pub enhanced_rhs: R,
}

/// Buzano: `2|⟨x,ẑ⟩⟨y,ẑ⟩| ≤ ‖x‖‖y‖ + |⟨x,y⟩|`. The comparison value is the
/// enhanced rhs `D(x,y|P_z) + |⟨x,y⟩|`.
pub fn classical_buzano<R: Real>(
    z: &Vector<R>,
    x: &Vector<R>,
    y: &Vector<R>,
    rel_tol: R,
) -> Result<ClassicalComparison<R>> {
    let pz = Projector::rank_one(z)?;
    let zh = &pz.basis()[0];
    let two = R::one() + R::one();
    let lhs = two * (x.inner(zh)? * y.inner(zh)?).abs();
    let ip_abs = x.inner(y)?.abs();
    let scale = x.norm() * y.norm();
    let rhs = scale + ip_abs;
    Ok(ClassicalComparison {
        witness: InequalityWitness::evaluate(
            WitnessName::ClassicalBuzano,
            lhs,
            rhs,
            scale,
            rel_tol,
        ),
        enhanced_rhs: d_function(&pz, x, y)? + ip_abs,
    })
}

/// Richard: `|2⟨x,ẑ⟩⟨y,ẑ⟩ − ⟨x,y⟩| ≤ ‖x‖‖y‖`. The comparison value is the
/// enhanced rhs `D(x,y|P_z)`.
pub fn classical_richard<R: Real>(
    z: &Vector<R>,
    x: &Vector<R>,
    y: &Vector<R>,
    rel_tol: R,
) -> Result<ClassicalComparison<R>> {
    let pz = Projector::rank_one(z)?;
    let zh = &pz.basis()[0];
    let two = R::one() + R::one();
    let lhs = (two * x.inner(zh)? * y.inner(zh)? - x.inner(y)?).abs();
    let scale = x.norm() * y.norm();
    Ok(ClassicalComparison {
        witness: InequalityWitness::evaluate(
            WitnessName::ClassicalRichard,
            lhs,
            scale,
            scale,
            rel_tol,
        ),
        enhanced_rhs: d_function(&pz, x, y)?,
    })
}
