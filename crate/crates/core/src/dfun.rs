//! Decoupling functions, the determinant identity behind them, the enhanced
//! Cauchy-Schwarz chain and the gap lower bound.

use crate::error::Result;
use crate::space::{Projector, Vector};
use crate::Real;

/// Evaluated `lower ≤ middle ≤ upper` chain with slacks and a pass flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundChainReport<R: Real> {
    pub lower: R,
    pub middle: R,
    pub upper: R,
    pub slack_lower: R,
    pub slack_upper: R,
    pub holds: bool,
}

impl<R: Real> BoundChainReport<R> {
    /// The pass flag tolerates relative slack `rel_tol · upper` on each link.
    pub fn new(lower: R, middle: R, upper: R, rel_tol: R) -> Self {
        let eps = rel_tol * upper;
        Self {
            lower,
            middle,
            upper,
            slack_lower: middle - lower,
            slack_upper: upper - middle,
            holds: lower <= middle + eps && middle <= upper + eps,
        }
    }
}

/// Decoupling function `D(x,y|P) = ‖Px‖‖Py‖ + ‖P⊥x‖‖P⊥y‖`, computed as the
/// ℝ² inner product of the two decoupling vectors.
///
/// Symmetric in `(x, y)`, invariant under `P ↔ P⊥`, and sits between
/// `|⟨x,y⟩|` and `‖x‖‖y‖`.
pub fn d_function<R: Real>(p: &Projector<R>, x: &Vector<R>, y: &Vector<R>) -> Result<R> {
    Ok(p.decoupling_vector(x)?.dot(&p.decoupling_vector(y)?))
}

/// Residual of the identity
/// `D(x,x|P)·D(y,y|P) − D²(x,y|P) = det²(v_P(x); v_P(y))`.
///
/// Zero for every input up to rounding; exposed rather than asserted so a
/// harness can record worst-case floating-point drift.
pub fn d_identity_residual<R: Real>(p: &Projector<R>, x: &Vector<R>, y: &Vector<R>) -> Result<R> {
    let vx = p.decoupling_vector(x)?;
    let vy = p.decoupling_vector(y)?;
    let dxy = vx.dot(&vy);
    let det = vx.det(&vy);
    Ok(vx.norm_squared() * vy.norm_squared() - dxy * dxy - det * det)
}

/// The enhanced Cauchy-Schwarz chain `|⟨x,y⟩| ≤ D(x,y|P) ≤ ‖x‖‖y‖`.
pub fn bound_chain<R: Real>(
    p: &Projector<R>,
    x: &Vector<R>,
    y: &Vector<R>,
    rel_tol: R,
) -> Result<BoundChainReport<R>> {
    let lower = x.inner(y)?.abs();
    let middle = d_function(p, x, y)?;
    let upper = x.norm() * y.norm();
    Ok(BoundChainReport::new(lower, middle, upper, rel_tol))
}

/// Cauchy-Schwarz gap `‖x‖²‖y‖² − ⟨x,y⟩²` and its lower bound
/// `det²(v_P(x); v_P(y))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsGap<R: Real> {
    pub gap: R,
    pub bound: R,
}

pub fn cs_gap_lower_bound<R: Real>(
    p: &Projector<R>,
    x: &Vector<R>,
    y: &Vector<R>,
) -> Result<CsGap<R>> {
    let ip = x.inner(y)?;
    let det = p.decoupling_vector(x)?.det(&p.decoupling_vector(y)?);
    Ok(CsGap {
        gap: x.norm_squared() * y.norm_squared() - ip * ip,
        bound: det * det,
    })
}
