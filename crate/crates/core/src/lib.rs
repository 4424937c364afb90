//! Projection-based refinements of classical inner-product inequalities.
//!
//! Relative to a fixed orthogonal projector `P`, every vector `x` collapses to
//! the pair `(‖Px‖, ‖P⊥x‖)`. The inner product of two such pairs sits between
//! `|⟨x,y⟩|` and `‖x‖‖y‖`, which tightens Cauchy-Schwarz and, through a family
//! of projection covariances, the Buzano, Richard and Walker inequalities as
//! well. On discrete probability spaces the same machinery yields Sharpe-ratio
//! diagnostics and a refined Hölder bound.
//!
//! Modules:
//! - [`space`]: vectors, orthogonal projectors, decoupling vectors
//! - [`dfun`]: decoupling functions and the enhanced Cauchy-Schwarz chain
//! - [`pcov`]: projection covariances and the enhanced Buzano/Richard bounds
//! - [`prob`]: discrete L² spaces, Walker's inequality, Sharpe ratios
//! - [`hoelder`]: Lp norms and the refined Hölder inequality
//!
//! All computation is generic over the scalar type through [`Real`]; concrete
//! aliases such as [`Vector64`] are provided at the crate root.

pub mod dfun;
pub mod error;
pub mod hoelder;
pub mod pcov;
pub mod prob;
pub mod space;

use std::fmt;
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

pub use dfun::{BoundChainReport, CsGap};
pub use error::{Error, Result};
pub use hoelder::{AveragedWalkerBound, ConjugatePair, HoelderReport};
pub use pcov::{ClassicalComparison, InequalityWitness, WitnessName};
pub use prob::{DiscreteRandomVariable, ProbabilitySpace, SharpeEqualization, SharpeRatio};
pub use space::{DecouplingVector, Projector, Vector};

/// Scalar type for all computations: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + Sum + fmt::Debug + fmt::Display {}

impl Real for f32 {}
impl Real for f64 {}

pub(crate) fn real<R: Real>(value: f64) -> R {
    R::from_f64(value).expect("constant representable in scalar type")
}

/// Default orthonormality tolerance for projector bases (`1e-10`).
pub fn default_orth_tol<R: Real>() -> R {
    real(1e-10)
}

/// Default relative tolerance for inequality slack checks (`1e-9`).
pub fn default_rel_tol<R: Real>() -> R {
    real(1e-9)
}

/// Smallest standard deviation for which a Sharpe ratio is defined (`1e-12`).
pub fn default_sigma_floor<R: Real>() -> R {
    real(1e-12)
}

/// Default tolerance on the conjugacy defect `|1/p + 1/q - 1|` (`1e-12`).
pub fn default_conj_tol<R: Real>() -> R {
    real(1e-12)
}

pub type Vector32 = space::Vector<f32>;
pub type Vector64 = space::Vector<f64>;
pub type Projector32 = space::Projector<f32>;
pub type Projector64 = space::Projector<f64>;
pub type DecouplingVector32 = space::DecouplingVector<f32>;
pub type DecouplingVector64 = space::DecouplingVector<f64>;
pub type ProbabilitySpace32 = prob::ProbabilitySpace<f32>;
pub type ProbabilitySpace64 = prob::ProbabilitySpace<f64>;
pub type DiscreteRandomVariable32 = prob::DiscreteRandomVariable<f32>;
pub type DiscreteRandomVariable64 = prob::DiscreteRandomVariable<f64>;
