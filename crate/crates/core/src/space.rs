//! Finite-dimensional real inner-product space primitives: vectors, orthogonal
//! projectors and their complements, decoupling vectors.

use crate::error::{Error, Result};
use crate::{real, Real};

/// Dense coordinate vector in `ℝⁿ` with the Euclidean inner product.
///
/// Coordinates are finite and the dimension (`n ≥ 1`) is fixed at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<R: Real> {
    coords: Vec<R>,
}

impl<R: Real> Vector<R> {
    pub fn new(coords: Vec<R>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        Ok(Self { coords })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(vec![R::zero(); dim])
    }

    pub(crate) fn standard_basis(dim: usize, axis: usize) -> Self {
        let mut coords = vec![R::zero(); dim];
        coords[axis] = R::one();
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[R] {
        &self.coords
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    /// `⟨x, y⟩ = Σᵢ xᵢyᵢ`.
    pub fn inner(&self, other: &Self) -> Result<R> {
        self.check_dim(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a * b)
            .sum())
    }

    pub fn norm(&self) -> R {
        self.norm_squared().sqrt()
    }

    pub fn norm_squared(&self) -> R {
        self.coords.iter().map(|&a| a * a).sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: R) -> Self {
        Self {
            coords: self.coords.iter().map(|&a| a * factor).collect(),
        }
    }

    /// In-place `self -= coeff · other`; dimensions must already agree.
    fn axpy_neg(&mut self, coeff: R, other: &Self) {
        for (a, &b) in self.coords.iter_mut().zip(&other.coords) {
            *a = *a - coeff * b;
        }
    }
}

impl<R: Real> std::ops::Index<usize> for Vector<R> {
    type Output = R;

    fn index(&self, index: usize) -> &R {
        &self.coords[index]
    }
}

/// Orthogonal projector `P = P² = Pᵀ` onto a subspace `V`, stored as an
/// orthonormal basis of `V`. Idempotence and self-adjointness hold by
/// construction; the matrix form is derivable on demand but never stored.
#[derive(Debug, Clone)]
pub struct Projector<R: Real> {
    ambient_dim: usize,
    basis: Vec<Vector<R>>,
}

impl<R: Real> Projector<R> {
    /// The zero projector (`k = 0`).
    pub fn zero(ambient_dim: usize) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::EmptyAmbient);
        }
        Ok(Self {
            ambient_dim,
            basis: Vec::new(),
        })
    }

    /// The identity (`k = n`).
    pub fn identity(ambient_dim: usize) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::EmptyAmbient);
        }
        let basis = (0..ambient_dim)
            .map(|axis| Vector::standard_basis(ambient_dim, axis))
            .collect();
        Ok(Self { ambient_dim, basis })
    }

    /// Orthonormalizes a spanning set into the projector onto its span.
    ///
    /// Near-dependent inputs are dropped at the default threshold
    /// `1e-10 ×` the largest input norm, so the rank can be lower than the
    /// number of inputs.
    pub fn from_spanning_set(vectors: &[Vector<R>]) -> Result<Self> {
        let max_norm = vectors.iter().map(Vector::norm).fold(R::zero(), R::max);
        Self::orthonormalized(vectors, real::<R>(1e-10) * max_norm)
    }

    /// Same as [`Projector::from_spanning_set`] with an explicit absolute
    /// dependence threshold.
    pub fn from_spanning_set_with_tol(vectors: &[Vector<R>], tol: R) -> Result<Self> {
        if tol.is_nan() || tol <= R::zero() {
            return Err(Error::NonPositiveTolerance);
        }
        Self::orthonormalized(vectors, tol)
    }

    fn orthonormalized(vectors: &[Vector<R>], threshold: R) -> Result<Self> {
        let first = vectors.first().ok_or(Error::EmptySpanningSet)?;
        let ambient_dim = first.dim();
        let mut basis: Vec<Vector<R>> = Vec::new();
        for v in vectors {
            if v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: v.dim(),
                });
            }
            let mut w = v.clone();
            // Gram-Schmidt with a second orthogonalization pass; one pass
            // loses orthogonality on ill-conditioned sets.
            for _ in 0..2 {
                for b in &basis {
                    let c = w.inner(b).expect("basis dims agree");
                    w.axpy_neg(c, b);
                }
            }
            let norm = w.norm();
            if norm > threshold {
                basis.push(w.scale(norm.recip()));
            }
        }
        Ok(Self { ambient_dim, basis })
    }

    /// One-dimensional projector onto the line spanned by `z`, so that
    /// `Px = ⟨x, ẑ⟩ẑ`. A non-unit `z` is normalized; a zero `z` is rejected.
    pub fn rank_one(z: &Vector<R>) -> Result<Self> {
        let norm = z.norm();
        if norm <= R::zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(Self {
            ambient_dim: z.dim(),
            basis: vec![z.scale(norm.recip())],
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<R>] {
        &self.basis
    }

    fn check_dim(&self, x: &Vector<R>) -> Result<()> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: x.dim(),
            });
        }
        Ok(())
    }

    /// `Px = Σⱼ ⟨x, bⱼ⟩ bⱼ`.
    pub fn project(&self, x: &Vector<R>) -> Result<Vector<R>> {
        self.check_dim(x)?;
        let mut coords = vec![R::zero(); self.ambient_dim];
        for b in &self.basis {
            let c = x.inner(b).expect("basis dims agree");
            for (o, &bi) in coords.iter_mut().zip(b.coords()) {
                *o = *o + c * bi;
            }
        }
        Ok(Vector { coords })
    }

    /// `P⊥x = x − Px`.
    pub fn complement_project(&self, x: &Vector<R>) -> Result<Vector<R>> {
        let px = self.project(x)?;
        x.sub(&px)
    }

    /// The pair `(‖Px‖, ‖P⊥x‖)`.
    pub fn decoupling_vector(&self, x: &Vector<R>) -> Result<DecouplingVector<R>> {
        let px = self.project(x)?;
        let qx = x.sub(&px)?;
        Ok(DecouplingVector {
            p: px.norm(),
            q: qx.norm(),
        })
    }

    /// Materializes `P⊥` as a projector, completing the stored basis to an
    /// orthonormal basis of the complement from standard-basis residuals.
    pub fn complement(&self) -> Self {
        let n = self.ambient_dim;
        let target = n - self.rank();
        let mut comp: Vec<Vector<R>> = Vec::new();
        // Residuals below this would amplify rounding too much under
        // normalization; candidates are unit vectors, so the cutoff is safe.
        let threshold = real::<R>(1e-4);
        for axis in 0..n {
            if comp.len() == target {
                break;
            }
            let w = self.residual_of_axis(axis, &comp);
            let norm = w.norm();
            if norm > threshold {
                comp.push(w.scale(norm.recip()));
            }
        }
        // Fallback: pick the axis with the largest residual until the rank is
        // filled; only reachable when every remaining axis sits almost inside
        // the collected span.
        while comp.len() < target {
            let mut best: Option<(R, Vector<R>)> = None;
            for axis in 0..n {
                let w = self.residual_of_axis(axis, &comp);
                let norm = w.norm();
                if best.as_ref().is_none_or(|(b, _)| norm > *b) {
                    best = Some((norm, w));
                }
            }
            let (norm, w) = best.expect("ambient dimension is positive");
            comp.push(w.scale(norm.recip()));
        }
        Self {
            ambient_dim: n,
            basis: comp,
        }
    }

    fn residual_of_axis(&self, axis: usize, partial: &[Vector<R>]) -> Vector<R> {
        let mut w = Vector::standard_basis(self.ambient_dim, axis);
        for _ in 0..2 {
            for b in self.basis.iter().chain(partial) {
                let c = w.inner(b).expect("basis dims agree");
                w.axpy_neg(c, b);
            }
        }
        w
    }
}

/// The pair `v_P(x) = (‖Px‖, ‖P⊥x‖)` summarizing a vector relative to a
/// subspace. Satisfies `p² + q² = ‖x‖²` for the generating `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecouplingVector<R: Real> {
    p: R,
    q: R,
}

impl<R: Real> DecouplingVector<R> {
    pub fn new(p: R, q: R) -> Result<Self> {
        if let Some(index) = [p, q].iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        if p < R::zero() || q < R::zero() {
            return Err(Error::NegativeComponent);
        }
        Ok(Self { p, q })
    }

    /// `‖Px‖`.
    pub fn p(&self) -> R {
        self.p
    }

    /// `‖P⊥x‖`.
    pub fn q(&self) -> R {
        self.q
    }

    /// ℝ² inner product; this is exactly the decoupling function.
    pub fn dot(&self, other: &Self) -> R {
        self.p * other.p + self.q * other.q
    }

    /// Determinant of the 2×2 matrix with rows `self`, `other`.
    pub fn det(&self, other: &Self) -> R {
        self.p * other.q - self.q * other.p
    }

    /// `p² + q²`, which equals `‖x‖²` for the generating vector.
    pub fn norm_squared(&self) -> R {
        self.dot(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn v(coords: &[f64]) -> Vector<f64> {
        Vector::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn inner_and_norm_fixtures() {
        let x = v(&[3.0, 4.0]);
        let y = v(&[1.0, 2.0]);
        assert_eq!(x.inner(&y).unwrap(), 11.0);
        assert_eq!(x.norm(), 5.0);
        let zero = Vector::zeros(2).unwrap();
        assert_eq!(x.inner(&zero).unwrap(), 0.0);
        assert_eq!(zero.norm(), 0.0);
        assert_eq!(x.scale(-1.0).norm(), x.norm());
        assert!(x.inner(&x).unwrap() >= 0.0);
    }

    #[test]
    fn vector_rejects_bad_input() {
        assert_eq!(Vector::<f64>::new(vec![]), Err(Error::EmptyVector));
        assert_eq!(
            Vector::new(vec![1.0, f64::NAN]),
            Err(Error::NonFiniteValue { index: 1 })
        );
        assert_eq!(
            Vector::new(vec![f64::INFINITY]),
            Err(Error::NonFiniteValue { index: 0 })
        );
        let x = v(&[1.0, 2.0]);
        let y = v(&[1.0, 2.0, 3.0]);
        assert_eq!(
            x.inner(&y),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn spanning_set_normalizes_single_vector() {
        let p = Projector::from_spanning_set(&[v(&[2.0, 0.0])]).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.basis()[0], v(&[1.0, 0.0]));
    }

    #[test]
    fn spanning_set_drops_dependent_vector() {
        let p = Projector::from_spanning_set(&[v(&[1.0, 0.0]), v(&[2.0, 0.0])]).unwrap();
        assert_eq!(p.rank(), 1);
    }

    #[test]
    fn spanning_set_gram_schmidt_fixture() {
        let p = Projector::from_spanning_set(&[v(&[1.0, 0.0]), v(&[1.0, 1.0])]).unwrap();
        assert_eq!(p.rank(), 2);
        assert_relative_eq!(p.basis()[0].coords()[0], 1.0);
        assert_relative_eq!(p.basis()[1].coords()[1], 1.0);
        assert!(p.basis()[1].coords()[0].abs() < 1e-15);
    }

    #[test]
    fn spanning_set_errors() {
        let err = Projector::<f64>::from_spanning_set(&[]).unwrap_err();
        assert_eq!(err, Error::EmptySpanningSet);
        let err = Projector::from_spanning_set_with_tol(&[v(&[1.0])], 0.0).unwrap_err();
        assert_eq!(err, Error::NonPositiveTolerance);
    }

    #[test]
    fn rank_one_projects_along_direction() {
        let p = Projector::rank_one(&v(&[0.0, 1.0])).unwrap();
        assert_eq!(p.project(&v(&[3.0, 4.0])).unwrap(), v(&[0.0, 4.0]));

        // non-unit directions are normalized
        let p = Projector::rank_one(&v(&[2.0, 0.0])).unwrap();
        assert_eq!(p.project(&v(&[3.0, 4.0])).unwrap(), v(&[3.0, 0.0]));

        let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
        let p = Projector::rank_one(&v(&[inv_sqrt2, inv_sqrt2])).unwrap();
        let px = p.project(&v(&[1.0, 0.0])).unwrap();
        assert_relative_eq!(px.coords()[0], 0.5, epsilon = 1e-15);
        assert_relative_eq!(px.coords()[1], 0.5, epsilon = 1e-15);

        let err = Projector::rank_one(&Vector::<f64>::zeros(2).unwrap()).unwrap_err();
        assert_eq!(err, Error::ZeroDirection);
    }

    #[test]
    fn project_zero_and_identity() {
        let x = v(&[3.0, 4.0]);
        let zero = Projector::zero(2).unwrap();
        assert_eq!(zero.project(&x).unwrap(), Vector::zeros(2).unwrap());
        assert_eq!(zero.complement_project(&x).unwrap(), x);

        let id = Projector::identity(2).unwrap();
        assert_eq!(id.project(&x).unwrap(), x);
        assert_eq!(id.complement_project(&x).unwrap(), Vector::zeros(2).unwrap());
    }

    #[test]
    fn decoupling_vector_fixture() {
        let p = Projector::from_spanning_set(&[v(&[1.0, 0.0])]).unwrap();
        let dv = p.decoupling_vector(&v(&[3.0, 4.0])).unwrap();
        assert_eq!((dv.p(), dv.q()), (3.0, 4.0));

        let dv0 = p.decoupling_vector(&Vector::zeros(2).unwrap()).unwrap();
        assert_eq!((dv0.p(), dv0.q()), (0.0, 0.0));

        // x inside the range: (‖x‖, 0)
        let dvr = p.decoupling_vector(&v(&[7.0, 0.0])).unwrap();
        assert_eq!((dvr.p(), dvr.q()), (7.0, 0.0));
    }

    #[test]
    fn decoupling_vector_validation() {
        assert!(DecouplingVector::new(1.0, 2.0).is_ok());
        assert_eq!(
            DecouplingVector::new(-1.0, 2.0),
            Err(Error::NegativeComponent)
        );
        assert_eq!(
            DecouplingVector::new(f64::NAN, 2.0),
            Err(Error::NonFiniteValue { index: 0 })
        );
    }

    #[test]
    fn complement_completes_orthonormal_basis() {
        let p = Projector::from_spanning_set(&[v(&[1.0, 1.0, 0.0])]).unwrap();
        let c = p.complement();
        assert_eq!(c.rank(), 2);
        for b in c.basis() {
            assert_relative_eq!(b.norm(), 1.0, epsilon = 1e-12);
            for a in p.basis() {
                assert!(a.inner(b).unwrap().abs() < 1e-12);
            }
        }
        // complement of identity is the zero projector and vice versa
        assert_eq!(Projector::<f64>::identity(3).unwrap().complement().rank(), 0);
        assert_eq!(Projector::<f64>::zero(3).unwrap().complement().rank(), 3);
    }

    #[test]
    fn zero_ambient_rejected() {
        assert!(matches!(Projector::<f64>::zero(0), Err(Error::EmptyAmbient)));
        assert!(matches!(
            Projector::<f64>::identity(0),
            Err(Error::EmptyAmbient)
        ));
    }
}
