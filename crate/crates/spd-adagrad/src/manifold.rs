//! The affine-invariant geometry of the SPD cone: metric, exponential and
//! logarithmic maps, distance, parallel transport, and the Euclidean-to-
//! Riemannian gradient conversion `grad f(X) = X f'(X) X`.
//!
//! All distances and norms are computed through the symmetric congruence
//! `X^{-1/2} · Y · X^{-1/2}` rather than the similarity `X⁻¹Y`, so every
//! intermediate stays symmetric and goes through the symmetric eigensolver.

use std::sync::{Arc, OnceLock};

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::sym::{SpectralDecomposition, SymMatrix};

/// A point on the manifold: an SPD matrix plus lazily cached factors.
///
/// Positive definiteness is checked at construction. The spectral
/// decomposition, square root, inverse square root and inverse are each
/// computed at most once per point; every solver iteration needs `X^{-1/2}`
/// at least twice (gradient norm and exponential map).
#[derive(Clone, Debug)]
pub struct SpdPoint {
    inner: Arc<PointInner>,
}

#[derive(Debug)]
struct PointInner {
    matrix: SymMatrix,
    eig: SpectralDecomposition,
    factors: OnceLock<Factors>,
}

#[derive(Debug)]
struct Factors {
    sqrt: SymMatrix,
    inv_sqrt: SymMatrix,
    inverse: SymMatrix,
}

impl SpdPoint {
    /// Wrap a symmetric matrix after verifying its spectrum is positive.
    pub fn new(matrix: SymMatrix) -> Result<Self> {
        let eig = matrix.eigh()?;
        let lmax = eig
            .eigenvalues()
            .iter()
            .fold(0.0f64, |acc, &l| acc.max(l.abs()));
        if eig.min_eigenvalue() <= crate::sym::EPS_PD_RELATIVE * lmax {
            return Err(Error::NonPositiveEigenvalue {
                min_eigenvalue: eig.min_eigenvalue(),
            });
        }
        Ok(Self {
            inner: Arc::new(PointInner {
                matrix,
                eig,
                factors: OnceLock::new(),
            }),
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(SymMatrix::identity(dim)).expect("identity is SPD")
    }

    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        Self::new(SymMatrix::from_diagonal(diag))
    }

    pub fn dim(&self) -> usize {
        self.inner.matrix.dim()
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.inner.matrix
    }

    pub fn eig(&self) -> &SpectralDecomposition {
        &self.inner.eig
    }

    /// `ln det X`, computed as the sum of eigenvalue logs; the determinant
    /// itself overflows for n = 20 with eigenvalues near 20.
    pub fn ln_det(&self) -> f64 {
        self.inner.eig.eigenvalues().iter().map(|l| l.ln()).sum()
    }

    fn factors(&self) -> &Factors {
        self.inner.factors.get_or_init(|| Factors {
            sqrt: self.inner.eig.apply(f64::sqrt),
            inv_sqrt: self.inner.eig.apply(|l| 1.0 / l.sqrt()),
            inverse: self.inner.eig.apply(|l| 1.0 / l),
        })
    }

    pub fn sqrt(&self) -> &SymMatrix {
        &self.factors().sqrt
    }

    pub fn inv_sqrt(&self) -> &SymMatrix {
        &self.factors().inv_sqrt
    }

    pub fn inverse(&self) -> &SymMatrix {
        &self.factors().inverse
    }

    /// `X^{-1/2} · S · X^{-1/2}` — the whitening congruence.
    pub fn whiten(&self, s: &SymMatrix) -> SymMatrix {
        s.congruence(self.inv_sqrt().as_matrix())
    }

    /// `X^{1/2} · S · X^{1/2}` — inverse of [`SpdPoint::whiten`].
    pub fn unwhiten(&self, s: &SymMatrix) -> SymMatrix {
        s.congruence(self.sqrt().as_matrix())
    }
}

/// A tangent vector: a symmetric matrix interpreted in `T_X M` at the base
/// point an operation is given.
#[derive(Clone, Debug)]
pub struct TangentVector {
    value: SymMatrix,
}

impl TangentVector {
    pub fn new(value: SymMatrix) -> Self {
        Self { value }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            value: SymMatrix::zeros(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.value.dim()
    }

    pub fn value(&self) -> &SymMatrix {
        &self.value
    }

    pub fn into_value(self) -> SymMatrix {
        self.value
    }

    pub fn scale(&self, c: f64) -> TangentVector {
        TangentVector {
            value: self.value.scale(c),
        }
    }
}

fn check_dims(expected: usize, found: usize, what: &str) -> Result<()> {
    if expected != found {
        return Err(Error::InvalidInput(format!(
            "dimension mismatch: {what} has dim {found}, expected {expected}"
        )));
    }
    Ok(())
}

/// Riemannian metric `⟨U, V⟩_X = tr(V X⁻¹ U X⁻¹)`, evaluated as the Frobenius
/// inner product of the whitened vectors.
pub fn inner(x: &SpdPoint, u: &TangentVector, v: &TangentVector) -> Result<f64> {
    check_dims(x.dim(), u.dim(), "first tangent vector")?;
    check_dims(x.dim(), v.dim(), "second tangent vector")?;
    let wu = x.whiten(u.value());
    let wv = x.whiten(v.value());
    Ok(wu.as_matrix().dot(wv.as_matrix()))
}

/// Riemannian norm `sqrt(⟨V, V⟩_X)`, computed as `‖X^{-1/2} V X^{-1/2}‖_F`
/// for conditioning.
pub fn norm(x: &SpdPoint, v: &TangentVector) -> Result<f64> {
    check_dims(x.dim(), v.dim(), "tangent vector")?;
    Ok(x.whiten(v.value()).frob_norm())
}

/// Exponential map `exp_X(V) = X^{1/2} · exp(X^{-1/2} V X^{-1/2}) · X^{1/2}`.
pub fn exp_map(x: &SpdPoint, v: &TangentVector) -> Result<SpdPoint> {
    check_dims(x.dim(), v.dim(), "tangent vector")?;
    let w = x.whiten(v.value());
    let e = w.matrix_exp()?;
    SpdPoint::new(x.unwhiten(&e))
}

/// Logarithmic map `log_X(Y) = X^{1/2} · ln(X^{-1/2} Y X^{-1/2}) · X^{1/2}`,
/// the inverse of [`exp_map`].
pub fn log_map(x: &SpdPoint, y: &SpdPoint) -> Result<TangentVector> {
    check_dims(x.dim(), y.dim(), "target point")?;
    let w = x.whiten(y.matrix());
    let l = w.matrix_ln()?;
    Ok(TangentVector::new(x.unwhiten(&l)))
}

/// Geodesic distance `d(X, Y) = ‖ln(X^{-1/2} Y X^{-1/2})‖_F`.
pub fn distance(x: &SpdPoint, y: &SpdPoint) -> Result<f64> {
    check_dims(x.dim(), y.dim(), "second point")?;
    Ok(x.whiten(y.matrix()).matrix_ln()?.frob_norm())
}

/// Parallel transport along the geodesic from `X` to `Y`:
/// `P(V) = E V Eᵀ` with `E = X^{1/2} (X^{-1/2} Y X^{-1/2})^{1/2} X^{-1/2}`.
pub fn parallel_transport(x: &SpdPoint, y: &SpdPoint, v: &TangentVector) -> Result<TangentVector> {
    check_dims(x.dim(), y.dim(), "target point")?;
    check_dims(x.dim(), v.dim(), "tangent vector")?;
    let w = x.whiten(y.matrix());
    let w_sqrt = w.matrix_sqrt()?;
    let e: DMatrix<f64> =
        x.sqrt().as_matrix() * w_sqrt.as_matrix() * x.inv_sqrt().as_matrix();
    Ok(TangentVector::new(v.value().congruence(&e)))
}

/// Euclidean-to-Riemannian gradient conversion `grad f(X) = X f'(X) X`.
pub fn riemannian_gradient(x: &SpdPoint, eucl_grad: &SymMatrix) -> Result<TangentVector> {
    check_dims(x.dim(), eucl_grad.dim(), "euclidean gradient")?;
    Ok(TangentVector::new(
        eucl_grad.congruence(x.matrix().as_matrix()),
    ))
}
