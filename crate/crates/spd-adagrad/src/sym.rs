//! Dense symmetric-matrix primitives: eigendecomposition and spectral matrix
//! functions. Everything the manifold layer does is built on these.
//!
//! Eigendecomposition is the single backend for all matrix functions here;
//! at the problem sizes this crate targets (n ≤ 50) uniformity beats speed.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Eigenvalues at or below `EPS_PD_RELATIVE * lambda_max` fail the positivity
/// check of `ln`, `sqrt` and `inv_sqrt` instead of being clamped. Silent clamps
/// would mask a solver diverging off the manifold.
pub const EPS_PD_RELATIVE: f64 = 1e-12;

/// Largest eigenvalue magnitude accepted by the matrix exponential. `exp(710)`
/// already overflows `f64`; failing deterministically beats NaN propagation.
pub const EXP_ARG_LIMIT: f64 = 700.0;

/// An n×n real symmetric matrix. Construction symmetrizes via `(A + Aᵀ)/2`,
/// so repeated congruences cannot accumulate asymmetry.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    m: DMatrix<f64>,
}

impl SymMatrix {
    /// Symmetrize and wrap a square matrix.
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return Err(Error::InvalidInput(format!(
                "expected a nonempty square matrix, got {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        let sym = (&m + m.transpose()) * 0.5;
        Ok(Self { m: sym })
    }

    /// Build from row-major entries.
    pub fn from_row_major(dim: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Self::new(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            m: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            m: DMatrix::identity(dim, dim),
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        Self {
            m: DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(diag)),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    /// Row-major copy of the entries.
    pub fn to_row_major(&self) -> Vec<f64> {
        (0..self.dim())
            .flat_map(|i| (0..self.dim()).map(move |j| (i, j)))
            .map(|(i, j)| self.m[(i, j)])
            .collect()
    }

    pub fn trace(&self) -> f64 {
        self.m.trace()
    }

    /// Frobenius norm `sqrt(sum s_ij^2)`.
    pub fn frob_norm(&self) -> f64 {
        self.m.norm()
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().all(|v| v.is_finite())
    }

    /// Scale all entries.
    pub fn scale(&self, c: f64) -> SymMatrix {
        SymMatrix { m: &self.m * c }
    }

    /// Symmetrized congruence `A · self · Aᵀ`.
    pub fn congruence(&self, a: &DMatrix<f64>) -> SymMatrix {
        let p = a * &self.m * a.transpose();
        SymMatrix {
            m: (&p + p.transpose()) * 0.5,
        }
    }

    /// Symmetric eigendecomposition with eigenvalues in ascending order.
    pub fn eigh(&self) -> Result<SpectralDecomposition> {
        if !self.is_finite() {
            return Err(Error::InvalidInput(
                "matrix has non-finite entries".to_string(),
            ));
        }
        let eig = nalgebra::SymmetricEigen::new(self.m.clone());
        let n = self.dim();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
        let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let mut eigenvectors = DMatrix::zeros(n, n);
        for (dst, &src) in order.iter().enumerate() {
            eigenvectors.set_column(dst, &eig.eigenvectors.column(src));
        }
        Ok(SpectralDecomposition {
            eigenvalues,
            eigenvectors,
        })
    }

    /// Apply a scalar function to the spectrum: `Q · diag(phi(λ)) · Qᵀ`.
    ///
    /// No domain checks are performed; use [`SymMatrix::matrix_ln`],
    /// [`SymMatrix::matrix_sqrt`], [`SymMatrix::matrix_inv_sqrt`] or
    /// [`SymMatrix::matrix_exp`] for the checked named functions.
    pub fn spectral_map<F: FnMut(f64) -> f64>(&self, phi: F) -> Result<SymMatrix> {
        Ok(self.eigh()?.apply(phi))
    }

    /// Matrix logarithm; requires a positive spectrum.
    pub fn matrix_ln(&self) -> Result<SymMatrix> {
        let eig = self.eigh()?;
        eig.require_positive()?;
        Ok(eig.apply(f64::ln))
    }

    /// Matrix square root; requires a positive spectrum.
    pub fn matrix_sqrt(&self) -> Result<SymMatrix> {
        let eig = self.eigh()?;
        eig.require_positive()?;
        Ok(eig.apply(f64::sqrt))
    }

    /// Matrix inverse square root; requires a positive spectrum.
    pub fn matrix_inv_sqrt(&self) -> Result<SymMatrix> {
        let eig = self.eigh()?;
        eig.require_positive()?;
        Ok(eig.apply(|l| 1.0 / l.sqrt()))
    }

    /// Matrix exponential; fails with [`Error::NumericalOverflow`] when an
    /// eigenvalue magnitude exceeds [`EXP_ARG_LIMIT`].
    pub fn matrix_exp(&self) -> Result<SymMatrix> {
        let eig = self.eigh()?;
        let worst = eig
            .eigenvalues
            .iter()
            .fold(0.0f64, |acc, &l| acc.max(l.abs()));
        if worst > EXP_ARG_LIMIT {
            return Err(Error::NumericalOverflow { magnitude: worst });
        }
        Ok(eig.apply(f64::exp))
    }
}

impl std::ops::Add for &SymMatrix {
    type Output = SymMatrix;
    fn add(self, rhs: &SymMatrix) -> SymMatrix {
        SymMatrix {
            m: &self.m + &rhs.m,
        }
    }
}

impl std::ops::Sub for &SymMatrix {
    type Output = SymMatrix;
    fn sub(self, rhs: &SymMatrix) -> SymMatrix {
        SymMatrix {
            m: &self.m - &rhs.m,
        }
    }
}

impl std::ops::Neg for &SymMatrix {
    type Output = SymMatrix;
    fn neg(self) -> SymMatrix {
        SymMatrix { m: -&self.m }
    }
}

/// Eigendecomposition of a symmetric matrix: ascending eigenvalues and an
/// orthogonal matrix of eigenvectors (as columns).
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: DMatrix<f64>,
}

impl SpectralDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &DMatrix<f64> {
        &self.eigenvectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    /// `Q · diag(phi(λ)) · Qᵀ`, symmetrized.
    pub fn apply<F: FnMut(f64) -> f64>(&self, mut phi: F) -> SymMatrix {
        let mapped: Vec<f64> = self.eigenvalues.iter().map(|&l| phi(l)).collect();
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(&mapped));
        let p = &self.eigenvectors * d * self.eigenvectors.transpose();
        SymMatrix {
            m: (&p + p.transpose()) * 0.5,
        }
    }

    /// `Q · diag(λ) · Qᵀ`.
    pub fn reconstruct(&self) -> SymMatrix {
        self.apply(|l| l)
    }

    /// Positivity gate for `ln`/`sqrt`/`inv_sqrt`: the smallest eigenvalue must
    /// exceed `EPS_PD_RELATIVE` times the largest magnitude.
    fn require_positive(&self) -> Result<()> {
        let lmax = self
            .eigenvalues
            .iter()
            .fold(0.0f64, |acc, &l| acc.max(l.abs()));
        if self.min_eigenvalue() <= EPS_PD_RELATIVE * lmax {
            return Err(Error::NonPositiveEigenvalue {
                min_eigenvalue: self.min_eigenvalue(),
            });
        }
        Ok(())
    }
}
