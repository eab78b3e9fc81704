//! Dense complex linear algebra for small Hilbert spaces.
//!
//! Everything here is physics-agnostic: complex vectors and matrices in a
//! fixed ordered basis, Hermitian eigendecomposition with ascending
//! eigenvalues, and the exact action of exp(-(i/ħ)·H·dt) on a state. All
//! storage is dense; the scenarios this crate targets stay well below a few
//! thousand basis states.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CVector = DVector<C64>;
pub type CMatrix = DMatrix<C64>;

/// Absolute tolerance for tagging a matrix Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Relative threshold for flagging adjacent eigenvalues as degenerate,
/// scaled by (spectral span + 1).
pub const DEGENERACY_SCALE: f64 = 1e-9;

/// Max-norm of M - M†.
pub fn hermiticity_deviation(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Entrywise max-norm of M.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// Entrywise max-norm of A - B.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .fold(0.0_f64, |acc, (x, y)| acc.max((x - y).norm()))
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(v: &CVector) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Inner product ⟨a|b⟩ (conjugate-linear in the first argument).
pub fn inner(a: &CVector, b: &CVector) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

fn check_hermitian(m: &CMatrix, context: &str) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            context: context.to_string(),
            expected: m.nrows(),
            got: m.ncols(),
        });
    }
    let dev = hermiticity_deviation(m);
    if dev >= HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            context: context.to_string(),
            deviation: dev,
            tol: HERMITICITY_TOL,
        });
    }
    Ok(())
}

/// Eigendecomposition of a Hermitian matrix: real ascending eigenvalues and a
/// column-orthonormal eigenvector matrix Q with M·Q = Q·diag(values).
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl EigenSystem {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Spectral span max - min (0 for dim 1).
    pub fn span(&self) -> f64 {
        match (self.values.first(), self.values.last()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0.0,
        }
    }

    /// Smallest gap between adjacent (sorted) eigenvalues, `None` for dim 1.
    pub fn min_adjacent_gap(&self) -> Option<f64> {
        self.values
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(None, |acc: Option<f64>, g| {
                Some(acc.map_or(g, |a| a.min(g)))
            })
    }

    /// True when two adjacent eigenvalues sit closer than
    /// `DEGENERACY_SCALE * (span + 1)`.
    pub fn is_degenerate(&self) -> bool {
        match self.min_adjacent_gap() {
            Some(gap) => gap < self.degeneracy_threshold(),
            None => false,
        }
    }

    pub fn degeneracy_threshold(&self) -> f64 {
        DEGENERACY_SCALE * (self.span() + 1.0)
    }
}

/// Eigendecompose a Hermitian matrix, sorting eigenvalues ascending.
///
/// Non-Hermitian input (max |M - M†| >= 1e-12) is rejected; `context` names
/// the matrix in diagnostics.
pub fn hermitian_eigendecompose(m: &CMatrix, context: &str) -> Result<EigenSystem> {
    check_hermitian(m, context)?;
    let dim = m.nrows();
    if dim == 0 {
        return Err(Error::DimensionMismatch {
            context: context.to_string(),
            expected: 1,
            got: 0,
        });
    }
    let eig = nalgebra::SymmetricEigen::try_new(m.clone(), f64::EPSILON, 0).ok_or_else(|| {
        Error::EigenConvergence {
            context: context.to_string(),
        }
    })?;

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .expect("eigenvalues are finite")
    });

    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = CMatrix::zeros(dim, dim);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok(EigenSystem { values, vectors })
}

/// Apply exp(-(i/ħ)·H·dt) to a state, exactly, via eigendecomposition.
///
/// Preserves the norm to machine precision because each spectral phase has
/// unit modulus; there is no truncated series anywhere.
pub fn expi_action(h: &CMatrix, dt: f64, psi: &CVector, hbar: f64) -> Result<CVector> {
    if !dt.is_finite() {
        return Err(Error::NonFinite {
            context: format!("time step dt = {dt}"),
        });
    }
    if !hbar.is_finite() || hbar == 0.0 {
        return Err(Error::NonFinite {
            context: format!("hbar = {hbar}"),
        });
    }
    let eig = hermitian_eigendecompose(h, "expi_action input")?;
    Ok(expi_action_with(&eig, dt, psi, hbar))
}

/// Same as [`expi_action`] but reusing a precomputed eigendecomposition.
pub fn expi_action_with(eig: &EigenSystem, dt: f64, psi: &CVector, hbar: f64) -> CVector {
    let mut coeffs = eig.vectors.adjoint() * psi;
    for (c, &v) in coeffs.iter_mut().zip(eig.values.iter()) {
        *c *= C64::from_polar(1.0, -v * dt / hbar);
    }
    &eig.vectors * coeffs
}

/// Dense propagator exp(-(i/ħ)·H·dt) as a matrix, for small dimensions.
pub fn expi_matrix(eig: &EigenSystem, dt: f64, hbar: f64) -> CMatrix {
    let dim = eig.dim();
    let mut phases = CMatrix::zeros(dim, dim);
    for (i, &v) in eig.values.iter().enumerate() {
        phases[(i, i)] = C64::from_polar(1.0, -v * dt / hbar);
    }
    &eig.vectors * phases * eig.vectors.adjoint()
}
