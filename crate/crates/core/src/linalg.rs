//! Dense complex linear algebra shared by the Dicke-basis and full-space code.
//!
//! Eigendecompositions are delegated to nalgebra's Hermitian solver; this
//! module adds the validation, ordering and matrix-function helpers on top.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

pub use nalgebra::Complex;
pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub const I: C64 = C64::new(0.0, 1.0);

/// Tolerance used when accepting a matrix as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Largest elementwise modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .fold(0.0_f64, |acc, (x, y)| acc.max((x - y).norm()))
}

pub fn hermitian_deviation(m: &CMatrix) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

pub fn ensure_square(m: &CMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    Ok(m.nrows())
}

/// Rejects matrices whose anti-Hermitian part exceeds `tol` relative to
/// `max(1, max|m_ij|)`.
pub fn ensure_hermitian(m: &CMatrix, tol: f64) -> Result<()> {
    ensure_square(m)?;
    let dev = hermitian_deviation(m);
    if dev > tol * max_abs(m).max(1.0) {
        return Err(Error::NotHermitian { deviation: dev });
    }
    Ok(())
}

/// `AB - BA`.
pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

/// `i[A, B]`, Hermitian whenever `A` and `B` are.
pub fn i_commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    commutator(a, b) * I
}

pub fn anticommutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b + b * a
}

/// `⟨ψ|M|ψ⟩`.
pub fn expect_vector(psi: &CVector, m: &CMatrix) -> C64 {
    psi.dotc(&(m * psi))
}

/// `Tr(ρM)` without forming the product.
pub fn trace_product(rho: &CMatrix, m: &CMatrix) -> C64 {
    let n = rho.nrows();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            acc += rho[(i, j)] * m[(j, i)];
        }
    }
    acc
}

pub fn outer(a: &CVector, b: &CVector) -> CMatrix {
    a * b.adjoint()
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: DVector<f64>,
    /// Orthonormal eigenvectors as columns, in eigenvalue order.
    pub eigenvectors: CMatrix,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `U f(Λ) U†`.
    pub fn map<F: Fn(f64) -> C64>(&self, f: F) -> CMatrix {
        let u = &self.eigenvectors;
        let mut scaled = u.clone();
        for (k, &lam) in self.eigenvalues.iter().enumerate() {
            let fk = f(lam);
            scaled.column_mut(k).iter_mut().for_each(|z| *z *= fk);
        }
        scaled * u.adjoint()
    }

    pub fn reconstruct(&self) -> CMatrix {
        self.map(c)
    }

    /// `exp(-i t M)`.
    pub fn unitary(&self, t: f64) -> CMatrix {
        self.map(|lam| C64::from_polar(1.0, -lam * t))
    }

    /// Largest eigenvalue modulus, i.e. the operator norm.
    pub fn sup_norm(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0_f64, |a, l| a.max(l.abs()))
    }
}

/// Entries below this fraction of the largest one are flushed before
/// diagonalizing.
const FLUSH_REL: f64 = 1e-50;

/// Hermitian eigendecomposition with ascending eigenvalues.
///
/// The input is symmetrized before diagonalization so the solver only ever
/// sees an exactly Hermitian matrix.
pub fn spectral(m: &CMatrix) -> Result<SpectralDecomposition> {
    ensure_hermitian(m, HERMITIAN_TOL)?;
    let n = m.nrows();
    let mut sym = (m + m.adjoint()) * c(0.5);
    // entries whose products underflow make the solver return NaN
    let floor = max_abs(&sym) * FLUSH_REL;
    sym.iter_mut().filter(|x| x.norm() < floor).for_each(|x| *x = C64::new(0.0, 0.0));
    let eig = sym.symmetric_eigen();
    if eig.eigenvalues.iter().any(|l| !l.is_finite()) || eig.eigenvectors.iter().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return Err(Error::Degenerate("eigensolver produced non-finite output"));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = DVector::from_iterator(n, order.iter().map(|&k| eig.eigenvalues[k]));
    let mut eigenvectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Square root of a positive semidefinite matrix.
///
/// Eigenvalues in `[-1e-10, 1e-14]` are treated as exact zeros; anything
/// more negative is rejected.
pub fn psd_sqrt(m: &CMatrix) -> Result<CMatrix> {
    let sd = spectral(m)?;
    if let Some(&worst) = sd.eigenvalues.iter().find(|&&l| l < -1e-10) {
        return Err(Error::InvalidState(format!(
            "matrix is not positive semidefinite (eigenvalue {worst:e})"
        )));
    }
    Ok(sd.map(|l| c(if l <= 1e-14 { 0.0 } else { l.sqrt() })))
}

pub fn operator_norm(m: &CMatrix) -> Result<f64> {
    Ok(spectral(m)?.sup_norm())
}
