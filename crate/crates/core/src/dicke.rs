//! Collective spin operators in the Dicke basis.
//!
//! For `N` spin-1/2 parties the permutation-symmetric subspace is the
//! `j = N/2` irrep. Basis index `k` holds `m = N/2 - k`, so `k` counts the
//! number of parties in `|1⟩`. Each party contributes `σ/2`, so the
//! single-site operator norm is 1/2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix, I};
use crate::serialization::MatrixRecord;

pub fn ensure_parties(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooFewParties { n, min });
    }
    Ok(())
}

pub fn dicke_dim(n: usize) -> usize {
    n + 1
}

/// `m` eigenvalue stored at basis index `k`.
pub fn m_value(n: usize, k: usize) -> f64 {
    n as f64 / 2.0 - k as f64
}

/// Raising operator `S_+ = Σ σ_+^(i)` (not Hermitian).
pub fn raising(n: usize) -> Result<CMatrix> {
    ensure_parties(n, 1)?;
    let j = n as f64 / 2.0;
    let mut m = CMatrix::zeros(n + 1, n + 1);
    // S_+ |j, m⟩ = sqrt(j(j+1) - m(m+1)) |j, m+1⟩, i.e. index k -> k-1
    for k in 1..=n {
        let mv = m_value(n, k);
        m[(k - 1, k)] = c((j * (j + 1.0) - mv * (mv + 1.0)).sqrt());
    }
    Ok(m)
}

/// Hermitian operator on the (N+1)-dimensional symmetric subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct CollectiveOperator {
    n_parties: usize,
    matrix: CMatrix,
    label: String,
}

impl CollectiveOperator {
    /// Wraps a custom matrix after checking its shape and hermiticity.
    pub fn from_matrix(n_parties: usize, matrix: CMatrix, label: impl Into<String>) -> Result<Self> {
        ensure_parties(n_parties, 1)?;
        let dim = linalg::ensure_square(&matrix)?;
        if dim != dicke_dim(n_parties) {
            return Err(Error::DimensionMismatch {
                expected: dicke_dim(n_parties),
                found: dim,
            });
        }
        linalg::ensure_hermitian(&matrix, 1e-12)?;
        Ok(Self {
            n_parties,
            matrix,
            label: label.into(),
        })
    }

    fn trusted(n_parties: usize, matrix: CMatrix, label: impl Into<String>) -> Self {
        Self {
            n_parties,
            matrix,
            label: label.into(),
        }
    }

    pub fn sx(n: usize) -> Result<Self> {
        let sp = raising(n)?;
        let m = (&sp + sp.adjoint()) * c(0.5);
        Ok(Self::trusted(n, m, "Sx"))
    }

    pub fn sy(n: usize) -> Result<Self> {
        let sp = raising(n)?;
        let m = (&sp - sp.adjoint()) * (-I * 0.5);
        Ok(Self::trusted(n, m, "Sy"))
    }

    pub fn sz(n: usize) -> Result<Self> {
        ensure_parties(n, 1)?;
        let diag = nalgebra::DVector::from_fn(n + 1, |k, _| c(m_value(n, k)));
        Ok(Self::trusted(n, CMatrix::from_diagonal(&diag), "Sz"))
    }

    /// `S_n = n_x S_x + n_y S_y + n_z S_z` for a real direction.
    pub fn along(n: usize, dir: [f64; 3]) -> Result<Self> {
        let m = Self::sx(n)?.matrix * c(dir[0])
            + Self::sy(n)?.matrix * c(dir[1])
            + Self::sz(n)?.matrix * c(dir[2]);
        Ok(Self::trusted(n, m, "Sn"))
    }

    /// Identity on the symmetric subspace.
    pub fn identity(n: usize) -> Result<Self> {
        ensure_parties(n, 1)?;
        Ok(Self::trusted(n, CMatrix::identity(n + 1, n + 1), "I"))
    }

    /// `A²`.
    pub fn squared(&self) -> Self {
        Self::trusted(
            self.n_parties,
            &self.matrix * &self.matrix,
            format!("{}^2", self.label),
        )
    }

    /// Symmetrized product `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::trusted(
            self.n_parties,
            linalg::anticommutator(&self.matrix, &other.matrix),
            format!("{{{},{}}}", self.label, other.label),
        ))
    }

    /// `i[A, B]`.
    pub fn i_commutator(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::trusted(
            self.n_parties,
            linalg::i_commutator(&self.matrix, &other.matrix),
            format!("i[{},{}]", self.label, other.label),
        ))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::trusted(self.n_parties, &self.matrix * c(factor), self.label.clone())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn n_parties(&self) -> usize {
        self.n_parties
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn spectral(&self) -> Result<linalg::SpectralDecomposition> {
        linalg::spectral(&self.matrix)
    }

    /// Operator norm `‖A‖_∞`.
    pub fn sup_norm(&self) -> Result<f64> {
        Ok(self.spectral()?.sup_norm())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn to_record(&self) -> OperatorRecord {
        OperatorRecord {
            label: self.label.clone(),
            matrix: MatrixRecord::from_matrix(self.n_parties, "operator", &self.matrix),
        }
    }

    pub fn from_record(rec: &OperatorRecord) -> Result<Self> {
        let m = rec.matrix.to_matrix()?;
        Self::from_matrix(rec.matrix.n, m, rec.label.clone())
    }
}

/// JSON form of an operator: the shared `{n, kind, re, im}` object plus a label.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorRecord {
    pub label: String,
    #[serde(flatten)]
    pub matrix: MatrixRecord,
}
