//! Partial-transpose test across a bipartition of qubits.

use serde::Serialize;

use super::FullState;
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

/// Partial transpose on the qubits *not* listed in `first`.
pub fn partial_transpose(rho: &CMatrix, n: usize, first: &[usize]) -> Result<CMatrix> {
    let dim = 1usize << n;
    if rho.shape() != (dim, dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: rho.nrows(),
        });
    }
    let mut first_mask = 0usize;
    for &q in first {
        if q >= n {
            return Err(Error::InvalidCut(format!("qubit {q} out of range for N={n}")));
        }
        first_mask |= 1 << (n - 1 - q);
    }
    if first_mask == 0 || first_mask == dim - 1 {
        return Err(Error::InvalidCut("both sides of the cut must be non-empty".into()));
    }
    let second_mask = (dim - 1) ^ first_mask;
    let mut out = CMatrix::zeros(dim, dim);
    for r in 0..dim {
        for col in 0..dim {
            // swap the second-factor bits between row and column index
            let r2 = (r & first_mask) | (col & second_mask);
            let c2 = (col & first_mask) | (r & second_mask);
            out[(r2, c2)] = rho[(r, col)];
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PptOutcome {
    pub min_eigenvalue: f64,
    /// Negative partial transpose, which certifies entanglement.
    pub npt: bool,
}

pub fn ppt_bipartite_check(state: &FullState, first: &[usize]) -> Result<PptOutcome> {
    if state.n_parties() > super::MAX_MIXED_PARTIES {
        return Err(Error::TooManyParties {
            n: state.n_parties(),
            max: super::MAX_MIXED_PARTIES,
        });
    }
    let pt = partial_transpose(&state.density_matrix(), state.n_parties(), first)?;
    let sd = linalg::spectral(&pt)?;
    let min_eigenvalue = sd.eigenvalues.min();
    Ok(PptOutcome {
        min_eigenvalue,
        npt: min_eigenvalue < -1e-10,
    })
}
