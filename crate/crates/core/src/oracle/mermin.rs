//! Mermin operator built from Kronecker products of single-qubit Paulis.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix, C64};

pub const MAX_MERMIN_LHV_PARTIES: usize = 8;

#[derive(Debug, Clone)]
pub struct MerminOperator {
    pub n_parties: usize,
    /// `Re ⊗_j (σ_x + iσ_y)`, i.e. `(P + P†)/2`.
    pub polynomial: CMatrix,
    /// Constant `c` minimizing `‖c·M - W‖_F` for the GHZ witness `W`.
    pub normalization: C64,
    /// `max |c·M - W|` after the fit.
    pub fit_residual: f64,
}

fn ghz_witness_full(n: usize) -> CMatrix {
    let dim = 1usize << n;
    let mut w = CMatrix::zeros(dim, dim);
    // GHZ± = (|0..0⟩ ± |1..1⟩)/√2, so N(P+ - P-) only couples the two ends
    let last = dim - 1;
    w[(0, last)] = c(n as f64);
    w[(last, 0)] = c(n as f64);
    w
}

pub fn mermin_operator(n: usize) -> Result<MerminOperator> {
    if n < 2 {
        return Err(Error::TooFewParties { n, min: 2 });
    }
    if n > super::MAX_FULL_PARTIES {
        return Err(Error::TooManyParties {
            n,
            max: super::MAX_FULL_PARTIES,
        });
    }
    let i = C64::new(0.0, 1.0);
    // σ_x + iσ_y = 2|0⟩⟨1|
    let single = CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)])
        + CMatrix::from_row_slice(2, 2, &[c(0.0), -i, i, c(0.0)]) * i;
    let mut p = CMatrix::identity(1, 1);
    for _ in 0..n {
        p = p.kronecker(&single);
    }
    let polynomial = (&p + p.adjoint()) * c(0.5);
    let w = ghz_witness_full(n);
    let num: C64 = polynomial.iter().zip(w.iter()).map(|(a, b)| a.conj() * b).sum();
    let den: f64 = polynomial.iter().map(|a| a.norm_sqr()).sum();
    let normalization = num / den;
    let fit_residual = linalg::max_abs_diff(&(&polynomial * normalization), &w);
    Ok(MerminOperator {
        n_parties: n,
        polynomial,
        normalization,
        fit_residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MerminLhv {
    /// Maximum of `Re Π_j (a_j + i b_j)` over `a_j, b_j = ±1`.
    pub polynomial_max: f64,
    /// Same maximum in units of the GHZ witness.
    pub witness_max: f64,
}

/// Exhaustive classical maximum over all `4^N` deterministic assignments.
pub fn mermin_lhv_max(n: usize) -> Result<MerminLhv> {
    if n > MAX_MERMIN_LHV_PARTIES {
        return Err(Error::TooManyParties {
            n,
            max: MAX_MERMIN_LHV_PARTIES,
        });
    }
    let op = mermin_operator(n)?;
    let mut best = f64::NEG_INFINITY;
    for code in 0u32..(1u32 << (2 * n)) {
        let mut z = C64::new(1.0, 0.0);
        for j in 0..n {
            let a = if (code >> (2 * j)) & 1 == 0 { 1.0 } else { -1.0 };
            let b = if (code >> (2 * j + 1)) & 1 == 0 { 1.0 } else { -1.0 };
            z *= C64::new(a, b);
        }
        best = best.max(z.re);
    }
    Ok(MerminLhv {
        polynomial_max: best,
        witness_max: best * op.normalization.norm(),
    })
}
