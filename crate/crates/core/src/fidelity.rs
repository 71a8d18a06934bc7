//! Uhlmann fidelity `F = (Tr√(√ρ σ √ρ))²` and Bures distance `√(2 - 2√F)`.

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};
use crate::state::SymmetricState;

/// Fidelity between two symmetric states.
///
/// When either state is pure the exact reduction `⟨ψ|σ|ψ⟩` is used; mixed
/// pairs go through [`uhlmann_fidelity`].
pub fn fidelity(rho: &SymmetricState, sigma: &SymmetricState) -> Result<f64> {
    rho.check_dim(sigma.dim())?;
    let f = match (rho.amplitudes(), sigma.amplitudes()) {
        (Some(psi), _) => sigma.expect_matrix(&linalg::outer(psi, psi)).re,
        (None, Some(phi)) => rho.expect_matrix(&linalg::outer(phi, phi)).re,
        (None, None) => return uhlmann_fidelity(&rho.density_matrix(), &sigma.density_matrix()),
    };
    Ok(f.clamp(0.0, 1.0))
}

/// General fidelity of two density matrices.
///
/// `Tr√(√ρ σ √ρ)` equals the sum of singular values of `√ρ √σ`, which avoids
/// taking square roots of near-zero eigenvalues a second time.
pub fn uhlmann_fidelity(rho: &CMatrix, sigma: &CMatrix) -> Result<f64> {
    if rho.shape() != sigma.shape() {
        return Err(Error::DimensionMismatch {
            expected: rho.nrows(),
            found: sigma.nrows(),
        });
    }
    for m in [rho, sigma] {
        let tr = m.trace();
        if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-10 {
            return Err(Error::InvalidState(format!("trace {tr} differs from 1")));
        }
    }
    let a = linalg::psd_sqrt(rho)? * linalg::psd_sqrt(sigma)?;
    let nuclear: f64 = a.singular_values().iter().sum();
    Ok((nuclear * nuclear).clamp(0.0, 1.0))
}

pub fn bures_from_fidelity(f: f64) -> f64 {
    (2.0 - 2.0 * f.sqrt()).max(0.0).sqrt()
}

/// Bures distance. For two pure states this is the phase-aligned vector
/// distance `min_θ ‖ψ - e^{iθ}φ‖`, which stays accurate for nearby states.
pub fn bures_distance(rho: &SymmetricState, sigma: &SymmetricState) -> Result<f64> {
    rho.check_dim(sigma.dim())?;
    if let (Some(psi), Some(phi)) = (rho.amplitudes(), sigma.amplitudes()) {
        let overlap = phi.dotc(psi);
        let phase = if overlap.norm() > 0.0 {
            overlap / overlap.norm()
        } else {
            linalg::c(1.0)
        };
        return Ok((psi - phi * phase).norm());
    }
    Ok(bures_from_fidelity(fidelity(rho, sigma)?))
}
