use serde::Serialize;

use crate::dicke::CollectiveOperator;
use crate::error::{Error, Result};
use crate::state::SymmetricState;

/// Contrast below which `ξ²` is reported as undefined.
pub const CONTRAST_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqueezingSummary {
    pub n_parties: usize,
    /// `⟨S_x⟩ / (N/2)`.
    pub contrast: f64,
    /// `⟨S_y²⟩ / (N/4)`.
    pub zeta2: f64,
    /// `N⟨S_y²⟩ / ⟨S_x⟩²`, `None` when the contrast vanishes.
    pub xi2: Option<f64>,
}

impl SqueezingSummary {
    pub fn from_moments(n_parties: usize, sx_mean: f64, sy2_mean: f64) -> Self {
        let n = n_parties as f64;
        let contrast = sx_mean / (n / 2.0);
        let zeta2 = (sy2_mean / (n / 4.0)).max(0.0);
        Self::from_scaled(n_parties, contrast, zeta2)
    }

    pub fn from_scaled(n_parties: usize, contrast: f64, zeta2: f64) -> Self {
        let xi2 = (contrast.abs() > CONTRAST_FLOOR).then(|| zeta2 / (contrast * contrast));
        Self {
            n_parties,
            contrast,
            zeta2,
            xi2,
        }
    }

    /// Point of the `(ξ², 𝒞)` plane, with `ζ² = ξ² 𝒞²`.
    pub fn from_xi2_contrast(n_parties: usize, xi2: f64, contrast: f64) -> Self {
        Self {
            n_parties,
            contrast,
            zeta2: xi2 * contrast * contrast,
            xi2: Some(xi2),
        }
    }
}

pub fn squeezing_summary(rho: &SymmetricState) -> Result<SqueezingSummary> {
    let n = rho.n_parties();
    let sx = rho.mean(&CollectiveOperator::sx(n)?)?;
    let sy2 = rho.mean(&CollectiveOperator::sy(n)?.squared())?;
    Ok(SqueezingSummary::from_moments(n, sx, sy2))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NecessaryCondition {
    /// `N/ξ²`, the uncertainty bound with `A = S_z`, `B = S_y`.
    pub qfi_lb: f64,
    pub beats_shot_noise: bool,
}

pub fn qfi_necessary_condition(summary: &SqueezingSummary) -> Result<NecessaryCondition> {
    let xi2 = summary.xi2.ok_or(Error::UndefinedSqueezing(CONTRAST_FLOOR))?;
    if xi2 <= 0.0 || !xi2.is_finite() {
        return Err(Error::OutOfRange {
            name: "xi2",
            value: xi2,
            reason: "squeezing parameter must be finite and positive",
        });
    }
    let n = summary.n_parties as f64;
    let qfi_lb = n * summary.contrast * summary.contrast / summary.zeta2;
    Ok(NecessaryCondition {
        qfi_lb,
        beats_shot_noise: qfi_lb > n,
    })
}
