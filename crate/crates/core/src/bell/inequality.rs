//! Symmetric Bell inequalities `Σ_k a_k 𝒞_k + Σ_kl b_kl 𝒞_kl + c ≥ 0`.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use super::moments::{Correlators, MeasurementSettings, SpinMoments};
use super::VIOLATION_TOL;
use crate::dicke::CollectiveOperator;
use crate::error::{Error, Result};
use crate::optimize;
use crate::state::SymmetricState;

/// Coefficients of a permutation-symmetric inequality with at most two-body
/// terms. Fulfilled by local hidden variable models when the constant is
/// the classical bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetricBellInequality {
    pub one_body: Vec<f64>,
    /// Weights over ordered setting pairs `(k, l)`.
    pub two_body: Vec<Vec<f64>>,
    pub constant: f64,
}

impl SymmetricBellInequality {
    /// All two-body weights equal to `weight`.
    pub fn uniform(one_body: Vec<f64>, weight: f64, constant: f64) -> Self {
        let m = one_body.len();
        Self {
            one_body,
            two_body: vec![vec![weight; m]; m],
            constant,
        }
    }

    /// `𝒞_0 - 𝒞_1 + ½𝒞_00 + 𝒞_01 + ½𝒞_11 + 2N ≥ 0`.
    pub fn two_setting(n: usize) -> Self {
        Self::uniform(vec![1.0, -1.0], 0.5, 2.0 * n as f64)
    }

    /// `Σ_k (m-2k-1) 𝒞_k + ½ Σ_kl 𝒞_kl + ⌊m²N/2⌋ ≥ 0`.
    pub fn multi_setting(m: usize, n: usize) -> Self {
        let one = (0..m).map(|k| m as f64 - 2.0 * k as f64 - 1.0).collect();
        Self::uniform(one, 0.5, ((m * m * n) / 2) as f64)
    }

    pub fn settings(&self) -> usize {
        self.one_body.len()
    }

    pub fn evaluate(&self, c: &Correlators) -> Result<f64> {
        if c.settings() != self.settings() {
            return Err(Error::DimensionMismatch {
                expected: self.settings(),
                found: c.settings(),
            });
        }
        let one: f64 = self.one_body.iter().zip(&c.one_body).map(|(a, v)| a * v).sum();
        let two: f64 = self
            .two_body
            .iter()
            .flatten()
            .zip(c.two_body.iter().flatten())
            .map(|(b, v)| b * v)
            .sum();
        Ok(one + two + self.constant)
    }

    pub fn is_violation(&self, value: f64) -> bool {
        value < -VIOLATION_TOL * self.constant.abs().max(1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InequalityKind {
    TwoSetting,
    MultiSetting { m: usize },
    Mermin,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BellEvaluation {
    pub inequality: InequalityKind,
    /// Left-hand side; for Mermin the witness mean `⟨W⟩`.
    pub value: f64,
    /// The classical constant (`2N`, `⌊m²N/2⌋`) or, for Mermin, the local bound.
    pub classical_bound_offset: f64,
    pub violated: bool,
    pub correlators: Option<Correlators>,
    pub angles: Vec<f64>,
}

fn check_phi(phi: f64) -> Result<()> {
    if !(phi > 0.0 && phi < FRAC_PI_2) {
        return Err(Error::OutOfRange {
            name: "phi",
            value: phi,
            reason: "angle must lie in (0, π/2)",
        });
    }
    Ok(())
}

fn evaluate_with(
    moments: &SpinMoments,
    ineq: &SymmetricBellInequality,
    kind: InequalityKind,
    settings: &MeasurementSettings,
) -> Result<BellEvaluation> {
    let c = moments.correlators(settings);
    let value = ineq.evaluate(&c)?;
    Ok(BellEvaluation {
        inequality: kind,
        value,
        classical_bound_offset: ineq.constant,
        violated: ineq.is_violation(value),
        correlators: Some(c),
        angles: settings.angles.clone(),
    })
}

/// Two-setting inequality at measurement angle `φ ∈ (0, π/2)`.
pub fn bell_two_setting(rho: &SymmetricState, phi: f64) -> Result<BellEvaluation> {
    check_phi(phi)?;
    let n = rho.n_parties();
    evaluate_with(
        &SpinMoments::of(rho)?,
        &SymmetricBellInequality::two_setting(n),
        InequalityKind::TwoSetting,
        &MeasurementSettings::two_setting(phi),
    )
}

/// `α + β⟨S_y²⟩ - γ⟨S_x⟩` with `α = 2N sin²φ`, `β = 8 cos²φ`, `γ = 4 sin φ`;
/// coincides with the two-setting left-hand side.
pub fn linear_ansatz_value(rho: &SymmetricState, phi: f64) -> Result<f64> {
    let n = rho.n_parties();
    let sx = rho.mean(&CollectiveOperator::sx(n)?)?;
    let sy2 = rho.mean(&CollectiveOperator::sy(n)?.squared())?;
    let (s, c) = phi.sin_cos();
    Ok(2.0 * n as f64 * s * s + 8.0 * c * c * sy2 - 4.0 * s * sx)
}

/// Minimizes the two-setting value over `φ`: `resolution` grid points then
/// golden-section to 1e-8.
pub fn optimize_two_setting(rho: &SymmetricState, resolution: usize) -> Result<(f64, BellEvaluation)> {
    let n = rho.n_parties();
    let moments = SpinMoments::of(rho)?;
    let ineq = SymmetricBellInequality::two_setting(n);
    let f = |phi: f64| {
        ineq.evaluate(&moments.correlators(&MeasurementSettings::two_setting(phi)))
            .unwrap_or(f64::INFINITY)
    };
    let best = optimize::grid_then_golden(f, 0.0, FRAC_PI_2, resolution, 1e-8);
    let eval = evaluate_with(
        &moments,
        &ineq,
        InequalityKind::TwoSetting,
        &MeasurementSettings::two_setting(best.x),
    )?;
    Ok((best.x, eval))
}

/// Multi-setting inequality for the given angles (`m = angles.len()`).
pub fn bell_multi_setting(rho: &SymmetricState, settings: &MeasurementSettings) -> Result<BellEvaluation> {
    let m = settings.len();
    if m < 2 {
        return Err(Error::OutOfRange {
            name: "m",
            value: m as f64,
            reason: "at least two settings are required",
        });
    }
    evaluate_with(
        &SpinMoments::of(rho)?,
        &SymmetricBellInequality::multi_setting(m, rho.n_parties()),
        InequalityKind::MultiSetting { m },
        settings,
    )
}

/// Minimizes the `m`-setting value over the opening of the symmetric fan
/// (`spread ∈ (0, 1)` scaling every fan angle).
pub fn optimize_multi_setting(
    rho: &SymmetricState,
    m: usize,
    resolution: usize,
) -> Result<(f64, BellEvaluation)> {
    let moments = SpinMoments::of(rho)?;
    let ineq = SymmetricBellInequality::multi_setting(m, rho.n_parties());
    MeasurementSettings::fan(m)?;
    let f = |spread: f64| match MeasurementSettings::scaled_fan(m, spread) {
        Ok(s) => ineq.evaluate(&moments.correlators(&s)).unwrap_or(f64::INFINITY),
        Err(_) => f64::INFINITY,
    };
    let best = optimize::grid_then_golden(f, 0.0, 1.0, resolution, 1e-8);
    let eval = evaluate_with(
        &moments,
        &ineq,
        InequalityKind::MultiSetting { m },
        &MeasurementSettings::scaled_fan(m, best.x)?,
    )?;
    Ok((best.x, eval))
}
