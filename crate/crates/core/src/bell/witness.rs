//! Collective-measurement Bell-correlation witnesses in the `(𝒞, ζ²)` plane.

use serde::Serialize;

use super::squeezing::SqueezingSummary;
use super::VIOLATION_TOL;
use crate::error::{Error, Result};
use crate::optimize;

/// Largest `|𝒞|` fed to `arctanh`.
const ARCTANH_GUARD: f64 = 1.0 - 1e-12;
/// Below this the multi-setting bound is evaluated by its series.
const SERIES_CUTOFF: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WitnessOutcome {
    /// `ζ² - bound(𝒞)`; negative means Bell correlations.
    pub margin: f64,
    pub violated: bool,
    /// Set when `|𝒞|` reached 1 and the bound was pinned to its limit value.
    pub saturated: bool,
}

/// `½(1 - √(1 - 𝒞²))`, in the cancellation-free form `½𝒞²/(1 + √(1-𝒞²))`.
pub fn two_setting_bound(contrast: f64) -> f64 {
    let c2 = (contrast * contrast).min(1.0);
    0.5 * c2 / (1.0 + (1.0 - c2).sqrt())
}

/// `1 - 𝒞/arctanh 𝒞`, returned with a saturation flag for `|𝒞| ≥ 1`.
pub fn multi_setting_bound(contrast: f64) -> (f64, bool) {
    let a = contrast.abs();
    if a > ARCTANH_GUARD {
        return (1.0, true);
    }
    if a < SERIES_CUTOFF {
        let c2 = a * a;
        return (c2 / 3.0 + 4.0 * c2 * c2 / 45.0, false);
    }
    let atanh = 0.5 * (2.0 * a / (1.0 - a)).ln_1p();
    (1.0 - a / atanh, false)
}

fn check_contrast(c: f64) -> Result<()> {
    if c.abs() > 1.0 + 1e-9 || !c.is_finite() {
        return Err(Error::OutOfRange {
            name: "contrast",
            value: c,
            reason: "|C| must not exceed 1",
        });
    }
    Ok(())
}

/// Two-setting witness `ζ² ≥ ½(1 - √(1-𝒞²))`.
pub fn witness_two_setting(s: &SqueezingSummary) -> Result<WitnessOutcome> {
    check_contrast(s.contrast)?;
    let margin = s.zeta2 - two_setting_bound(s.contrast);
    Ok(WitnessOutcome {
        margin,
        violated: margin < -VIOLATION_TOL,
        saturated: false,
    })
}

/// Many-setting limit witness `ζ² ≥ 1 - 𝒞/arctanh 𝒞`.
pub fn witness_multi_setting(s: &SqueezingSummary) -> Result<WitnessOutcome> {
    check_contrast(s.contrast)?;
    let (bound, saturated) = multi_setting_bound(s.contrast);
    let margin = s.zeta2 - bound;
    Ok(WitnessOutcome {
        margin,
        violated: margin < -VIOLATION_TOL,
        saturated,
    })
}

/// Smallest contrast at which a state with squeezing `ξ²` violates the
/// two-setting witness: `0` for `ξ² ≤ 1/4`, `None` for `ξ² ≥ 1/2`, else
/// `√(1 - ((1-2ξ²)/(2ξ²))²)`.
pub fn minimal_contrast_two_setting(xi2: f64) -> Option<f64> {
    if xi2 <= 0.25 {
        return Some(0.0);
    }
    if xi2 >= 0.5 {
        return None;
    }
    let r = (1.0 - 2.0 * xi2) / (2.0 * xi2);
    Some((1.0 - r * r).sqrt())
}

/// Same for the many-setting witness, located by bisection: `0` for
/// `ξ² ≤ 1/3`, `None` for `ξ² ≥ 1`.
///
/// For `ξ²` close to 1 the crossing lies closer to `𝒞 = 1` than `f64` can
/// resolve; the saturated boundary `1.0` is returned then.
pub fn minimal_contrast_multi_setting(xi2: f64) -> Option<f64> {
    if xi2 <= 1.0 / 3.0 {
        return Some(0.0);
    }
    if xi2 >= 1.0 {
        return None;
    }
    // (1 - C/atanh C)/C² rises monotonically from 1/3 to 1 on (0, 1)
    let g = |c: f64| xi2 * c * c - multi_setting_bound(c).0;
    let lo = SERIES_CUTOFF;
    if g(lo) < 0.0 {
        return Some(lo);
    }
    if g(ARCTANH_GUARD) > 0.0 {
        return Some(1.0);
    }
    optimize::bisect(g, lo, ARCTANH_GUARD, 1e-14)
}
