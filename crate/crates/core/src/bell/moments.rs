use std::collections::BTreeMap;

use serde::Serialize;

use crate::dicke::CollectiveOperator;
use crate::error::{Error, Result};
use crate::state::SymmetricState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SettingsMode {
    TwoSetting,
    MultiSetting,
}

/// Identical per-party settings, each an angle in the x-y plane.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasurementSettings {
    pub mode: SettingsMode,
    pub angles: Vec<f64>,
}

impl MeasurementSettings {
    /// The two-setting pair `cos φ σ_y ∓ sin φ σ_x`, setting 0 carrying the
    /// negative x-component.
    pub fn two_setting(phi: f64) -> Self {
        Self {
            mode: SettingsMode::TwoSetting,
            angles: vec![-phi, phi],
        }
    }

    pub fn from_angles(angles: Vec<f64>) -> Result<Self> {
        if angles.len() < 2 {
            return Err(Error::OutOfRange {
                name: "m",
                value: angles.len() as f64,
                reason: "at least two settings are required",
            });
        }
        if let Some(&bad) = angles.iter().find(|a| !a.is_finite()) {
            return Err(Error::OutOfRange {
                name: "angle",
                value: bad,
                reason: "angles must be finite",
            });
        }
        Ok(Self {
            mode: SettingsMode::MultiSetting,
            angles,
        })
    }

    /// Symmetric fan `θ_k = -π/2 + π(k + ½)/m`.
    pub fn fan(m: usize) -> Result<Self> {
        Self::scaled_fan(m, 1.0)
    }

    /// The fan with every angle multiplied by `spread`.
    pub fn scaled_fan(m: usize, spread: f64) -> Result<Self> {
        let angles = (0..m)
            .map(|k| {
                spread
                    * (-std::f64::consts::FRAC_PI_2
                        + std::f64::consts::PI * (k as f64 + 0.5) / m as f64)
            })
            .collect();
        Self::from_angles(angles)
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Bloch direction of setting `k`.
    pub fn direction(&self, k: usize) -> [f64; 3] {
        let t = self.angles[k];
        [t.sin(), t.cos(), 0.0]
    }
}

/// First and symmetrized second moments of the collective spin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinMoments {
    pub n_parties: usize,
    /// `⟨S_a⟩`.
    pub mean: [f64; 3],
    /// `½⟨S_a S_b + S_b S_a⟩`.
    pub second: [[f64; 3]; 3],
}

impl SpinMoments {
    pub fn of(rho: &SymmetricState) -> Result<Self> {
        let n = rho.n_parties();
        let ops = [
            CollectiveOperator::sx(n)?,
            CollectiveOperator::sy(n)?,
            CollectiveOperator::sz(n)?,
        ];
        let mut mean = [0.0; 3];
        let mut second = [[0.0; 3]; 3];
        for a in 0..3 {
            mean[a] = rho.mean(&ops[a])?;
            for b in a..3 {
                let v = 0.5 * rho.mean(&ops[a].anticommutator(&ops[b])?)?;
                second[a][b] = v;
                second[b][a] = v;
            }
        }
        Ok(Self {
            n_parties: n,
            mean,
            second,
        })
    }

    fn mean_along(&self, d: &[f64; 3]) -> f64 {
        (0..3).map(|a| d[a] * self.mean[a]).sum()
    }

    /// `½⟨S_u S_v + S_v S_u⟩`.
    fn second_along(&self, u: &[f64; 3], v: &[f64; 3]) -> f64 {
        u.iter()
            .zip(&self.second)
            .map(|(ua, row)| ua * v.iter().zip(row).map(|(vb, s)| vb * s).sum::<f64>())
            .sum()
    }

    /// Symmetrized correlators for identical settings on every party:
    /// `𝒞_k = 2⟨S_k⟩` and `𝒞_kl = 2⟨S_k S_l + S_l S_k⟩ - N n_k·n_l`.
    pub fn correlators(&self, settings: &MeasurementSettings) -> Correlators {
        let m = settings.len();
        let dirs: Vec<[f64; 3]> = (0..m).map(|k| settings.direction(k)).collect();
        let n = self.n_parties as f64;
        let one_body = dirs.iter().map(|d| 2.0 * self.mean_along(d)).collect();
        let two_body = dirs
            .iter()
            .map(|u| {
                dirs.iter()
                    .map(|v| {
                        let dot: f64 = (0..3).map(|a| u[a] * v[a]).sum();
                        4.0 * self.second_along(u, v) - n * dot
                    })
                    .collect()
            })
            .collect();
        Correlators { one_body, two_body }
    }
}

/// One- and two-body symmetrized correlators, indexed by setting.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Correlators {
    pub one_body: Vec<f64>,
    /// `two_body[k][l]` sums over ordered pairs of distinct parties.
    pub two_body: Vec<Vec<f64>>,
}

impl Correlators {
    pub fn settings(&self) -> usize {
        self.one_body.len()
    }

    pub fn get(&self, index: &[usize]) -> Option<f64> {
        match index {
            [k] => self.one_body.get(*k).copied(),
            [k, l] => self.two_body.get(*k).and_then(|r| r.get(*l)).copied(),
            _ => None,
        }
    }

    /// Map keyed by comma-joined setting indices, e.g. `"0"` or `"0,1"`.
    pub fn to_map(&self) -> BTreeMap<String, f64> {
        let mut out = BTreeMap::new();
        for (k, v) in self.one_body.iter().enumerate() {
            out.insert(k.to_string(), *v);
        }
        for (k, row) in self.two_body.iter().enumerate() {
            for (l, v) in row.iter().enumerate() {
                out.insert(format!("{k},{l}"), *v);
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let one = self
            .one_body
            .iter()
            .zip(&other.one_body)
            .map(|(a, b)| (a - b).abs());
        let two = self
            .two_body
            .iter()
            .flatten()
            .zip(other.two_body.iter().flatten())
            .map(|(a, b)| (a - b).abs());
        one.chain(two).fold(0.0, f64::max)
    }
}

pub fn collective_correlators(
    rho: &SymmetricState,
    settings: &MeasurementSettings,
) -> Result<Correlators> {
    Ok(SpinMoments::of(rho)?.correlators(settings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn polar_state_has_zero_equatorial_correlators() {
        let s = SymmetricState::dicke(7, 0).unwrap();
        let c = collective_correlators(&s, &MeasurementSettings::fan(3).unwrap()).unwrap();
        assert!(c.one_body.iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn coherent_state_difference() {
        let n = 10;
        let phi = std::f64::consts::FRAC_PI_4;
        let c = collective_correlators(
            &SymmetricState::coherent_x(n).unwrap(),
            &MeasurementSettings::two_setting(phi),
        )
        .unwrap();
        // setting 1 carries +sin φ
        assert!((c.one_body[1] - c.one_body[0] - 2f64.sqrt() * n as f64).abs() < 1e-10);
    }

    #[test]
    fn moment_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let n = 6;
            let s = random::mixed_state(n, 2, &mut rng);
            let mo = SpinMoments::of(&s).unwrap();
            for phi in [0.2, 0.7, 1.3] {
                let c = mo.correlators(&MeasurementSettings::two_setting(phi));
                let (sx, sy2) = (mo.mean[0], mo.second[1][1]);
                assert!((4.0 * phi.sin() * sx - (c.one_body[1] - c.one_body[0])).abs() < 1e-9);
                let lhs = 4.0 * phi.cos().powi(2) * sy2;
                let rhs = n as f64 * phi.cos().powi(2)
                    + 0.25 * (c.two_body[0][0] + 2.0 * c.two_body[0][1] + c.two_body[1][1]);
                assert!((lhs - rhs).abs() < 1e-9);
                assert!((c.two_body[0][1] - c.two_body[1][0]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn map_keys() {
        let c = collective_correlators(
            &SymmetricState::ghz(3).unwrap(),
            &MeasurementSettings::fan(2).unwrap(),
        )
        .unwrap();
        let map = c.to_map();
        assert_eq!(map.len(), 2 + 4);
        assert_eq!(map["0,1"], c.get(&[0, 1]).unwrap());
        assert!(c.get(&[0, 1, 2]).is_none());
    }

    #[test]
    fn settings_validation() {
        assert!(MeasurementSettings::from_angles(vec![0.1]).is_err());
        assert!(MeasurementSettings::from_angles(vec![0.1, f64::NAN]).is_err());
        let fan = MeasurementSettings::fan(2).unwrap();
        assert!((fan.angles[0] + std::f64::consts::FRAC_PI_4).abs() < 1e-15);
    }
}
