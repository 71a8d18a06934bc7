use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::squeezing::SqueezingSummary;
use super::witness::{witness_multi_setting, witness_two_setting};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionCell {
    pub xi2: f64,
    #[serde(rename = "C")]
    pub contrast: f64,
    pub w1m_margin: f64,
    pub w2m_margin: f64,
    pub w1m_violated: bool,
    pub w2m_violated: bool,
}

/// Cell centres `(i + ½)/cells` of the unit interval.
pub fn default_axis(cells: usize) -> Vec<f64> {
    (0..cells).map(|i| (i as f64 + 0.5) / cells as f64).collect()
}

/// Evaluates both witnesses on the grid `ξ² × 𝒞`, row-major in `ξ²`.
pub fn region_map(xi2_grid: &[f64], c_grid: &[f64]) -> Result<Vec<RegionCell>> {
    if xi2_grid.is_empty() || c_grid.is_empty() {
        return Err(Error::OutOfRange {
            name: "grid",
            value: 0.0,
            reason: "grids must be nonempty",
        });
    }
    if let Some(&x) = xi2_grid.iter().find(|&&x| !(x > 0.0 && x <= 1.0)) {
        return Err(Error::OutOfRange {
            name: "xi2",
            value: x,
            reason: "grid values must lie in (0, 1]",
        });
    }
    if let Some(&x) = c_grid.iter().find(|&&x| !(x > 0.0 && x < 1.0)) {
        return Err(Error::OutOfRange {
            name: "C",
            value: x,
            reason: "grid values must lie in (0, 1)",
        });
    }
    let rows: Vec<Vec<RegionCell>> = xi2_grid
        .par_iter()
        .map(|&xi2| {
            c_grid
                .iter()
                .map(|&c| {
                    let s = SqueezingSummary::from_xi2_contrast(0, xi2, c);
                    let w1 = witness_two_setting(&s).expect("contrast checked above");
                    let w2 = witness_multi_setting(&s).expect("contrast checked above");
                    RegionCell {
                        xi2,
                        contrast: c,
                        w1m_margin: w1.margin,
                        w2m_margin: w2.margin,
                        w1m_violated: w1.margin < 0.0,
                        w2m_violated: w2.margin < 0.0,
                    }
                })
                .collect()
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caption_points() {
        let cells = region_map(&[0.2, 0.45, 0.6], &[0.1, 0.5, 0.995]).unwrap();
        assert_eq!(cells.len(), 9);
        assert!(cells[..3].iter().all(|c| c.w1m_violated && c.w2m_violated));
        assert!(cells[5].w1m_violated, "ξ²=0.45, C=0.995");
        assert!(!cells[4].w1m_violated);
        assert!(cells[6..].iter().all(|c| !c.w1m_violated));
        assert_eq!(cells[4].xi2, 0.45);
        assert_eq!(cells[4].contrast, 0.5);
    }

    #[test]
    fn grid_validation() {
        assert!(region_map(&[], &[0.5]).is_err());
        assert!(region_map(&[0.0], &[0.5]).is_err());
        assert!(region_map(&[0.5], &[1.0]).is_err());
    }
}
