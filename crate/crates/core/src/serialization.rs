//! JSON records for caching states and operators: `{n, kind, re[], im[]}`,
//! matrices row-major.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector, C64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub n: usize,
    pub kind: String,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl MatrixRecord {
    pub fn from_vector(n: usize, kind: &str, v: &CVector) -> Self {
        Self {
            n,
            kind: kind.to_string(),
            re: v.iter().map(|z| z.re).collect(),
            im: v.iter().map(|z| z.im).collect(),
        }
    }

    pub fn from_matrix(n: usize, kind: &str, m: &CMatrix) -> Self {
        let (rows, cols) = m.shape();
        let mut re = Vec::with_capacity(rows * cols);
        let mut im = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                re.push(m[(i, j)].re);
                im.push(m[(i, j)].im);
            }
        }
        Self {
            n,
            kind: kind.to_string(),
            re,
            im,
        }
    }

    fn values(&self) -> Result<Vec<C64>> {
        if self.re.len() != self.im.len() {
            return Err(Error::DimensionMismatch {
                expected: self.re.len(),
                found: self.im.len(),
            });
        }
        Ok(self
            .re
            .iter()
            .zip(&self.im)
            .map(|(&r, &i)| C64::new(r, i))
            .collect())
    }

    pub fn to_vector(&self) -> Result<CVector> {
        let vals = self.values()?;
        if vals.len() != self.n + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.n + 1,
                found: vals.len(),
            });
        }
        Ok(CVector::from_vec(vals))
    }

    pub fn to_matrix(&self) -> Result<CMatrix> {
        let vals = self.values()?;
        let dim = self.n + 1;
        if vals.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: vals.len(),
            });
        }
        Ok(CMatrix::from_row_slice(dim, dim, &vals))
    }
}
