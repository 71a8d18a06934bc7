//! Permutation-symmetric N-qubit states in the Dicke basis.
//!
//! Every state family used here (GHZ, coherent spin states, twisted
//! states, GHZ mixtures) lives in the symmetric subspace, so the
//! (N+1)-dimensional representation is exact for them. Non-symmetric
//! states go through [`crate::oracle::FullState`] instead.

use nalgebra::DVector;

use crate::dicke::{ensure_parties, CollectiveOperator};
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix, CVector, C64};
use crate::optimize;
use crate::serialization::MatrixRecord;

pub const NORM_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    Pure,
    Mixed,
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    Pure(CVector),
    Mixed(CMatrix),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricState {
    n_parties: usize,
    repr: Repr,
}

impl SymmetricState {
    pub fn from_amplitudes(n_parties: usize, amplitudes: CVector) -> Result<Self> {
        ensure_parties(n_parties, 1)?;
        if amplitudes.len() != n_parties + 1 {
            return Err(Error::DimensionMismatch {
                expected: n_parties + 1,
                found: amplitudes.len(),
            });
        }
        let norm2 = amplitudes.norm_squared();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!("squared norm {norm2} differs from 1")));
        }
        Ok(Self {
            n_parties,
            repr: Repr::Pure(amplitudes),
        })
    }

    /// Normalizes `amplitudes` before wrapping them.
    pub fn normalized(n_parties: usize, amplitudes: CVector) -> Result<Self> {
        let norm = amplitudes.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidState("zero or non-finite amplitude vector".into()));
        }
        Self::from_amplitudes(n_parties, amplitudes.unscale(norm))
    }

    pub fn from_density(n_parties: usize, density: CMatrix) -> Result<Self> {
        ensure_parties(n_parties, 1)?;
        let dim = linalg::ensure_square(&density)?;
        if dim != n_parties + 1 {
            return Err(Error::DimensionMismatch {
                expected: n_parties + 1,
                found: dim,
            });
        }
        let dev = linalg::hermitian_deviation(&density);
        if dev > NORM_TOL {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let tr = density.trace();
        if (tr.re - 1.0).abs() > NORM_TOL || tr.im.abs() > NORM_TOL {
            return Err(Error::InvalidState(format!("trace {tr} differs from 1")));
        }
        let sd = linalg::spectral(&density)?;
        let min = sd.eigenvalues[0];
        if min < -PSD_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self {
            n_parties,
            repr: Repr::Mixed(density),
        })
    }

    /// Dicke state with `k` parties in `|1⟩` (`m = N/2 - k`).
    pub fn dicke(n: usize, k: usize) -> Result<Self> {
        ensure_parties(n, 1)?;
        if k > n {
            return Err(Error::OutOfRange {
                name: "k",
                value: k as f64,
                reason: "excitation number exceeds party count",
            });
        }
        let mut v = CVector::zeros(n + 1);
        v[k] = c(1.0);
        Self::from_amplitudes(n, v)
    }

    pub fn ghz(n: usize) -> Result<Self> {
        Self::ghz_with_sign(n, 1.0)
    }

    /// `(|0…0⟩ - |1…1⟩)/√2`.
    pub fn ghz_perp(n: usize) -> Result<Self> {
        Self::ghz_with_sign(n, -1.0)
    }

    fn ghz_with_sign(n: usize, sign: f64) -> Result<Self> {
        ensure_parties(n, 2)?;
        let mut v = CVector::zeros(n + 1);
        v[0] = c(std::f64::consts::FRAC_1_SQRT_2);
        v[n] = c(sign * std::f64::consts::FRAC_1_SQRT_2);
        Self::from_amplitudes(n, v)
    }

    /// Product state `(cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩)^⊗N`.
    pub fn coherent_spin(n: usize, theta: f64, phi: f64) -> Result<Self> {
        ensure_parties(n, 1)?;
        let (cs, sn) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let mut ln_binom = 0.0;
        let mut amps = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if k > 0 {
                ln_binom += ((n - k + 1) as f64).ln() - (k as f64).ln();
            }
            let pc = power_term(cs, n - k);
            let ps = power_term(sn, k);
            let magnitude = match (pc, ps) {
                (Some((lc, sc)), Some((ls, ss))) => sc * ss * (0.5 * ln_binom + lc + ls).exp(),
                _ => 0.0,
            };
            amps.push(C64::from_polar(magnitude, phi * k as f64));
        }
        Self::normalized(n, CVector::from_vec(amps))
    }

    /// Coherent spin state polarized along +x.
    pub fn coherent_x(n: usize) -> Result<Self> {
        Self::coherent_spin(n, std::f64::consts::FRAC_PI_2, 0.0)
    }

    /// One-axis twisting `exp(-iμ S_z²)` of the +x coherent state, rotated
    /// about x to put the minimal variance along y and the mean spin on +x.
    pub fn one_axis_twisted(n: usize, mu: f64) -> Result<Self> {
        ensure_parties(n, 2)?;
        let css = Self::coherent_x(n)?;
        let amps = css.amplitudes().expect("coherent state is pure");
        let twisted = CVector::from_fn(n + 1, |k, _| {
            let m = crate::dicke::m_value(n, k);
            amps[k] * C64::from_polar(1.0, -mu * m * m)
        });
        Self::normalized(n, twisted)?.align_squeezing_frame()
    }

    /// Two-axis twisting of the +x coherent state.
    ///
    /// The generator is `(S'_+² - S'_-²)/(2i) = S_y S_z + S_z S_y`, with the
    /// ladder operators taken about x so that the initial polarization is the
    /// saddle point of the flow. The result is aligned like
    /// [`Self::one_axis_twisted`].
    pub fn two_axis_twisted(n: usize, chi: f64) -> Result<Self> {
        ensure_parties(n, 2)?;
        let generator = two_axis_generator(n)?;
        Self::coherent_x(n)?
            .evolve(&generator, chi)?
            .align_squeezing_frame()
    }

    /// `(1+p)/2 |GHZ⟩⟨GHZ| + (1-p)/2 |GHZ⊥⟩⟨GHZ⊥|`.
    pub fn ghz_mixture(n: usize, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange {
                name: "p",
                value: p,
                reason: "mixing parameter must lie in [0, 1]",
            });
        }
        let g = Self::ghz(n)?.density_matrix();
        let gp = Self::ghz_perp(n)?.density_matrix();
        Self::from_density(n, g * c((1.0 + p) / 2.0) + gp * c((1.0 - p) / 2.0))
    }

    /// Identity on the symmetric subspace divided by N+1.
    pub fn maximally_mixed(n: usize) -> Result<Self> {
        ensure_parties(n, 1)?;
        Self::from_density(n, CMatrix::identity(n + 1, n + 1) * c(1.0 / (n + 1) as f64))
    }

    /// Convex combination `Σ w_i ρ_i`; weights must be nonnegative and sum to 1.
    pub fn mixture(parts: &[(f64, &SymmetricState)]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidState("empty mixture".into()))?
            .1;
        let n = first.n_parties;
        let mut rho = CMatrix::zeros(n + 1, n + 1);
        for (w, s) in parts {
            if s.n_parties != n {
                return Err(Error::DimensionMismatch {
                    expected: n + 1,
                    found: s.dim(),
                });
            }
            if *w < 0.0 {
                return Err(Error::OutOfRange {
                    name: "weight",
                    value: *w,
                    reason: "mixture weights must be nonnegative",
                });
            }
            rho += s.density_matrix() * c(*w);
        }
        Self::from_density(n, rho)
    }

    pub fn n_parties(&self) -> usize {
        self.n_parties
    }

    pub fn dim(&self) -> usize {
        self.n_parties + 1
    }

    pub fn kind(&self) -> StateKind {
        match self.repr {
            Repr::Pure(_) => StateKind::Pure,
            Repr::Mixed(_) => StateKind::Mixed,
        }
    }

    pub fn is_pure(&self) -> bool {
        self.kind() == StateKind::Pure
    }

    pub fn amplitudes(&self) -> Option<&CVector> {
        match &self.repr {
            Repr::Pure(v) => Some(v),
            Repr::Mixed(_) => None,
        }
    }

    pub fn density_matrix(&self) -> CMatrix {
        match &self.repr {
            Repr::Pure(v) => linalg::outer(v, v),
            Repr::Mixed(m) => m.clone(),
        }
    }

    /// `Tr(ρM)` for any matrix on the symmetric subspace.
    pub fn expect_matrix(&self, m: &CMatrix) -> C64 {
        match &self.repr {
            Repr::Pure(v) => linalg::expect_vector(v, m),
            Repr::Mixed(rho) => linalg::trace_product(rho, m),
        }
    }

    /// Expectation value of a Hermitian operator (real part).
    pub fn mean(&self, op: &CollectiveOperator) -> Result<f64> {
        self.check_dim(op.dim())?;
        Ok(self.expect_matrix(op.matrix()).re)
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if dim != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: dim,
            });
        }
        Ok(())
    }

    /// `exp(-iAt) ρ exp(iAt)`.
    pub fn evolve(&self, generator: &CollectiveOperator, t: f64) -> Result<Self> {
        self.check_dim(generator.dim())?;
        let u = generator.spectral()?.unitary(t);
        Ok(self.conjugate_by(&u))
    }

    /// Applies a unitary in place of re-validating; callers guarantee unitarity.
    fn conjugate_by(&self, u: &CMatrix) -> Self {
        let repr = match &self.repr {
            Repr::Pure(v) => Repr::Pure(u * v),
            Repr::Mixed(rho) => {
                let m = u * rho * u.adjoint();
                Repr::Mixed((&m + m.adjoint()) * c(0.5))
            }
        };
        Self {
            n_parties: self.n_parties,
            repr,
        }
    }

    /// Rotates about x so that `⟨S_y²⟩` is minimal, then flips the mean spin
    /// onto +x if needed.
    ///
    /// The rotation angle is found by a 64-point scan of `[0, π)` refined by
    /// golden-section search to 1e-10.
    pub fn align_squeezing_frame(&self) -> Result<Self> {
        let n = self.n_parties;
        let sx = CollectiveOperator::sx(n)?;
        let sy2 = CollectiveOperator::sy(n)?.squared();
        let sx_spec = sx.spectral()?;
        let sy2_at = |nu: f64| {
            let u = sx_spec.unitary(nu);
            self.conjugate_by(&u).expect_matrix(sy2.matrix()).re
        };
        let samples: Vec<f64> = (0..64)
            .map(|k| sy2_at(std::f64::consts::PI * k as f64 / 64.0))
            .collect();
        let spread = samples.iter().cloned().fold(f64::MIN, f64::max)
            - samples.iter().cloned().fold(f64::MAX, f64::min);
        let mut out = if spread <= 1e-12 * (n as f64) {
            self.clone()
        } else {
            let best = optimize::periodic_minimum(sy2_at, std::f64::consts::PI, 64, 1e-10);
            self.conjugate_by(&sx_spec.unitary(best.x))
        };
        if out.mean(&sx)? < 0.0 {
            let sz = CollectiveOperator::sz(n)?;
            out = out.conjugate_by(&sz.spectral()?.unitary(std::f64::consts::PI));
        }
        Ok(out)
    }

    pub fn to_record(&self) -> MatrixRecord {
        match &self.repr {
            Repr::Pure(v) => MatrixRecord::from_vector(self.n_parties, "pure", v),
            Repr::Mixed(m) => MatrixRecord::from_matrix(self.n_parties, "mixed", m),
        }
    }

    pub fn from_record(rec: &MatrixRecord) -> Result<Self> {
        match rec.kind.as_str() {
            "pure" => Self::from_amplitudes(rec.n, rec.to_vector()?),
            "mixed" => Self::from_density(rec.n, rec.to_matrix()?),
            other => Err(Error::Parse(format!("unknown state kind `{other}`"))),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_record())?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_record(&serde_json::from_str(s)?)
    }

    /// Eigenvalues of the density matrix, ascending.
    pub fn populations(&self) -> Result<DVector<f64>> {
        Ok(linalg::spectral(&self.density_matrix())?.eigenvalues)
    }
}

/// `(ln|x|^p, sign(x)^p)`, or `None` when the term vanishes.
fn power_term(x: f64, p: usize) -> Option<(f64, f64)> {
    if p == 0 {
        return Some((0.0, 1.0));
    }
    if x == 0.0 || x.abs() < 1e-300 {
        return None;
    }
    let sign = if x < 0.0 && p % 2 == 1 { -1.0 } else { 1.0 };
    Some((p as f64 * x.abs().ln(), sign))
}

/// `S_y S_z + S_z S_y`, the two-axis twisting generator about x.
pub fn two_axis_generator(n: usize) -> Result<CollectiveOperator> {
    Ok(CollectiveOperator::sy(n)?
        .anticommutator(&CollectiveOperator::sz(n)?)?
        .with_label("TAT"))
}

/// `S_z²`, the one-axis twisting generator.
pub fn one_axis_generator(n: usize) -> Result<CollectiveOperator> {
    Ok(CollectiveOperator::sz(n)?.squared().with_label("OAT"))
}
