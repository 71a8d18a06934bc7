use crate::bell::{Correlators, MeasurementSettings, SpinMoments};
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix, CVector, C64};
use crate::qfi::POPULATION_FLOOR;
use crate::state::SymmetricState;

pub const MAX_FULL_PARTIES: usize = 10;
/// Mixed full-space states need a `2^N` eigendecomposition.
pub const MAX_MIXED_PARTIES: usize = 8;

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    Pure(CVector),
    Mixed(CMatrix),
}

/// State of `N ≤ 10` qubits in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FullState {
    n_parties: usize,
    repr: Repr,
}

fn check_size(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::TooManyParties { n, max });
    }
    if n == 0 {
        return Err(Error::TooFewParties { n, min: 1 });
    }
    Ok(())
}

impl FullState {
    pub fn from_amplitudes(n_parties: usize, v: CVector) -> Result<Self> {
        check_size(n_parties, MAX_FULL_PARTIES)?;
        if v.len() != 1 << n_parties {
            return Err(Error::DimensionMismatch {
                expected: 1 << n_parties,
                found: v.len(),
            });
        }
        if (v.norm_squared() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidState("full-space vector is not normalized".into()));
        }
        Ok(Self {
            n_parties,
            repr: Repr::Pure(v),
        })
    }

    pub fn from_density(n_parties: usize, rho: CMatrix) -> Result<Self> {
        check_size(n_parties, MAX_FULL_PARTIES)?;
        if rho.shape() != (1 << n_parties, 1 << n_parties) {
            return Err(Error::DimensionMismatch {
                expected: 1 << n_parties,
                found: rho.nrows(),
            });
        }
        linalg::ensure_hermitian(&rho, 1e-12)?;
        if (rho.trace().re - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidState("full-space density has trace != 1".into()));
        }
        Ok(Self {
            n_parties,
            repr: Repr::Mixed(rho),
        })
    }

    /// Tensor product of single-qubit states, qubit 1 first.
    pub fn product(qubits: &[[C64; 2]]) -> Result<Self> {
        let mut v = CVector::from_vec(vec![c(1.0)]);
        for q in qubits {
            let norm = (q[0].norm_sqr() + q[1].norm_sqr()).sqrt();
            let qv = CVector::from_vec(vec![q[0] / norm, q[1] / norm]);
            v = v.kronecker(&qv);
        }
        Self::from_amplitudes(qubits.len(), v)
    }

    pub fn n_parties(&self) -> usize {
        self.n_parties
    }

    pub fn dim(&self) -> usize {
        1 << self.n_parties
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

    pub fn expect(&self, op: &CMatrix) -> C64 {
        match &self.repr {
            Repr::Pure(v) => linalg::expect_vector(v, op),
            Repr::Mixed(rho) => linalg::trace_product(rho, op),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn matrix(self) -> [[C64; 2]; 2] {
        let z = C64::new(0.0, 0.0);
        let one = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        match self {
            Pauli::X => [[z, one], [one, z]],
            Pauli::Y => [[z, -i], [i, z]],
            Pauli::Z => [[one, z], [z, -one]],
        }
    }
}

fn bit_of(index: usize, site: usize, n: usize) -> usize {
    (index >> (n - 1 - site)) & 1
}

/// Applies a 2×2 operator on qubit `site` (0-based, most significant first).
fn apply_local(v: &CVector, op: &[[C64; 2]; 2], site: usize, n: usize) -> CVector {
    let mask = 1usize << (n - 1 - site);
    let mut out = CVector::zeros(v.len());
    for idx in 0..v.len() {
        let b = bit_of(idx, site, n);
        let partner = idx ^ mask;
        // out[idx] = Σ_b' op[b][b'] v[idx with bit b']
        let (v0, v1) = if b == 0 { (v[idx], v[partner]) } else { (v[partner], v[idx]) };
        out[idx] = op[b][0] * v0 + op[b][1] * v1;
    }
    out
}

fn setting_matrix(settings: &MeasurementSettings, k: usize) -> [[C64; 2]; 2] {
    let d = settings.direction(k);
    let (x, y, z) = (Pauli::X.matrix(), Pauli::Y.matrix(), Pauli::Z.matrix());
    let mut m = [[C64::new(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for s in 0..2 {
            m[r][s] = x[r][s] * d[0] + y[r][s] * d[1] + z[r][s] * d[2];
        }
    }
    m
}

/// Dense `S_a = ½ Σ_i σ_a^(i)` on `2^N` dimensions.
pub fn collective_full(n: usize, axis: Pauli) -> Result<CMatrix> {
    check_size(n, MAX_FULL_PARTIES)?;
    let dim = 1usize << n;
    let mut m = CMatrix::zeros(dim, dim);
    let p = axis.matrix();
    for col in 0..dim {
        for site in 0..n {
            let b = bit_of(col, site, n);
            let flipped = col ^ (1 << (n - 1 - site));
            // σ|b⟩ = p[b][b]|b⟩ + p[1-b][b]|1-b⟩
            m[(col, col)] += p[b][b] * 0.5;
            m[(flipped, col)] += p[1 - b][b] * 0.5;
        }
    }
    Ok(m)
}

/// Dense product of single-site Paulis, e.g. `[(0, X), (2, Y)]`.
pub fn local_pauli_product(n: usize, factors: &[(usize, Pauli)]) -> Result<CMatrix> {
    check_size(n, MAX_FULL_PARTIES)?;
    let mut m = CMatrix::identity(1usize, 1usize);
    for site in 0..n {
        let mut op = CMatrix::identity(2, 2);
        for &(s, p) in factors {
            if s == site {
                let pm = p.matrix();
                op = CMatrix::from_fn(2, 2, |r, c| pm[r][c]) * op;
            }
        }
        m = m.kronecker(&op);
    }
    Ok(m)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `2^N × (N+1)` isometry sending Dicke index `k` to the uniform
/// superposition of all bit strings with `k` ones.
fn dicke_isometry(n: usize) -> CMatrix {
    let dim = 1usize << n;
    let mut e = CMatrix::zeros(dim, n + 1);
    for idx in 0..dim {
        let k = idx.count_ones() as usize;
        e[(idx, k)] = c(1.0 / binomial(n, k).sqrt());
    }
    e
}

pub fn embed_symmetric(state: &SymmetricState) -> Result<FullState> {
    let n = state.n_parties();
    check_size(n, MAX_FULL_PARTIES)?;
    let e = dicke_isometry(n);
    match state.amplitudes() {
        Some(a) => FullState::from_amplitudes(n, &e * a),
        None => {
            let rho = &e * state.density_matrix() * e.adjoint();
            FullState::from_density(n, (&rho + rho.adjoint()) * c(0.5))
        }
    }
}

/// Inverse of [`embed_symmetric`]; fails for states with weight outside the
/// symmetric subspace.
pub fn project_symmetric(state: &FullState) -> Result<SymmetricState> {
    let n = state.n_parties;
    let e = dicke_isometry(n);
    match state.amplitudes() {
        Some(v) => SymmetricState::from_amplitudes(n, e.adjoint() * v),
        None => {
            let rho = e.adjoint() * state.density_matrix() * &e;
            SymmetricState::from_density(n, (&rho + rho.adjoint()) * c(0.5))
        }
    }
}

/// `Tr(O X)` for `O` acting on qubit `site` only.
fn local_trace(x: &CMatrix, op: &[[C64; 2]; 2], site: usize, n: usize) -> C64 {
    let mask = 1usize << (n - 1 - site);
    let mut acc = C64::new(0.0, 0.0);
    for idx in 0..x.nrows() {
        let b = bit_of(idx, site, n);
        acc += op[b][b] * x[(idx, idx)] + op[b][1 - b] * x[(idx ^ mask, idx)];
    }
    acc
}

fn apply_local_columns(rho: &CMatrix, op: &[[C64; 2]; 2], site: usize, n: usize) -> CMatrix {
    let mut out = CMatrix::zeros(rho.nrows(), rho.ncols());
    for col in 0..rho.ncols() {
        let w = apply_local(&rho.column(col).into_owned(), op, site, n);
        out.set_column(col, &w);
    }
    out
}

/// `Σ_{i≠j} ⟨M_k^(i) M_l^(j)⟩` and `Σ_i ⟨M_k^(i)⟩`, summed literally over
/// ordered pairs of distinct sites.
pub fn correlators_bruteforce(state: &FullState, settings: &MeasurementSettings) -> Result<Correlators> {
    let n = state.n_parties;
    check_size(n, MAX_FULL_PARTIES)?;
    let m = settings.len();
    let mats: Vec<_> = (0..m).map(|k| setting_matrix(settings, k)).collect();
    let mut one_body = vec![0.0; m];
    let mut two_body = vec![vec![0.0; m]; m];
    match &state.repr {
        Repr::Pure(v) => {
            // M_k^(i)|ψ⟩ for every setting and site; the sites commute for i≠j
            let applied: Vec<Vec<CVector>> = mats
                .iter()
                .map(|mk| (0..n).map(|i| apply_local(v, mk, i, n)).collect())
                .collect();
            for k in 0..m {
                one_body[k] = applied[k].iter().map(|w| v.dotc(w).re).sum();
                for l in 0..m {
                    for i in 0..n {
                        for j in 0..n {
                            if i != j {
                                two_body[k][l] += applied[k][i].dotc(&applied[l][j]).re;
                            }
                        }
                    }
                }
            }
        }
        Repr::Mixed(rho) => {
            for l in 0..m {
                for j in 0..n {
                    // Tr(ρ M_k^(i) M_l^(j)) = Tr(M_k^(i) M_l^(j) ρ)
                    let y = apply_local_columns(rho, &mats[l], j, n);
                    one_body[l] += y.trace().re;
                    for k in 0..m {
                        for i in (0..n).filter(|&i| i != j) {
                            two_body[k][l] += local_trace(&y, &mats[k], i, n).re;
                        }
                    }
                }
            }
        }
    }
    Ok(Correlators { one_body, two_body })
}

/// Collective spin moments computed from dense full-space operators.
pub fn full_moments(state: &FullState) -> Result<SpinMoments> {
    let n = state.n_parties;
    let ops = [
        collective_full(n, Pauli::X)?,
        collective_full(n, Pauli::Y)?,
        collective_full(n, Pauli::Z)?,
    ];
    let mut mean = [0.0; 3];
    let mut second = [[0.0; 3]; 3];
    for a in 0..3 {
        mean[a] = state.expect(&ops[a]).re;
        for b in 0..3 {
            second[a][b] = 0.5 * state.expect(&linalg::anticommutator(&ops[a], &ops[b])).re;
        }
    }
    Ok(SpinMoments {
        n_parties: n,
        mean,
        second,
    })
}

/// Exact QFI in the full space: `4 Var` for pure states, the spectral sum
/// for mixed ones (`N ≤ 8`).
pub fn qfi_exact_full(state: &FullState, generator: &CMatrix) -> Result<f64> {
    if generator.shape() != (state.dim(), state.dim()) {
        return Err(Error::DimensionMismatch {
            expected: state.dim(),
            found: generator.nrows(),
        });
    }
    if let Some(v) = state.amplitudes() {
        let mean = linalg::expect_vector(v, generator).re;
        let w = generator * v;
        let second = w.norm_squared();
        return Ok(4.0 * (second - mean * mean).max(0.0));
    }
    check_size(state.n_parties, MAX_MIXED_PARTIES)?;
    let sd = linalg::spectral(&state.density_matrix())?;
    let a = sd.eigenvectors.adjoint() * generator * &sd.eigenvectors;
    let p = &sd.eigenvalues;
    let mut qfi = 0.0;
    for k in 0..p.len() {
        for l in 0..p.len() {
            let s = p[k] + p[l];
            if s > POPULATION_FLOOR {
                qfi += (p[k] - p[l]).powi(2) / s * a[(k, l)].norm_sqr();
            }
        }
    }
    Ok(2.0 * qfi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn dicke_embedding() {
        let d = embed_symmetric(&SymmetricState::dicke(2, 1).unwrap()).unwrap();
        let v = d.amplitudes().unwrap();
        // |01⟩ and |10⟩
        assert!((v[1] - c(FRAC_1_SQRT_2)).norm() < 1e-15);
        assert!((v[2] - c(FRAC_1_SQRT_2)).norm() < 1e-15);
        assert!(v[0].norm() + v[3].norm() < 1e-15);
        let g = embed_symmetric(&SymmetricState::ghz(3).unwrap()).unwrap();
        let v = g.amplitudes().unwrap();
        assert!((v[0] - c(FRAC_1_SQRT_2)).norm() < 1e-15);
        assert!((v[7] - c(FRAC_1_SQRT_2)).norm() < 1e-15);
    }

    #[test]
    fn size_limits() {
        assert!(matches!(
            embed_symmetric(&SymmetricState::ghz(11).unwrap()),
            Err(Error::TooManyParties { .. })
        ));
    }

    #[test]
    fn two_party_pair_count() {
        // ⟨σ_y σ_y⟩ = 1 on |+i,+i⟩ for each of the two ordered pairs
        let s = 0.5f64.sqrt();
        let q = [c(s), C64::new(0.0, s)];
        let st = FullState::product(&[q, q]).unwrap();
        let settings = MeasurementSettings::from_angles(vec![0.0, 0.0]).unwrap();
        let corr = correlators_bruteforce(&st, &settings).unwrap();
        assert!((corr.two_body[0][1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn collective_full_matches_pauli_sum() {
        let n = 3;
        let sx = collective_full(n, Pauli::X).unwrap();
        let mut manual = CMatrix::zeros(8, 8);
        for i in 0..n {
            manual += local_pauli_product(n, &[(i, Pauli::X)]).unwrap() * c(0.5);
        }
        assert!(linalg::max_abs_diff(&sx, &manual) < 1e-15);
    }

    #[test]
    fn product_plus_state_qfi() {
        let s = FRAC_1_SQRT_2;
        let plus = [c(s), c(s)];
        let st = FullState::product(&[plus; 6]).unwrap();
        let q = qfi_exact_full(&st, &collective_full(6, Pauli::Z).unwrap()).unwrap();
        assert!((q - 6.0).abs() < 1e-10);
    }
}
