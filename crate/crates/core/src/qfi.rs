//! Quantum Fisher information and its operator lower bounds.
//!
//! * [`qfi_exact`]: spectral formula `2 Σ (p_k - p_l)²/(p_k + p_l) |⟨ψ_k|A|ψ_l⟩|²`.
//! * [`uncertainty_bound`]: `⟨i[A,B]⟩² / Var(B)`.
//! * [`linear_bound`]: `√F ≥ |⟨i[A,B]⟩| / ‖B‖_∞`, tight for pure states with
//!   `B` from [`tightening_operator`].

use serde::Serialize;

use crate::dicke::CollectiveOperator;
use crate::error::{Error, Result};
use crate::fidelity::bures_distance;
use crate::linalg::{self, c, I};
use crate::state::SymmetricState;

/// Pairs with `p_k + p_l` below this are dropped from the spectral sum.
pub const POPULATION_FLOOR: f64 = 1e-12;
/// Relative gap under which a bound is reported as tight.
pub const TIGHT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QfiReport {
    pub qfi: f64,
    pub generator_label: String,
    pub n_parties: usize,
    /// `F / N`; above 1 certifies entanglement.
    pub shot_noise_ratio: f64,
    /// `F / N²`.
    pub heisenberg_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound_value: f64,
    /// `⟨i[A,B]⟩`.
    pub commutator_mean: f64,
    /// `⟨B²⟩ - ⟨B⟩²`.
    pub b_variance: f64,
    pub b_sup_norm: f64,
    /// Exact QFI of the same pair, for the tightness comparison.
    pub qfi: f64,
    pub tight: bool,
}

pub fn qfi_exact(rho: &SymmetricState, generator: &CollectiveOperator) -> Result<QfiReport> {
    rho.check_dim(generator.dim())?;
    let sd = linalg::spectral(&rho.density_matrix())?;
    let a = sd.eigenvectors.adjoint() * generator.matrix() * &sd.eigenvectors;
    let p = &sd.eigenvalues;
    let mut qfi = 0.0;
    for k in 0..p.len() {
        for l in 0..p.len() {
            let sum = p[k] + p[l];
            if sum <= POPULATION_FLOOR {
                continue;
            }
            let diff = p[k] - p[l];
            qfi += diff * diff / sum * a[(k, l)].norm_sqr();
        }
    }
    qfi *= 2.0;
    let n = rho.n_parties() as f64;
    Ok(QfiReport {
        qfi,
        generator_label: generator.label().to_string(),
        n_parties: rho.n_parties(),
        shot_noise_ratio: qfi / n,
        heisenberg_ratio: qfi / (n * n),
    })
}

/// `⟨A²⟩ - ⟨A⟩²`, clamped at zero.
pub fn variance(rho: &SymmetricState, op: &CollectiveOperator) -> Result<f64> {
    let mean = rho.mean(op)?;
    let second = rho.mean(&op.squared())?;
    Ok((second - mean * mean).max(0.0))
}

fn is_tight(bound: f64, qfi: f64) -> bool {
    (qfi - bound).abs() <= TIGHT_TOL * qfi.abs().max(f64::MIN_POSITIVE)
}

/// Uncertainty-relation bound `F(ρ,A) ≥ ⟨i[A,B]⟩² / Var(B)`.
///
/// `B` is centred internally, so any Hermitian operator is accepted.
pub fn uncertainty_bound(
    rho: &SymmetricState,
    generator: &CollectiveOperator,
    partner: &CollectiveOperator,
) -> Result<BoundReport> {
    rho.check_dim(generator.dim())?;
    rho.check_dim(partner.dim())?;
    let var_b = variance(rho, partner)?;
    if var_b <= 1e-14 {
        return Err(Error::Degenerate("partner operator has vanishing variance"));
    }
    let comm = rho.mean(&generator.i_commutator(partner)?)?;
    let qfi = qfi_exact(rho, generator)?.qfi;
    let bound_value = comm * comm / var_b;
    Ok(BoundReport {
        bound_value,
        commutator_mean: comm,
        b_variance: var_b,
        b_sup_norm: partner.sup_norm()?,
        qfi,
        tight: is_tight(bound_value, qfi),
    })
}

/// Linearized bound `√F(ρ,A) ≥ ⟨W⟩`, `W = i[A,B]/‖B‖_∞`, sign fixed so that
/// `⟨W⟩ ≥ 0`.
pub fn linear_bound(
    rho: &SymmetricState,
    generator: &CollectiveOperator,
    partner: &CollectiveOperator,
) -> Result<BoundReport> {
    rho.check_dim(generator.dim())?;
    rho.check_dim(partner.dim())?;
    let norm = partner.sup_norm()?;
    if norm <= 1e-14 {
        return Err(Error::Degenerate("partner operator is zero"));
    }
    let comm = rho.mean(&generator.i_commutator(partner)?)?;
    let qfi = qfi_exact(rho, generator)?.qfi;
    let bound_value = comm.abs() / norm;
    Ok(BoundReport {
        bound_value,
        commutator_mean: comm,
        b_variance: variance(rho, partner)?,
        b_sup_norm: norm,
        qfi,
        tight: is_tight(bound_value * bound_value, qfi),
    })
}

/// The operator `W = i[A,B]/‖B‖_∞` itself.
pub fn linear_witness(
    generator: &CollectiveOperator,
    partner: &CollectiveOperator,
) -> Result<CollectiveOperator> {
    let norm = partner.sup_norm()?;
    if norm <= 1e-14 {
        return Err(Error::Degenerate("partner operator is zero"));
    }
    Ok(generator
        .i_commutator(partner)?
        .scaled(1.0 / norm)
        .with_label("W"))
}

/// `B = -i[A, |ψ⟩⟨ψ|]`, which saturates [`linear_bound`] for the pure state ψ.
///
/// `B` has rank at most two with eigenvalues `±ΔA`.
pub fn tightening_operator(
    psi: &SymmetricState,
    generator: &CollectiveOperator,
) -> Result<CollectiveOperator> {
    let v = psi.amplitudes().ok_or(Error::RequiresPure)?;
    psi.check_dim(generator.dim())?;
    let proj = linalg::outer(v, v);
    let b = linalg::commutator(generator.matrix(), &proj) * (-I);
    let b = (&b + b.adjoint()) * c(0.5);
    CollectiveOperator::from_matrix(psi.n_parties(), b, "B_opt")
}

/// `√N - ⟨W⟩`; negative values certify entanglement.
pub fn entanglement_witness_value(
    rho: &SymmetricState,
    generator: &CollectiveOperator,
    partner: &CollectiveOperator,
) -> Result<f64> {
    let w = linear_bound(rho, generator, partner)?.bound_value;
    Ok((rho.n_parties() as f64).sqrt() - w)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BuresRate {
    /// `s_B(ρ_{-dt}, ρ_{+dt}) / (2 dt)`.
    pub lhs: f64,
    /// `½ √F(ρ, A)`.
    pub rhs: f64,
    pub rel_err: f64,
}

/// Finite-difference check of `ds_B/dt = ½ √F` with central differencing.
pub fn bures_rate(rho: &SymmetricState, generator: &CollectiveOperator, dt: f64) -> Result<BuresRate> {
    if !(1e-6..=1e-2).contains(&dt) {
        return Err(Error::OutOfRange {
            name: "dt",
            value: dt,
            reason: "step must lie in [1e-6, 1e-2]",
        });
    }
    let forward = rho.evolve(generator, dt)?;
    let backward = rho.evolve(generator, -dt)?;
    let lhs = bures_distance(&backward, &forward)? / (2.0 * dt);
    let rhs = 0.5 * qfi_exact(rho, generator)?.qfi.sqrt();
    let rel_err = if rhs > 1e-12 {
        (lhs - rhs).abs() / rhs
    } else {
        (lhs - rhs).abs()
    };
    Ok(BuresRate { lhs, rhs, rel_err })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1.0)
    }

    #[test]
    fn ghz_qfi_is_heisenberg() {
        for n in 2..=12 {
            let r = qfi_exact(&SymmetricState::ghz(n).unwrap(), &CollectiveOperator::sz(n).unwrap())
                .unwrap();
            assert!(rel(r.qfi, (n * n) as f64) < 1e-8);
            assert!((r.heisenberg_ratio - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn simple_qfi_values() {
        let n = 7;
        let sz = CollectiveOperator::sz(n).unwrap();
        let up = SymmetricState::dicke(n, 0).unwrap();
        assert!(qfi_exact(&up, &sz).unwrap().qfi.abs() < 1e-12);
        let css = SymmetricState::coherent_x(n).unwrap();
        assert!(rel(qfi_exact(&css, &sz).unwrap().qfi, n as f64) < 1e-10);
        for p in [0.0, 0.25, 0.9] {
            let m = SymmetricState::ghz_mixture(n, p).unwrap();
            let q = qfi_exact(&m, &sz).unwrap().qfi;
            assert!((q - p * p * (n * n) as f64).abs() < 1e-8 * (n * n) as f64);
        }
    }

    #[test]
    fn variance_examples() {
        let n = 9;
        let sz = CollectiveOperator::sz(n).unwrap();
        let sy = CollectiveOperator::sy(n).unwrap();
        let g = SymmetricState::ghz(n).unwrap();
        assert!((variance(&g, &sz).unwrap() - 81.0 / 4.0).abs() < 1e-10);
        assert!(variance(&SymmetricState::dicke(n, 0).unwrap(), &sz).unwrap() < 1e-14);
        let css = SymmetricState::coherent_x(n).unwrap();
        assert!((variance(&css, &sy).unwrap() - n as f64 / 4.0).abs() < 1e-10);
    }

    #[test]
    fn pure_qfi_is_four_variance() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [2, 5, 9, 16] {
            let sz = CollectiveOperator::sz(n).unwrap();
            for _ in 0..10 {
                let s = random::pure_state(n, &mut rng);
                let q = qfi_exact(&s, &sz).unwrap().qfi;
                let v = variance(&s, &sz).unwrap();
                assert!((q - 4.0 * v).abs() <= 1e-8 * q.max(1e-12));
            }
        }
    }

    #[test]
    fn css_uncertainty_bound_is_n() {
        let n = 12;
        let r = uncertainty_bound(
            &SymmetricState::coherent_x(n).unwrap(),
            &CollectiveOperator::sz(n).unwrap(),
            &CollectiveOperator::sy(n).unwrap(),
        )
        .unwrap();
        assert!((r.bound_value - n as f64).abs() < 1e-9);
        assert!(r.tight);
    }

    #[test]
    fn zero_numerator_bound() {
        // B = S_z on a Dicke state commutes with ρ; the bound vanishes
        let n = 6;
        let s = SymmetricState::mixture(&[
            (0.5, &SymmetricState::dicke(n, 1).unwrap()),
            (0.5, &SymmetricState::dicke(n, 4).unwrap()),
        ])
        .unwrap();
        let sz = CollectiveOperator::sz(n).unwrap();
        let sx = CollectiveOperator::sx(n).unwrap();
        let r = uncertainty_bound(&s, &sx, &sz).unwrap();
        assert!(r.bound_value.abs() < 1e-20);
    }

    #[test]
    fn degenerate_partner_rejected() {
        let n = 3;
        let up = SymmetricState::dicke(n, 0).unwrap();
        let sz = CollectiveOperator::sz(n).unwrap();
        assert!(matches!(
            uncertainty_bound(&up, &sz, &sz),
            Err(Error::Degenerate(_))
        ));
        let zero = CollectiveOperator::identity(n).unwrap().scaled(0.0);
        assert!(matches!(linear_bound(&up, &sz, &zero), Err(Error::Degenerate(_))));
    }

    #[test]
    fn ghz_tightening_operator_gives_projector_difference() {
        for n in 2..=10 {
            let g = SymmetricState::ghz(n).unwrap();
            let gp = SymmetricState::ghz_perp(n).unwrap();
            let sz = CollectiveOperator::sz(n).unwrap();
            let b = tightening_operator(&g, &sz).unwrap();
            assert!((b.sup_norm().unwrap() - n as f64 / 2.0).abs() < 1e-9);
            let w = linear_witness(&sz, &b).unwrap();
            let expected = (g.density_matrix() - gp.density_matrix()) * c(n as f64);
            assert!(max_abs_diff(w.matrix(), &expected) < 1e-9);
            let lb = linear_bound(&g, &sz, &b).unwrap();
            assert!((lb.bound_value - n as f64).abs() < 1e-9);
            assert!(lb.tight);
        }
    }

    #[test]
    fn tightening_operator_for_eigenstate_vanishes() {
        let s = SymmetricState::dicke(5, 2).unwrap();
        let sz = CollectiveOperator::sz(5).unwrap();
        let b = tightening_operator(&s, &sz).unwrap();
        assert!(crate::linalg::max_abs(b.matrix()) < 1e-15);
        let mixed = SymmetricState::ghz_mixture(5, 0.3).unwrap();
        assert!(matches!(tightening_operator(&mixed, &sz), Err(Error::RequiresPure)));
    }

    #[test]
    fn tightening_on_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let n = 8;
        let sz = CollectiveOperator::sz(n).unwrap();
        for _ in 0..20 {
            let s = random::pure_state(n, &mut rng);
            let b = tightening_operator(&s, &sz).unwrap();
            let delta = variance(&s, &sz).unwrap().sqrt();
            assert!((b.sup_norm().unwrap() - delta).abs() < 1e-9);
            let lb = linear_bound(&s, &sz, &b).unwrap();
            assert!((lb.bound_value - lb.qfi.sqrt()).abs() <= 1e-7 * lb.qfi.sqrt());
        }
    }

    #[test]
    fn mixture_with_ghz_witness() {
        let n = 6;
        let sz = CollectiveOperator::sz(n).unwrap();
        let b = tightening_operator(&SymmetricState::ghz(n).unwrap(), &sz).unwrap();
        for p in [0.0, 0.2, 0.5, 1.0] {
            let m = SymmetricState::ghz_mixture(n, p).unwrap();
            let lb = linear_bound(&m, &sz, &b).unwrap();
            assert!((lb.bound_value - p * n as f64).abs() < 1e-9);
            assert!(lb.bound_value * lb.bound_value <= lb.qfi + 1e-8 * lb.qfi.max(1.0));
        }
        // commuting partner gives nothing
        let lb = linear_bound(&SymmetricState::ghz(n).unwrap(), &sz, &sz.squared()).unwrap();
        assert!(lb.bound_value.abs() < 1e-12);
    }

    #[test]
    fn entanglement_witness_cases() {
        let n = 9;
        let sz = CollectiveOperator::sz(n).unwrap();
        let b = tightening_operator(&SymmetricState::ghz(n).unwrap(), &sz).unwrap();
        let g = entanglement_witness_value(&SymmetricState::ghz(n).unwrap(), &sz, &b).unwrap();
        assert!((g - (3.0 - 9.0)).abs() < 1e-9);
        let mm = entanglement_witness_value(&SymmetricState::maximally_mixed(n).unwrap(), &sz, &b)
            .unwrap();
        assert!((mm - 3.0).abs() < 1e-12);
        let p = 1.0 / 3.0;
        let edge = SymmetricState::ghz_mixture(n, p).unwrap();
        assert!(entanglement_witness_value(&edge, &sz, &b).unwrap().abs() < 1e-9);
    }

    #[test]
    fn bures_rate_examples() {
        let sz = CollectiveOperator::sz(8).unwrap();
        let ghz = bures_rate(&SymmetricState::ghz(8).unwrap(), &sz, 1e-4).unwrap();
        assert!(ghz.rel_err <= 1e-4, "{ghz:?}");
        let eig = bures_rate(&SymmetricState::dicke(8, 3).unwrap(), &sz, 1e-4).unwrap();
        assert!(eig.lhs.abs() < 1e-10 && eig.rhs.abs() < 1e-12);
        let mix = bures_rate(&SymmetricState::ghz_mixture(8, 0.5).unwrap(), &sz, 1e-4).unwrap();
        assert!((mix.rhs - 2.0).abs() < 1e-9);
        assert!(mix.rel_err <= 1e-3, "{mix:?}");
        assert!(bures_rate(&SymmetricState::ghz(8).unwrap(), &sz, 0.5).is_err());
    }
}
