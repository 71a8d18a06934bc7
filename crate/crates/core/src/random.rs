//! Random states and operators for property tests and the verification corpus.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::dicke::CollectiveOperator;
use crate::linalg::{c, CMatrix, CVector, C64};
use crate::state::SymmetricState;

fn gaussian(rng: &mut impl Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state on the symmetric subspace.
pub fn pure_state(n: usize, rng: &mut impl Rng) -> SymmetricState {
    let v = CVector::from_fn(n + 1, |_, _| gaussian(rng));
    SymmetricState::normalized(n, v).expect("gaussian vector is nonzero")
}

/// Random density matrix of the given rank, `G G† / Tr(G G†)`.
pub fn mixed_state(n: usize, rank: usize, rng: &mut impl Rng) -> SymmetricState {
    let g = CMatrix::from_fn(n + 1, rank.max(1), |_, _| gaussian(rng));
    let rho = &g * g.adjoint();
    let tr = rho.trace().re;
    let rho = rho * c(1.0 / tr);
    let rho = (&rho + rho.adjoint()) * c(0.5);
    SymmetricState::from_density(n, rho).expect("Wishart matrix is a valid state")
}

/// Random Hermitian operator on the symmetric subspace.
pub fn hermitian(n: usize, rng: &mut impl Rng) -> CollectiveOperator {
    let a = CMatrix::from_fn(n + 1, n + 1, |_, _| gaussian(rng));
    let h = (&a + a.adjoint()) * c(0.5);
    CollectiveOperator::from_matrix(n, h, "random").expect("symmetrized matrix is Hermitian")
}
