use super::inequality::{BellEvaluation, InequalityKind};
use super::VIOLATION_TOL;
use crate::dicke::{ensure_parties, CollectiveOperator};
use crate::error::Result;
use crate::qfi::{linear_witness, tightening_operator};
use crate::state::SymmetricState;

/// `W = N(|GHZ⟩⟨GHZ| - |GHZ⊥⟩⟨GHZ⊥|)`, obtained as the saturating linear
/// witness of the GHZ state for `A = S_z`.
pub fn mermin_witness(n: usize) -> Result<CollectiveOperator> {
    ensure_parties(n, 2)?;
    let sz = CollectiveOperator::sz(n)?;
    let b = tightening_operator(&SymmetricState::ghz(n)?, &sz)?;
    Ok(linear_witness(&sz, &b)?.with_label("W_GHZ"))
}

/// Local bound on `⟨W⟩`: `N 2^{1-N/2}` for even `N`, `N 2^{1/2-N/2}` for odd.
pub fn mermin_local_bound(n: usize) -> f64 {
    let nf = n as f64;
    let exponent = if n.is_multiple_of(2) { 1.0 - nf / 2.0 } else { 0.5 - nf / 2.0 };
    nf * 2f64.powf(exponent)
}

/// Mixing parameter above which the GHZ mixture violates Mermin's
/// inequality (`⟨W⟩ = pN`).
pub fn mermin_mixture_threshold(n: usize) -> f64 {
    mermin_local_bound(n) / n as f64
}

pub fn mermin_check(rho: &SymmetricState) -> Result<BellEvaluation> {
    let n = rho.n_parties();
    let w = mermin_witness(n)?;
    let value = rho.mean(&w)?;
    let bound = mermin_local_bound(n);
    Ok(BellEvaluation {
        inequality: InequalityKind::Mermin,
        value,
        classical_bound_offset: bound,
        violated: value > bound + VIOLATION_TOL * bound.max(1.0),
        correlators: None,
        angles: Vec::new(),
    })
}
