//! Brute-force reference implementations in the full `2^N`-dimensional
//! qubit space, plus exhaustive local-hidden-variable enumeration.
//!
//! Nothing here reuses the Dicke ladder matrices: collective operators are
//! rebuilt from single-site Pauli actions on computational basis states
//! (qubit 1 is the most significant bit, bit value 0 is `|0⟩`).

mod full;
mod lhv;
mod mermin;
mod ppt;

pub use full::{
    collective_full, correlators_bruteforce, embed_symmetric, full_moments, local_pauli_product,
    project_symmetric, qfi_exact_full, FullState, Pauli, MAX_FULL_PARTIES, MAX_MIXED_PARTIES,
};
pub use lhv::{
    lhv_bound_naive, lhv_bound_symmetric, strategy_value, strategy_value_per_party,
    DeterministicStrategy, LhvBound, ENUMERATION_BUDGET,
};
pub use mermin::{mermin_lhv_max, mermin_operator, MerminLhv, MerminOperator, MAX_MERMIN_LHV_PARTIES};
pub use ppt::{partial_transpose, ppt_bipartite_check, PptOutcome};
