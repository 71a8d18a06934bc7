// Embedding a symmetric state into the full qubit space and recomputing
// correlators, QFI and partial transposes there.

use std::f64::consts::PI;

use qfi_bell::bell::{collective_correlators, MeasurementSettings};
use qfi_bell::dicke::CollectiveOperator;
use qfi_bell::error::Result;
use qfi_bell::oracle::{collective_full, correlators_bruteforce, embed_symmetric, ppt_bipartite_check, qfi_exact_full, Pauli};
use qfi_bell::qfi::qfi_exact;
use qfi_bell::state::SymmetricState;

pub fn run_example() -> Result<()> {
    let n = 6;
    let rho = SymmetricState::one_axis_twisted(n, 0.4)?;
    let full = embed_symmetric(&rho)?;
    let settings = MeasurementSettings::two_setting(PI / 3.0);
    let collective = collective_correlators(&rho, &settings)?;
    let brute = correlators_bruteforce(&full, &settings)?;
    println!("correlators: max difference {:.2e}", collective.max_abs_diff(&brute));

    let a = qfi_exact(&rho, &CollectiveOperator::sz(n)?)?.qfi;
    let b = qfi_exact_full(&full, &collective_full(n, Pauli::Z)?)?;
    println!("QFI: Dicke {a:.10}  full {b:.10}");

    for p in [0.0, 0.3, 1.0] {
        let out = ppt_bipartite_check(&embed_symmetric(&SymmetricState::ghz_mixture(4, p)?)?, &[0])?;
        println!("GHZ mixture p={p}: min PT eigenvalue {:.4}, NPT {}", out.min_eigenvalue, out.npt);
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
