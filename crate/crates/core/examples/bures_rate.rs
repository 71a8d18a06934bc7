// Speed of the Bures distance along a unitary path equals `½√QFI`.

use qfi_bell::dicke::CollectiveOperator;
use qfi_bell::error::Result;
use qfi_bell::qfi::bures_rate;
use qfi_bell::state::SymmetricState;

pub fn run_example() -> Result<()> {
    let n = 10;
    let sz = CollectiveOperator::sz(n)?;
    for (label, rho) in [
        ("ghz", SymmetricState::ghz(n)?),
        ("oat", SymmetricState::one_axis_twisted(n, 0.3)?),
        ("mixture", SymmetricState::ghz_mixture(n, 0.6)?),
    ] {
        let r = bures_rate(&rho, &sz, 1e-4)?;
        println!("{label:<8} ds/dt {:.8}  sqrt(F)/2 {:.8}  rel err {:.2e}", r.lhs, r.rhs, r.rel_err);
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
