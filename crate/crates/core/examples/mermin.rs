// The GHZ witness `N(P_GHZ - P_GHZ⊥)` as a rescaled Mermin operator, its
// classical maximum and the GHZ-mixture violation threshold.

use qfi_bell::bell::{mermin_check, mermin_local_bound, mermin_mixture_threshold};
use qfi_bell::error::Result;
use qfi_bell::oracle::{mermin_lhv_max, mermin_operator};
use qfi_bell::state::SymmetricState;

pub fn run_example() -> Result<()> {
    println!("{:>3} {:>12} {:>10} {:>10} {:>8} {:>10}", "N", "scale", "LHV max", "bound", "<W>GHZ", "p_thresh");
    for n in 2..=8 {
        let op = mermin_operator(n)?;
        let lhv = mermin_lhv_max(n)?;
        let ghz = mermin_check(&SymmetricState::ghz(n)?)?;
        println!(
            "{n:>3} {:>12.6} {:>10.6} {:>10.6} {:>8.3} {:>10.6}",
            op.normalization.re,
            lhv.witness_max,
            mermin_local_bound(n),
            ghz.value,
            mermin_mixture_threshold(n)
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
