// Quantum Fisher information of GHZ states and their noisy mixtures.

use qfi_bell::dicke::CollectiveOperator;
use qfi_bell::error::Result;
use qfi_bell::qfi::qfi_exact;
use qfi_bell::state::SymmetricState;

pub fn run_example() -> Result<()> {
    println!("{:>4} {:>10} {:>8}", "N", "QFI", "QFI/N^2");
    for n in [2, 4, 8, 16, 32] {
        let r = qfi_exact(&SymmetricState::ghz(n)?, &CollectiveOperator::sz(n)?)?;
        println!("{n:>4} {:>10.4} {:>8.4}", r.qfi, r.heisenberg_ratio);
    }

    let n = 8;
    println!("\nGHZ mixture, N = {n}: QFI = p^2 N^2");
    for p in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let r = qfi_exact(&SymmetricState::ghz_mixture(n, p)?, &CollectiveOperator::sz(n)?)?;
        println!("p = {p:.2}  QFI = {:8.4}  beats shot noise: {}", r.qfi, r.qfi > n as f64);
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
