// Two-setting and many-setting symmetric Bell inequalities evaluated on
// twisted spin states with optimized measurement angles.

use qfi_bell::bell::{optimize_multi_setting, optimize_two_setting, squeezing_summary};
use qfi_bell::error::Result;
use qfi_bell::state::SymmetricState;

pub fn run_example() -> Result<()> {
    let n = 50;
    for (label, rho) in [
        ("css", SymmetricState::coherent_x(n)?),
        ("oat 0.05", SymmetricState::one_axis_twisted(n, 0.05)?),
        ("oat 0.2", SymmetricState::one_axis_twisted(n, 0.2)?),
        ("tat 0.02", SymmetricState::two_axis_twisted(n, 0.02)?),
    ] {
        let xi2 = squeezing_summary(&rho)?.xi2.unwrap_or(f64::NAN);
        let (phi, two) = optimize_two_setting(&rho, 64)?;
        let (spread, six) = optimize_multi_setting(&rho, 6, 64)?;
        println!(
            "{label:<9} xi2 {xi2:.4}  two-setting {:>10.4} (phi {phi:.4}, {})  six-setting {:>10.4} (spread {spread:.3}, {})",
            two.value,
            if two.violated { "violated" } else { "ok" },
            six.value,
            if six.violated { "violated" } else { "ok" },
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
