// Violation regions of both witnesses in the `(ξ², 𝒞)` plane, with the
// numerically extracted boundary compared to its closed form.

use qfi_bell::bell::{default_axis, minimal_contrast_two_setting, region_map};
use qfi_bell::cli::region_csv;
use qfi_bell::error::Result;

pub fn run_example() -> Result<()> {
    let axis = default_axis(100);
    let cells = region_map(&axis, &axis)?;
    println!("{:>6} {:>10} {:>10} {:>10}", "xi2", "C*_grid", "C*_closed", "2m_C*_grid");
    for (i, &xi2) in axis.iter().enumerate().step_by(10) {
        let row = &cells[i * axis.len()..(i + 1) * axis.len()];
        let first = |pick: fn(&qfi_bell::bell::RegionCell) -> bool| {
            row.iter().find(|c| pick(c)).map(|c| format!("{:.3}", c.contrast)).unwrap_or("-".into())
        };
        let closed = minimal_contrast_two_setting(xi2).map(|c| format!("{c:.3}")).unwrap_or("-".into());
        println!(
            "{xi2:>6.3} {:>10} {closed:>10} {:>10}",
            first(|c| c.w1m_violated),
            first(|c| c.w2m_violated)
        );
    }
    let csv = region_csv(&cells)?;
    println!("CSV: {} lines, header `{}`", csv.lines().count(), csv.lines().next().unwrap_or(""));
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
