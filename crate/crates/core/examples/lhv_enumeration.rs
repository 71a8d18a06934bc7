// Classical bounds of the symmetric inequalities by exhaustive enumeration
// of deterministic local strategies.

use qfi_bell::bell::SymmetricBellInequality;
use qfi_bell::error::Result;
use qfi_bell::oracle::{lhv_bound_naive, lhv_bound_symmetric};

pub fn run_example() -> Result<()> {
    for n in 2..=6 {
        let b = lhv_bound_symmetric(&SymmetricBellInequality::two_setting(n), n)?;
        println!(
            "two-setting N={n}: min {:>5} over {:>4} classes, attained by counts {:?}",
            b.min_value, b.classes_visited, b.argmin.counts
        );
    }
    for (m, n) in [(3, 4), (4, 3)] {
        let ineq = SymmetricBellInequality::multi_setting(m, n);
        let b = lhv_bound_symmetric(&ineq, n)?;
        let naive = lhv_bound_naive(&ineq, n)?;
        println!(
            "{m}-setting N={n}: constant {}, min {} (multiset) / {} (all 2^{} strategies)",
            ineq.constant,
            b.min_value,
            naive,
            m * n
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
