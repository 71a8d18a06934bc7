// The uncertainty bound `⟨i[A,B]⟩²/Var(B)` is a lower bound on the QFI, and
// the partner `B = -i[A, |ψ⟩⟨ψ|]` saturates it for pure states.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qfi_bell::dicke::CollectiveOperator;
use qfi_bell::error::Result;
use qfi_bell::qfi::{linear_bound, tightening_operator, uncertainty_bound};
use qfi_bell::random;

pub fn run_example() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 8;
    let a = CollectiveOperator::sz(n)?;
    let psi = random::pure_state(n, &mut rng);

    let naive = uncertainty_bound(&psi, &a, &CollectiveOperator::sy(n)?)?;
    println!("B = S_y:        bound {:.6} <= QFI {:.6}", naive.bound_value, naive.qfi);

    let b = tightening_operator(&psi, &a)?;
    let tight = uncertainty_bound(&psi, &a, &b)?;
    let linear = linear_bound(&psi, &a, &b)?;
    println!("optimal B:      bound {:.6} == QFI {:.6} (tight: {})", tight.bound_value, tight.qfi, tight.tight);
    println!("linear version: {:.6}^2 = {:.6}", linear.bound_value, linear.bound_value.powi(2));

    let random_b = random::hermitian(n, &mut rng);
    let r = uncertainty_bound(&psi, &a, &random_b)?;
    println!("random B:       bound {:.6} <= QFI {:.6}", r.bound_value, r.qfi);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
