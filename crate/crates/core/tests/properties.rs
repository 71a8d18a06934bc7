//! Randomized invariants of the QFI bounds, squeezing quantities and Bell
//! inequalities.

use std::f64::consts::FRAC_PI_2;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qfi_bell::bell::{
    bell_two_setting, linear_ansatz_value, optimize_two_setting, squeezing_summary, witness_two_setting,
};
use qfi_bell::cli::format::sig;
use qfi_bell::dicke::CollectiveOperator;
use qfi_bell::qfi::{linear_bound, qfi_exact, uncertainty_bound, variance};
use qfi_bell::random;
use qfi_bell::state::SymmetricState;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// Random pure or mixed symmetric state.
fn any_state(n: usize, seed: u64) -> SymmetricState {
    let mut r = rng(seed);
    if seed.is_multiple_of(3) {
        let rank = 1 + (seed as usize / 3) % (n + 1);
        random::mixed_state(n, rank, &mut r)
    } else {
        random::pure_state(n, &mut r)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bounds_never_exceed_qfi(n in prop::sample::select(vec![2usize, 4, 8]), seed in any::<u64>()) {
        let rho = any_state(n, seed);
        let a = CollectiveOperator::sz(n).unwrap();
        let b = random::hermitian(n, &mut rng(seed ^ 0x5a5a));
        let q = qfi_exact(&rho, &a).unwrap().qfi;
        let tol = 1e-8 * q.max(1.0);
        if let Ok(u) = uncertainty_bound(&rho, &a, &b) {
            prop_assert!(u.bound_value <= q + tol, "{} > {}", u.bound_value, q);
        }
        let l = linear_bound(&rho, &a, &b).unwrap();
        prop_assert!(l.bound_value.powi(2) <= q + tol);
    }

    #[test]
    fn pure_qfi_is_four_variance(n in 1usize..20, seed in any::<u64>()) {
        let psi = random::pure_state(n, &mut rng(seed));
        let a = random::hermitian(n, &mut rng(seed.wrapping_add(1)));
        let q = qfi_exact(&psi, &a).unwrap().qfi;
        let v = variance(&psi, &a).unwrap();
        prop_assert!(rel(q, 4.0 * v) < 1e-8);
    }

    #[test]
    fn qfi_is_convex(n in 2usize..10, seed in any::<u64>(), p in 0.0f64..1.0) {
        let mut r = rng(seed);
        let (a, b) = (random::pure_state(n, &mut r), random::pure_state(n, &mut r));
        let sz = CollectiveOperator::sz(n).unwrap();
        let mix = SymmetricState::mixture(&[(p, &a), (1.0 - p, &b)]).unwrap();
        let lhs = qfi_exact(&mix, &sz).unwrap().qfi;
        let rhs = p * qfi_exact(&a, &sz).unwrap().qfi + (1.0 - p) * qfi_exact(&b, &sz).unwrap().qfi;
        prop_assert!(lhs <= rhs + 1e-8 * rhs.max(1.0));
    }

    #[test]
    fn coherent_states_stay_below_shot_noise(n in 1usize..40, theta in 0.0f64..3.2, phi in 0.0f64..6.3) {
        let css = SymmetricState::coherent_spin(n, theta, phi).unwrap();
        let q = qfi_exact(&css, &CollectiveOperator::sz(n).unwrap()).unwrap().qfi;
        prop_assert!(q <= n as f64 + 1e-8);
    }

    #[test]
    fn qfi_dominates_squeezing_bound(n in 2usize..30, seed in any::<u64>()) {
        let rho = any_state(n, seed).align_squeezing_frame().unwrap();
        let s = squeezing_summary(&rho).unwrap();
        if let Some(xi2) = s.xi2 {
            prop_assert!(rel(xi2, s.zeta2 / (s.contrast * s.contrast)) < 1e-9);
            let q = qfi_exact(&rho, &CollectiveOperator::sz(n).unwrap()).unwrap().qfi;
            prop_assert!(q >= n as f64 / xi2 - 1e-8 * n as f64, "{q} < {}", n as f64 / xi2);
        }
    }

    #[test]
    fn qfi_invariant_under_generated_rotation(n in 2usize..12, seed in any::<u64>(), t in -3.0f64..3.0) {
        let rho = any_state(n, seed);
        let sz = CollectiveOperator::sz(n).unwrap();
        let a = qfi_exact(&rho, &sz).unwrap().qfi;
        let b = qfi_exact(&rho.evolve(&sz, t).unwrap(), &sz).unwrap().qfi;
        prop_assert!(rel(a, b) < 1e-8);
    }

    #[test]
    fn ansatz_coefficients_match_correlators(n in 2usize..40, seed in any::<u64>(), phi in 0.01f64..1.56) {
        let rho = any_state(n, seed);
        let from_corr = bell_two_setting(&rho, phi).unwrap().value;
        let ansatz = linear_ansatz_value(&rho, phi).unwrap();
        prop_assert!((from_corr - ansatz).abs() < 1e-9 * (n as f64).max(1.0));
    }

    #[test]
    fn witness_and_inequality_agree(n in 4usize..40, family in 0u8..3, param in 0.0f64..1.0, seed in any::<u64>()) {
        let rho = match family {
            0 => SymmetricState::one_axis_twisted(n, 0.3 * param).unwrap(),
            1 => SymmetricState::two_axis_twisted(n, 0.2 * param).unwrap(),
            _ => random::pure_state(n, &mut rng(seed)).align_squeezing_frame().unwrap(),
        };
        let s = squeezing_summary(&rho).unwrap();
        let w = witness_two_setting(&s).unwrap();
        // any violation on a 64-point grid implies the witness fires
        for k in 1..64 {
            let phi = FRAC_PI_2 * k as f64 / 64.0;
            if bell_two_setting(&rho, phi).unwrap().violated {
                prop_assert!(w.margin < 1e-9, "φ={phi} violates but margin {}", w.margin);
            }
        }
        if w.margin < -1e-6 {
            prop_assert!(optimize_two_setting(&rho, 64).unwrap().1.violated);
        }
    }

    #[test]
    fn printed_floats_round_trip(x in prop::num::f64::NORMAL) {
        let y: f64 = sig(x).parse().unwrap();
        prop_assert!(((x - y) / x).abs() < 5e-12);
    }
}
