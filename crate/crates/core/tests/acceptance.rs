//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines appear in order together with their timings.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qfi_bell::bell::{
    default_axis, mermin_check, mermin_local_bound, mermin_mixture_threshold, minimal_contrast_two_setting,
    region_map, SymmetricBellInequality,
};
use qfi_bell::cli::report::EvalOptions;
use qfi_bell::cli::scan_family;
use qfi_bell::cli::spec::{Family, ParamRange};
use qfi_bell::cli::verify::{run_verify, VerifyOptions};
use qfi_bell::dicke::CollectiveOperator;
use qfi_bell::error::Result;
use qfi_bell::optimize::bisect;
use qfi_bell::oracle::{lhv_bound_symmetric, mermin_lhv_max};
use qfi_bell::qfi::{bures_rate, linear_bound, qfi_exact, tightening_operator, uncertainty_bound};
use qfi_bell::random;
use qfi_bell::state::SymmetricState;

struct Outcome {
    passed: bool,
    detail: String,
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn ghz_qfi() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for n in 2..=12 {
        let q = qfi_exact(&SymmetricState::ghz(n)?, &CollectiveOperator::sz(n)?)?.qfi;
        worst = worst.max(rel(q, (n * n) as f64));
    }
    Ok(Outcome {
        passed: worst <= 1e-8,
        detail: format!("N=2..12, max rel err {worst:.2e} (tol 1e-8)"),
    })
}

fn mixture_qfi() -> Result<Outcome> {
    let mut worst = 0.0f64;
    let mut zero_err = 0.0f64;
    for n in [4, 6, 8] {
        for i in 0..=10 {
            let p = i as f64 / 10.0;
            let q = qfi_exact(&SymmetricState::ghz_mixture(n, p)?, &CollectiveOperator::sz(n)?)?.qfi;
            let expected = p * p * (n * n) as f64;
            if expected == 0.0 {
                zero_err = zero_err.max(q.abs());
            } else {
                worst = worst.max(rel(q, expected));
            }
        }
    }
    Ok(Outcome {
        passed: worst <= 1e-8 && zero_err <= 1e-12,
        detail: format!("N in {{4,6,8}}, 11 p values, max rel err {worst:.2e} (tol 1e-8), |QFI| at p=0 {zero_err:.1e}"),
    })
}

fn tightness() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    let mut worst_var_form = 0.0f64;
    for k in 0..200 {
        let n = [4, 8, 16][k % 3];
        let psi = random::pure_state(n, &mut rng);
        let a = CollectiveOperator::sz(n)?;
        let b = tightening_operator(&psi, &a)?;
        let lin = linear_bound(&psi, &a, &b)?;
        worst = worst.max(rel(lin.bound_value.powi(2), lin.qfi));
        let unc = uncertainty_bound(&psi, &a, &b)?;
        worst_var_form = worst_var_form.max(rel(unc.bound_value, unc.qfi));
    }
    Ok(Outcome {
        passed: worst <= 1e-7 && worst_var_form <= 1e-7,
        detail: format!(
            "200 states, N in {{4,8,16}}: max rel gap {worst:.2e} linear, {worst_var_form:.2e} variance form (tol 1e-7)"
        ),
    })
}

fn soundness() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut counterexamples = 0;
    let mut skipped = 0;
    for k in 0..500 {
        let n = [2, 4, 8][k % 3];
        let rho = if k % 2 == 0 {
            random::pure_state(n, &mut rng)
        } else {
            let rank = 1 + k % (n + 1);
            random::mixed_state(n, rank, &mut rng)
        };
        let a = CollectiveOperator::sz(n)?;
        let b = random::hermitian(n, &mut rng);
        let q = qfi_exact(&rho, &a)?.qfi;
        let tol = 1e-8 * q.max(1.0);
        match uncertainty_bound(&rho, &a, &b) {
            Ok(u) if u.bound_value > q + tol => counterexamples += 1,
            Ok(_) => {}
            Err(_) => skipped += 1,
        }
        if linear_bound(&rho, &a, &b)?.bound_value.powi(2) > q + tol {
            counterexamples += 1;
        }
    }
    Ok(Outcome {
        passed: counterexamples == 0 && skipped == 0,
        detail: format!("500 instances, {counterexamples} counterexamples, {skipped} degenerate partners"),
    })
}

fn lhv_bounds() -> Result<Outcome> {
    let mut cases = Vec::new();
    for n in 2..=6 {
        cases.push((SymmetricBellInequality::two_setting(n), n, "two-setting"));
    }
    for n in 2..=6 {
        cases.push((SymmetricBellInequality::multi_setting(2, n), n, "m=2"));
    }
    for n in 2..=4 {
        cases.push((SymmetricBellInequality::multi_setting(3, n), n, "m=3"));
    }
    let mut bad = Vec::new();
    for (ineq, n, label) in &cases {
        let b = lhv_bound_symmetric(ineq, *n)?;
        if b.min_value.abs() > 1e-9 {
            bad.push(format!("{label} N={n}: min {}", b.min_value));
        }
    }
    Ok(Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} cases, classical minimum exactly 0 in each", cases.len())
        } else {
            bad.join("; ")
        },
    })
}

fn mermin() -> Result<Outcome> {
    let mut worst_bound = 0.0f64;
    let mut ghz_ok = true;
    let mut worst_threshold = 0.0f64;
    let mut table = Vec::new();
    for n in 2..=8 {
        let lhv = mermin_lhv_max(n)?;
        worst_bound = worst_bound.max((lhv.witness_max - mermin_local_bound(n)).abs());
        let ghz = mermin_check(&SymmetricState::ghz(n)?)?;
        if n >= 3 {
            ghz_ok &= ghz.violated && (ghz.value - n as f64).abs() < 1e-9;
        }
        // locate where the GHZ mixture starts to violate
        let excess = |p: f64| {
            let e = mermin_check(&SymmetricState::ghz_mixture(n, p).unwrap()).unwrap();
            e.value - e.classical_bound_offset
        };
        if let Some(p) = bisect(excess, 0.0, 1.0, 1e-13) {
            worst_threshold = worst_threshold.max((p - mermin_mixture_threshold(n)).abs());
            table.push(format!("N={n}: p>{p:.6}"));
        } else if n == 2 {
            // bound equals N: even the pure GHZ state only reaches it
            table.push("N=2: none".into());
        } else {
            worst_threshold = f64::INFINITY;
        }
    }
    Ok(Outcome {
        passed: worst_bound <= 1e-9 && ghz_ok && worst_threshold <= 1e-9,
        detail: format!(
            "LHV max vs bound err {worst_bound:.1e}, GHZ violates for N>=3: {ghz_ok}, threshold err {worst_threshold:.1e}; {}",
            table.join(" ")
        ),
    })
}

fn fig_regions() -> Result<Outcome> {
    let cells = 200;
    let axis = default_axis(cells);
    let map = region_map(&axis, &axis)?;
    let row = |i: usize| &map[i * cells..(i + 1) * cells];
    let (mut red_all, mut none_above_half, mut green_all, mut monotone) = (true, true, true, true);
    let mut worst_cell_gap = 0i64;
    let mut first_1m_prev = 0usize;
    let mut first_2m_prev = 0usize;
    for (i, &xi2) in axis.iter().enumerate() {
        let r = row(i);
        let v1: Vec<bool> = r.iter().map(|c| c.w1m_violated).collect();
        let v2: Vec<bool> = r.iter().map(|c| c.w2m_violated).collect();
        if xi2 <= 0.25 {
            red_all &= v1.iter().all(|&v| v);
        }
        if xi2 >= 0.5 {
            none_above_half &= v1.iter().all(|&v| !v);
        }
        if xi2 <= 1.0 / 3.0 {
            green_all &= v2.iter().all(|&v| v);
        }
        // each row violated on an upper interval of C, lower ends nondecreasing in ξ²
        let first1 = v1.iter().position(|&v| v).unwrap_or(cells);
        let first2 = v2.iter().position(|&v| v).unwrap_or(cells);
        monotone &= v1[first1..].iter().all(|&v| v) && v2[first2..].iter().all(|&v| v);
        monotone &= first1 >= first_1m_prev && first2 >= first_2m_prev;
        first_1m_prev = first1;
        first_2m_prev = first2;
        if xi2 > 0.25 && xi2 < 0.5 {
            let c_star = minimal_contrast_two_setting(xi2).unwrap_or(1.0);
            let expected = (c_star * cells as f64 - 0.5).ceil().max(0.0) as i64;
            worst_cell_gap = worst_cell_gap.max((first1 as i64 - expected).abs());
        }
    }
    Ok(Outcome {
        passed: red_all && none_above_half && green_all && monotone && worst_cell_gap <= 1,
        detail: format!(
            "200x200: 1m all below 1/4 {red_all}, none above 1/2 {none_above_half}, 2m all below 1/3 {green_all}, monotone {monotone}, boundary gap {worst_cell_gap} cells"
        ),
    })
}

fn necessity_chain() -> Result<Outcome> {
    let n = 50;
    let mus = ParamRange { start: 0.0, end: 0.3, steps: 200 }.values();
    let rows = scan_family(Family::OneAxis, &[n], &mus, EvalOptions::default())?;
    let nf = n as f64;
    let (mut eq17_count, mut w2m_count, mut breaches) = (0, 0, Vec::new());
    for r in &rows {
        let e = &r.eval;
        if e.eq17_violated {
            eq17_count += 1;
            let lb = e.n_over_xi2.unwrap_or(0.0);
            if !(lb > 2.0 * nf && e.qfi > 2.0 * nf) {
                breaches.push(format!("mu={} eq17", r.parameter));
            }
        }
        if e.w2m_violated {
            w2m_count += 1;
            if e.qfi <= nf {
                breaches.push(format!("mu={} w2m", r.parameter));
            }
        }
    }
    Ok(Outcome {
        passed: breaches.is_empty() && eq17_count > 0 && w2m_count > 0,
        detail: format!(
            "N=50, 200 mu in [0,0.3]: {eq17_count} two-setting violations, {w2m_count} 2m-witness violations, {} breaches",
            breaches.len()
        ),
    })
}

fn oracle_equivalence() -> Result<Outcome> {
    let results = run_verify(&VerifyOptions::default())?;
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    let worst = results
        .iter()
        .filter(|r| r.tolerance == 1e-8)
        .map(|r| r.max_error)
        .fold(0.0, f64::max);
    Ok(Outcome {
        passed: failed.is_empty(),
        detail: format!(
            "{} checks at N<=8, worst relative error {worst:.1e}, failed: {failed:?}",
            results.len()
        ),
    })
}

fn bures() -> Result<Outcome> {
    let states = [
        ("ghz4", SymmetricState::ghz(4)?),
        ("ghz8", SymmetricState::ghz(8)?),
        ("ghz16", SymmetricState::ghz(16)?),
        ("oat20", SymmetricState::one_axis_twisted(20, 0.1)?),
        ("oat50", SymmetricState::one_axis_twisted(50, 0.05)?),
        ("mix6", SymmetricState::ghz_mixture(6, 0.4)?),
        ("mix8", SymmetricState::ghz_mixture(8, 0.5)?),
    ];
    let mut worst = 0.0f64;
    let mut parts = Vec::new();
    for (label, rho) in &states {
        let r = bures_rate(rho, &CollectiveOperator::sz(rho.n_parties())?, 1e-4)?;
        worst = worst.max(r.rel_err);
        parts.push(format!("{label} {:.1e}", r.rel_err));
    }
    Ok(Outcome {
        passed: worst <= 1e-3,
        detail: format!("dt=1e-4, rel err: {} (tol 1e-3)", parts.join(", ")),
    })
}

type Criterion = (&'static str, fn() -> Result<Outcome>, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("GHZ QFI", ghz_qfi, Duration::from_secs(1)),
        ("mixture QFI", mixture_qfi, Duration::MAX),
        ("bound tightness", tightness, Duration::from_secs(30)),
        ("bound soundness", soundness, Duration::MAX),
        ("LHV bounds", lhv_bounds, Duration::from_secs(120)),
        ("Mermin", mermin, Duration::MAX),
        ("witness regions", fig_regions, Duration::from_secs(60)),
        ("necessity chain", necessity_chain, Duration::MAX),
        ("oracle equivalence", oracle_equivalence, Duration::from_secs(600)),
        ("Bures rate", bures, Duration::MAX),
    ];
    let mut failures = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(o) => (o.passed && elapsed <= *budget, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let budget_note = if *budget == Duration::MAX {
            String::new()
        } else {
            format!(" / budget {:.0}s", budget.as_secs_f64())
        };
        println!(
            "criterion {:>2} {} {name}: {detail} [{:.3}s{budget_note}]",
            i + 1,
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !passed {
            failures += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
