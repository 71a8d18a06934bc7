//! Cross-checks of the Dicke-basis implementation against the full-space
//! oracle on a corpus of small states.

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bell::{
    bell_multi_setting, bell_two_setting, mermin_check, mermin_local_bound, witness_multi_setting,
    witness_two_setting, MeasurementSettings, SpinMoments, SqueezingSummary, SymmetricBellInequality,
};
use crate::dicke::CollectiveOperator;
use crate::error::Result;
use crate::linalg;
use crate::oracle::{
    self, collective_full, correlators_bruteforce, embed_symmetric, full_moments, lhv_bound_naive,
    lhv_bound_symmetric, mermin_lhv_max, mermin_operator, ppt_bipartite_check, project_symmetric, Pauli,
};
use crate::qfi::qfi_exact;
use crate::random;
use crate::state::SymmetricState;

/// Relative tolerance with an absolute floor of 1 in the denominator.
pub const REL_TOL: f64 = 1e-8;
/// Size of an injected perturbation; far above every tolerance.
const FAULT: f64 = 1e-6;

pub const CHECK_NAMES: &[&str] = &[
    "embedding",
    "moments",
    "correlators",
    "qfi",
    "squeezing",
    "bell_values",
    "mermin",
    "lhv_bounds",
    "mermin_lhv",
    "ppt",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub max_parties: usize,
    /// Name of a check whose library-side values get perturbed.
    pub inject_fault: Option<String>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 7,
            max_parties: oracle::MAX_MIXED_PARTIES,
            inject_fault: None,
        }
    }
}

struct Check {
    name: &'static str,
    cases: usize,
    max_error: f64,
    tolerance: f64,
    fault: bool,
}

impl Check {
    fn new(name: &'static str, tolerance: f64, opts: &VerifyOptions) -> Self {
        Self {
            name,
            cases: 0,
            max_error: 0.0,
            tolerance,
            fault: opts.inject_fault.as_deref() == Some(name),
        }
    }

    /// Compares a library value against its reference.
    fn compare(&mut self, library: f64, reference: f64) {
        let library = if self.fault {
            library + FAULT * library.abs().max(1.0)
        } else {
            library
        };
        let err = (library - reference).abs() / reference.abs().max(1.0);
        self.cases += 1;
        if err.is_nan() {
            self.max_error = f64::INFINITY;
        } else if err > self.max_error {
            self.max_error = err;
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            max_error: self.max_error,
            tolerance: self.tolerance,
            passed: self.cases > 0 && self.max_error <= self.tolerance,
        }
    }
}

fn corpus(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<SymmetricState>> {
    let mut states = vec![
        SymmetricState::ghz(n)?,
        SymmetricState::ghz_perp(n)?,
        SymmetricState::coherent_x(n)?,
        SymmetricState::dicke(n, n / 2)?,
        SymmetricState::one_axis_twisted(n, 0.3)?,
        SymmetricState::two_axis_twisted(n, 0.2)?,
        SymmetricState::ghz_mixture(n, 0.4)?,
        SymmetricState::maximally_mixed(n)?,
        random::pure_state(n, rng),
        random::mixed_state(n, 2, rng),
    ];
    if n >= 3 {
        states.push(random::mixed_state(n, n + 1, rng));
    }
    Ok(states)
}

pub fn run_verify(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut embedding = Check::new("embedding", 1e-12, opts);
    let mut moments = Check::new("moments", REL_TOL, opts);
    let mut correlators = Check::new("correlators", REL_TOL, opts);
    let mut qfi = Check::new("qfi", REL_TOL, opts);
    let mut squeezing = Check::new("squeezing", REL_TOL, opts);
    let mut bell = Check::new("bell_values", REL_TOL, opts);
    let mut mermin = Check::new("mermin", REL_TOL, opts);

    let settings = [
        MeasurementSettings::two_setting(PI / 3.0),
        MeasurementSettings::fan(3)?,
    ];
    let phi = PI / 5.0;
    let fan4 = MeasurementSettings::fan(4)?;

    for n in 2..=opts.max_parties {
        let sz_full = collective_full(n, Pauli::Z)?;
        let sx_full = collective_full(n, Pauli::X)?;
        let (sz, sx) = (CollectiveOperator::sz(n)?, CollectiveOperator::sx(n)?);
        let mermin_op = mermin_operator(n)?;
        let mermin_full = &mermin_op.polynomial * mermin_op.normalization;
        for rho in corpus(n, &mut rng)? {
            let full = embed_symmetric(&rho)?;

            let back = project_symmetric(&full)?;
            embedding.compare(0.0, -linalg::max_abs_diff(&back.density_matrix(), &rho.density_matrix()));

            let lib_m = SpinMoments::of(&rho)?;
            let ref_m = full_moments(&full)?;
            for a in 0..3 {
                moments.compare(lib_m.mean[a], ref_m.mean[a]);
                for b in 0..3 {
                    moments.compare(lib_m.second[a][b], ref_m.second[a][b]);
                }
            }

            for s in &settings {
                let lib = lib_m.correlators(s);
                let reference = correlators_bruteforce(&full, s)?;
                for (x, y) in lib.one_body.iter().zip(&reference.one_body) {
                    correlators.compare(*x, *y);
                }
                for (x, y) in lib.two_body.iter().flatten().zip(reference.two_body.iter().flatten()) {
                    correlators.compare(*x, *y);
                }
            }

            qfi.compare(qfi_exact(&rho, &sz)?.qfi, oracle::qfi_exact_full(&full, &sz_full)?);
            qfi.compare(qfi_exact(&rho, &sx)?.qfi, oracle::qfi_exact_full(&full, &sx_full)?);

            let lib_s = SqueezingSummary::from_moments(n, lib_m.mean[0], lib_m.second[1][1]);
            let ref_s = SqueezingSummary::from_moments(n, ref_m.mean[0], ref_m.second[1][1]);
            squeezing.compare(lib_s.contrast, ref_s.contrast);
            squeezing.compare(lib_s.zeta2, ref_s.zeta2);
            squeezing.compare(witness_two_setting(&lib_s)?.margin, witness_two_setting(&ref_s)?.margin);
            squeezing.compare(witness_multi_setting(&lib_s)?.margin, witness_multi_setting(&ref_s)?.margin);

            let two = SymmetricBellInequality::two_setting(n);
            let ref_two = two.evaluate(&correlators_bruteforce(&full, &MeasurementSettings::two_setting(phi))?)?;
            bell.compare(bell_two_setting(&rho, phi)?.value, ref_two);
            let multi = SymmetricBellInequality::multi_setting(4, n);
            let ref_multi = multi.evaluate(&correlators_bruteforce(&full, &fan4)?)?;
            bell.compare(bell_multi_setting(&rho, &fan4)?.value, ref_multi);

            mermin.compare(mermin_check(&rho)?.value, full.expect(&mermin_full).re);
        }
        mermin.compare(0.0, mermin_op.fit_residual);
    }

    let mut lhv = Check::new("lhv_bounds", 1e-9, opts);
    for n in 2..=6 {
        lhv.compare(lhv_bound_symmetric(&SymmetricBellInequality::two_setting(n), n)?.min_value, 0.0);
    }
    for (m, ns) in [(2, 2..=6), (3, 2..=4)] {
        for n in ns {
            let ineq = SymmetricBellInequality::multi_setting(m, n);
            let multiset = lhv_bound_symmetric(&ineq, n)?.min_value;
            lhv.compare(multiset, 0.0);
            if n <= 4 {
                lhv.compare(multiset, lhv_bound_naive(&ineq, n)?);
            }
        }
    }

    let mut mermin_lhv = Check::new("mermin_lhv", 1e-9, opts);
    for n in 2..=opts.max_parties.min(oracle::MAX_MERMIN_LHV_PARTIES) {
        mermin_lhv.compare(mermin_local_bound(n), mermin_lhv_max(n)?.witness_max);
    }

    // GHZ mixture across 1|rest: the partial transpose has eigenvalue -p/2
    let mut ppt = Check::new("ppt", 1e-10, opts);
    for p in [0.0, 0.25, 0.5, 1.0] {
        let full = embed_symmetric(&SymmetricState::ghz_mixture(4, p)?)?;
        let out = ppt_bipartite_check(&full, &[0])?;
        ppt.compare(-p / 2.0, out.min_eigenvalue);
        ppt.compare(if p > 0.0 { 1.0 } else { 0.0 }, if out.npt { 1.0 } else { 0.0 });
    }

    Ok([
        embedding, moments, correlators, qfi, squeezing, bell, mermin, lhv, mermin_lhv, ppt,
    ]
    .into_iter()
    .map(Check::finish)
    .collect())
}
