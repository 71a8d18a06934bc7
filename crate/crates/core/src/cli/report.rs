//! Per-state summary shared by `report` and `scan`.

use std::fmt::Write as _;

use serde::Serialize;

use super::format::{opt, sig};
use crate::bell::{
    mermin_check, optimize_multi_setting, optimize_two_setting, qfi_necessary_condition, squeezing_summary,
    witness_multi_setting, witness_two_setting,
};
use crate::dicke::CollectiveOperator;
use crate::error::Result;
use crate::qfi::qfi_exact;
use crate::state::SymmetricState;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Grid resolution of the angle optimizations.
    pub resolution: usize,
    /// Number of settings of the many-setting inequality.
    pub settings: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            resolution: 64,
            settings: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateEvaluation {
    pub n_parties: usize,
    pub pure: bool,
    pub qfi: f64,
    pub qfi_over_n: f64,
    pub contrast: f64,
    pub zeta2: f64,
    pub xi2: Option<f64>,
    /// `N/ξ²`, a lower bound on the QFI.
    pub n_over_xi2: Option<f64>,
    pub eq17_phi: f64,
    pub eq17_value: f64,
    pub eq17_violated: bool,
    pub eq3m_settings: usize,
    pub eq3m_spread: f64,
    pub eq3m_value: f64,
    pub eq3m_violated: bool,
    pub w1m_margin: f64,
    pub w1m_violated: bool,
    pub w2m_margin: f64,
    pub w2m_violated: bool,
    pub w2m_saturated: bool,
    pub mermin_value: f64,
    pub mermin_bound: f64,
    pub mermin_violated: bool,
}

impl StateEvaluation {
    pub fn qfi_gt_n(&self) -> bool {
        self.qfi > self.n_parties as f64
    }

    pub fn qfi_gt_2n(&self) -> bool {
        self.qfi > 2.0 * self.n_parties as f64
    }
}

pub fn evaluate_state(rho: &SymmetricState, opts: EvalOptions) -> Result<StateEvaluation> {
    let n = rho.n_parties();
    let qfi = qfi_exact(rho, &CollectiveOperator::sz(n)?)?.qfi;
    let summary = squeezing_summary(rho)?;
    let w1 = witness_two_setting(&summary)?;
    let w2 = witness_multi_setting(&summary)?;
    let n_over_xi2 = qfi_necessary_condition(&summary).ok().map(|c| c.qfi_lb);
    let (phi, eq17) = optimize_two_setting(rho, opts.resolution)?;
    let (spread, eq3m) = optimize_multi_setting(rho, opts.settings, opts.resolution)?;
    let mermin = mermin_check(rho)?;
    Ok(StateEvaluation {
        n_parties: n,
        pure: rho.is_pure(),
        qfi,
        qfi_over_n: qfi / n as f64,
        contrast: summary.contrast,
        zeta2: summary.zeta2,
        xi2: summary.xi2,
        n_over_xi2,
        eq17_phi: phi,
        eq17_value: eq17.value,
        eq17_violated: eq17.violated,
        eq3m_settings: opts.settings,
        eq3m_spread: spread,
        eq3m_value: eq3m.value,
        eq3m_violated: eq3m.violated,
        w1m_margin: w1.margin,
        w1m_violated: w1.violated,
        w2m_margin: w2.margin,
        w2m_violated: w2.violated,
        w2m_saturated: w2.saturated,
        mermin_value: mermin.value,
        mermin_bound: mermin.classical_bound_offset,
        mermin_violated: mermin.violated,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub spec: String,
    #[serde(flatten)]
    pub eval: StateEvaluation,
}

impl Report {
    pub fn to_text(&self) -> String {
        let e = &self.eval;
        let flag = |b: bool| if b { "violated" } else { "not violated" };
        let mut s = String::new();
        let _ = writeln!(s, "state            {}", self.spec);
        let _ = writeln!(s, "parties          {}", e.n_parties);
        let _ = writeln!(s, "kind             {}", if e.pure { "pure" } else { "mixed" });
        let _ = writeln!(s, "QFI(S_z)         {}", sig(e.qfi));
        let _ = writeln!(s, "QFI/N            {}", sig(e.qfi_over_n));
        let _ = writeln!(s, "contrast C       {}", sig(e.contrast));
        let _ = writeln!(s, "zeta^2           {}", sig(e.zeta2));
        match e.xi2 {
            Some(x) => {
                let _ = writeln!(s, "xi^2             {}", sig(x));
            }
            None => {
                let _ = writeln!(s, "xi^2             undefined (contrast below floor)");
            }
        }
        if let Some(lb) = e.n_over_xi2 {
            let _ = writeln!(s, "N/xi^2           {}", sig(lb));
        }
        let _ = writeln!(s, "witness 1m       margin {} ({})", sig(e.w1m_margin), flag(e.w1m_violated));
        let _ = writeln!(
            s,
            "witness 2m       margin {} ({}{})",
            sig(e.w2m_margin),
            flag(e.w2m_violated),
            if e.w2m_saturated { ", saturated" } else { "" }
        );
        let _ = writeln!(
            s,
            "two-setting      value {} at phi {} ({})",
            sig(e.eq17_value),
            sig(e.eq17_phi),
            flag(e.eq17_violated)
        );
        let _ = writeln!(
            s,
            "{}-setting        value {} at spread {} ({})",
            e.eq3m_settings,
            sig(e.eq3m_value),
            sig(e.eq3m_spread),
            flag(e.eq3m_violated)
        );
        let _ = writeln!(
            s,
            "Mermin           <W> {} vs bound {} ({})",
            sig(e.mermin_value),
            sig(e.mermin_bound),
            flag(e.mermin_violated)
        );
        s
    }
}

/// One scan row; `opt` fields print as empty CSV cells when undefined.
pub fn csv_header() -> Vec<&'static str> {
    vec![
        "parameter",
        "xi2",
        "C",
        "zeta2",
        "qfi",
        "qfi_over_N",
        "N_over_xi2",
        "eq17_phi",
        "eq17_value",
        "eq17_violated",
        "eq3m_spread",
        "eq3m_value",
        "eq3m_violated",
        "w1m_margin",
        "w1m_violated",
        "w2m_margin",
        "w2m_violated",
        "w2m_saturated",
        "mermin_value",
        "mermin_bound",
        "mermin_violated",
        "qfi_gt_N",
        "qfi_gt_2N",
    ]
}

pub fn csv_record(parameter: f64, e: &StateEvaluation) -> Vec<String> {
    let b = |x: bool| x.to_string();
    vec![
        sig(parameter),
        opt(e.xi2),
        sig(e.contrast),
        sig(e.zeta2),
        sig(e.qfi),
        sig(e.qfi_over_n),
        opt(e.n_over_xi2),
        sig(e.eq17_phi),
        sig(e.eq17_value),
        b(e.eq17_violated),
        sig(e.eq3m_spread),
        sig(e.eq3m_value),
        b(e.eq3m_violated),
        sig(e.w1m_margin),
        b(e.w1m_violated),
        sig(e.w2m_margin),
        b(e.w2m_violated),
        b(e.w2m_saturated),
        sig(e.mermin_value),
        sig(e.mermin_bound),
        b(e.mermin_violated),
        b(e.qfi_gt_n()),
        b(e.qfi_gt_2n()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ghz_report() {
        let e = evaluate_state(&SymmetricState::ghz(8).unwrap(), EvalOptions::default()).unwrap();
        assert!((e.qfi - 64.0).abs() < 1e-9);
        assert!(e.mermin_violated);
        assert!(e.xi2.is_none());
        assert_eq!(csv_record(0.0, &e).len(), csv_header().len());
    }

    #[test]
    fn css_baseline() {
        let e = evaluate_state(&SymmetricState::one_axis_twisted(50, 0.0).unwrap(), EvalOptions::default()).unwrap();
        assert!((e.xi2.unwrap() - 1.0).abs() < 1e-9);
        assert!(!e.eq17_violated && !e.eq3m_violated && !e.w1m_violated && !e.w2m_violated && !e.mermin_violated);
    }
}
