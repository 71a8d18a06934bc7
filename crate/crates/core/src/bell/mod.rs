//! Spin squeezing, Bell-correlation witnesses and permutation-symmetric
//! Bell inequalities built from one- and two-body correlators.
//!
//! Measurement settings are identical for every party. Setting `k` measures
//! `cos θ_k σ_y + sin θ_k σ_x`, i.e. the collective spin along
//! `(sin θ_k, cos θ_k, 0)`.

mod inequality;
mod mermin;
mod moments;
mod region;
mod squeezing;
mod witness;

pub use inequality::{
    bell_multi_setting, bell_two_setting, linear_ansatz_value, optimize_multi_setting,
    optimize_two_setting, BellEvaluation, InequalityKind, SymmetricBellInequality,
};
pub use mermin::{mermin_check, mermin_local_bound, mermin_mixture_threshold, mermin_witness};
pub use moments::{collective_correlators, Correlators, MeasurementSettings, SettingsMode, SpinMoments};
pub use region::{default_axis, region_map, RegionCell};
pub use squeezing::{qfi_necessary_condition, squeezing_summary, NecessaryCondition, SqueezingSummary};
pub use witness::{
    minimal_contrast_multi_setting, minimal_contrast_two_setting, multi_setting_bound,
    two_setting_bound, witness_multi_setting, witness_two_setting, WitnessOutcome,
};

/// State-derived margins within this distance of zero are not reported as
/// violations.
pub const VIOLATION_TOL: f64 = 1e-10;
