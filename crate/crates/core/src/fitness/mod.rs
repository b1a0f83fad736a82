//! The penalized isentropic-efficiency objective.
//!
//! A candidate's quality is the rotor isentropic efficiency
//! `η = ((P_out/P_in)^((γ−1)/γ) − 1) / (T_out/T_in − 1)` computed from
//! mass-flow-averaged total pressures and temperatures, averaged over the
//! last solver iterations, and folded into the minimized fitness
//! `f = 1 − η + P` where `P` accumulates penalty terms for non-converged
//! evaluations and infeasible geometries. On any failure the efficiency
//! contribution is zeroed, which guarantees every failed candidate ranks
//! strictly worse than every successful one.

mod benchmark;
mod surrogate;

pub use benchmark::BenchmarkFunction;
pub use surrogate::{SurrogateBump, SurrogateConfig, SurrogateLandscape};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from fitness evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    /// A pressure or temperature was zero or negative.
    NonPositiveInput {
        /// Which quantity.
        what: &'static str,
        /// The offending value.
        value: f64,
    },
    /// `t_out == t_in` makes the efficiency undefined.
    ZeroTemperatureRise,
    /// An efficiency series was empty.
    EmptySeries,
    /// Baseline efficiency must be positive to normalize against.
    NonPositiveBaseline(f64),
    /// Candidate vector component outside the unit cube.
    OutOfBounds {
        /// Component index.
        index: usize,
        /// The offending value.
        value: f64,
    },
    /// Candidate vector has the wrong dimension.
    DimensionMismatch {
        /// Expected dimension.
        expected: usize,
        /// Supplied length.
        got: usize,
    },
    /// Invalid evaluator configuration.
    InvalidConfig(String),
    /// Unknown benchmark function name.
    UnknownBenchmark(String),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::NonPositiveInput { what, value } => {
                write!(f, "{what} must be positive, got {value}")
            }
            EvalError::ZeroTemperatureRise => {
                write!(f, "total-temperature ratio of 1 makes the efficiency undefined")
            }
            EvalError::EmptySeries => write!(f, "efficiency series is empty"),
            EvalError::NonPositiveBaseline(v) => {
                write!(f, "baseline efficiency must be positive, got {v}")
            }
            EvalError::OutOfBounds { index, value } => {
                write!(f, "vector component {index} = {value} outside [0,1]")
            }
            EvalError::DimensionMismatch { expected, got } => {
                write!(f, "vector length {got}, expected {expected}")
            }
            EvalError::InvalidConfig(msg) => write!(f, "invalid evaluator config: {msg}"),
            EvalError::UnknownBenchmark(name) => write!(f, "unknown benchmark function '{name}'"),
        }
    }
}

impl core::error::Error for EvalError {}

/// Objective configuration: heat-capacity ratio, averaging window, and the
/// penalty magnitudes applied on failure.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FitnessConfig {
    /// Heat-capacity ratio γ.
    pub gamma: f64,
    /// Number of trailing solver iterations to average η over.
    pub averaging_window: usize,
    /// Penalty added when the flow solution did not converge.
    pub penalty_nonconverged: f64,
    /// Penalty added when the blade geometry is infeasible.
    pub penalty_infeasible: f64,
}

impl Default for FitnessConfig {
    fn default() -> Self {
        FitnessConfig {
            gamma: 1.4,
            averaging_window: 1000,
            penalty_nonconverged: 0.5,
            penalty_infeasible: 1.0,
        }
    }
}

impl FitnessConfig {
    /// Validates parameter ranges.
    pub fn validate(&self) -> Result<(), EvalError> {
        if !(self.gamma.is_finite() && self.gamma > 1.0) {
            return Err(EvalError::InvalidConfig(alloc::format!(
                "gamma must exceed 1, got {}",
                self.gamma
            )));
        }
        if self.averaging_window == 0 {
            return Err(EvalError::InvalidConfig("averaging window must be >= 1".into()));
        }
        if !(self.penalty_nonconverged >= 0.0 && self.penalty_infeasible >= 0.0) {
            return Err(EvalError::InvalidConfig("penalties must be >= 0".into()));
        }
        Ok(())
    }
}

/// One solver iteration of mass-flow-averaged station quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FlowSample {
    /// Total pressure at the inlet station, pascals.
    pub p_total_inlet: f64,
    /// Total pressure at the outlet station, pascals.
    pub p_total_outlet: f64,
    /// Total temperature at the inlet station, kelvin.
    pub t_total_inlet: f64,
    /// Total temperature at the outlet station, kelvin.
    pub t_total_outlet: f64,
}

/// Per-iteration station data from a flow solution.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FlowStationData {
    /// Samples in solver-iteration order.
    pub samples: Vec<FlowSample>,
}

/// Isentropic efficiency from total-pressure and total-temperature ratios.
pub fn isentropic_efficiency(
    p_in: f64,
    p_out: f64,
    t_in: f64,
    t_out: f64,
    gamma: f64,
) -> Result<f64, EvalError> {
    for (what, value) in [
        ("inlet total pressure", p_in),
        ("outlet total pressure", p_out),
        ("inlet total temperature", t_in),
        ("outlet total temperature", t_out),
    ] {
        if !(value.is_finite() && value > 0.0) {
            return Err(EvalError::NonPositiveInput { what, value });
        }
    }
    let temperature_rise = t_out / t_in - 1.0;
    if temperature_rise == 0.0 {
        return Err(EvalError::ZeroTemperatureRise);
    }
    let ideal = libm::pow(p_out / p_in, (gamma - 1.0) / gamma) - 1.0;
    Ok(ideal / temperature_rise)
}

/// Arithmetic mean of the last `min(window, len)` entries.
pub fn average_efficiency(series: &[f64], window: usize) -> Result<f64, EvalError> {
    if series.is_empty() {
        return Err(EvalError::EmptySeries);
    }
    let n = window.min(series.len()).max(1);
    let tail = &series[series.len() - n..];
    Ok(tail.iter().sum::<f64>() / n as f64)
}

/// The minimized fitness `f = 1 − η + P`.
pub fn fitness_value(eta_avg: f64, penalty: f64) -> f64 {
    1.0 - eta_avg + penalty
}

/// Candidate efficiency normalized to the baseline blade: `η̄ = η/η_baseline`.
pub fn normalized_efficiency(eta: f64, eta_baseline: f64) -> Result<f64, EvalError> {
    if !(eta_baseline.is_finite() && eta_baseline > 0.0) {
        return Err(EvalError::NonPositiveBaseline(eta_baseline));
    }
    Ok(eta / eta_baseline)
}

/// A labeled penalty contribution.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PenaltyTerm {
    /// What triggered the penalty.
    pub label: &'static str,
    /// Its magnitude.
    pub value: f64,
}

/// Outcome of one candidate evaluation.
///
/// Constructors maintain the invariants `fitness = 1 − eta_avg + penalty`
/// (exactly) and `penalty = 0 ⇔ converged ∧ feasible`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FitnessReport {
    /// Per-iteration efficiency series (empty on failure paths).
    pub efficiency_series: Vec<f64>,
    /// Window-averaged efficiency (zero on failure paths).
    pub eta_avg: f64,
    /// Applied penalty terms with labels.
    pub penalty_terms: Vec<PenaltyTerm>,
    /// Sum of penalty terms.
    pub penalty: f64,
    /// The minimized fitness `1 − eta_avg + penalty`.
    pub fitness: f64,
    /// Whether the flow solution converged.
    pub converged: bool,
    /// Whether the geometry was feasible.
    pub feasible: bool,
}

impl FitnessReport {
    /// Successful evaluation from an efficiency series.
    pub fn from_series(series: Vec<f64>, config: &FitnessConfig) -> Result<Self, EvalError> {
        let eta_avg = average_efficiency(&series, config.averaging_window)?;
        Ok(FitnessReport {
            efficiency_series: series,
            eta_avg,
            penalty_terms: vec![],
            penalty: 0.0,
            fitness: fitness_value(eta_avg, 0.0),
            converged: true,
            feasible: true,
        })
    }

    /// Successful evaluation from per-iteration station data: computes the
    /// η series internally rather than trusting a solver-reported value.
    pub fn from_flow_data(data: &FlowStationData, config: &FitnessConfig) -> Result<Self, EvalError> {
        let series = data
            .samples
            .iter()
            .map(|s| {
                isentropic_efficiency(
                    s.p_total_inlet,
                    s.p_total_outlet,
                    s.t_total_inlet,
                    s.t_total_outlet,
                    config.gamma,
                )
            })
            .collect::<Result<Vec<f64>, EvalError>>()?;
        FitnessReport::from_series(series, config)
    }

    /// Failed evaluation: geometry infeasible (no flow solution attempted).
    pub fn infeasible(config: &FitnessConfig) -> Self {
        FitnessReport::failed(
            PenaltyTerm {
                label: "infeasible",
                value: config.penalty_infeasible,
            },
            false,
        )
    }

    /// Failed evaluation: flow solution missing, broken, or timed out.
    pub fn nonconverged(config: &FitnessConfig) -> Self {
        FitnessReport::failed(
            PenaltyTerm {
                label: "nonconverged",
                value: config.penalty_nonconverged,
            },
            true,
        )
    }

    fn failed(term: PenaltyTerm, feasible: bool) -> Self {
        // failure zeroes the efficiency contribution entirely
        let penalty = term.value;
        FitnessReport {
            efficiency_series: vec![],
            eta_avg: 0.0,
            penalty_terms: vec![term],
            penalty,
            fitness: fitness_value(0.0, penalty),
            converged: false,
            feasible,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use proptest::prelude::*;

    // Independent high-precision reference for the derived example:
    // η(p_ratio=2, t_ratio=1.25, γ=1.4) = (2^(2/7) − 1) / 0.25, evaluated
    // with 40-digit arithmetic.
    const ETA_2_125: f64 = 0.8760546168179017636467640103702434291096;

    #[test]
    fn isentropic_case_gives_unit_efficiency() {
        // t_ratio chosen exactly isentropic for the pressure ratio
        let gamma = 1.4;
        let p_ratio: f64 = 1.8;
        let t_ratio = libm::pow(p_ratio, (gamma - 1.0) / gamma);
        let eta = isentropic_efficiency(101_325.0, 101_325.0 * p_ratio, 288.0, 288.0 * t_ratio, gamma)
            .unwrap();
        assert!((eta - 1.0).abs() < 1e-12, "isentropic eta = {eta}");
    }

    #[test]
    fn matches_high_precision_reference() {
        let eta = isentropic_efficiency(1.0, 2.0, 1.0, 1.25, 1.4).unwrap();
        assert!((eta - ETA_2_125).abs() < 1e-10, "eta = {eta}");
    }

    #[test]
    fn zero_pressure_rise_means_zero_efficiency() {
        let eta = isentropic_efficiency(2e5, 2e5, 290.0, 310.0, 1.4).unwrap();
        assert_eq!(eta, 0.0);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(matches!(
            isentropic_efficiency(1.0, 2.0, 300.0, 300.0, 1.4),
            Err(EvalError::ZeroTemperatureRise)
        ));
        assert!(matches!(
            isentropic_efficiency(-1.0, 2.0, 300.0, 310.0, 1.4),
            Err(EvalError::NonPositiveInput { .. })
        ));
        assert!(isentropic_efficiency(1.0, 0.0, 300.0, 310.0, 1.4).is_err());
    }

    #[test]
    fn averaging_window_takes_the_tail() {
        let constant = vec![0.3; 10];
        assert_eq!(average_efficiency(&constant, 1000).unwrap(), 0.3);
        let mut series = vec![0.0; 500];
        series.extend(vec![1.0; 1000]);
        assert_eq!(average_efficiency(&series, 1000).unwrap(), 1.0);
        assert!(average_efficiency(&[], 10).is_err());
    }

    #[test]
    fn averaging_matches_brute_force_on_random_series() {
        let mut rng = Rng::seed_from_u64(5);
        let series: Vec<f64> = (0..2500).map(|_| rng.next_f64()).collect();
        let window = 1000;
        let got = average_efficiency(&series, window).unwrap();
        // brute force over the explicit tail
        let mut sum = 0.0;
        for i in series.len() - window..series.len() {
            sum += series[i];
        }
        let expected = sum / window as f64;
        assert!((got - expected).abs() < 1e-15);
    }

    #[test]
    fn fitness_composition_examples() {
        assert_eq!(fitness_value(1.0, 0.0), 0.0);
        assert!((fitness_value(0.9, 0.05) - 0.15).abs() < 1e-15);
        let cfg = FitnessConfig::default();
        let report = FitnessReport::infeasible(&cfg);
        assert_eq!(report.fitness, 1.0 + cfg.penalty_infeasible);
        assert_eq!(report.eta_avg, 0.0);
        assert!(!report.feasible);
        let report = FitnessReport::nonconverged(&cfg);
        assert_eq!(report.fitness, 1.0 + cfg.penalty_nonconverged);
        assert!(!report.converged);
        assert!(report.feasible);
    }

    #[test]
    fn report_invariants_hold() {
        let cfg = FitnessConfig::default();
        let ok = FitnessReport::from_series(vec![0.91, 0.92, 0.93], &cfg).unwrap();
        assert_eq!(ok.fitness, 1.0 - ok.eta_avg + ok.penalty);
        assert_eq!(ok.penalty, 0.0);
        assert!(ok.converged && ok.feasible);
        for failed in [FitnessReport::infeasible(&cfg), FitnessReport::nonconverged(&cfg)] {
            assert_eq!(failed.fitness, 1.0 - failed.eta_avg + failed.penalty);
            assert!(failed.penalty > 0.0);
            assert!(!(failed.converged && failed.feasible));
            assert!(failed.fitness >= 1.0, "failure must rank below any success");
        }
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(normalized_efficiency(0.9, 0.9).unwrap(), 1.0);
        let eta_norm = normalized_efficiency(0.92, 0.90).unwrap();
        assert!((eta_norm - 0.92 / 0.90).abs() < 1e-15);
        // magnitudes the harness must be able to represent
        for target in [1.0342f64, 1.0345] {
            let eta = normalized_efficiency(0.9 * target, 0.9).unwrap();
            assert!((eta - target).abs() < 1e-12);
        }
        assert!(normalized_efficiency(0.9, 0.0).is_err());
    }

    #[test]
    fn flow_data_report_computes_eta_internally() {
        let cfg = FitnessConfig::default();
        let data = FlowStationData {
            samples: vec![
                FlowSample {
                    p_total_inlet: 1.0,
                    p_total_outlet: 2.0,
                    t_total_inlet: 1.0,
                    t_total_outlet: 1.25,
                };
                4
            ],
        };
        let report = FitnessReport::from_flow_data(&data, &cfg).unwrap();
        assert!((report.eta_avg - ETA_2_125).abs() < 1e-10);
        assert!((report.fitness - (1.0 - ETA_2_125)).abs() < 1e-10);
    }

    proptest! {
        // η is a function of the two ratios only: rescaling both pressures
        // or both temperatures by a common factor changes nothing
        #[test]
        fn efficiency_is_scale_invariant(
            p_scale in 1e-3f64..1e3,
            t_scale in 1e-3f64..1e3,
            p_ratio in 1.01f64..4.0,
            t_ratio in 1.01f64..2.0,
        ) {
            let base = isentropic_efficiency(1e5, 1e5 * p_ratio, 288.0, 288.0 * t_ratio, 1.4).unwrap();
            let scaled = isentropic_efficiency(
                1e5 * p_scale,
                1e5 * p_scale * p_ratio,
                288.0 * t_scale,
                288.0 * t_scale * t_ratio,
                1.4,
            )
            .unwrap();
            prop_assert!((base - scaled).abs() <= 1e-12 * base.abs().max(1.0),
                "scaling changed eta: {base} -> {scaled}");
        }

        // fitness strictly decreases as eta_avg increases at fixed penalty
        #[test]
        fn fitness_monotone_in_efficiency(eta in 0.0f64..1.0, delta in 1e-6f64..0.5, p in 0.0f64..2.0) {
            prop_assert!(fitness_value(eta + delta, p) < fitness_value(eta, p));
        }
    }
}
