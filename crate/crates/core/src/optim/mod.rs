//! Seeded, bounded, ask/tell optimizers over the unit cube.
//!
//! Both optimizers minimize. The caller drives the loop: [`Optimizer::ask`]
//! proposes a population of candidate vectors in `[0,1]^d`, the caller
//! evaluates them (in any order, concurrently if it likes), and
//! [`Optimizer::tell`] feeds the fitness values back in candidate order.
//! Identical `(config, seed, fitness sequence)` triples produce bit-identical
//! candidate sequences and states, and the full state (including the RNG)
//! serializes for bit-exact checkpoint/resume.

mod cma;
mod matrix;
mod pso;

pub use cma::CmaState;
pub use pso::PsoState;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors from optimizer configuration and the ask/tell protocol.
#[derive(Debug, Clone, PartialEq)]
pub enum OptimizerError {
    /// Invalid configuration value.
    InvalidConfig(String),
    /// `ask` called while a previous ask is still awaiting its `tell`.
    AwaitingTell,
    /// `tell` called with no outstanding ask.
    NoPendingAsk,
    /// Fitness count does not match the last asked population.
    FitnessCount {
        /// Population size of the outstanding ask.
        expected: usize,
        /// Fitness values supplied.
        got: usize,
    },
    /// Non-finite fitness rejected; map failures to penalized finite
    /// values before telling.
    NonFiniteFitness {
        /// Candidate index with the bad value.
        index: usize,
        /// The offending value.
        value: f64,
    },
    /// Caller-supplied start point has the wrong dimension.
    StartPointDimension {
        /// Configured dimension.
        expected: usize,
        /// Start point length.
        got: usize,
    },
}

impl fmt::Display for OptimizerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OptimizerError::InvalidConfig(msg) => write!(f, "invalid optimizer config: {msg}"),
            OptimizerError::AwaitingTell => write!(f, "ask called twice without an interleaved tell"),
            OptimizerError::NoPendingAsk => write!(f, "tell called without a pending ask"),
            OptimizerError::FitnessCount { expected, got } => {
                write!(f, "got {got} fitness values for {expected} candidates")
            }
            OptimizerError::NonFiniteFitness { index, value } => {
                write!(f, "non-finite fitness {value} at candidate {index}")
            }
            OptimizerError::StartPointDimension { expected, got } => {
                write!(f, "start point has dimension {got}, expected {expected}")
            }
        }
    }
}

impl core::error::Error for OptimizerError {}

/// Which optimizer family to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum OptimizerKind {
    /// Covariance matrix adaptation evolution strategy.
    CmaEs,
    /// Particle swarm optimization.
    Pso,
}

/// CMA-ES configuration. Defaults: `(μ=4, λ=12)` with `σ0 = 0.05` in
/// normalized units, resampling out-of-bounds draws up to 10 times before
/// clamping, and the search started at the identity-deformation point
/// `0.5·1` unless a start point is supplied.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CmaParams {
    /// Offspring per generation (λ).
    pub lambda: usize,
    /// Parents per generation (μ ≤ λ).
    pub mu: usize,
    /// Initial step size in normalized units.
    pub sigma0: f64,
    /// Out-of-bounds resampling attempts before clamping.
    pub resample_limit: u32,
    /// Optional start mean; defaults to `0.5·1`.
    pub start: Option<Vec<f64>>,
}

impl Default for CmaParams {
    fn default() -> Self {
        CmaParams {
            lambda: 12,
            mu: 4,
            sigma0: 0.05,
            resample_limit: 10,
            start: None,
        }
    }
}

/// PSO configuration. Defaults: 12 particles with inertia `ω = 0.8`,
/// cognitive weight `φ1 = 1.7`, social weight `φ2 = 1.4`, and velocities
/// capped at 0.5 in normalized units.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PsoParams {
    /// Swarm size (evaluations per generation).
    pub particles: usize,
    /// Inertia weight ω.
    pub omega: f64,
    /// Cognitive acceleration φ1.
    pub phi1: f64,
    /// Social acceleration φ2.
    pub phi2: f64,
    /// Component-wise velocity cap in normalized units.
    pub v_max: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        PsoParams {
            particles: 12,
            omega: 0.8,
            phi1: 1.7,
            phi2: 1.4,
            v_max: 0.5,
        }
    }
}

/// Full optimizer configuration: family, search dimension, seed, and the
/// per-family parameter sets (only the selected family's set is used).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OptimizerConfig {
    /// Optimizer family.
    pub kind: OptimizerKind,
    /// Search-space dimension.
    pub dimension: usize,
    /// RNG seed.
    pub seed: u64,
    /// CMA-ES settings.
    pub cma: CmaParams,
    /// PSO settings.
    pub pso: PsoParams,
}

impl OptimizerConfig {
    /// CMA-ES with default parameters.
    pub fn cma_es(dimension: usize, seed: u64) -> Self {
        OptimizerConfig {
            kind: OptimizerKind::CmaEs,
            dimension,
            seed,
            cma: CmaParams::default(),
            pso: PsoParams::default(),
        }
    }

    /// PSO with default parameters.
    pub fn pso(dimension: usize, seed: u64) -> Self {
        OptimizerConfig {
            kind: OptimizerKind::Pso,
            dimension,
            seed,
            cma: CmaParams::default(),
            pso: PsoParams::default(),
        }
    }

    /// Candidates per generation for the selected family.
    pub fn population_size(&self) -> usize {
        match self.kind {
            OptimizerKind::CmaEs => self.cma.lambda,
            OptimizerKind::Pso => self.pso.particles,
        }
    }

    /// Validates parameter ranges.
    pub fn validate(&self) -> Result<(), OptimizerError> {
        let bad = |msg: String| Err(OptimizerError::InvalidConfig(msg));
        if self.dimension == 0 {
            return bad("dimension must be at least 1".into());
        }
        match self.kind {
            OptimizerKind::CmaEs => {
                if self.cma.mu == 0 || self.cma.mu > self.cma.lambda {
                    return bad(alloc::format!(
                        "need 1 <= mu <= lambda, got mu={}, lambda={}",
                        self.cma.mu,
                        self.cma.lambda
                    ));
                }
                if !(self.cma.sigma0.is_finite() && self.cma.sigma0 > 0.0) {
                    return bad(alloc::format!("sigma0 must be positive, got {}", self.cma.sigma0));
                }
                if let Some(start) = &self.cma.start {
                    if start.len() != self.dimension {
                        return Err(OptimizerError::StartPointDimension {
                            expected: self.dimension,
                            got: start.len(),
                        });
                    }
                    if start.iter().any(|x| !x.is_finite()) {
                        return bad("start point has non-finite components".into());
                    }
                }
            }
            OptimizerKind::Pso => {
                if self.pso.particles < 2 {
                    return bad(alloc::format!(
                        "need at least 2 particles, got {}",
                        self.pso.particles
                    ));
                }
                for (name, v) in [
                    ("omega", self.pso.omega),
                    ("phi1", self.pso.phi1),
                    ("phi2", self.pso.phi2),
                ] {
                    if !(v.is_finite() && v >= 0.0) {
                        return bad(alloc::format!("{name} must be finite and >= 0, got {v}"));
                    }
                }
                if !(self.pso.v_max.is_finite() && self.pso.v_max > 0.0) {
                    return bad(alloc::format!("v_max must be positive, got {}", self.pso.v_max));
                }
            }
        }
        Ok(())
    }
}

/// The best candidate observed so far, with its provenance.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Incumbent {
    /// Candidate vector in the unit cube.
    pub vector: Vec<f64>,
    /// Its fitness (lower is better).
    pub fitness: f64,
    /// Generation that produced it (1-based).
    pub generation: u64,
    /// Candidate index within that generation.
    pub index: usize,
}

/// Serializable optimizer state; enough to resume a run bit-exactly.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum OptimizerState {
    /// CMA-ES state.
    CmaEs(CmaState),
    /// PSO state.
    Pso(PsoState),
}

/// Ask/tell driver over either optimizer family.
///
/// Strictly sequential per instance: one ask must be answered by one tell.
/// Candidate vectors returned by `ask` are immutable snapshots, safe to
/// evaluate concurrently.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Optimizer {
    state: OptimizerState,
}

impl Optimizer {
    /// Initializes the optimizer from its configuration. Identical
    /// configurations (including the seed) produce bit-identical states.
    pub fn init(config: &OptimizerConfig) -> Result<Self, OptimizerError> {
        config.validate()?;
        let state = match config.kind {
            OptimizerKind::CmaEs => {
                OptimizerState::CmaEs(CmaState::init(config.dimension, config.seed, &config.cma)?)
            }
            OptimizerKind::Pso => {
                OptimizerState::Pso(PsoState::init(config.dimension, config.seed, &config.pso))
            }
        };
        Ok(Optimizer { state })
    }

    /// Resumes from a previously captured state.
    pub fn from_state(state: OptimizerState) -> Self {
        Optimizer { state }
    }

    /// Read access to the full state, e.g. for checkpointing.
    pub fn state(&self) -> &OptimizerState {
        &self.state
    }

    /// Proposes the next population, each candidate within `[0,1]^d`.
    pub fn ask(&mut self) -> Result<Vec<Vec<f64>>, OptimizerError> {
        match &mut self.state {
            OptimizerState::CmaEs(s) => s.ask(),
            OptimizerState::Pso(s) => s.ask(),
        }
    }

    /// Reports fitness values (candidate order) and returns the incumbent.
    pub fn tell(&mut self, fitnesses: &[f64]) -> Result<Incumbent, OptimizerError> {
        match &mut self.state {
            OptimizerState::CmaEs(s) => s.tell(fitnesses),
            OptimizerState::Pso(s) => s.tell(fitnesses),
        }
    }

    /// Best candidate seen so far, if any generation has completed.
    pub fn incumbent(&self) -> Option<&Incumbent> {
        match &self.state {
            OptimizerState::CmaEs(s) => s.incumbent(),
            OptimizerState::Pso(s) => s.incumbent(),
        }
    }

    /// Completed generations.
    pub fn generation(&self) -> u64 {
        match &self.state {
            OptimizerState::CmaEs(s) => s.generation(),
            OptimizerState::Pso(s) => s.generation(),
        }
    }

    /// Candidates per generation.
    pub fn population_size(&self) -> usize {
        match &self.state {
            OptimizerState::CmaEs(s) => s.lambda(),
            OptimizerState::Pso(s) => s.particles(),
        }
    }

    /// Search dimension.
    pub fn dimension(&self) -> usize {
        match &self.state {
            OptimizerState::CmaEs(s) => s.dimension(),
            OptimizerState::Pso(s) => s.dimension(),
        }
    }
}

/// Component-wise clamp into `[0, 1]` (box bound handling).
pub fn clamp_unit(vector: &mut [f64]) {
    for x in vector.iter_mut() {
        *x = x.clamp(0.0, 1.0);
    }
}

/// Checks a fitness slice against the pending population; shared by both
/// optimizer families.
fn validate_fitnesses(expected: usize, fitnesses: &[f64]) -> Result<(), OptimizerError> {
    if fitnesses.len() != expected {
        return Err(OptimizerError::FitnessCount {
            expected,
            got: fitnesses.len(),
        });
    }
    if let Some((index, &value)) = fitnesses.iter().enumerate().find(|(_, f)| !f.is_finite()) {
        return Err(OptimizerError::NonFiniteFitness { index, value });
    }
    Ok(())
}

/// Stable minimization ranking: indices sorted by fitness, ties broken by
/// candidate index.
fn rank_indices(fitnesses: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..fitnesses.len()).collect();
    idx.sort_by(|&a, &b| fitnesses[a].partial_cmp(&fitnesses[b]).expect("finite fitness"));
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn clamp_unit_examples() {
        let mut v = vec![0.3, 1.3, -0.2, 1.0, 0.0];
        clamp_unit(&mut v);
        assert_eq!(v, vec![0.3, 1.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn config_validation_catches_bad_parameters() {
        let mut cfg = OptimizerConfig::cma_es(10, 1);
        cfg.cma.mu = 13;
        assert!(cfg.validate().is_err());
        let mut cfg = OptimizerConfig::cma_es(10, 1);
        cfg.cma.sigma0 = 0.0;
        assert!(cfg.validate().is_err());
        let mut cfg = OptimizerConfig::cma_es(10, 1);
        cfg.cma.start = Some(vec![0.5; 9]);
        assert!(matches!(
            cfg.validate(),
            Err(OptimizerError::StartPointDimension { expected: 10, got: 9 })
        ));
        let mut cfg = OptimizerConfig::pso(10, 1);
        cfg.pso.particles = 1;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn ranking_is_stable_on_ties() {
        assert_eq!(rank_indices(&[3.0, 2.0, 2.0, 1.0]), vec![3, 1, 2, 0]);
        assert_eq!(rank_indices(&[1.0, 1.0, 1.0]), vec![0, 1, 2]);
    }

    #[test]
    fn protocol_errors_are_reported() {
        let mut opt = Optimizer::init(&OptimizerConfig::cma_es(4, 7)).unwrap();
        assert!(matches!(opt.tell(&[0.0; 12]), Err(OptimizerError::NoPendingAsk)));
        let _ = opt.ask().unwrap();
        assert!(matches!(opt.ask(), Err(OptimizerError::AwaitingTell)));
        assert!(matches!(
            opt.tell(&[0.0; 3]),
            Err(OptimizerError::FitnessCount { expected: 12, got: 3 })
        ));
        let mut fits = vec![0.0; 12];
        fits[5] = f64::NAN;
        assert!(matches!(
            opt.tell(&fits),
            Err(OptimizerError::NonFiniteFitness { index: 5, .. })
        ));
    }
}
