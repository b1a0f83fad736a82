//! (μ/μ_w, λ) CMA-ES with box bounds on the unit cube.
//!
//! Update equations and internal constants follow the standard strategy
//! defaults (log-rank recombination weights, cumulative step-size
//! adaptation, rank-one plus rank-μ covariance update). The paper-facing
//! knobs are just μ, λ and σ0; everything else derives from the dimension.

use alloc::vec;
use alloc::vec::Vec;

use super::matrix::{sym_eigen, SquareMatrix, SymEigen};
use super::{clamp_unit, rank_indices, validate_fitnesses, CmaParams, Incumbent, OptimizerError};
use crate::rng::Rng;

/// Full CMA-ES state; serializable for bit-exact checkpoint/resume.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CmaState {
    dim: usize,
    lambda: usize,
    mu: usize,
    resample_limit: u32,
    // derived constants
    weights: Vec<f64>,
    mu_eff: f64,
    c_sigma: f64,
    d_sigma: f64,
    c_c: f64,
    c_one: f64,
    c_mu: f64,
    chi_n: f64,
    // evolving state
    mean: Vec<f64>,
    sigma: f64,
    covariance: SquareMatrix,
    path_sigma: Vec<f64>,
    path_c: Vec<f64>,
    generation: u64,
    rng: Rng,
    pending: Option<Vec<Vec<f64>>>,
    incumbent: Option<Incumbent>,
}

impl CmaState {
    pub(crate) fn init(dim: usize, seed: u64, params: &CmaParams) -> Result<Self, OptimizerError> {
        let mean = match &params.start {
            Some(start) => {
                if start.len() != dim {
                    return Err(OptimizerError::StartPointDimension {
                        expected: dim,
                        got: start.len(),
                    });
                }
                start.clone()
            }
            None => vec![0.5; dim],
        };

        let n = dim as f64;
        let mu = params.mu;
        // log-rank recombination weights, normalized to sum 1
        let raw: Vec<f64> = (0..mu)
            .map(|i| libm::log(mu as f64 + 0.5) - libm::log((i + 1) as f64))
            .collect();
        let total: f64 = raw.iter().sum();
        let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
        let mu_eff = 1.0 / weights.iter().map(|w| w * w).sum::<f64>();

        let c_sigma = (mu_eff + 2.0) / (n + mu_eff + 5.0);
        let d_sigma =
            1.0 + 2.0 * (libm::sqrt((mu_eff - 1.0) / (n + 1.0)) - 1.0).max(0.0) + c_sigma;
        let c_c = (4.0 + mu_eff / n) / (n + 4.0 + 2.0 * mu_eff / n);
        let c_one = 2.0 / ((n + 1.3) * (n + 1.3) + mu_eff);
        let c_mu = (2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) / ((n + 2.0) * (n + 2.0) + mu_eff))
            .min(1.0 - c_one);
        let chi_n = libm::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));

        Ok(CmaState {
            dim,
            lambda: params.lambda,
            mu,
            resample_limit: params.resample_limit,
            weights,
            mu_eff,
            c_sigma,
            d_sigma,
            c_c,
            c_one,
            c_mu,
            chi_n,
            mean,
            sigma: params.sigma0,
            covariance: SquareMatrix::identity(dim),
            path_sigma: vec![0.0; dim],
            path_c: vec![0.0; dim],
            generation: 0,
            rng: Rng::seed_from_u64(seed),
            pending: None,
            incumbent: None,
        })
    }

    /// Samples λ candidates from `N(mean, σ²C)`, resampling out-of-cube
    /// draws up to the configured limit before clamping.
    pub(crate) fn ask(&mut self) -> Result<Vec<Vec<f64>>, OptimizerError> {
        if self.pending.is_some() {
            return Err(OptimizerError::AwaitingTell);
        }
        let eigen = sym_eigen(&self.covariance);
        let scale: Vec<f64> = eigen.values.iter().map(|&v| libm::sqrt(v.max(1e-20))).collect();

        let mut candidates = Vec::with_capacity(self.lambda);
        for _ in 0..self.lambda {
            let mut x = self.sample(&eigen, &scale);
            let mut attempt = 0;
            while !in_unit_cube(&x) && attempt < self.resample_limit {
                x = self.sample(&eigen, &scale);
                attempt += 1;
            }
            clamp_unit(&mut x);
            candidates.push(x);
        }
        self.pending = Some(candidates.clone());
        Ok(candidates)
    }

    /// One draw `mean + σ·B·D·z`.
    fn sample(&mut self, eigen: &SymEigen, scale: &[f64]) -> Vec<f64> {
        // z already scaled by D = diag(√eigenvalue)
        let z: Vec<f64> = scale.iter().map(|&s| self.rng.normal() * s).collect();
        let mut x = vec![0.0; self.dim];
        for i in 0..self.dim {
            let mut acc = 0.0;
            for k in 0..self.dim {
                acc += eigen.vectors.get(i, k) * z[k];
            }
            x[i] = self.mean[i] + self.sigma * acc;
        }
        x
    }

    /// Rank-based selection, mean shift, path and covariance updates, and
    /// step-size adaptation.
    pub(crate) fn tell(&mut self, fitnesses: &[f64]) -> Result<Incumbent, OptimizerError> {
        let candidates = self.pending.take().ok_or(OptimizerError::NoPendingAsk)?;
        if let Err(e) = validate_fitnesses(candidates.len(), fitnesses) {
            self.pending = Some(candidates);
            return Err(e);
        }

        let order = rank_indices(fitnesses);
        let selected: Vec<&Vec<f64>> = order[..self.mu].iter().map(|&i| &candidates[i]).collect();

        // displacement steps of the selected candidates, in σ-units
        let steps: Vec<Vec<f64>> = selected
            .iter()
            .map(|x| {
                x.iter()
                    .zip(&self.mean)
                    .map(|(xi, mi)| (xi - mi) / self.sigma)
                    .collect()
            })
            .collect();
        let mut step_w = vec![0.0; self.dim];
        for (w, step) in self.weights.iter().zip(&steps) {
            for (acc, s) in step_w.iter_mut().zip(step) {
                *acc += w * s;
            }
        }

        // mean ← mean + σ·⟨step⟩_w (i.e. the weighted mean of the parents)
        for (m, s) in self.mean.iter_mut().zip(&step_w) {
            *m += self.sigma * s;
        }

        // C^(-1/2)·⟨step⟩_w for the conjugate step-size path
        let eigen = sym_eigen(&self.covariance);
        let inv_scale: Vec<f64> =
            eigen.values.iter().map(|&v| 1.0 / libm::sqrt(v.max(1e-20))).collect();
        let whitened = {
            // B · D^(-1) · Bᵀ · step_w
            let mut bt = vec![0.0; self.dim];
            for k in 0..self.dim {
                let mut acc = 0.0;
                for i in 0..self.dim {
                    acc += eigen.vectors.get(i, k) * step_w[i];
                }
                bt[k] = acc * inv_scale[k];
            }
            let mut out = vec![0.0; self.dim];
            for i in 0..self.dim {
                let mut acc = 0.0;
                for k in 0..self.dim {
                    acc += eigen.vectors.get(i, k) * bt[k];
                }
                out[i] = acc;
            }
            out
        };

        let cs = self.c_sigma;
        let path_gain = libm::sqrt(cs * (2.0 - cs) * self.mu_eff);
        for (p, w) in self.path_sigma.iter_mut().zip(&whitened) {
            *p = (1.0 - cs) * *p + path_gain * w;
        }
        let ps_norm = libm::sqrt(self.path_sigma.iter().map(|p| p * p).sum::<f64>());

        // stall indicator for the rank-one update
        let completed = self.generation + 1;
        let expected_growth =
            libm::sqrt(1.0 - libm::pow(1.0 - cs, 2.0 * completed as f64));
        let h_sigma = if ps_norm / expected_growth
            < (1.4 + 2.0 / (self.dim as f64 + 1.0)) * self.chi_n
        {
            1.0
        } else {
            0.0
        };

        let cc = self.c_c;
        let pc_gain = h_sigma * libm::sqrt(cc * (2.0 - cc) * self.mu_eff);
        for (p, s) in self.path_c.iter_mut().zip(&step_w) {
            *p = (1.0 - cc) * *p + pc_gain * s;
        }

        // C ← (1 − c1 − cμ)·C + c1·(p_c p_cᵀ + δ(hσ)·C) + cμ·Σ wᵢ·sᵢ sᵢᵀ
        let delta_h = (1.0 - h_sigma) * cc * (2.0 - cc);
        self.covariance.scale(1.0 - self.c_one - self.c_mu + self.c_one * delta_h);
        self.covariance.add_scaled_outer(self.c_one, &self.path_c);
        for (w, step) in self.weights.iter().zip(&steps) {
            self.covariance.add_scaled_outer(self.c_mu * w, step);
        }
        self.covariance.symmetrize();

        self.sigma *= libm::exp((cs / self.d_sigma) * (ps_norm / self.chi_n - 1.0));

        self.generation = completed;

        // incumbent: best of this generation against the stored best,
        // strictly-better wins, stable on ties
        let best_idx = order[0];
        if self
            .incumbent
            .as_ref()
            .map(|inc| fitnesses[best_idx] < inc.fitness)
            .unwrap_or(true)
        {
            self.incumbent = Some(Incumbent {
                vector: candidates[best_idx].clone(),
                fitness: fitnesses[best_idx],
                generation: completed,
                index: best_idx,
            });
        }
        Ok(self.incumbent.clone().expect("incumbent set above"))
    }

    /// Current distribution mean.
    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    /// Current step size.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Eigenvalues of the current covariance matrix (unsorted).
    pub fn covariance_eigenvalues(&self) -> Vec<f64> {
        sym_eigen(&self.covariance).values
    }

    /// Completed generations.
    pub fn generation(&self) -> u64 {
        self.generation
    }

    /// Offspring per generation.
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    /// Search dimension.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Best candidate seen so far.
    pub fn incumbent(&self) -> Option<&Incumbent> {
        self.incumbent.as_ref()
    }
}

fn in_unit_cube(x: &[f64]) -> bool {
    x.iter().all(|&c| (0.0..=1.0).contains(&c))
}
