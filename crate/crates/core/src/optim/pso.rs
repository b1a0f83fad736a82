//! Particle swarm optimization with box bounds on the unit cube.
//!
//! Global-best topology with per-component random coefficients. Particles
//! and velocities initialize uniformly over the whole search domain; each
//! generation applies the velocity update, then the position update, then
//! bound handling (velocity capped at ±v_max, position clamped into the
//! cube).

use alloc::vec;
use alloc::vec::Vec;

use super::{validate_fitnesses, Incumbent, OptimizerError, PsoParams};
use crate::rng::Rng;

/// Full PSO state; serializable for bit-exact checkpoint/resume.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PsoState {
    dim: usize,
    particles: usize,
    omega: f64,
    phi1: f64,
    phi2: f64,
    v_max: f64,
    positions: Vec<Vec<f64>>,
    velocities: Vec<Vec<f64>>,
    personal_best: Vec<Vec<f64>>,
    personal_best_fitness: Vec<f64>,
    global_best: Option<(Vec<f64>, f64)>,
    generation: u64,
    rng: Rng,
    awaiting_tell: bool,
    incumbent: Option<Incumbent>,
}

impl PsoState {
    pub(crate) fn init(dim: usize, seed: u64, params: &PsoParams) -> Self {
        let mut rng = Rng::seed_from_u64(seed);
        // draw order is fixed: all positions first, then all velocities
        let positions: Vec<Vec<f64>> = (0..params.particles)
            .map(|_| (0..dim).map(|_| rng.next_f64()).collect())
            .collect();
        let velocities: Vec<Vec<f64>> = (0..params.particles)
            .map(|_| (0..dim).map(|_| rng.uniform(-params.v_max, params.v_max)).collect())
            .collect();
        PsoState {
            dim,
            particles: params.particles,
            omega: params.omega,
            phi1: params.phi1,
            phi2: params.phi2,
            v_max: params.v_max,
            personal_best: positions.clone(),
            personal_best_fitness: vec![f64::INFINITY; params.particles],
            positions,
            velocities,
            global_best: None,
            generation: 0,
            rng,
            awaiting_tell: false,
            incumbent: None,
        }
    }

    /// First ask returns the initialized positions; later asks move the
    /// swarm one step and return the new positions.
    pub(crate) fn ask(&mut self) -> Result<Vec<Vec<f64>>, OptimizerError> {
        if self.awaiting_tell {
            return Err(OptimizerError::AwaitingTell);
        }
        if self.generation > 0 {
            self.step();
        }
        self.awaiting_tell = true;
        Ok(self.positions.clone())
    }

    fn step(&mut self) {
        let (gbest, _) = self.global_best.as_ref().expect("set by first tell").clone();
        for i in 0..self.particles {
            for j in 0..self.dim {
                let r1 = self.rng.next_f64();
                let r2 = self.rng.next_f64();
                let x = self.positions[i][j];
                let v = self.omega * self.velocities[i][j]
                    + self.phi1 * r1 * (self.personal_best[i][j] - x)
                    + self.phi2 * r2 * (gbest[j] - x);
                self.velocities[i][j] = v.clamp(-self.v_max, self.v_max);
            }
            for j in 0..self.dim {
                self.positions[i][j] =
                    (self.positions[i][j] + self.velocities[i][j]).clamp(0.0, 1.0);
            }
        }
    }

    /// Updates personal and global bests (minimization).
    pub(crate) fn tell(&mut self, fitnesses: &[f64]) -> Result<Incumbent, OptimizerError> {
        if !self.awaiting_tell {
            return Err(OptimizerError::NoPendingAsk);
        }
        validate_fitnesses(self.particles, fitnesses)?;
        self.awaiting_tell = false;
        self.generation += 1;

        for (i, &f) in fitnesses.iter().enumerate() {
            if f < self.personal_best_fitness[i] {
                self.personal_best_fitness[i] = f;
                self.personal_best[i] = self.positions[i].clone();
            }
        }
        // stable argmin: earliest particle wins ties
        let mut best_i = 0;
        for i in 1..self.particles {
            if self.personal_best_fitness[i] < self.personal_best_fitness[best_i] {
                best_i = i;
            }
        }
        self.global_best = Some((
            self.personal_best[best_i].clone(),
            self.personal_best_fitness[best_i],
        ));

        // incumbent over this generation's evaluated positions
        let mut gen_best = 0;
        for i in 1..self.particles {
            if fitnesses[i] < fitnesses[gen_best] {
                gen_best = i;
            }
        }
        if self
            .incumbent
            .as_ref()
            .map(|inc| fitnesses[gen_best] < inc.fitness)
            .unwrap_or(true)
        {
            self.incumbent = Some(Incumbent {
                vector: self.positions[gen_best].clone(),
                fitness: fitnesses[gen_best],
                generation: self.generation,
                index: gen_best,
            });
        }
        Ok(self.incumbent.clone().expect("incumbent set above"))
    }

    /// Current particle velocities.
    pub fn velocities(&self) -> &[Vec<f64>] {
        &self.velocities
    }

    /// Completed generations.
    pub fn generation(&self) -> u64 {
        self.generation
    }

    /// Swarm size.
    pub fn particles(&self) -> usize {
        self.particles
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
