//! Core kernels for parametric turbofan-blade shape optimization.
//!
//! This crate holds the pure-math side of the pipeline:
//!
//! - [`geom`]: blades as stacked cylindrical sections, Hicks-Henne profile
//!   deformation, search-vector encoding, feasibility checks, and geometry
//!   comparison (diff fields and distances).
//! - [`optim`]: seeded, bounded, ask/tell implementations of CMA-ES and PSO
//!   over the normalized `[0,1]^N` search cube.
//! - [`fitness`]: the penalized isentropic-efficiency objective, plus the
//!   surrogate and benchmark landscapes used for desk-scale experiments.
//! - [`rng`]: the pseudo-random generator shared by everything above,
//!   chosen so identical seeds give bit-identical streams on every platform.
//!
//! Everything here is deterministic, allocation-only (`no_std` + `alloc`
//! compatible), and free of I/O; the companion CLI crate layers file
//! formats, the external-solver protocol, and the experiment harness on
//! top. All values are immutable after construction and safe to share
//! between concurrent evaluation workers.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod fitness;
pub mod geom;
pub mod optim;
pub mod rng;
