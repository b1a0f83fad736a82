//! Normalized search space: `[0,1]^N` vectors ⇄ physical deformations.

use alloc::format;
use alloc::vec::Vec;

use super::blade::BladeGeometry;
use super::deform::{DeformationParams, SectionDeformation};
use super::hicks_henne::{search_dimension, HicksHenneBasis};
use super::GeometryError;

/// Affine map between the optimizer's unit cube and physical deformation
/// parameters. Component `0.5` is zero deformation; `0`/`1` are the
/// negative/positive bound of the parameter kind.
///
/// Vector layout: hub block, then mid, then shroud; within a block the
/// amplitudes in basis order, then rotation, then axial shift, then
/// tangential shift.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchSpace {
    n_hh: usize,
    amplitude_bound: f64,
    rotation_bound: f64,
    shift_bound: f64,
}

impl SearchSpace {
    /// Builds a space with explicit per-kind bounds (all strictly positive).
    pub fn new(
        n_hh: usize,
        amplitude_bound: f64,
        rotation_bound: f64,
        shift_bound: f64,
    ) -> Result<Self, GeometryError> {
        if n_hh == 0 {
            return Err(GeometryError::EmptyBasis);
        }
        for (name, b) in [
            ("amplitude_bound", amplitude_bound),
            ("rotation_bound", rotation_bound),
            ("shift_bound", shift_bound),
        ] {
            if !(b.is_finite() && b > 0.0) {
                return Err(GeometryError::InvalidConfig(format!(
                    "{name} must be positive, got {b}"
                )));
            }
        }
        Ok(SearchSpace {
            n_hh,
            amplitude_bound,
            rotation_bound,
            shift_bound,
        })
    }

    /// Default bounds derived from a blade: amplitudes up to 2% of the mean
    /// control-section chord, rotation up to 5°, shifts up to 5% of chord.
    pub fn for_blade(blade: &BladeGeometry, n_hh: usize) -> Result<Self, GeometryError> {
        let mean_chord = blade
            .control_indices()
            .iter()
            .map(|&i| blade.sections()[i].chord_length())
            .sum::<f64>()
            / 3.0;
        if !(mean_chord.is_finite() && mean_chord > 0.0) {
            return Err(GeometryError::InvalidConfig(format!(
                "degenerate control-section chord {mean_chord}"
            )));
        }
        SearchSpace::new(
            n_hh,
            0.02 * mean_chord,
            5.0_f64.to_radians(),
            0.05 * mean_chord,
        )
    }

    /// Shape functions per section.
    pub fn n_hh(&self) -> usize {
        self.n_hh
    }

    /// Amplitude bound in meters.
    pub fn amplitude_bound(&self) -> f64 {
        self.amplitude_bound
    }

    /// Rotation bound in radians.
    pub fn rotation_bound(&self) -> f64 {
        self.rotation_bound
    }

    /// Shift bound in meters.
    pub fn shift_bound(&self) -> f64 {
        self.shift_bound
    }

    /// Search dimension `3·(n_hh + 3)`.
    pub fn dimension(&self) -> usize {
        search_dimension(self.n_hh)
    }

    /// Decodes a unit-cube vector into physical deformation parameters.
    pub fn decode(&self, vector: &[f64]) -> Result<DeformationParams, GeometryError> {
        let dim = self.dimension();
        if vector.len() != dim {
            return Err(GeometryError::VectorLength {
                expected: dim,
                got: vector.len(),
            });
        }
        if let Some((index, &value)) = vector
            .iter()
            .enumerate()
            .find(|(_, &c)| !(c.is_finite() && (0.0..=1.0).contains(&c)))
        {
            return Err(GeometryError::ComponentOutOfRange { index, value });
        }
        let block = self.n_hh + 3;
        let from_unit = |c: f64, bound: f64| (2.0 * c - 1.0) * bound;
        let mut per_section: Vec<SectionDeformation> = Vec::with_capacity(3);
        for k in 0..3 {
            let b = &vector[k * block..(k + 1) * block];
            per_section.push(SectionDeformation {
                amplitudes: b[..self.n_hh]
                    .iter()
                    .map(|&c| from_unit(c, self.amplitude_bound))
                    .collect(),
                rotation: from_unit(b[self.n_hh], self.rotation_bound),
                shift_axial: from_unit(b[self.n_hh + 1], self.shift_bound),
                shift_tangential: from_unit(b[self.n_hh + 2], self.shift_bound),
            });
        }
        let per_section: [SectionDeformation; 3] = match per_section.try_into() {
            Ok(arr) => arr,
            Err(_) => unreachable!("exactly three blocks"),
        };
        Ok(DeformationParams {
            per_section,
            basis: HicksHenneBasis::new(self.n_hh)?,
        })
    }

    /// Encodes physical deformation parameters into the unit cube.
    /// Fails if the basis count differs or any parameter exceeds its bound.
    pub fn encode(&self, params: &DeformationParams) -> Result<Vec<f64>, GeometryError> {
        if params.basis.count() != self.n_hh {
            return Err(GeometryError::AmplitudeCount {
                expected: self.n_hh,
                got: params.basis.count(),
            });
        }
        params.validate()?;
        let to_unit = |p: f64, bound: f64| p / (2.0 * bound) + 0.5;
        let mut vector = Vec::with_capacity(self.dimension());
        for d in &params.per_section {
            vector.extend(d.amplitudes.iter().map(|&a| to_unit(a, self.amplitude_bound)));
            vector.push(to_unit(d.rotation, self.rotation_bound));
            vector.push(to_unit(d.shift_axial, self.shift_bound));
            vector.push(to_unit(d.shift_tangential, self.shift_bound));
        }
        if let Some((index, &value)) = vector
            .iter()
            .enumerate()
            .find(|(_, &c)| !(c.is_finite() && (0.0..=1.0).contains(&c)))
        {
            return Err(GeometryError::ComponentOutOfRange { index, value });
        }
        Ok(vector)
    }

    /// The identity-deformation vector `0.5·1`.
    pub fn identity_vector(&self) -> Vec<f64> {
        alloc::vec![0.5; self.dimension()]
    }
}
