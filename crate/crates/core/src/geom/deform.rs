//! Deformation of sections and blades from search parameters.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::blade::BladeGeometry;
use super::hicks_henne::HicksHenneBasis;
use super::section::AirfoilSection;
use super::{GeometryError, Point2};

/// The degrees of freedom of one control section: Hicks-Henne amplitudes
/// (meters, along the local outward normal), a rotation about the leading
/// edge (radians), and two in-plane shifts (meters).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SectionDeformation {
    /// One amplitude per basis function.
    pub amplitudes: Vec<f64>,
    /// Rotation about the leading-edge point, counterclockwise.
    pub rotation: f64,
    /// Shift along the axial (`u`) direction.
    pub shift_axial: f64,
    /// Shift along the tangential (`v`) direction.
    pub shift_tangential: f64,
}

impl SectionDeformation {
    /// The identity deformation for an `n_hh`-function basis.
    pub fn identity(n_hh: usize) -> Self {
        SectionDeformation {
            amplitudes: vec![0.0; n_hh],
            rotation: 0.0,
            shift_axial: 0.0,
            shift_tangential: 0.0,
        }
    }

    /// True when applying this deformation would change nothing.
    pub fn is_identity(&self) -> bool {
        self.rotation == 0.0
            && self.shift_axial == 0.0
            && self.shift_tangential == 0.0
            && self.amplitudes.iter().all(|&a| a == 0.0)
    }

    fn lerp(a: &SectionDeformation, b: &SectionDeformation, t: f64) -> SectionDeformation {
        SectionDeformation {
            amplitudes: a
                .amplitudes
                .iter()
                .zip(&b.amplitudes)
                .map(|(x, y)| x + t * (y - x))
                .collect(),
            rotation: a.rotation + t * (b.rotation - a.rotation),
            shift_axial: a.shift_axial + t * (b.shift_axial - a.shift_axial),
            shift_tangential: a.shift_tangential + t * (b.shift_tangential - a.shift_tangential),
        }
    }
}

/// Full blade deformation: one [`SectionDeformation`] per control section
/// (hub, mid, shroud order) plus the shared Hicks-Henne basis.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DeformationParams {
    /// Hub-near, mid-span, shroud-near deformations.
    pub per_section: [SectionDeformation; 3],
    /// Shared shape-function basis.
    pub basis: HicksHenneBasis,
}

impl DeformationParams {
    /// The identity deformation for an `n_hh`-function basis.
    pub fn identity(n_hh: usize) -> Result<Self, GeometryError> {
        Ok(DeformationParams {
            per_section: [
                SectionDeformation::identity(n_hh),
                SectionDeformation::identity(n_hh),
                SectionDeformation::identity(n_hh),
            ],
            basis: HicksHenneBasis::new(n_hh)?,
        })
    }

    /// Checks that every amplitude list matches the basis count.
    pub fn validate(&self) -> Result<(), GeometryError> {
        for d in &self.per_section {
            if d.amplitudes.len() != self.basis.count() {
                return Err(GeometryError::AmplitudeCount {
                    expected: self.basis.count(),
                    got: d.amplitudes.len(),
                });
            }
        }
        Ok(())
    }

    /// True when all three section deformations are the identity.
    pub fn is_identity(&self) -> bool {
        self.per_section.iter().all(|d| d.is_identity())
    }
}

/// Applies one section deformation: Hicks-Henne displacement along the
/// local outward normal, then rotation about the leading-edge point, then
/// translation. Chord params, radius and leading-edge index are untouched.
///
/// Each stage is skipped when its parameters are exactly zero, so the
/// identity deformation reproduces the input bit-exactly.
pub fn deform_section(
    section: &AirfoilSection,
    d: &SectionDeformation,
    basis: &HicksHenneBasis,
) -> Result<AirfoilSection, GeometryError> {
    if d.amplitudes.len() != basis.count() {
        return Err(GeometryError::AmplitudeCount {
            expected: basis.count(),
            got: d.amplitudes.len(),
        });
    }
    let mut points = section.points().to_vec();

    if d.amplitudes.iter().any(|&a| a != 0.0) {
        let normals = section.outward_normals();
        for ((p, n), &x) in points.iter_mut().zip(&normals).zip(section.chord_params()) {
            let disp = basis.displacement(x, &d.amplitudes)?;
            *p = *p + n.scale(disp);
        }
    }

    if d.rotation != 0.0 {
        // The leading edge does not move under amplitude displacement
        // (b(0) = 0), so rotating about the original anchor is exact.
        let anchor = section.leading_edge_point();
        for p in points.iter_mut() {
            *p = anchor + (*p - anchor).rotate(d.rotation);
        }
    }

    if d.shift_axial != 0.0 || d.shift_tangential != 0.0 {
        let shift = Point2::new(d.shift_axial, d.shift_tangential);
        for p in points.iter_mut() {
            *p = *p + shift;
        }
    }

    AirfoilSection::new(
        points,
        section.radius(),
        section.leading_edge(),
        section.chord_params().to_vec(),
    )
}

/// Builds the deformed blade: the three control sections receive their own
/// deformation; every other section receives the deformation linearly
/// interpolated in span fraction between its enclosing control sections
/// (per-point displacement field, rotation, and shifts all interpolate
/// because displacement is linear in the amplitudes). Sections outside the
/// hub/shroud control span get the nearest control deformation unchanged.
pub fn build_blade(
    baseline: &BladeGeometry,
    params: &DeformationParams,
) -> Result<BladeGeometry, GeometryError> {
    params.validate()?;
    let [ci_hub, ci_mid, ci_shroud] = baseline.control_indices();
    let spans = baseline.span_fractions();
    let controls = [
        (ci_hub, &params.per_section[0]),
        (ci_mid, &params.per_section[1]),
        (ci_shroud, &params.per_section[2]),
    ];

    let mut sections = Vec::with_capacity(baseline.section_count());
    for (idx, section) in baseline.sections().iter().enumerate() {
        let d = if let Some((_, d)) = controls.iter().find(|(ci, _)| *ci == idx) {
            (*d).clone()
        } else {
            let s = spans[idx];
            if s <= spans[ci_hub] {
                params.per_section[0].clone()
            } else if s >= spans[ci_shroud] {
                params.per_section[2].clone()
            } else {
                // between two adjacent control sections
                let (lo, hi, d_lo, d_hi) = if s < spans[ci_mid] {
                    (spans[ci_hub], spans[ci_mid], &params.per_section[0], &params.per_section[1])
                } else {
                    (spans[ci_mid], spans[ci_shroud], &params.per_section[1], &params.per_section[2])
                };
                let t = (s - lo) / (hi - lo);
                SectionDeformation::lerp(d_lo, d_hi, t)
            }
        };
        sections.push(deform_section(section, &d, &params.basis)?);
    }

    BladeGeometry::new(sections, baseline.control_indices(), spans.to_vec()).map_err(|e| {
        GeometryError::InvalidBlade(format!("deformed blade failed validation: {e}"))
    })
}
