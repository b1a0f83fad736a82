//! Blade geometry: stacked cylindrical sections and their deformation.
//!
//! A blade is a stack of [`AirfoilSection`]s ordered hub→shroud. Each
//! section is a closed 2D point loop in its own cut plane, with coordinates
//! `(u, v)` in meters: `u` chordwise/axial, `v` tangential (circumferential
//! arc length at the section radius). Three control sections are deformed
//! independently — Hicks-Henne profile bumps along the local surface
//! normal, a rotation about the leading edge, and two in-plane shifts —
//! and every other section receives the linearly interpolated deformation.
//!
//! All operations are pure: they take geometry in and return new geometry.

mod baseline;
mod blade;
mod deform;
mod feasibility;
mod hicks_henne;
mod section;
mod space;

pub use baseline::{synthetic_baseline, SyntheticBladeConfig};
pub use blade::{geometry_diff, geometry_distance, section_points_3d, BladeGeometry};
pub use deform::{build_blade, deform_section, DeformationParams, SectionDeformation};
pub use feasibility::{check_feasibility, check_feasibility_with, FeasibilityLimits, Violation};
pub use hicks_henne::{basis_maxima, hicks_henne, search_dimension, HicksHenneBasis};
pub use section::AirfoilSection;
pub use space::SearchSpace;

use alloc::string::String;
use core::fmt;

/// Errors from geometry construction and operations.
#[derive(Debug, Clone, PartialEq)]
pub enum GeometryError {
    /// `hicks_henne` called outside its domain (`x ∉ [0,1]` or `x0 ∉ (0,1)`).
    HicksHenneDomain {
        /// Offending chord position.
        x: f64,
        /// Offending maximum location.
        x0: f64,
    },
    /// A Hicks-Henne basis must contain at least one shape function.
    EmptyBasis,
    /// Amplitude list length does not match the basis count.
    AmplitudeCount {
        /// Basis count.
        expected: usize,
        /// Amplitudes supplied.
        got: usize,
    },
    /// Search vector length does not match the search dimension.
    VectorLength {
        /// Expected dimension.
        expected: usize,
        /// Length supplied.
        got: usize,
    },
    /// Normalized search-vector component outside `[0, 1]`.
    ComponentOutOfRange {
        /// Component index.
        index: usize,
        /// Offending value.
        value: f64,
    },
    /// Two blades do not share section/point topology.
    TopologyMismatch(String),
    /// Section-level structural invariant violated.
    InvalidSection(String),
    /// Blade-level structural invariant violated.
    InvalidBlade(String),
    /// Degenerate or out-of-range configuration.
    InvalidConfig(String),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::HicksHenneDomain { x, x0 } => {
                write!(f, "hicks_henne domain violation: x={x}, x0={x0} (need x in [0,1], x0 in (0,1))")
            }
            GeometryError::EmptyBasis => write!(f, "Hicks-Henne basis needs at least one function"),
            GeometryError::AmplitudeCount { expected, got } => {
                write!(f, "amplitude count {got} does not match basis count {expected}")
            }
            GeometryError::VectorLength { expected, got } => {
                write!(f, "search vector length {got}, expected {expected}")
            }
            GeometryError::ComponentOutOfRange { index, value } => {
                write!(f, "search vector component {index} = {value} outside [0,1]")
            }
            GeometryError::TopologyMismatch(msg) => write!(f, "topology mismatch: {msg}"),
            GeometryError::InvalidSection(msg) => write!(f, "invalid section: {msg}"),
            GeometryError::InvalidBlade(msg) => write!(f, "invalid blade: {msg}"),
            GeometryError::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl core::error::Error for GeometryError {}

/// 2D point/vector in section-local coordinates (meters).
///
/// `u` is the chordwise/axial direction, `v` the tangential direction of
/// the unrolled cylindrical cut.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Point2 {
    /// Chordwise / axial coordinate.
    pub u: f64,
    /// Tangential coordinate.
    pub v: f64,
}

impl Point2 {
    /// Creates a point from its coordinates.
    pub const fn new(u: f64, v: f64) -> Self {
        Point2 { u, v }
    }

    /// Vector addition.
    pub fn add(self, other: Point2) -> Point2 {
        Point2::new(self.u + other.u, self.v + other.v)
    }

    /// Vector subtraction.
    pub fn sub(self, other: Point2) -> Point2 {
        Point2::new(self.u - other.u, self.v - other.v)
    }

    /// Scalar multiplication.
    pub fn scale(self, s: f64) -> Point2 {
        Point2::new(self.u * s, self.v * s)
    }

    /// Dot product.
    pub fn dot(self, other: Point2) -> f64 {
        self.u * other.u + self.v * other.v
    }

    /// Euclidean norm.
    pub fn norm(self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    /// Euclidean distance to `other`.
    pub fn distance(self, other: Point2) -> f64 {
        self.sub(other).norm()
    }

    /// Rotation by `angle` radians about the origin (counterclockwise).
    pub fn rotate(self, angle: f64) -> Point2 {
        let (s, c) = (libm::sin(angle), libm::cos(angle));
        Point2::new(c * self.u - s * self.v, s * self.u + c * self.v)
    }
}

impl core::ops::Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::add(self, rhs)
    }
}

impl core::ops::Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::sub(self, rhs)
    }
}

impl core::ops::Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Point2 {
        self.scale(rhs)
    }
}
