//! A single airfoil section: one closed 2D point loop of a cylindrical cut.

use alloc::format;
use alloc::vec::Vec;

use super::{GeometryError, Point2};

/// One cylindrical cut of the blade, as an ordered closed point loop.
///
/// The loop is implicit: the last point connects back to the first. Every
/// point carries a normalized chord position in `[0, 1]` — exactly `0` at
/// the leading-edge point and `1` at the trailing-edge point — which is
/// how Hicks-Henne bumps find their argument after arbitrary rigid
/// motions of the section.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AirfoilSection {
    points: Vec<Point2>,
    radius: f64,
    leading_edge: usize,
    chord_params: Vec<f64>,
}

impl AirfoilSection {
    /// Builds a section and checks its structural invariants.
    ///
    /// Required: ≥ 3 points, chord params of matching length inside
    /// `[0, 1]` with `0` exactly at `leading_edge` and `1` present at some
    /// point (the trailing edge), and a strictly positive radius.
    pub fn new(
        points: Vec<Point2>,
        radius: f64,
        leading_edge: usize,
        chord_params: Vec<f64>,
    ) -> Result<Self, GeometryError> {
        if points.len() < 3 {
            return Err(GeometryError::InvalidSection(format!(
                "need at least 3 points, got {}",
                points.len()
            )));
        }
        if chord_params.len() != points.len() {
            return Err(GeometryError::InvalidSection(format!(
                "{} chord params for {} points",
                chord_params.len(),
                points.len()
            )));
        }
        if leading_edge >= points.len() {
            return Err(GeometryError::InvalidSection(format!(
                "leading-edge index {} out of bounds for {} points",
                leading_edge,
                points.len()
            )));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(GeometryError::InvalidSection(format!("radius {radius} must be positive")));
        }
        for (i, &x) in chord_params.iter().enumerate() {
            if !(x.is_finite() && (0.0..=1.0).contains(&x)) {
                return Err(GeometryError::InvalidSection(format!(
                    "chord param {x} at point {i} outside [0,1]"
                )));
            }
        }
        if chord_params[leading_edge] != 0.0 {
            return Err(GeometryError::InvalidSection(format!(
                "chord param at leading edge is {}, expected 0",
                chord_params[leading_edge]
            )));
        }
        if !chord_params.iter().any(|&x| x == 1.0) {
            return Err(GeometryError::InvalidSection(
                "no trailing-edge point (chord param 1) found".into(),
            ));
        }
        for (i, p) in points.iter().enumerate() {
            if !(p.u.is_finite() && p.v.is_finite()) {
                return Err(GeometryError::InvalidSection(format!("non-finite point at index {i}")));
            }
        }
        Ok(AirfoilSection {
            points,
            radius,
            leading_edge,
            chord_params,
        })
    }

    /// Point loop in order.
    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    /// Cylindrical cut radius in meters.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Index of the leading-edge point.
    pub fn leading_edge(&self) -> usize {
        self.leading_edge
    }

    /// Leading-edge point.
    pub fn leading_edge_point(&self) -> Point2 {
        self.points[self.leading_edge]
    }

    /// Per-point normalized chord positions.
    pub fn chord_params(&self) -> &[f64] {
        &self.chord_params
    }

    /// Index of the trailing-edge point (first point with chord param 1).
    pub fn trailing_edge(&self) -> usize {
        self.chord_params
            .iter()
            .position(|&x| x == 1.0)
            .expect("validated at construction")
    }

    /// Chord length: distance from leading- to trailing-edge point.
    pub fn chord_length(&self) -> f64 {
        self.leading_edge_point().distance(self.points[self.trailing_edge()])
    }

    /// Number of points in the loop.
    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// Twice the signed loop area (shoelace); positive for counterclockwise.
    pub fn signed_area_doubled(&self) -> f64 {
        let n = self.points.len();
        let mut acc = 0.0;
        for i in 0..n {
            let p = self.points[i];
            let q = self.points[(i + 1) % n];
            acc += p.u * q.v - q.u * p.v;
        }
        acc
    }

    /// Outward unit normal at every point.
    ///
    /// The normal is the perpendicular of the averaged adjacent segment
    /// directions, oriented outward using the loop winding. At degenerate
    /// corners where the two segments fold back onto each other (sharp
    /// leading/trailing edges) the perpendicular of the outgoing segment
    /// is used instead; Hicks-Henne displacement vanishes there anyway.
    pub fn outward_normals(&self) -> Vec<Point2> {
        let n = self.points.len();
        // CCW loop: interior on the left of travel, so outward is the
        // right-hand perpendicular. CW: the opposite.
        let ccw = self.signed_area_doubled() >= 0.0;
        let mut normals = Vec::with_capacity(n);
        for i in 0..n {
            let prev = self.points[(i + n - 1) % n];
            let here = self.points[i];
            let next = self.points[(i + 1) % n];
            let d1 = unit_or_zero(here - prev);
            let d2 = unit_or_zero(next - here);
            let mut tangent = d1 + d2;
            if tangent.norm() < 1e-9 {
                tangent = if d2.norm() > 0.0 { d2 } else { d1 };
            }
            let t = unit_or_zero(tangent);
            let perp = if ccw {
                Point2::new(t.v, -t.u)
            } else {
                Point2::new(-t.v, t.u)
            };
            normals.push(perp);
        }
        normals
    }
}

fn unit_or_zero(p: Point2) -> Point2 {
    let n = p.norm();
    if n > 0.0 {
        p.scale(1.0 / n)
    } else {
        Point2::new(0.0, 0.0)
    }
}
