//! Geometric feasibility: self-intersection and minimum-thickness checks.

use alloc::vec::Vec;

use super::blade::BladeGeometry;
use super::section::AirfoilSection;
use super::Point2;

/// Thresholds for [`check_feasibility_with`].
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FeasibilityLimits {
    /// Minimum profile thickness as a fraction of the section chord.
    pub min_thickness_rel: f64,
}

impl Default for FeasibilityLimits {
    fn default() -> Self {
        FeasibilityLimits {
            min_thickness_rel: 1e-3,
        }
    }
}

/// One detected feasibility violation.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Violation {
    /// Two non-adjacent segments of a section loop cross.
    SelfIntersection {
        /// Section index in the blade stack.
        section: usize,
        /// First segment index (segment i connects point i to i+1).
        segment_a: usize,
        /// Second segment index.
        segment_b: usize,
    },
    /// Profile thickness fell below the minimum at some chord station.
    ThinProfile {
        /// Section index in the blade stack.
        section: usize,
        /// Chord station where the violation was measured.
        chord_station: f64,
        /// Measured thickness in meters.
        thickness: f64,
        /// Threshold in meters (min_thickness_rel × chord).
        min_thickness: f64,
    },
}

/// Chord stations probed by the thickness check. The ends are excluded:
/// a closed trailing edge legitimately tapers to zero thickness.
const THICKNESS_STATIONS: usize = 24;
const STATION_LO: f64 = 0.03;
const STATION_HI: f64 = 0.92;

/// Checks every section with default limits; an empty list means feasible.
pub fn check_feasibility(blade: &BladeGeometry) -> Vec<Violation> {
    check_feasibility_with(blade, &FeasibilityLimits::default())
}

/// Checks every section for loop self-intersection and thin profiles.
pub fn check_feasibility_with(blade: &BladeGeometry, limits: &FeasibilityLimits) -> Vec<Violation> {
    let mut violations = Vec::new();
    for (idx, section) in blade.sections().iter().enumerate() {
        find_self_intersections(idx, section, &mut violations);
        find_thin_stations(idx, section, limits, &mut violations);
    }
    violations
}

fn find_self_intersections(idx: usize, section: &AirfoilSection, out: &mut Vec<Violation>) {
    let pts = section.points();
    let n = pts.len();
    for a in 0..n {
        let (a0, a1) = (pts[a], pts[(a + 1) % n]);
        for b in a + 2..n {
            // skip the wrap-around pair adjacent through the loop closure
            if a == 0 && b == n - 1 {
                continue;
            }
            let (b0, b1) = (pts[b], pts[(b + 1) % n]);
            if segments_cross(a0, a1, b0, b1) {
                out.push(Violation::SelfIntersection {
                    section: idx,
                    segment_a: a,
                    segment_b: b,
                });
            }
        }
    }
}

/// Proper segment intersection via orientation signs. Shared endpoints are
/// excluded by construction (only non-adjacent segments are tested), so a
/// vanishing orientation is treated as a crossing only when the segments
/// genuinely overlap.
fn segments_cross(a0: Point2, a1: Point2, b0: Point2, b1: Point2) -> bool {
    let d1 = cross(b1 - b0, a0 - b0);
    let d2 = cross(b1 - b0, a1 - b0);
    let d3 = cross(a1 - a0, b0 - a0);
    let d4 = cross(a1 - a0, b1 - a0);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    // collinear touches
    (d1 == 0.0 && on_segment(b0, b1, a0))
        || (d2 == 0.0 && on_segment(b0, b1, a1))
        || (d3 == 0.0 && on_segment(a0, a1, b0))
        || (d4 == 0.0 && on_segment(a0, a1, b1))
}

fn cross(a: Point2, b: Point2) -> f64 {
    a.u * b.v - a.v * b.u
}

fn on_segment(s0: Point2, s1: Point2, p: Point2) -> bool {
    p.u >= s0.u.min(s1.u) && p.u <= s0.u.max(s1.u) && p.v >= s0.v.min(s1.v) && p.v <= s0.v.max(s1.v)
}

fn find_thin_stations(
    idx: usize,
    section: &AirfoilSection,
    limits: &FeasibilityLimits,
    out: &mut Vec<Violation>,
) {
    let min_thickness = limits.min_thickness_rel * section.chord_length();
    for k in 0..THICKNESS_STATIONS {
        let x = STATION_LO + (STATION_HI - STATION_LO) * k as f64 / (THICKNESS_STATIONS - 1) as f64;
        if let Some(thickness) = thickness_at(section, x) {
            if thickness < min_thickness {
                out.push(Violation::ThinProfile {
                    section: idx,
                    chord_station: x,
                    thickness,
                    min_thickness,
                });
            }
        }
    }
}

/// Profile thickness at chord station `x`: the loop splits at the leading
/// and trailing edges into two chains with monotone chord params; the
/// thickness is the distance between the chain points interpolated at `x`.
/// Chord params survive deformation unchanged, so this pairing is stable
/// no matter how the section has been displaced.
fn thickness_at(section: &AirfoilSection, x: f64) -> Option<f64> {
    let le = section.leading_edge();
    let te = section.trailing_edge();
    let n = section.point_count();
    let walk = |from: usize, to: usize, step_back: bool| -> Option<Point2> {
        // walk the loop from `from` to `to` (forward or backward), looking
        // for a pair of consecutive points bracketing chord param x
        let mut i = from;
        loop {
            let j = if step_back { (i + n - 1) % n } else { (i + 1) % n };
            let (xi, xj) = (section.chord_params()[i], section.chord_params()[j]);
            if (xi - x) * (xj - x) <= 0.0 && xi != xj {
                let t = (x - xi) / (xj - xi);
                let (pi, pj) = (section.points()[i], section.points()[j]);
                return Some(pi + (pj - pi).scale(t));
            }
            if j == to {
                return None;
            }
            i = j;
        }
    };
    let side_a = walk(te, le, false)?;
    let side_b = walk(te, le, true)?;
    Some(side_a.distance(side_b))
}
