//! Deterministic synthetic baseline blade.
//!
//! Stands in for the proprietary fan geometry the pipeline would normally
//! start from: cambered four-digit-style sections stacked hub→shroud with
//! linear twist. The same configuration always yields the bit-identical
//! blade, and the default is feasible by construction.

use alloc::format;
use alloc::vec::Vec;

use super::blade::BladeGeometry;
use super::section::AirfoilSection;
use super::{GeometryError, Point2};

/// Parameters of the synthetic baseline generator.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SyntheticBladeConfig {
    /// Number of stacked sections (≥ 3).
    pub sections: usize,
    /// Points per section loop (≥ 20).
    pub points_per_section: usize,
    /// Cut radius of the hub section, meters.
    pub hub_radius: f64,
    /// Cut radius of the tip section, meters (> hub_radius).
    pub tip_radius: f64,
    /// Chord length, meters.
    pub chord: f64,
    /// Maximum profile thickness as a fraction of chord.
    pub thickness: f64,
    /// Maximum camber as a fraction of chord.
    pub camber: f64,
    /// Chordwise position of maximum camber in (0, 1).
    pub camber_position: f64,
    /// Section twist at the hub, radians.
    pub twist_hub: f64,
    /// Section twist at the tip, radians.
    pub twist_tip: f64,
}

impl Default for SyntheticBladeConfig {
    fn default() -> Self {
        SyntheticBladeConfig {
            sections: 11,
            points_per_section: 100,
            hub_radius: 0.10,
            tip_radius: 0.35,
            chord: 0.08,
            thickness: 0.08,
            camber: 0.04,
            camber_position: 0.4,
            twist_hub: 0.30,
            twist_tip: 0.75,
        }
    }
}

impl SyntheticBladeConfig {
    fn validate(&self) -> Result<(), GeometryError> {
        let bad = |msg: alloc::string::String| Err(GeometryError::InvalidConfig(msg));
        if self.sections < 3 {
            return bad(format!("need at least 3 sections, got {}", self.sections));
        }
        if self.points_per_section < 20 {
            return bad(format!(
                "need at least 20 points per section, got {}",
                self.points_per_section
            ));
        }
        if !(self.hub_radius.is_finite() && self.hub_radius > 0.0) {
            return bad(format!("hub radius {} must be positive", self.hub_radius));
        }
        if !(self.tip_radius.is_finite() && self.tip_radius > self.hub_radius) {
            return bad(format!(
                "tip radius {} must exceed hub radius {}",
                self.tip_radius, self.hub_radius
            ));
        }
        if !(self.chord.is_finite() && self.chord > 0.0) {
            return bad(format!("chord {} must be positive", self.chord));
        }
        if !(self.thickness > 0.0 && self.thickness < 0.5) {
            return bad(format!("thickness ratio {} outside (0, 0.5)", self.thickness));
        }
        if !(self.camber >= 0.0 && self.camber < 0.5) {
            return bad(format!("camber ratio {} outside [0, 0.5)", self.camber));
        }
        if !(self.camber_position > 0.0 && self.camber_position < 1.0) {
            return bad(format!("camber position {} outside (0, 1)", self.camber_position));
        }
        if !(self.twist_hub.is_finite() && self.twist_tip.is_finite()) {
            return bad("twist angles must be finite".into());
        }
        Ok(())
    }
}

/// Generates the synthetic baseline blade for `cfg`.
pub fn synthetic_baseline(cfg: &SyntheticBladeConfig) -> Result<BladeGeometry, GeometryError> {
    cfg.validate()?;
    let n_sections = cfg.sections;
    let mut sections = Vec::with_capacity(n_sections);
    let mut span_fractions = Vec::with_capacity(n_sections);
    for i in 0..n_sections {
        let s = i as f64 / (n_sections - 1) as f64;
        let radius = cfg.hub_radius + (cfg.tip_radius - cfg.hub_radius) * s;
        let twist = cfg.twist_hub + (cfg.twist_tip - cfg.twist_hub) * s;
        sections.push(make_section(cfg, radius, twist)?);
        span_fractions.push(s);
    }
    // exact endpoints regardless of rounding in the loop above
    span_fractions[0] = 0.0;
    *span_fractions.last_mut().unwrap() = 1.0;
    BladeGeometry::new(sections, control_indices(n_sections), span_fractions)
}

/// Control sections: one close to the hub, one mid-span, one close to the
/// shroud. For very short stacks the ends themselves are used.
fn control_indices(n_sections: usize) -> [usize; 3] {
    let hub = if n_sections >= 5 { 1 } else { 0 };
    let shroud = if n_sections >= 5 { n_sections - 2 } else { n_sections - 1 };
    let mid = (hub + shroud) / 2;
    [hub, mid.max(hub + 1).min(shroud - 1), shroud]
}

fn make_section(
    cfg: &SyntheticBladeConfig,
    radius: f64,
    twist: f64,
) -> Result<AirfoilSection, GeometryError> {
    let n = cfg.points_per_section;
    let interior = n - 2;
    let n_upper = interior.div_ceil(2);
    let n_lower = interior - n_upper;

    let mut stations: Vec<(f64, bool)> = Vec::with_capacity(n); // (x, upper side)
    stations.push((1.0, true)); // trailing edge
    for j in 1..=n_upper {
        // cosine spacing, descending from near 1 to near 0
        let x = 0.5 * (1.0 + libm::cos(core::f64::consts::PI * j as f64 / (n_upper + 1) as f64));
        stations.push((x, true));
    }
    stations.push((0.0, true)); // leading edge
    for j in 1..=n_lower {
        let x = 0.5 * (1.0 - libm::cos(core::f64::consts::PI * j as f64 / (n_lower + 1) as f64));
        stations.push((x, false));
    }
    let leading_edge = 1 + n_upper;

    let mut points = Vec::with_capacity(n);
    let mut chord_params = Vec::with_capacity(n);
    for &(x, upper) in &stations {
        let y = if x == 0.0 || x == 1.0 {
            // closed leading and trailing edges sit on the chord line
            camber_line(cfg, x)
        } else if upper {
            camber_line(cfg, x) + half_thickness(cfg, x)
        } else {
            camber_line(cfg, x) - half_thickness(cfg, x)
        };
        let p = Point2::new(x * cfg.chord, y * cfg.chord);
        points.push(if twist != 0.0 { p.rotate(twist) } else { p });
        chord_params.push(x);
    }
    AirfoilSection::new(points, radius, leading_edge, chord_params)
}

/// Four-digit-style camber line.
fn camber_line(cfg: &SyntheticBladeConfig, x: f64) -> f64 {
    let m = cfg.camber;
    let p = cfg.camber_position;
    if m == 0.0 {
        0.0
    } else if x < p {
        m / (p * p) * (2.0 * p * x - x * x)
    } else {
        m / ((1.0 - p) * (1.0 - p)) * ((1.0 - 2.0 * p) + 2.0 * p * x - x * x)
    }
}

/// Four-digit-style half thickness with the closed-trailing-edge
/// coefficient (−0.1036) so the loop closes exactly.
fn half_thickness(cfg: &SyntheticBladeConfig, x: f64) -> f64 {
    let t = cfg.thickness;
    5.0 * t
        * (0.2969 * libm::sqrt(x) - 0.1260 * x - 0.3516 * x * x + 0.2843 * x * x * x
            - 0.1036 * x * x * x * x)
}

#[cfg(test)]
mod tests {
    use super::super::feasibility::check_feasibility;
    use super::*;

    #[test]
    fn same_config_yields_bit_identical_blades() {
        let cfg = SyntheticBladeConfig::default();
        let a = synthetic_baseline(&cfg).unwrap();
        let b = synthetic_baseline(&cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn default_blade_is_feasible() {
        let blade = synthetic_baseline(&SyntheticBladeConfig::default()).unwrap();
        assert!(check_feasibility(&blade).is_empty());
    }

    #[test]
    fn radii_strictly_increase_hub_to_tip() {
        let blade = synthetic_baseline(&SyntheticBladeConfig::default()).unwrap();
        let radii: Vec<f64> = blade.sections().iter().map(|s| s.radius()).collect();
        assert!(radii.windows(2).all(|w| w[1] > w[0]), "radii not increasing: {radii:?}");
        assert_eq!(radii[0], 0.10);
        assert_eq!(*radii.last().unwrap(), 0.35);
    }

    #[test]
    fn degenerate_configs_are_rejected() {
        let mut cfg = SyntheticBladeConfig::default();
        cfg.chord = 0.0;
        assert!(synthetic_baseline(&cfg).is_err());
        let mut cfg = SyntheticBladeConfig::default();
        cfg.tip_radius = cfg.hub_radius;
        assert!(synthetic_baseline(&cfg).is_err());
        let mut cfg = SyntheticBladeConfig::default();
        cfg.sections = 2;
        assert!(synthetic_baseline(&cfg).is_err());
        let mut cfg = SyntheticBladeConfig::default();
        cfg.points_per_section = 10;
        assert!(synthetic_baseline(&cfg).is_err());
    }

    #[test]
    fn leading_edge_anchor_and_chord_params_are_consistent() {
        for points in [20usize, 21, 100, 101] {
            let cfg = SyntheticBladeConfig {
                points_per_section: points,
                ..SyntheticBladeConfig::default()
            };
            let blade = synthetic_baseline(&cfg).unwrap();
            for s in blade.sections() {
                assert_eq!(s.point_count(), points);
                assert_eq!(s.chord_params()[s.leading_edge()], 0.0);
                assert_eq!(s.chord_params()[s.trailing_edge()], 1.0);
                assert_eq!(s.trailing_edge(), 0);
                // chord length close to the configured chord (camber keeps
                // LE and TE on the chord line, twist is rigid)
                assert!((s.chord_length() - cfg.chord).abs() < 1e-12 * cfg.chord);
            }
        }
    }

    #[test]
    fn control_indices_follow_stack_size() {
        assert_eq!(control_indices(3), [0, 1, 2]);
        assert_eq!(control_indices(4), [0, 1, 3]);
        assert_eq!(control_indices(5), [1, 2, 3]);
        assert_eq!(control_indices(11), [1, 5, 9]);
        for n in 3..40 {
            let [h, m, s] = control_indices(n);
            assert!(h < m && m < s && s < n, "bad controls for {n} sections");
        }
    }
}
