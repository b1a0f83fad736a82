//! Blade geometry: a hub→shroud stack of sections with three control cuts.

use alloc::format;
use alloc::vec::Vec;

use super::section::AirfoilSection;
use super::{GeometryError, Point2};

/// A blade as stacked cylindrical sections plus the indices of the three
/// independently deformable control sections (hub-near, mid-span,
/// shroud-near).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BladeGeometry {
    sections: Vec<AirfoilSection>,
    control_indices: [usize; 3],
    span_fractions: Vec<f64>,
}

impl BladeGeometry {
    /// Builds a blade and checks the stack invariants: ≥ 3 sections with
    /// identical point counts, strictly increasing control indices in
    /// bounds, and span fractions strictly increasing from 0 to 1.
    pub fn new(
        sections: Vec<AirfoilSection>,
        control_indices: [usize; 3],
        span_fractions: Vec<f64>,
    ) -> Result<Self, GeometryError> {
        if sections.len() < 3 {
            return Err(GeometryError::InvalidBlade(format!(
                "need at least 3 sections, got {}",
                sections.len()
            )));
        }
        let point_count = sections[0].point_count();
        if let Some((i, s)) = sections
            .iter()
            .enumerate()
            .find(|(_, s)| s.point_count() != point_count)
        {
            return Err(GeometryError::InvalidBlade(format!(
                "section {i} has {} points, expected {point_count}",
                s.point_count()
            )));
        }
        if span_fractions.len() != sections.len() {
            return Err(GeometryError::InvalidBlade(format!(
                "{} span fractions for {} sections",
                span_fractions.len(),
                sections.len()
            )));
        }
        if span_fractions[0] != 0.0 || *span_fractions.last().unwrap() != 1.0 {
            return Err(GeometryError::InvalidBlade(
                "span fractions must start at 0 and end at 1".into(),
            ));
        }
        if span_fractions.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(GeometryError::InvalidBlade(
                "span fractions must be strictly increasing".into(),
            ));
        }
        let [h, m, s] = control_indices;
        if !(h < m && m < s) || s >= sections.len() {
            return Err(GeometryError::InvalidBlade(format!(
                "control indices {control_indices:?} must be strictly increasing and in bounds"
            )));
        }
        Ok(BladeGeometry {
            sections,
            control_indices,
            span_fractions,
        })
    }

    /// Sections ordered hub→shroud.
    pub fn sections(&self) -> &[AirfoilSection] {
        &self.sections
    }

    /// Hub-near, mid-span, shroud-near control section indices.
    pub fn control_indices(&self) -> [usize; 3] {
        self.control_indices
    }

    /// Per-section normalized span positions in `[0, 1]`.
    pub fn span_fractions(&self) -> &[f64] {
        &self.span_fractions
    }

    /// Number of sections.
    pub fn section_count(&self) -> usize {
        self.sections.len()
    }

    /// Points per section.
    pub fn points_per_section(&self) -> usize {
        self.sections[0].point_count()
    }

    /// Total number of surface points.
    pub fn total_points(&self) -> usize {
        self.section_count() * self.points_per_section()
    }

    /// True when both blades have the same section and point counts.
    pub fn topology_matches(&self, other: &BladeGeometry) -> bool {
        self.section_count() == other.section_count()
            && self.points_per_section() == other.points_per_section()
    }

    fn require_topology(&self, other: &BladeGeometry) -> Result<(), GeometryError> {
        if self.topology_matches(other) {
            Ok(())
        } else {
            Err(GeometryError::TopologyMismatch(format!(
                "{}x{} vs {}x{} sections x points",
                self.section_count(),
                self.points_per_section(),
                other.section_count(),
                other.points_per_section()
            )))
        }
    }
}

/// Per-point displacement of `b` relative to `a`, projected on `a`'s
/// outward surface normals. Positive means outward. Returned per section,
/// in point order.
pub fn geometry_diff(a: &BladeGeometry, b: &BladeGeometry) -> Result<Vec<Vec<f64>>, GeometryError> {
    a.require_topology(b)?;
    let mut field = Vec::with_capacity(a.section_count());
    for (sa, sb) in a.sections().iter().zip(b.sections()) {
        let normals = sa.outward_normals();
        let row: Vec<f64> = sa
            .points()
            .iter()
            .zip(sb.points())
            .zip(&normals)
            .map(|((pa, pb), n)| (*pb - *pa).dot(*n))
            .collect();
        field.push(row);
    }
    Ok(field)
}

/// Root-mean-square Euclidean point displacement between two blades of
/// identical topology. Symmetric, zero iff the point sets coincide.
pub fn geometry_distance(a: &BladeGeometry, b: &BladeGeometry) -> Result<f64, GeometryError> {
    a.require_topology(b)?;
    let mut sum_sq = 0.0;
    for (sa, sb) in a.sections().iter().zip(b.sections()) {
        for (pa, pb) in sa.points().iter().zip(sb.points()) {
            let d = *pb - *pa;
            sum_sq += d.dot(d);
        }
    }
    Ok(libm::sqrt(sum_sq / a.total_points() as f64))
}

/// Embeds one section's 2D loop into 3D on its cylinder of radius `r`:
/// `u` is the axial coordinate and `v` the circumferential arc length, so
/// a point maps to `(r·cos(v/r), r·sin(v/r), u)`.
pub fn section_points_3d(section: &AirfoilSection) -> Vec<[f64; 3]> {
    let r = section.radius();
    section
        .points()
        .iter()
        .map(|p| {
            let phi = p.v / r;
            [r * libm::cos(phi), r * libm::sin(phi), p.u]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::baseline::{synthetic_baseline, SyntheticBladeConfig};
    use super::super::section::tests::unit_square_section;
    use super::*;
    use alloc::vec;

    fn translated(blade: &BladeGeometry, delta: Point2) -> BladeGeometry {
        let sections = blade
            .sections()
            .iter()
            .map(|s| {
                AirfoilSection::new(
                    s.points().iter().map(|p| *p + delta).collect(),
                    s.radius(),
                    s.leading_edge(),
                    s.chord_params().to_vec(),
                )
                .unwrap()
            })
            .collect();
        BladeGeometry::new(sections, blade.control_indices(), blade.span_fractions().to_vec())
            .unwrap()
    }

    #[test]
    fn construction_validates_stack() {
        let s = unit_square_section();
        let ok = BladeGeometry::new(
            vec![s.clone(), s.clone(), s.clone()],
            [0, 1, 2],
            vec![0.0, 0.5, 1.0],
        );
        assert!(ok.is_ok());
        // control indices not increasing
        assert!(BladeGeometry::new(
            vec![s.clone(), s.clone(), s.clone()],
            [0, 2, 2],
            vec![0.0, 0.5, 1.0]
        )
        .is_err());
        // bad span fractions
        assert!(BladeGeometry::new(
            vec![s.clone(), s.clone(), s.clone()],
            [0, 1, 2],
            vec![0.0, 0.5, 0.9]
        )
        .is_err());
        assert!(
            BladeGeometry::new(vec![s.clone(), s], [0, 1, 2], vec![0.0, 0.6, 1.0]).is_err(),
            "span count mismatch accepted"
        );
    }

    #[test]
    fn diff_of_identical_blades_is_zero() {
        let blade = synthetic_baseline(&SyntheticBladeConfig::default()).unwrap();
        let field = geometry_diff(&blade, &blade).unwrap();
        for row in field {
            for v in row {
                assert_eq!(v, 0.0);
            }
        }
    }

    #[test]
    fn diff_antisymmetric_under_translation() {
        let blade = synthetic_baseline(&SyntheticBladeConfig::default()).unwrap();
        let moved = translated(&blade, Point2::new(0.002, -0.001));
        let ab = geometry_diff(&blade, &moved).unwrap();
        let ba = geometry_diff(&moved, &blade).unwrap();
        // translation preserves normals, so the fields are exact negatives
        for (ra, rb) in ab.iter().zip(&ba) {
            for (x, y) in ra.iter().zip(rb) {
                assert!((x + y).abs() < 1e-12, "not antisymmetric: {x} vs {y}");
            }
        }
    }

    #[test]
    fn diff_recovers_normal_translation() {
        let blade = synthetic_baseline(&SyntheticBladeConfig::default()).unwrap();
        // translate along the normal of a specific interior point; the diff
        // there must equal the translation magnitude
        let sec = 2;
        let pt = 10;
        let n = blade.sections()[sec].outward_normals()[pt];
        let t = 3.5e-4;
        let moved = translated(&blade, n.scale(t));
        let field = geometry_diff(&blade, &moved).unwrap();
        assert!(
            (field[sec][pt] - t).abs() < 1e-15,
            "diff {} vs translation {t}",
            field[sec][pt]
        );
    }

    #[test]
    fn distance_of_uniform_translation_is_magnitude() {
        let blade = synthetic_baseline(&SyntheticBladeConfig::default()).unwrap();
        assert_eq!(geometry_distance(&blade, &blade).unwrap(), 0.0);
        let t = Point2::new(3e-3, -4e-3); // norm 5e-3
        let moved = translated(&blade, t);
        let d = geometry_distance(&blade, &moved).unwrap();
        assert!((d - 5e-3).abs() < 1e-15, "distance {d}");
        // symmetry
        assert_eq!(d, geometry_distance(&moved, &blade).unwrap());
    }

    #[test]
    fn topology_mismatch_is_rejected() {
        let blade = synthetic_baseline(&SyntheticBladeConfig::default()).unwrap();
        let mut cfg = SyntheticBladeConfig::default();
        cfg.points_per_section += 2;
        let other = synthetic_baseline(&cfg).unwrap();
        assert!(geometry_diff(&blade, &other).is_err());
        assert!(geometry_distance(&blade, &other).is_err());
    }

    #[test]
    fn embedding_preserves_radius_and_axial_coordinate() {
        let blade = synthetic_baseline(&SyntheticBladeConfig::default()).unwrap();
        let s = &blade.sections()[0];
        for (p2, p3) in s.points().iter().zip(section_points_3d(s)) {
            let r = libm::sqrt(p3[0] * p3[0] + p3[1] * p3[1]);
            assert!((r - s.radius()).abs() < 1e-12);
            assert_eq!(p3[2], p2.u);
        }
    }
}
