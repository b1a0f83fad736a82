//! Hicks-Henne shape functions and the search-space dimension law.

use alloc::vec::Vec;

use super::GeometryError;

/// Evaluates the Hicks-Henne bump `b(x, x0) = sin²(π·x^(log½ / log x0))`.
///
/// `x` is the normalized chord position in `[0, 1]`; `x0` in `(0, 1)` is
/// where the bump attains its unit maximum. The value is in `[0, 1]` and
/// vanishes at both chord ends, so leading and trailing edges stay fixed
/// under amplitude deformation.
pub fn hicks_henne(x: f64, x0: f64) -> Result<f64, GeometryError> {
    if !(x.is_finite() && (0.0..=1.0).contains(&x)) || !(x0.is_finite() && x0 > 0.0 && x0 < 1.0) {
        return Err(GeometryError::HicksHenneDomain { x, x0 });
    }
    let exponent = libm::log(0.5) / libm::log(x0);
    let s = libm::sin(core::f64::consts::PI * libm::pow(x, exponent));
    Ok(s * s)
}

/// Equally spaced bump maxima `x0(i) = i/(n+1)` for `i = 1..=n`.
pub fn basis_maxima(n: usize) -> Result<Vec<f64>, GeometryError> {
    if n == 0 {
        return Err(GeometryError::EmptyBasis);
    }
    Ok((1..=n).map(|i| i as f64 / (n + 1) as f64).collect())
}

/// Number of search variables for `n_hh` shape functions per section:
/// three control sections, each with `n_hh` amplitudes plus rotation and
/// two shifts, giving `3·(n_hh + 3)`.
pub fn search_dimension(n_hh: usize) -> usize {
    3 * (n_hh + 3)
}

/// A fixed set of Hicks-Henne shape functions shared by all sections.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HicksHenneBasis {
    count: usize,
    maxima: Vec<f64>,
}

impl HicksHenneBasis {
    /// Builds the basis with `count` equally spaced maxima.
    pub fn new(count: usize) -> Result<Self, GeometryError> {
        Ok(HicksHenneBasis {
            count,
            maxima: basis_maxima(count)?,
        })
    }

    /// Number of shape functions.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Maxima locations, strictly increasing in `(0, 1)`.
    pub fn maxima(&self) -> &[f64] {
        &self.maxima
    }

    /// Sum of all bumps scaled by `amplitudes` at chord position `x`.
    pub fn displacement(&self, x: f64, amplitudes: &[f64]) -> Result<f64, GeometryError> {
        if amplitudes.len() != self.count {
            return Err(GeometryError::AmplitudeCount {
                expected: self.count,
                got: amplitudes.len(),
            });
        }
        let mut sum = 0.0;
        for (&a, &x0) in amplitudes.iter().zip(&self.maxima) {
            sum += a * hicks_henne(x, x0)?;
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    // High-precision reference for b(0.3, 0.25), computed independently
    // with 40-digit arithmetic: exponent = log(0.5)/log(0.25) = 1/2, so
    // b = sin²(π·√0.3).
    const B_03_025: f64 = 0.9776904516259320761595421704608850451323;

    #[test]
    fn unit_maximum_at_x0() {
        let b = hicks_henne(0.5, 0.5).unwrap();
        assert!((b - 1.0).abs() < 1e-12, "b(0.5,0.5) = {b}");
    }

    #[test]
    fn vanishes_at_chord_ends() {
        for &x0 in &[0.1, 0.3, 0.5, 0.9] {
            assert!(hicks_henne(0.0, x0).unwrap().abs() < 1e-12);
            assert!(hicks_henne(1.0, x0).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn half_value_when_exponent_is_one() {
        // x0 = 0.5 makes the exponent exactly 1, so b(0.25, 0.5) = sin²(π/4) = 1/2.
        let b = hicks_henne(0.25, 0.5).unwrap();
        assert!((b - 0.5).abs() < 1e-12, "b(0.25,0.5) = {b}");
    }

    #[test]
    fn matches_high_precision_reference() {
        let b = hicks_henne(0.3, 0.25).unwrap();
        assert!((b - B_03_025).abs() < 1e-10, "b(0.3,0.25) = {b}");
    }

    #[test]
    fn rejects_domain_violations() {
        assert!(hicks_henne(-0.1, 0.5).is_err());
        assert!(hicks_henne(1.1, 0.5).is_err());
        assert!(hicks_henne(0.5, 0.0).is_err());
        assert!(hicks_henne(0.5, 1.0).is_err());
        assert!(hicks_henne(f64::NAN, 0.5).is_err());
        assert!(hicks_henne(0.5, f64::NAN).is_err());
    }

    #[test]
    fn maxima_are_equally_spaced() {
        assert_eq!(basis_maxima(1).unwrap(), vec![0.5]);
        assert_eq!(basis_maxima(3).unwrap(), vec![0.25, 0.5, 0.75]);
        let m9 = basis_maxima(9).unwrap();
        for (i, &x0) in m9.iter().enumerate() {
            assert!((x0 - (i + 1) as f64 / 10.0).abs() < 1e-15);
        }
        assert!(basis_maxima(0).is_err());
    }

    #[test]
    fn dimension_law_matches_published_values() {
        assert_eq!(search_dimension(9), 36);
        assert_eq!(search_dimension(7), 30);
        assert_eq!(search_dimension(12), 45);
        for (n, d) in [(3, 18), (4, 21), (5, 24), (7, 30), (9, 36), (10, 39), (12, 45)] {
            assert_eq!(search_dimension(n), d);
        }
    }

    #[test]
    fn basis_displacement_is_linear_in_amplitudes() {
        let basis = HicksHenneBasis::new(4).unwrap();
        let a = vec![0.1, -0.2, 0.3, 0.05];
        let x = 0.37;
        let d1 = basis.displacement(x, &a).unwrap();
        let doubled: alloc::vec::Vec<f64> = a.iter().map(|v| v * 2.0).collect();
        let d2 = basis.displacement(x, &doubled).unwrap();
        assert!((d2 - 2.0 * d1).abs() < 1e-15);
        assert!(basis.displacement(x, &[0.0; 3]).is_err(), "wrong amplitude count accepted");
    }

    proptest! {
        // b stays in [0,1] everywhere, and on a dense grid the maximum is
        // attained within grid resolution of x0.
        #[test]
        fn bounded_and_peaks_near_x0(x0 in 0.01f64..0.99) {
            let grid = 2000usize;
            let mut best_x = 0.0;
            let mut best_b = -1.0;
            for i in 0..=grid {
                let x = i as f64 / grid as f64;
                let b = hicks_henne(x, x0).unwrap();
                prop_assert!((-1e-15..=1.0 + 1e-12).contains(&b), "b({x},{x0}) = {b} out of [0,1]");
                if b > best_b {
                    best_b = b;
                    best_x = x;
                }
            }
            prop_assert!((best_x - x0).abs() <= 1.5 / grid as f64,
                "max at {best_x}, expected near {x0}");
        }
    }
}
