//! Minimal dense symmetric-matrix support for CMA-ES.
//!
//! Search dimensions here top out around 50, where a cyclic Jacobi
//! eigensolver is simple, deterministic, and plenty fast — no external
//! linear-algebra dependency needed in a no_std crate.

use alloc::vec;
use alloc::vec::Vec;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    /// Zero matrix of size `n`.
    pub fn zeros(n: usize) -> Self {
        SquareMatrix { n, data: vec![0.0; n * n] }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Matrix size.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Element access.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Element assignment.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    /// In-place scale of the whole matrix.
    pub fn scale(&mut self, s: f64) {
        for v in self.data.iter_mut() {
            *v *= s;
        }
    }

    /// Adds `s · x xᵀ` (symmetric rank-one update).
    pub fn add_scaled_outer(&mut self, s: f64, x: &[f64]) {
        debug_assert_eq!(x.len(), self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                self.data[i * self.n + j] += s * x[i] * x[j];
            }
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.n);
        let mut out = vec![0.0; self.n];
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            out[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        out
    }

    /// Forces exact symmetry: `A ← (A + Aᵀ)/2`.
    pub fn symmetrize(&mut self) {
        for i in 0..self.n {
            for j in i + 1..self.n {
                let avg = 0.5 * (self.get(i, j) + self.get(j, i));
                self.set(i, j, avg);
                self.set(j, i, avg);
            }
        }
    }
}

/// Eigendecomposition of a symmetric matrix: `A = V diag(values) Vᵀ`,
/// eigenvectors in the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct SymEigen {
    /// Eigenvalues (unsorted, in Jacobi output order).
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors, one per column.
    pub vectors: SquareMatrix,
}

/// Cyclic Jacobi eigendecomposition. Deterministic; converges in a handful
/// of sweeps for the well-conditioned covariances CMA-ES produces.
pub fn sym_eigen(matrix: &SquareMatrix) -> SymEigen {
    let n = matrix.size();
    let mut a = matrix.clone();
    let mut v = SquareMatrix::identity(n);
    let max_sweeps = 64;

    for _ in 0..max_sweeps {
        // off-diagonal magnitude, relative to the diagonal scale
        let mut off = 0.0;
        let mut diag = 0.0;
        for i in 0..n {
            diag += a.get(i, i).abs();
            for j in i + 1..n {
                off += a.get(i, j).abs();
            }
        }
        if off <= 1e-15 * diag.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = 0.5 * (aqq - app) / apq;
                // stable tangent of the rotation angle
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + libm::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = t * c;

                // A ← Jᵀ A J on rows/columns p and q
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
                // accumulate V ← V J
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }

    let values = (0..n).map(|i| a.get(i, i)).collect();
    SymEigen { values, vectors: v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn reconstruct(e: &SymEigen) -> SquareMatrix {
        let n = e.vectors.size();
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut sum = 0.0;
                for k in 0..n {
                    sum += e.vectors.get(i, k) * e.values[k] * e.vectors.get(j, k);
                }
                m.set(i, j, sum);
            }
        }
        m
    }

    #[test]
    fn known_2x2_eigenvalues() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3
        let mut m = SquareMatrix::zeros(2);
        m.set(0, 0, 2.0);
        m.set(0, 1, 1.0);
        m.set(1, 0, 1.0);
        m.set(1, 1, 2.0);
        let e = sym_eigen(&m);
        let mut vals = e.values.clone();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn identity_decomposes_trivially() {
        let e = sym_eigen(&SquareMatrix::identity(5));
        for v in &e.values {
            assert!((v - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn random_symmetric_reconstructs_and_is_orthonormal() {
        let mut rng = Rng::seed_from_u64(99);
        for n in [3usize, 8, 20, 45] {
            let mut m = SquareMatrix::zeros(n);
            for i in 0..n {
                for j in 0..=i {
                    let x = rng.uniform(-1.0, 1.0);
                    m.set(i, j, x);
                    m.set(j, i, x);
                }
            }
            let e = sym_eigen(&m);
            let r = reconstruct(&e);
            for i in 0..n {
                for j in 0..n {
                    assert!(
                        (r.get(i, j) - m.get(i, j)).abs() < 1e-10,
                        "reconstruction off at ({i},{j}) for n={n}"
                    );
                }
            }
            // orthonormal columns
            for a in 0..n {
                for b in 0..n {
                    let dot: f64 = (0..n).map(|k| e.vectors.get(k, a) * e.vectors.get(k, b)).sum();
                    let expected = if a == b { 1.0 } else { 0.0 };
                    assert!((dot - expected).abs() < 1e-10, "V not orthonormal at ({a},{b})");
                }
            }
        }
    }
}
