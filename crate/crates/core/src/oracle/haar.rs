//! Haar-distributed unitary matrices.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// A `d × d` complex matrix in double precision.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl ComplexMatrix {
    pub fn from_matrix(m: DMatrix<Complex64>) -> Self {
        assert!(m.is_square(), "complex matrix must be square");
        ComplexMatrix(m)
    }

    pub fn d(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    /// `max_{ij} |(U*U − I)_ij|`.
    pub fn unitarity_residual(&self) -> f64 {
        let d = self.d();
        let gram = self.0.adjoint() * &self.0;
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                let target = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
                worst = worst.max((gram[(i, j)] - target).norm());
            }
        }
        worst
    }
}

/// QR of a complex Ginibre matrix, with the columns of `Q` rotated by the
/// phases of `diag(R)` so the result is exactly Haar.
pub fn haar_sample_with<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let g = DMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * scale, im * scale)
    });
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..d {
        let rjj = r[(j, j)];
        let norm = rjj.norm();
        let phase = if norm > 0.0 { rjj / norm } else { Complex64::new(1.0, 0.0) };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    ComplexMatrix(q)
}

/// One Haar sample from a ChaCha8 stream seeded with `seed`.
pub fn haar_sample(d: usize, seed: u64) -> ComplexMatrix {
    haar_sample_with(d, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_is_a_phase() {
        for seed in 0..20 {
            let u = haar_sample(1, seed);
            assert!((u.get(0, 0).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn unitary_and_deterministic() {
        for d in [1, 2, 3, 5, 10, 25, 50] {
            let u = haar_sample(d, 7 + d as u64);
            assert!(u.unitarity_residual() < 1e-10, "d={d}");
            assert_eq!(u, haar_sample(d, 7 + d as u64));
        }
        assert_ne!(haar_sample(3, 1), haar_sample(3, 2));
    }
}
