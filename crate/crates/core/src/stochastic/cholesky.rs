//! Cholesky factor of the equicorrelation matrix.
//!
//! The correlation model is a single pairwise coefficient applied uniformly:
//! ones on the diagonal, rho everywhere else. That matrix is positive
//! definite exactly when −1/(n−1) < rho < 1, and its lower-triangular factor
//! turns a vector of independent standard normals into an equicorrelated one.

use crate::error::ModelError;

/// Lower-triangular factor L with L·Lᵀ equal to the equicorrelation matrix.
#[derive(Clone, Debug)]
pub struct CholeskyFactor {
    n: usize,
    /// Row-major n×n storage; entries above the diagonal are zero.
    data: Vec<f64>,
}

impl CholeskyFactor {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    /// y = L · z. Only the lower triangle is touched, so each output
    /// coordinate is a short prefix dot product.
    pub fn multiply(&self, z: &[f64], y: &mut [f64]) {
        debug_assert_eq!(z.len(), self.n);
        debug_assert_eq!(y.len(), self.n);
        for i in 0..self.n {
            let row = &self.data[i * self.n..i * self.n + i + 1];
            let mut acc = 0.0;
            for (l, zk) in row.iter().zip(z) {
                acc += l * zk;
            }
            y[i] = acc;
        }
    }
}

/// Factor the n×n equicorrelation matrix with off-diagonal `rho`.
pub fn equicorrelated_cholesky(n: usize, rho: f64) -> Result<CholeskyFactor, ModelError> {
    let pd = rho.is_finite()
        && rho < 1.0
        && (n <= 1 || rho > -1.0 / (n as f64 - 1.0));
    if n == 0 || !pd {
        return Err(ModelError::BadCorrelation { rho, n });
    }

    // standard in-place factorization; the matrix is tiny (n ≤ a few hundred)
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let a_ij = if i == j { 1.0 } else { rho };
            let mut sum = a_ij;
            for k in 0..j {
                sum -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(ModelError::BadCorrelation { rho, n });
                }
                l[i * n + j] = sum.sqrt();
            } else {
                l[i * n + j] = sum / l[j * n + j];
            }
        }
    }
    Ok(CholeskyFactor { n, data: l })
}
