//! Dominant eigenvalue of a nonnegative matrix by shifted power iteration.

use crate::error::{Error, Result};

pub const TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Spectral radius of the nonnegative operator `apply` on `R^n`.
///
/// Iterates `A + I` from the all-ones vector (the shift removes the
/// oscillation of periodic matrices such as bipartite adjacency matrices) and
/// stops once the Collatz–Wielandt ratio changes by less than [`TOLERANCE`]
/// relative.
pub fn power_iteration(n: usize, mut apply: impl FnMut(&[f64], &mut [f64])) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    let mut x = vec![1.0; n];
    let mut y = vec![0.0; n];
    let mut estimate = f64::NAN;
    for _ in 0..MAX_ITERATIONS {
        apply(&x, &mut y);
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += xi;
        }
        let (sx, sy): (f64, f64) = (x.iter().sum(), y.iter().sum());
        let next = sy / sx - 1.0;
        if sy == 0.0 {
            return Ok(0.0);
        }
        let scale = y.iter().copied().fold(0.0, f64::max);
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / scale;
        }
        if (next - estimate).abs() <= TOLERANCE * next.abs().max(1.0) {
            return Ok(next);
        }
        estimate = next;
    }
    Err(Error::NoConvergence { iterations: MAX_ITERATIONS, estimate })
}

pub fn dominant_eigenvalue(matrix: &[Vec<f64>]) -> Result<f64> {
    power_iteration(matrix.len(), |x, y| {
        for (row, out) in matrix.iter().zip(y.iter_mut()) {
            *out = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_bipartite() {
        let d = dominant_eigenvalue(&[vec![2.0, 0.0], vec![0.0, 5.0]]).unwrap();
        assert!((d - 5.0).abs() < 1e-9);
        // eigenvalues ±1: plain iteration would oscillate
        let swap = dominant_eigenvalue(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!((swap - 1.0).abs() < 1e-9);
    }

    #[test]
    fn p3_at_four() {
        let l = [vec![7.0, 10.0], vec![5.0, 11.0]];
        let expect = (18.0 + (16.0f64 + 200.0).sqrt()) / 2.0;
        assert!((dominant_eigenvalue(&l).unwrap() - expect).abs() < 1e-9);
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(dominant_eigenvalue(&[vec![0.0]]).unwrap(), 0.0);
    }
}
