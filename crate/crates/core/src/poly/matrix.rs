use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::ring::{adjugate, det_bareiss};
use super::{BivarPolynomial, IntPolynomial};
use crate::error::{Error, Result};

/// Square matrix of integer polynomials in `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<IntPolynomial>>", into = "Vec<Vec<IntPolynomial>>")]
pub struct PolyMatrix {
    rows: Vec<Vec<IntPolynomial>>,
}

impl TryFrom<Vec<Vec<IntPolynomial>>> for PolyMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<IntPolynomial>>) -> Result<Self> {
        PolyMatrix::new(rows)
    }
}

impl From<PolyMatrix> for Vec<Vec<IntPolynomial>> {
    fn from(m: PolyMatrix) -> Self {
        m.rows
    }
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<IntPolynomial>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: bad.len() });
        }
        Ok(PolyMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { IntPolynomial::one() } else { IntPolynomial::zero() })
                    .collect()
            })
            .collect();
        PolyMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<IntPolynomial>] {
        &self.rows
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::DimensionMismatch { expected: n, got: other.size() });
        }
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(IntPolynomial::zero(), |acc, t| {
                            acc + &self.rows[i][t] * &other.rows[t][j]
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(PolyMatrix { rows })
    }

    /// `self^n` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, mut n: u32) -> PolyMatrix {
        let mut result = PolyMatrix::identity(self.size());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base).expect("square matrices of equal size");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("square matrices of equal size");
            }
        }
        result
    }

    pub fn eval(&self, k: &BigInt) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|p| p.eval(k)).collect())
            .collect()
    }

    pub fn eval_f64(&self, k: f64) -> Vec<Vec<f64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|p| p.eval_f64(k)).collect())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<IntPolynomial> {
        self.rows
            .iter()
            .map(|r| r.iter().fold(IntPolynomial::zero(), |acc, p| acc + p))
            .collect()
    }

    /// `left · self · right`.
    pub fn bilinear(&self, left: &[IntPolynomial], right: &[IntPolynomial]) -> Result<IntPolynomial> {
        let n = self.size();
        for v in [left, right] {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.len() });
            }
        }
        let mut acc = IntPolynomial::zero();
        for (i, l) in left.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let row = self.rows[i]
                .iter()
                .zip(right)
                .fold(IntPolynomial::zero(), |a, (x, r)| a + x * r);
            acc = acc + l * &row;
        }
        Ok(acc)
    }

    /// The matrix `I - z·self` over `Z[k][z]`.
    pub fn i_minus_z(&self) -> Vec<Vec<BivarPolynomial>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let id = if i == j { IntPolynomial::one() } else { IntPolynomial::zero() };
                        BivarPolynomial::new(vec![id, -&self.rows[i][j]])
                    })
                    .collect()
            })
            .collect()
    }
}

/// `det(I - zL)` by fraction-free elimination.
pub fn det_i_minus_z_l(l: &PolyMatrix) -> BivarPolynomial {
    det_bareiss(&l.i_minus_z())
}

/// `left · adj(I - zL) · right`, via the matrix determinant lemma
/// `det(A + r·lᵀ) = det(A) + lᵀ·adj(A)·r`.
pub fn adjugate_apply(
    l: &PolyMatrix,
    left: &[IntPolynomial],
    right: &[IntPolynomial],
) -> Result<BivarPolynomial> {
    let n = l.size();
    for v in [left, right] {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: v.len() });
        }
    }
    let a = l.i_minus_z();
    let mut perturbed = a.clone();
    for (i, row) in perturbed.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = &*x + &BivarPolynomial::constant(&right[i] * &left[j]);
        }
    }
    Ok(det_bareiss(&perturbed) - det_bareiss(&a))
}

/// Full `adj(I - zL)` by cofactors.
pub fn adjugate_i_minus_z_l(l: &PolyMatrix) -> Vec<Vec<BivarPolynomial>> {
    adjugate(&l.i_minus_z())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::det_laplace;

    fn kp(desc: &[i64]) -> IntPolynomial {
        IntPolynomial::from_descending(desc)
    }

    pub(crate) fn p3_matrix() -> PolyMatrix {
        PolyMatrix::new(vec![
            vec![kp(&[1, -3, 3]), kp(&[1, -6, 13, -10])],
            vec![kp(&[1, -4, 5]), kp(&[1, -6, 14, -13])],
        ])
        .unwrap()
    }

    #[test]
    fn power_zero_is_identity() {
        assert_eq!(p3_matrix().pow(0), PolyMatrix::identity(2));
    }

    #[test]
    fn scalar_cube() {
        let m = PolyMatrix::new(vec![vec![IntPolynomial::k()]]).unwrap();
        assert_eq!(m.pow(3).get(0, 0), &kp(&[1, 0, 0, 0]));
    }

    #[test]
    fn p3_square_entry() {
        let sq = p3_matrix().pow(2);
        let expect = &kp(&[1, -3, 3]) * &kp(&[1, -3, 3]) + &kp(&[1, -6, 13, -10]) * &kp(&[1, -4, 5]);
        assert_eq!(sq.get(0, 0), &expect);
    }

    #[test]
    fn power_additivity_and_evaluation_commute() {
        let m = p3_matrix();
        assert_eq!(m.pow(5), m.pow(2).mul(&m.pow(3)).unwrap());
        let k = BigInt::from(4);
        let at4 = m.eval(&k);
        assert_eq!(at4, vec![
            vec![BigInt::from(7), BigInt::from(10)],
            vec![BigInt::from(5), BigInt::from(11)],
        ]);
        let cube = m.pow(3).eval(&k);
        let mut manual = at4.clone();
        for _ in 0..2 {
            manual = (0..2)
                .map(|i| (0..2).map(|j| (0..2).map(|t| &manual[i][t] * &at4[t][j]).sum()).collect())
                .collect();
        }
        assert_eq!(cube, manual);
    }

    #[test]
    fn one_by_one_determinant_and_adjugate() {
        let c = PolyMatrix::new(vec![vec![IntPolynomial::constant(7)]]).unwrap();
        let det = det_i_minus_z_l(&c);
        assert_eq!(det, BivarPolynomial::new(vec![IntPolynomial::one(), IntPolynomial::constant(-7)]));
        let one = [IntPolynomial::one()];
        assert_eq!(adjugate_apply(&c, &one, &one).unwrap(), BivarPolynomial::one());
    }

    #[test]
    fn p3_determinant_shape() {
        let det = det_i_minus_z_l(&p3_matrix());
        assert_eq!(det.degree_z(), Some(2));
        assert_eq!(det.coeff(0), IntPolynomial::one());
        assert_eq!(det, det_laplace(&p3_matrix().i_minus_z()));
    }

    #[test]
    fn adjugate_identity_symbolic() {
        let m = p3_matrix();
        let a = m.i_minus_z();
        let adj = adjugate_i_minus_z_l(&m);
        let det = det_i_minus_z_l(&m);
        for i in 0..2 {
            for j in 0..2 {
                let s = (0..2).fold(BivarPolynomial::zero(), |acc, t| acc + &a[i][t] * &adj[t][j]);
                let expect = if i == j { det.clone() } else { BivarPolynomial::zero() };
                assert_eq!(s, expect);
            }
        }
    }

    #[test]
    fn determinant_lemma_matches_cofactors() {
        let m = p3_matrix();
        let left = [kp(&[1, -1, 0]), kp(&[1, -3, 2, 0])];
        let right = [IntPolynomial::one(), IntPolynomial::one()];
        let adj = adjugate_i_minus_z_l(&m);
        let mut direct = BivarPolynomial::zero();
        for i in 0..2 {
            for j in 0..2 {
                direct = direct + adj[i][j].scale(&(&left[i] * &right[j]));
            }
        }
        assert_eq!(adjugate_apply(&m, &left, &right).unwrap(), direct);
    }

    #[test]
    fn dimension_mismatch_reported() {
        let m = p3_matrix();
        let err = adjugate_apply(&m, &[IntPolynomial::one()], &vec![IntPolynomial::one(); 2]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, got: 1 });
        assert!(PolyMatrix::new(vec![vec![IntPolynomial::one()], vec![]]).is_err());
    }
}
