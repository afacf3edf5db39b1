use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Unique polynomial of degree at most `degree_bound` through `points`, with
/// integer coefficients.
///
/// Interpolates exactly over the rationals (see [`interpolate_rational`]),
/// then insists that every coefficient is an integer.
pub fn interpolate(points: &[(i64, BigInt)], degree_bound: usize) -> Result<IntPolynomial> {
    let coeffs = interpolate_rational(points, degree_bound)?;
    let mut ints = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if !c.denom().is_one() {
            return Err(Error::NotIntegerPolynomial);
        }
        ints.push(c.to_integer());
    }
    Ok(IntPolynomial::new(ints))
}

/// Rational coefficients (ascending) of the polynomial of degree at most
/// `degree_bound` through the first `degree_bound + 1` distinct abscissae
/// (Newton form). Every further point must lie on the curve.
pub fn interpolate_rational(points: &[(i64, BigInt)], degree_bound: usize) -> Result<Vec<BigRational>> {
    let mut distinct: BTreeMap<i64, &BigInt> = BTreeMap::new();
    for (x, y) in points {
        if let Some(prev) = distinct.insert(*x, y) {
            if prev != y {
                return Err(Error::InconsistentPoints { degree_bound });
            }
        }
    }
    let needed = degree_bound + 1;
    if distinct.len() < needed {
        return Err(Error::TooFewPoints { needed, got: distinct.len() });
    }
    let used: Vec<(BigRational, BigRational)> = distinct
        .iter()
        .take(needed)
        .map(|(&x, &y)| (BigRational::from_integer(x.into()), BigRational::from_integer(y.clone())))
        .collect();

    // divided differences, in place
    let xs: Vec<BigRational> = used.iter().map(|(x, _)| x.clone()).collect();
    let mut dd: Vec<BigRational> = used.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }

    // Horner expansion of the Newton form into monomial coefficients
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero()];
    for i in (0..needed).rev() {
        // coeffs = coeffs * (k - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }

    for (&x, &y) in distinct.iter().skip(needed) {
        let xr = BigRational::from_integer(x.into());
        let value = coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &xr + c);
        if value != BigRational::from_integer(y.clone()) {
            return Err(Error::InconsistentPoints { degree_bound });
        }
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pts(v: &[(i64, i64)]) -> Vec<(i64, BigInt)> {
        v.iter().map(|&(x, y)| (x, BigInt::from(y))).collect()
    }

    #[test]
    fn recovers_quadratic() {
        let p = interpolate(&pts(&[(0, 3), (1, 1), (2, 1), (3, 3)]), 2).unwrap();
        assert_eq!(p, IntPolynomial::from_descending(&[1, -3, 3]));
    }

    #[test]
    fn identity_and_constant() {
        assert_eq!(interpolate(&pts(&[(0, 0), (1, 1)]), 1).unwrap(), IntPolynomial::k());
        assert_eq!(
            interpolate(&pts(&[(0, 1), (1, 1), (2, 1)]), 2).unwrap(),
            IntPolynomial::one()
        );
    }

    #[test]
    fn rejects_non_integer_result() {
        // k(k-1)/2
        let err = interpolate(&pts(&[(0, 0), (1, 0), (2, 1)]), 2).unwrap_err();
        assert_eq!(err, Error::NotIntegerPolynomial);
    }

    #[test]
    fn rational_coefficients_kept() {
        let c = interpolate_rational(&pts(&[(0, 0), (1, 0), (2, 1)]), 2).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(c, vec![BigRational::zero(), -half.clone(), half]);
    }

    #[test]
    fn rejects_inconsistent_oversampling() {
        let err = interpolate(&pts(&[(0, 0), (1, 1), (2, 5)]), 1).unwrap_err();
        assert_eq!(err, Error::InconsistentPoints { degree_bound: 1 });
    }

    #[test]
    fn rejects_too_few_points() {
        let err = interpolate(&pts(&[(0, 0), (0, 0)]), 1).unwrap_err();
        assert_eq!(err, Error::TooFewPoints { needed: 2, got: 1 });
    }

    proptest! {
        #[test]
        fn interpolate_inverts_evaluate(
            coeffs in prop::collection::vec(-1000i64..1000, 0..7),
            start in -20i64..20,
            extra in 0usize..3,
        ) {
            let p = IntPolynomial::from_i64s(&coeffs);
            let bound = coeffs.len().max(1) - 1 + extra;
            let points: Vec<(i64, BigInt)> =
                (0..bound as i64 + 3).map(|i| (start + i, p.eval_i64(start + i))).collect();
            prop_assert_eq!(interpolate(&points, bound).unwrap(), p);
        }
    }
}
