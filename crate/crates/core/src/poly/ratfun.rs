use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{BivarPolynomial, IntPolynomial};
use crate::error::{Error, Result};

/// Rational function in `z` with coefficients in `Z[k]`, expandable as a
/// power series in `z`.
///
/// After [`RationalGenFun::reduce`]: numerator and denominator share no factor
/// of positive `z`-degree, the overall integer content is one, and the
/// denominator's `z^0` coefficient has a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalGenFun {
    pub numerator: BivarPolynomial,
    pub denominator: BivarPolynomial,
}

impl RationalGenFun {
    pub fn new(numerator: BivarPolynomial, denominator: BivarPolynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidDenominator("zero denominator"));
        }
        if denominator.coeff(0).is_zero() {
            return Err(Error::InvalidDenominator("denominator vanishes at z = 0"));
        }
        Ok(RationalGenFun { numerator, denominator })
    }

    pub fn denominator_degree_z(&self) -> usize {
        self.denominator.degree_z().unwrap_or(0)
    }

    pub fn reduce(&self) -> RationalGenFun {
        let g = self.numerator.gcd_z(&self.denominator);
        let (mut num, mut den) = if g.degree_z().unwrap_or(0) > 0 {
            (
                self.numerator.div_exact(&g).expect("gcd divides numerator"),
                self.denominator.div_exact(&g).expect("gcd divides denominator"),
            )
        } else {
            (self.numerator.clone(), self.denominator.clone())
        };
        let c = num_integer::Integer::gcd(&num.content_int(), &den.content_int());
        if !c.is_zero() && c != BigInt::from(1) {
            num = num.div_int_exact(&c).expect("content divides");
            den = den.div_int_exact(&c).expect("content divides");
        }
        if den.coeff(0).leading_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        let reduced = RationalGenFun { numerator: num, denominator: den };
        debug_assert!(reduced.same_function(self));
        reduced
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &RationalGenFun) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    /// First `count` coefficients of the power series in `z`.
    pub fn series_coefficients(&self, count: usize) -> Result<Vec<IntPolynomial>> {
        let d0 = self.denominator.coeff(0);
        let mut out: Vec<IntPolynomial> = Vec::with_capacity(count);
        for n in 0..count {
            let mut acc = self.numerator.coeff(n);
            for i in 1..=n {
                let di = self.denominator.coeff(i);
                if !di.is_zero() {
                    acc = acc - &di * &out[n - i];
                }
            }
            let c = acc.div_exact(&d0).ok_or(Error::NonIntegralSeries { index: n })?;
            out.push(c);
        }
        Ok(out)
    }
}

impl fmt::Display for RationalGenFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.numerator, self.denominator)
    }
}
