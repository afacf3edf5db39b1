use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::IntPolynomial;

/// Polynomial in `z` whose coefficients are polynomials in `k`, stored by
/// ascending `z`-degree with no trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BivarPolynomial {
    coeffs: Vec<IntPolynomial>,
}

impl BivarPolynomial {
    pub fn new(mut coeffs: Vec<IntPolynomial>) -> Self {
        while coeffs.last().is_some_and(IntPolynomial::is_zero) {
            coeffs.pop();
        }
        BivarPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        BivarPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(IntPolynomial::one())
    }

    pub fn constant(c: IntPolynomial) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^d`.
    pub fn monomial(c: IntPolynomial, d: usize) -> Self {
        let mut coeffs = vec![IntPolynomial::zero(); d];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn z() -> Self {
        Self::monomial(IntPolynomial::one(), 1)
    }

    pub fn coeffs(&self) -> &[IntPolynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> IntPolynomial {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_z(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> IntPolynomial {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &IntPolynomial) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    /// Specializes `k` to an integer, leaving a polynomial in `z`.
    pub fn eval_k(&self, k: &BigInt) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = self.coeffs.iter().map(|c| c.eval(k)).collect();
        while v.last().is_some_and(num_traits::Zero::is_zero) {
            v.pop();
        }
        v
    }

    /// gcd in `Z[k]` of all `z`-coefficients.
    pub fn content_k(&self) -> IntPolynomial {
        self.coeffs
            .iter()
            .fold(IntPolynomial::zero(), |acc, c| acc.gcd(c))
    }

    /// Nonnegative integer gcd of every coefficient.
    pub fn content_int(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs
            .iter()
            .fold(BigInt::from(0), |acc, c| acc.gcd(&c.content()))
    }

    pub fn div_poly_exact(&self, c: &IntPolynomial) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|x| x.div_exact(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    pub fn div_int_exact(&self, c: &BigInt) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|x| x.div_scalar_exact(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Primitive part over `Z[k]`: content removed, leading `z`-coefficient
    /// with positive leading integer coefficient.
    pub fn primitive_part_z(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content_k();
        if self.leading_coeff().leading_coeff().is_negative() {
            c = -c;
        }
        self.div_poly_exact(&c)
            .expect("content divides every coefficient")
    }

    /// Exact division in `Z[k][z]`; `None` when not exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree_z()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree_z()?;
        if nd < dd {
            return None;
        }
        let lc = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![IntPolynomial::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            if rem[shift + dd].is_zero() {
                continue;
            }
            let q = rem[shift + dd].div_exact(&lc)?;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&q * c);
            }
            quot[shift] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder in `z` over `Z[k]`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let (Some(da), Some(db)) = (self.degree_z(), b.degree_z()) else {
            return self.clone();
        };
        if da < db {
            return self.clone();
        }
        let lc = b.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut deg = da;
        let mut steps = da - db + 1;
        loop {
            let top = rem[deg].clone();
            for c in rem.iter_mut() {
                *c = &*c * &lc;
            }
            for (i, c) in b.coeffs.iter().enumerate() {
                rem[deg - db + i] = &rem[deg - db + i] - &(&top * c);
            }
            steps -= 1;
            rem.truncate(deg);
            while rem.last().is_some_and(IntPolynomial::is_zero) {
                rem.pop();
            }
            match rem.len().checked_sub(1) {
                Some(d) if d >= db => deg = d,
                _ => break,
            }
        }
        let mut factor = IntPolynomial::one();
        for _ in 0..steps {
            factor = &factor * &lc;
        }
        Self::new(rem.into_iter().map(|c| &c * &factor).collect())
    }

    /// gcd in `z` over the field of rational functions in `k`, returned as a
    /// primitive element of `Z[k][z]` (positive-leading), so any common factor
    /// depending on `k` alone is dropped. Uses a primitive remainder sequence.
    pub fn gcd_z(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part_z();
        }
        if other.is_zero() {
            return self.primitive_part_z();
        }
        let (mut a, mut b) = (self.primitive_part_z(), other.primitive_part_z());
        if a.degree_z() < b.degree_z() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part_z();
        }
        a.primitive_part_z()
    }
}

impl fmt::Display for BivarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{d}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a BivarPolynomial> for &'a BivarPolynomial {
    type Output = BivarPolynomial;
    fn add(self, rhs: &BivarPolynomial) -> BivarPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BivarPolynomial::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a BivarPolynomial> for &'a BivarPolynomial {
    type Output = BivarPolynomial;
    fn sub(self, rhs: &BivarPolynomial) -> BivarPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BivarPolynomial::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a BivarPolynomial> for &'a BivarPolynomial {
    type Output = BivarPolynomial;
    fn mul(self, rhs: &BivarPolynomial) -> BivarPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BivarPolynomial::zero();
        }
        let mut out = vec![IntPolynomial::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BivarPolynomial::new(out)
    }
}

impl Neg for &BivarPolynomial {
    type Output = BivarPolynomial;
    fn neg(self) -> BivarPolynomial {
        BivarPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul<BivarPolynomial> for BivarPolynomial {
    type Output = BivarPolynomial;
    fn mul(self, rhs: BivarPolynomial) -> BivarPolynomial {
        &self * &rhs
    }
}

impl Add<BivarPolynomial> for BivarPolynomial {
    type Output = BivarPolynomial;
    fn add(self, rhs: BivarPolynomial) -> BivarPolynomial {
        &self + &rhs
    }
}

impl Sub<BivarPolynomial> for BivarPolynomial {
    type Output = BivarPolynomial;
    fn sub(self, rhs: BivarPolynomial) -> BivarPolynomial {
        &self - &rhs
    }
}
