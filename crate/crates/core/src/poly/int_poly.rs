use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Univariate polynomial in `k` with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from coefficients given in descending degree, the
    /// order in which polynomials are usually written down.
    pub fn from_descending(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `k (k-1) ... (k-s+1)`; the empty product for `s = 0`.
    pub fn falling_factorial(s: usize) -> Self {
        (0..s).fold(Self::one(), |acc, i| {
            acc * Self::new(vec![BigInt::from(-(i as i64)), BigInt::one()])
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `k^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, k: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * k + c)
    }

    pub fn eval_i64(&self, k: i64) -> BigInt {
        self.eval(&BigInt::from(k))
    }

    pub fn eval_f64(&self, k: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * k + num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(-k)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Exact division in `Z[k]`; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lc = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let (Some(da), Some(db)) = (self.degree(), b.degree()) else {
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
                *c *= &lc;
            }
            for (i, c) in b.coeffs.iter().enumerate() {
                rem[deg - db + i] -= &top * c;
            }
            steps -= 1;
            rem.truncate(deg);
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            match rem.len().checked_sub(1) {
                Some(d) if d >= db => deg = d,
                _ => break,
            }
        }
        let factor = num_traits::pow(lc, steps);
        Self::new(rem.into_iter().map(|c| c * &factor).collect())
    }

    /// Greatest common divisor in `Z[k]`, normalized to a positive leading
    /// coefficient. Computed by a primitive remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    fn normalized_sign(&self) -> Self {
        if self.leading_coeff().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Orders polynomials by their value as `k -> +inf`.
    pub fn cmp_at_infinity(&self, other: &Self) -> Ordering {
        let diff = self - other;
        match diff.leading_coeff().sign() {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }

    /// Coefficients as decimal strings, ascending.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "k")?,
                _ => write!(f, "k^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(desc: &[i64]) -> IntPolynomial {
        IntPolynomial::from_descending(desc)
    }

    #[test]
    fn trims_and_degree() {
        assert!(IntPolynomial::from_i64s(&[0, 0]).is_zero());
        assert_eq!(p(&[1, -2, 1, 0]).degree(), Some(3));
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn falling_factorial_values() {
        let ff = IntPolynomial::falling_factorial(3);
        assert_eq!(ff, p(&[1, -3, 2, 0]));
        assert_eq!(ff.eval_i64(2), BigInt::zero());
        assert_eq!(ff.eval_i64(5), BigInt::from(60));
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[1, -2, 1, 0]).to_string(), "k^3 - 2k^2 + k");
        assert_eq!(p(&[-1, 0, 3]).to_string(), "-k^2 + 3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, -3, 3]);
        let b = p(&[1, -4, 5]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!((&prod + &IntPolynomial::one()).div_exact(&b), None);
        assert_eq!(p(&[2, 1]).div_exact(&p(&[2, 0])), None);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = p(&[1, -1]);
        let a = &f * &p(&[1, 0, 1]);
        let b = &f * &p(&[2, 3]);
        assert_eq!(a.gcd(&b), f);
        let scaled = a.scale(&BigInt::from(6));
        assert_eq!(scaled.gcd(&b.scale(&BigInt::from(4))), f.scale(&BigInt::from(2)));
    }

    #[test]
    fn reflect_evaluates_at_negative() {
        let a = p(&[1, -6, 14, -13]);
        assert_eq!(a.reflect().eval_i64(3), a.eval_i64(-3));
    }

    #[test]
    fn json_is_decimal_strings() {
        let a = p(&[1, -2, 1, 0]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"["0","1","-2","1"]"#);
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
