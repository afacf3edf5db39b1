use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BivarPolynomial, IntPolynomial};

/// Commutative integral domain with exact division, enough for
/// fraction-free determinants.
pub trait ExactRing: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / divisor` when the division is exact.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            return None;
        }
        let (q, r) = self.div_rem(d);
        Zero::is_zero(&r).then_some(q)
    }
}

impl ExactRing for IntPolynomial {
    fn zero() -> Self {
        IntPolynomial::zero()
    }
    fn one() -> Self {
        IntPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        IntPolynomial::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        IntPolynomial::div_exact(self, d)
    }
}

impl ExactRing for BivarPolynomial {
    fn zero() -> Self {
        BivarPolynomial::zero()
    }
    fn one() -> Self {
        BivarPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        BivarPolynomial::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        BivarPolynomial::div_exact(self, d)
    }
}

/// Fraction-free (Bareiss) determinant with row pivoting.
pub fn det_bareiss<R: ExactRing>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    if n == 0 {
        return R::one();
    }
    let mut a: Vec<Vec<R>> = matrix.to_vec();
    let mut prev = R::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Laplace expansion along the first row. Exponential; only for small
/// matrices and as an independent check on [`det_bareiss`].
pub fn det_laplace<R: ExactRing>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    match n {
        0 => R::one(),
        1 => matrix[0][0].clone(),
        _ => {
            let mut acc = R::zero();
            for (j, entry) in matrix[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let term = entry.mul(&det_laplace(&minor(matrix, 0, j)));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

pub fn minor<R: Clone>(matrix: &[Vec<R>], row: usize, col: usize) -> Vec<Vec<R>> {
    matrix
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Classical adjugate (transposed cofactor matrix).
pub fn adjugate<R: ExactRing>(matrix: &[Vec<R>]) -> Vec<Vec<R>> {
    let n = matrix.len();
    if n == 1 {
        return vec![vec![R::one()]];
    }
    let mut adj = vec![vec![R::zero(); n]; n];
    for (i, row) in matrix.iter().enumerate() {
        for j in 0..row.len() {
            let c = det_bareiss(&minor(matrix, i, j));
            adj[j][i] = if (i + j) % 2 == 0 { c } else { c.neg() };
        }
    }
    adj
}
