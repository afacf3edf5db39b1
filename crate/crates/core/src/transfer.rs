//! The compactified transfer matrix `L` and what is computed from it: product
//! chromatic polynomials, restricted counts, reciprocity, eigenvalue bounds,
//! the generating function `Ξ_G(k, z)` and hidden symmetry.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::eigen;
use crate::error::{Error, Result};
use crate::graph::{layered_path_product, Graph, Permutation};
use crate::oracle::{count_compatible_pairs_restricted, PartialColoring};
use crate::orbits::{orbit_set, IndependentPartition, OrbitSet};
use crate::poly::{adjugate_apply, det_i_minus_z_l, interpolate, IntPolynomial, PolyMatrix, RationalGenFun};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactTransferMatrix {
    pub base_graph: Graph,
    pub orbit_set: OrbitSet,
    pub l: PolyMatrix,
    pub weights: Vec<IntPolynomial>,
}

/// Builds `L` for `g` under `group` (automorphisms of `g`; a generating set
/// is enough).
///
/// Entry `(i, j)` counts colorings of the second layer of `G × P_2` whose
/// partition lies in class `j`, given the first layer colored by the
/// representative of class `i`. It is sampled at `k = N..=N + s_max` and
/// interpolated with degree bound `s_j`. Every row is rebuilt from a second
/// member of class `i` where one exists, and a mismatch is an error.
pub fn build_l(g: &Graph, group: &[Permutation]) -> Result<CompactTransferMatrix> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::InvalidSize { what: "base graph vertices", value: 0 });
    }
    let orbit_set = orbit_set(g, group)?;
    let p = orbit_set.len();
    let mut rows = Vec::with_capacity(p);
    for class in &orbit_set.orbits {
        let row = l_row_from(&orbit_set, &class.representative, n)?;
        if let Some(alt) = class.members.last().filter(|m| **m != class.representative) {
            if l_row_from(&orbit_set, alt, n)? != row {
                return Err(Error::Invariant(format!(
                    "row of L depends on the representative ({} vs {alt})",
                    class.representative
                )));
            }
        }
        rows.push(row);
    }
    let l = PolyMatrix::new(rows)?;
    let weights = orbit_set.weights();
    Ok(CompactTransferMatrix { base_graph: g.clone(), orbit_set, l, weights })
}

/// Row of `L` computed with `first` (any member of some class) as the
/// first-layer coloring.
pub fn l_row_from(orbit_set: &OrbitSet, first: &IndependentPartition, n: usize) -> Result<Vec<IntPolynomial>> {
    let s_max = orbit_set.max_colors();
    orbit_set
        .orbits
        .iter()
        .map(|class| {
            let counters: Vec<BlockCounter> = class.members.iter().map(|pi| BlockCounter::new(first, pi)).collect();
            let points: Vec<(i64, BigInt)> = (n..=n + s_max)
                .map(|k| (k as i64, counters.iter().map(|c| c.count(k)).sum()))
                .collect();
            interpolate(&points, class.colors)
        })
        .collect()
}

/// Injective block colorings of a partition `π`, proper against a fixed
/// coloring `c` across the vertical edges.
///
/// A block may take any color of `c`'s palette `[s]` it does not meet, or a
/// color outside `[s]`. The outside colors are interchangeable, so the
/// assignments are grouped by how many blocks go outside: `hist[t]` of them
/// use `t` outside colors, each realizable in `(k − s)↓t` ways.
struct BlockCounter {
    palette: usize,
    hist: Vec<u64>,
}

impl BlockCounter {
    fn new(first: &IndependentPartition, pi: &IndependentPartition) -> Self {
        let c = first.rgs();
        let palette = first.num_blocks();
        let forbidden: Vec<u64> = pi
            .blocks()
            .iter()
            .map(|b| b.iter().fold(0u64, |m, &v| m | 1 << c[v]))
            .collect();
        let mut hist = vec![0u64; forbidden.len() + 1];
        Self::assign(&forbidden, palette, 0, 0, 0, &mut hist);
        BlockCounter { palette, hist }
    }

    fn assign(forbidden: &[u64], palette: usize, idx: usize, used: u64, outside: usize, hist: &mut [u64]) {
        if idx == forbidden.len() {
            hist[outside] += 1;
            return;
        }
        for color in 0..palette {
            let bit = 1u64 << color;
            if used & bit == 0 && forbidden[idx] & bit == 0 {
                Self::assign(forbidden, palette, idx + 1, used | bit, outside, hist);
            }
        }
        Self::assign(forbidden, palette, idx + 1, used, outside + 1, hist);
    }

    fn count(&self, k: usize) -> BigInt {
        let spare = k as i64 - self.palette as i64;
        self.hist
            .iter()
            .enumerate()
            .filter(|(_, &h)| h > 0)
            .map(|(t, &h)| {
                let ways = (0..t as i64).fold(BigInt::from(1), |acc, i| acc * (spare - i).max(0));
                ways * h
            })
            .sum()
    }
}

/// `(lhs, pairs)` of the row-sum reciprocity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reciprocity {
    /// `Σ_j (L^n)_{ij}(−k)`.
    pub lhs: BigInt,
    /// Compatible pairs on `G × P_{n+1}` with the first layer fixed.
    pub pairs: BigInt,
    /// `(−1)^{N n}`.
    pub sign: i8,
}

impl Reciprocity {
    pub fn holds(&self) -> bool {
        self.lhs == &self.pairs * BigInt::from(self.sign)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenSample {
    pub k: i64,
    pub delta: BigInt,
    #[serde(rename = "Delta")]
    pub big_delta: BigInt,
    pub min_row_sum: BigInt,
    pub max_row_sum: BigInt,
    pub lambda: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenBounds {
    /// Row sum that is smallest as `k → ∞`.
    pub delta: IntPolynomial,
    /// Row sum that is largest as `k → ∞`.
    #[serde(rename = "Delta")]
    pub big_delta: IntPolynomial,
    pub samples: Vec<EigenSample>,
    /// Sampled `k` where another row sum is more extreme than `delta`/`Delta`.
    pub crossings: Vec<i64>,
}

impl EigenBounds {
    pub fn bounds_hold(&self) -> bool {
        self.samples.iter().all(|s| {
            let lo = s.min_row_sum.to_f64().unwrap_or(f64::NAN);
            let hi = s.max_row_sum.to_f64().unwrap_or(f64::NAN);
            let tol = 1e-9 * hi.abs().max(1.0);
            lo - tol <= s.lambda && s.lambda <= hi + tol
        })
    }

    /// Whether `delta` and `Delta` share their two highest coefficients.
    pub fn leading_terms_agree(&self) -> bool {
        let (a, b) = (&self.delta, &self.big_delta);
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) if da == db => {
                a.coeff(da) == b.coeff(db) && (da == 0 || a.coeff(da - 1) == b.coeff(db - 1))
            }
            _ => a == b,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HiddenSymmetry {
    pub holds: bool,
    pub reduced_denominator_degree: usize,
    pub orbit_count: usize,
}

impl CompactTransferMatrix {
    pub fn new(g: &Graph, group: &[Permutation]) -> Result<Self> {
        build_l(g, group)
    }

    pub fn orbit_count(&self) -> usize {
        self.l.size()
    }

    fn check_orbit(&self, i: usize) -> Result<()> {
        if i >= self.orbit_count() {
            return Err(Error::OrbitIndex { index: i, count: self.orbit_count() });
        }
        Ok(())
    }

    /// `χ_{G×P_n} = w · L^{n−1} · 1`.
    pub fn chromatic_product_path(&self, n: usize) -> Result<IntPolynomial> {
        if n == 0 {
            return Err(Error::InvalidSize { what: "path length", value: 0 });
        }
        let ones = vec![IntPolynomial::one(); self.orbit_count()];
        self.l.pow(n as u32 - 1).bilinear(&self.weights, &ones)
    }

    /// `(L^n)_{ij}` at `k`: colorings of `G × P_{n+1}` with the first layer
    /// colored by the representative of `i` and the last layer in class `j`.
    pub fn restricted_count_power(&self, i: usize, j: usize, n: usize, k: i64) -> Result<BigInt> {
        self.check_orbit(i)?;
        self.check_orbit(j)?;
        let s_i = self.orbit_set.orbits[i].colors as i64;
        if k < s_i {
            return Err(Error::TooFewColors { k, needed: s_i });
        }
        Ok(self.l.pow(n as u32).get(i, j).eval_i64(k))
    }

    /// Row `i` of `L^n` summed at `−k`, against the compatible-pair oracle on
    /// `G × P_{n+1}` with the first layer fixed to the representative of `i`.
    pub fn row_sum_reciprocity(&self, i: usize, n: usize, k: i64) -> Result<Reciprocity> {
        self.check_orbit(i)?;
        let big_n = self.base_graph.num_vertices();
        if k < big_n as i64 {
            return Err(Error::TooFewColors { k, needed: big_n as i64 });
        }
        let lhs = self.l.pow(n as u32).row_sums()[i].eval_i64(-k);
        let product = layered_path_product(&self.base_graph, n + 1)?;
        let first = self.orbit_set.orbits[i].representative.representative_coloring();
        let fixed = PartialColoring::prefix(&product, &first)?;
        let pairs = count_compatible_pairs_restricted(&product, &fixed, k as usize)?;
        let sign = if (big_n * n) % 2 == 0 { 1 } else { -1 };
        Ok(Reciprocity { lhs, pairs, sign })
    }

    pub fn eigen_bounds(&self, sample_ks: &[i64]) -> Result<EigenBounds> {
        let n = self.base_graph.num_vertices() as i64;
        if let Some(&k) = sample_ks.iter().find(|&&k| k < n) {
            return Err(Error::TooFewColors { k, needed: n });
        }
        let sums = self.l.row_sums();
        let delta = sums.iter().min_by(|a, b| a.cmp_at_infinity(b)).cloned().unwrap_or_default();
        let big_delta = sums.iter().max_by(|a, b| a.cmp_at_infinity(b)).cloned().unwrap_or_default();
        let mut samples = Vec::with_capacity(sample_ks.len());
        let mut crossings = Vec::new();
        for &k in sample_ks {
            let values: Vec<BigInt> = sums.iter().map(|s| s.eval_i64(k)).collect();
            let min = values.iter().min().cloned().unwrap_or_default();
            let max = values.iter().max().cloned().unwrap_or_default();
            let (d, bd) = (delta.eval_i64(k), big_delta.eval_i64(k));
            if d != min || bd != max {
                crossings.push(k);
            }
            let lambda = eigen::dominant_eigenvalue(&self.l.eval_f64(k as f64))?;
            samples.push(EigenSample { k, delta: d, big_delta: bd, min_row_sum: min, max_row_sum: max, lambda });
        }
        Ok(EigenBounds { delta, big_delta, samples, crossings })
    }

    pub fn dominant_eigenvalue(&self, k: i64) -> Result<f64> {
        eigen::dominant_eigenvalue(&self.l.eval_f64(k as f64))
    }

    /// Reduced `Ξ_G(k, z) = Σ_n χ_{G×P_{n+1}}(k) zⁿ = w·(I − zL)⁻¹·1`.
    pub fn generating_function(&self) -> Result<RationalGenFun> {
        let ones = vec![IntPolynomial::one(); self.orbit_count()];
        let numerator = adjugate_apply(&self.l, &self.weights, &ones)?;
        let denominator = det_i_minus_z_l(&self.l);
        Ok(RationalGenFun::new(numerator, denominator)?.reduce())
    }

    /// Hidden symmetry: the reduced denominator of `Ξ` has `z`-degree below
    /// the number of orbits. Meaningful when built from the full group.
    pub fn hidden_symmetry(&self) -> Result<HiddenSymmetry> {
        let xi = self.generating_function()?;
        Ok(hidden_symmetry_of(&xi, self.orbit_count()))
    }
}

pub fn hidden_symmetry_of(xi: &RationalGenFun, orbit_count: usize) -> HiddenSymmetry {
    let degree = xi.denominator_degree_z();
    HiddenSymmetry { holds: degree < orbit_count, reduced_denominator_degree: degree, orbit_count }
}

/// Sign-alternation check `(−1)^{d−i} a_i ≥ 0` for a polynomial of degree `d`.
pub fn alternates_in_sign(p: &IntPolynomial) -> bool {
    let Some(d) = p.degree() else { return true };
    (0..=d).all(|i| {
        let c = p.coeff(i);
        c.is_zero() || (c.is_positive() == ((d - i) % 2 == 0))
    })
}
