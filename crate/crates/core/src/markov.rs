//! Chains on stacked posets.
//!
//! A stacked poset repeats one two-level cover pattern `n + 1` times. Its
//! order-preserving labellings are walks through *base states* (label
//! vectors of one level, normalized to start at 1) along *moves* (increments
//! between consecutive levels). The transition matrix `M` records each move
//! `f` as the monomial `x^f` in one indeterminate per position.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::parse_usizes;
use crate::poly::interpolate_rational;

/// Cap on `k^(m(n+1))` for [`brute_force_order_preserving`].
pub const BRUTE_FORCE_LIMIT: u128 = 100_000_000;

/// Two-level cover pattern: `covers[p][q]` iff upper element `p` covers lower
/// element `q`. The diagonal is always set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<bool>>", into = "Vec<Vec<bool>>")]
pub struct BasePoset {
    covers: Vec<Vec<bool>>,
}

impl TryFrom<Vec<Vec<bool>>> for BasePoset {
    type Error = Error;
    fn try_from(covers: Vec<Vec<bool>>) -> Result<Self> {
        BasePoset::new(covers)
    }
}

impl From<BasePoset> for Vec<Vec<bool>> {
    fn from(p: BasePoset) -> Self {
        p.covers
    }
}

impl BasePoset {
    pub fn new(covers: Vec<Vec<bool>>) -> Result<Self> {
        let m = covers.len();
        if m == 0 {
            return Err(Error::InvalidPoset("no elements per level".into()));
        }
        if let Some(row) = covers.iter().position(|r| r.len() != m) {
            return Err(Error::InvalidPoset(format!("row {row} does not have {m} entries")));
        }
        if let Some(p) = (0..m).find(|&p| !covers[p][p]) {
            return Err(Error::InvalidPoset(format!("element {p} does not cover its own copy")));
        }
        Ok(BasePoset { covers })
    }

    pub fn from_bits(rows: &[&[u8]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&b| b != 0).collect()).collect())
    }

    /// One element per level.
    pub fn chain() -> Self {
        BasePoset { covers: vec![vec![true]] }
    }

    pub fn m(&self) -> usize {
        self.covers.len()
    }

    pub fn covers(&self, p: usize, q: usize) -> bool {
        self.covers[p][q]
    }

    pub fn cover_matrix(&self) -> &[Vec<bool>] {
        &self.covers
    }

    /// Every base poset with `m` elements per level (all off-diagonal
    /// patterns), in a fixed order.
    pub fn all(m: usize) -> Vec<BasePoset> {
        let off: Vec<(usize, usize)> =
            (0..m).flat_map(|p| (0..m).filter(move |&q| q != p).map(move |q| (p, q))).collect();
        (0u64..1 << off.len())
            .map(|mask| {
                let mut covers: Vec<Vec<bool>> = (0..m).map(|p| (0..m).map(|q| p == q).collect()).collect();
                for (bit, &(p, q)) in off.iter().enumerate() {
                    covers[p][q] = mask >> bit & 1 == 1;
                }
                BasePoset { covers }
            })
            .collect()
    }

    /// File form: `m`, then `m` rows of `m` zeros/ones.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let parse_err = |line: usize, message: String| Error::Parse { line, column: 1, message };
        let (idx, first) = lines.next().ok_or_else(|| parse_err(1, "missing element count".into()))?;
        let head = parse_usizes(first, idx + 1)?;
        let [m] = head[..] else {
            return Err(parse_err(idx + 1, format!("expected one integer, found {}", head.len())));
        };
        let mut covers = Vec::with_capacity(m);
        for _ in 0..m {
            let (idx, line) = lines
                .next()
                .ok_or_else(|| parse_err(text.lines().count() + 1, format!("expected {m} cover rows")))?;
            let row = parse_usizes(line, idx + 1)?;
            if row.len() != m {
                return Err(parse_err(idx + 1, format!("expected {m} entries, found {}", row.len())));
            }
            if let Some(pos) = row.iter().position(|&b| b > 1) {
                let col = line.split_whitespace().take(pos).map(|t| t.len() + 1).sum::<usize>() + 1;
                return Err(Error::Parse { line: idx + 1, column: col, message: "entries must be 0 or 1".into() });
            }
            covers.push(row.into_iter().map(|b| b == 1).collect());
        }
        if let Some((idx, _)) = lines.next() {
            return Err(parse_err(idx + 1, "trailing data".into()));
        }
        BasePoset::new(covers).map_err(|e| parse_err(1, e.to_string()))
    }
}

/// Labels of one level, normalized so the value set is `{1, ..., max}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BaseState(Vec<usize>);

impl BaseState {
    pub fn new(labels: Vec<usize>) -> Option<Self> {
        is_initial_segment(&labels).then_some(BaseState(labels))
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn max_label(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

fn is_initial_segment(labels: &[usize]) -> bool {
    let Some(&max) = labels.iter().max() else { return false };
    (1..=max).all(|v| labels.contains(&v)) && labels.iter().all(|&v| v >= 1)
}

/// All base states of length `m`, lexicographic.
pub fn enumerate_base_states(m: usize) -> Vec<BaseState> {
    let mut out = Vec::new();
    let mut cur = vec![1; m];
    if m == 0 {
        return out;
    }
    loop {
        if is_initial_segment(&cur) {
            out.push(BaseState(cur.clone()));
        }
        let Some(i) = (0..m).rev().find(|&i| cur[i] < m) else {
            return out;
        };
        cur[i] += 1;
        for x in &mut cur[i + 1..] {
            *x = 1;
        }
    }
}

/// Finite sum of monomials `c · x^e` with `e ∈ Z^m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<Term>", from = "Vec<Term>")]
pub struct MonomialSum {
    terms: BTreeMap<Vec<i64>, BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponent: Vec<i64>,
    #[serde(with = "decimal")]
    pub coefficient: BigInt,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<MonomialSum> for Vec<Term> {
    fn from(s: MonomialSum) -> Self {
        s.terms.into_iter().map(|(exponent, coefficient)| Term { exponent, coefficient }).collect()
    }
}

impl From<Vec<Term>> for MonomialSum {
    fn from(terms: Vec<Term>) -> Self {
        let mut s = MonomialSum::default();
        for t in terms {
            s.add_term(t.exponent, t.coefficient);
        }
        s
    }
}

impl MonomialSum {
    pub fn monomial(exponent: Vec<i64>) -> Self {
        let mut s = Self::default();
        s.add_term(exponent, BigInt::one());
        s
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, coefficient: BigInt) {
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_assign(&mut self, other: &MonomialSum) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    /// Product, dropping every monomial for which `keep` is false.
    pub fn mul_filtered(&self, other: &MonomialSum, keep: impl Fn(&[i64]) -> bool) -> MonomialSum {
        let mut out = MonomialSum::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if keep(&e) {
                    out.add_term(e, ca * cb);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &MonomialSum) -> MonomialSum {
        self.mul_filtered(other, |_| true)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `x = 1`: the sum of coefficients.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for MonomialSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<i64>, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let (da, db): (i64, i64) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let vars = render_monomial(e);
            match (c == &BigInt::one(), vars.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (true, false) => write!(f, "{vars}")?,
                (false, false) => write!(f, "{c}{vars}")?,
            }
        }
        Ok(())
    }
}

fn render_monomial(e: &[i64]) -> String {
    let name = |i: usize| -> String {
        if e.len() <= 3 {
            ["x", "y", "z"][i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    };
    let mut s = String::new();
    for (i, &p) in e.iter().enumerate() {
        match p {
            0 => {}
            1 => s.push_str(&name(i)),
            _ => s.push_str(&format!("{}^{p}", name(i))),
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionMatrix {
    pub poset: BasePoset,
    pub states: Vec<BaseState>,
    pub entries: Vec<Vec<MonomialSum>>,
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.states.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &MonomialSum {
        &self.entries[i][j]
    }

    pub fn num_monomials(&self) -> usize {
        self.entries.iter().flatten().map(MonomialSum::num_terms).sum()
    }

    fn state_index(&self, labels: &[usize]) -> Option<usize> {
        self.states.binary_search_by(|s| s.0.as_slice().cmp(labels)).ok()
    }
}

/// Largest move component searched. Moves can raise a label from 1 to `2m`.
fn move_bound(m: usize) -> usize {
    2 * m - 1
}

pub fn build_transition_matrix(p: &BasePoset) -> TransitionMatrix {
    let m = p.m();
    let states = enumerate_base_states(m);
    let r = states.len();
    let mut mtx = TransitionMatrix {
        poset: p.clone(),
        states: states.clone(),
        entries: vec![vec![MonomialSum::default(); r]; r],
    };
    let bound = move_bound(m);
    for (i, b) in states.iter().enumerate() {
        let mut f = vec![0usize; m];
        loop {
            if let Some(j) = move_target(&mtx, p, &b.0, &f) {
                mtx.entries[i][j].add_term(f.iter().map(|&x| x as i64).collect(), BigInt::one());
            }
            let Some(pos) = (0..m).rev().find(|&t| f[t] < bound) else { break };
            f[pos] += 1;
            for x in &mut f[pos + 1..] {
                *x = 0;
            }
        }
    }
    mtx
}

/// Index of the state reached from `b` by `f`, if `f` is a move.
fn move_target(mtx: &TransitionMatrix, p: &BasePoset, b: &[usize], f: &[usize]) -> Option<usize> {
    let m = b.len();
    let t: Vec<usize> = b.iter().zip(f).map(|(x, y)| x + y).collect();
    let max_t = *t.iter().max()?;
    // the two levels together use every label up to the top one
    if !(1..=max_t).all(|v| b.contains(&v) || t.contains(&v)) {
        return None;
    }
    // upper labels respect the covers
    for up in 0..m {
        for low in 0..m {
            if p.covers(up, low) && t[up] < b[low] {
                return None;
            }
        }
    }
    let shift = t.iter().min()? - 1;
    let normalized: Vec<usize> = t.iter().map(|x| x - shift).collect();
    mtx.state_index(&normalized)
}

/// Entry `(i, j)` from the closed form: with `b` = state `i`, `a` = state
/// `j`, `λ = −min{a_p − b_q : p covers q}` and `μ_max = max(b) − λ`, the
/// entry is `Σ_{μ=0}^{μ_max} x^{a−b} (x_1⋯x_m)^{λ+μ}`.
pub fn structure_formula_entry(p: &BasePoset, states: &[BaseState], i: usize, j: usize) -> Result<MonomialSum> {
    let r = states.len();
    for idx in [i, j] {
        if idx >= r {
            return Err(Error::OrbitIndex { index: idx, count: r });
        }
    }
    let (b, a) = (&states[i].0, &states[j].0);
    let m = p.m();
    let lambda = -(0..m)
        .flat_map(|up| (0..m).filter(move |&low| p.covers(up, low)).map(move |low| (up, low)))
        .map(|(up, low)| a[up] as i64 - b[low] as i64)
        .min()
        .expect("diagonal covers present");
    let mu_max = states[i].max_label() as i64 - lambda;
    let mut out = MonomialSum::default();
    for mu in 0..=mu_max {
        let e = (0..m).map(|t| a[t] as i64 - b[t] as i64 + lambda + mu).collect();
        out.add_term(e, BigInt::one());
    }
    Ok(out)
}

/// `1ᵀ Mⁿ|_{x=1} 1`: chains through `n + 1` levels.
pub fn count_chains(mtx: &TransitionMatrix, n: usize) -> BigInt {
    let r = mtx.size();
    let counts: Vec<Vec<BigInt>> = mtx
        .entries
        .iter()
        .map(|row| row.iter().map(MonomialSum::eval_at_ones).collect())
        .collect();
    let mut v = vec![BigInt::one(); r];
    for _ in 0..n {
        v = (0..r).map(|j| (0..r).map(|i| &v[i] * &counts[i][j]).sum()).collect();
    }
    v.into_iter().sum()
}

/// `(x^{b¹}, …, x^{bʳ}) · Mⁿ`, summed over the final state, keeping only
/// monomials accepted by `keep`. Exponents are absolute labels; since moves
/// never lower a label, a monomial rejected for exceeding a bound stays
/// rejected, so pruning each step is exact.
fn expand(mtx: &TransitionMatrix, n: usize, keep: impl Fn(&[i64]) -> bool + Copy) -> MonomialSum {
    let r = mtx.size();
    let mut v: Vec<MonomialSum> = mtx
        .states
        .iter()
        .map(|s| {
            let e: Vec<i64> = s.0.iter().map(|&x| x as i64).collect();
            if keep(&e) { MonomialSum::monomial(e) } else { MonomialSum::default() }
        })
        .collect();
    for _ in 0..n {
        let mut next = vec![MonomialSum::default(); r];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_empty() {
                continue;
            }
            for (j, out) in next.iter_mut().enumerate() {
                if !mtx.entries[i][j].is_empty() {
                    out.add_assign(&vi.mul_filtered(&mtx.entries[i][j], keep));
                }
            }
        }
        v = next;
    }
    let mut total = MonomialSum::default();
    for s in &v {
        total.add_assign(s);
    }
    total
}

/// Chains whose final labels are all at most `k`.
pub fn count_chains_bounded(mtx: &TransitionMatrix, n: usize, k: usize) -> BigInt {
    let k = k as i64;
    expand(mtx, n, |e| e.iter().all(|&x| x <= k)).eval_at_ones()
}

/// Monomials of `(x^{b})·Mⁿ·1` whose largest exponent is exactly `k`.
pub fn count_surjective_order_preserving(mtx: &TransitionMatrix, n: usize, k: usize) -> BigInt {
    let k = k as i64;
    expand(mtx, n, |e| e.iter().all(|&x| x <= k))
        .terms()
        .filter(|(e, _)| e.iter().copied().max() == Some(k))
        .map(|(_, c)| c.clone())
        .sum()
}

/// `Σ_{i=1}^{k+1} C(k+1, i) · surj(n, i)`: order-preserving maps into `[k+1]`.
pub fn ehrhart_order_polytope(mtx: &TransitionMatrix, n: usize, k: usize) -> BigInt {
    (1..=k + 1)
        .map(|i| binomial(k + 1, i) * count_surjective_order_preserving(mtx, n, i))
        .sum()
}

/// Ehrhart polynomial in `k` of the stacked poset with `n + 1` levels,
/// interpolated from `ehrhart_order_polytope` at `k = 0..=d` (`d = m(n+1)`)
/// and checked at `k = d + 1`.
pub fn ehrhart_polynomial(mtx: &TransitionMatrix, n: usize) -> Result<Vec<BigRational>> {
    let d = mtx.poset.m() * (n + 1);
    let points: Vec<(i64, BigInt)> = (0..=d + 1).map(|k| (k as i64, ehrhart_order_polytope(mtx, n, k))).collect();
    interpolate_rational(&points, d)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Order-preserving maps from the stacked poset with `n + 1` levels into
/// `[k]` (surjective ones only when `surjective`), by direct enumeration.
/// Upper element `p` on level `t + 1` must get a label at least that of
/// every lower element `q` on level `t` it covers.
pub fn brute_force_order_preserving(p: &BasePoset, n: usize, k: usize, surjective: bool) -> Result<BigInt> {
    let m = p.m();
    let cells = m * (n + 1);
    let candidates = (k as u128).checked_pow(cells as u32).unwrap_or(u128::MAX);
    if candidates > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { what: "order-preserving map candidates", size: candidates, limit: BRUTE_FORCE_LIMIT });
    }
    if k == 0 {
        return Ok(BigInt::zero());
    }
    let mut labels = vec![0usize; cells];
    let mut used = vec![0usize; k + 1];
    let mut count = 0u64;
    fill(p, k, surjective, 0, &mut labels, &mut used, &mut count);
    Ok(BigInt::from(count))
}

fn fill(
    p: &BasePoset,
    k: usize,
    surjective: bool,
    cell: usize,
    labels: &mut [usize],
    used: &mut [usize],
    count: &mut u64,
) {
    let m = p.m();
    if cell == labels.len() {
        if !surjective || used[1..].iter().all(|&u| u > 0) {
            *count += 1;
        }
        return;
    }
    let (level, pos) = (cell / m, cell % m);
    let low = if level == 0 {
        1
    } else {
        (0..m)
            .filter(|&q| p.covers(pos, q))
            .map(|q| labels[(level - 1) * m + q])
            .max()
            .unwrap_or(1)
    };
    for v in low..=k {
        labels[cell] = v;
        used[v] += 1;
        fill(p, k, surjective, cell + 1, labels, used, count);
        used[v] -= 1;
    }
}
