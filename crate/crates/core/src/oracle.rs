//! Brute-force ground truth. Everything here is deliberately naive and is used
//! to check the fast routes.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::eigen;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{interpolate, IntPolynomial};

pub const FULL_TRANSFER_LIMIT: usize = 20_000;
/// Cap on `k^(free vertices)` for the compatible-pair and monotone-map oracles.
pub const CANDIDATE_LIMIT: u128 = 100_000_000;
/// Cap on edges enumerated over both orientations at once.
pub const ORIENTATION_EDGE_LIMIT: usize = 24;

/// Colors (from `1`) fixed on a subset of the vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialColoring {
    assignments: BTreeMap<usize, usize>,
}

impl PartialColoring {
    pub fn new(g: &Graph, assignments: BTreeMap<usize, usize>) -> Result<Self> {
        let n = g.num_vertices();
        for (&v, &c) in &assignments {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if c == 0 {
                return Err(Error::InvalidSize { what: "color (colors start at 1)", value: c });
            }
        }
        for (u, v) in g.edges() {
            if let (Some(a), Some(b)) = (assignments.get(&u), assignments.get(&v)) {
                if a == b {
                    return Err(Error::ImproperColoring(u, v));
                }
            }
        }
        Ok(PartialColoring { assignments })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Vertex `i` gets `colors[i]`.
    pub fn prefix(g: &Graph, colors: &[usize]) -> Result<Self> {
        Self::new(g, colors.iter().copied().enumerate().collect())
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.assignments.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// `k′`, the largest fixed color (0 when nothing is fixed).
    pub fn max_color(&self) -> usize {
        self.assignments.values().copied().max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignments.iter().map(|(&v, &c)| (v, c))
    }

    fn as_slots(&self, n: usize) -> Vec<Option<usize>> {
        (0..n).map(|v| self.get(v)).collect()
    }
}

fn check_fixed(g: &Graph, fixed: &PartialColoring, k: usize) -> Result<()> {
    if fixed.iter().any(|(v, _)| v >= g.num_vertices()) {
        return Err(Error::DimensionMismatch { expected: g.num_vertices(), got: fixed.len() });
    }
    if fixed.max_color() > k {
        return Err(Error::TooFewColors { k: k as i64, needed: fixed.max_color() as i64 });
    }
    Ok(())
}

/// Calls `visit` on every proper `k`-coloring extending `fixed`, in
/// lexicographic order.
pub fn for_each_extension(
    g: &Graph,
    fixed: &PartialColoring,
    k: usize,
    mut visit: impl FnMut(&[usize]),
) -> Result<()> {
    check_fixed(g, fixed, k)?;
    let n = g.num_vertices();
    // only neighbours with a smaller index constrain the next choice
    let earlier: Vec<Vec<usize>> = g
        .adjacency()
        .into_iter()
        .enumerate()
        .map(|(v, ns)| ns.into_iter().filter(|&u| u < v).collect())
        .collect();
    let slots = fixed.as_slots(n);
    let mut colors = vec![0; n];
    extend(&earlier, &slots, k, 0, &mut colors, &mut visit);
    Ok(())
}

fn extend(
    earlier: &[Vec<usize>],
    slots: &[Option<usize>],
    k: usize,
    v: usize,
    colors: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if v == colors.len() {
        visit(colors);
        return;
    }
    let range = match slots[v] {
        Some(c) => c..=c,
        None => 1..=k,
    };
    for c in range {
        if earlier[v].iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            extend(earlier, slots, k, v + 1, colors, visit);
        }
    }
    colors[v] = 0;
}

pub fn enumerate_proper_colorings(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_extension(g, &PartialColoring::empty(), k, |c| out.push(c.to_vec()))
        .expect("nothing fixed");
    out
}

pub fn count_proper_colorings(g: &Graph, k: usize) -> u64 {
    count_extensions(g, &PartialColoring::empty(), k).expect("nothing fixed")
}

pub fn count_extensions(g: &Graph, fixed: &PartialColoring, k: usize) -> Result<u64> {
    count_extensions_where(g, fixed, k, |_| true)
}

/// Proper extensions of `fixed` that also satisfy `pred`.
pub fn count_extensions_where(
    g: &Graph,
    fixed: &PartialColoring,
    k: usize,
    mut pred: impl FnMut(&[usize]) -> bool,
) -> Result<u64> {
    let mut count = 0u64;
    for_each_extension(g, fixed, k, |c| {
        if pred(c) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// `χ_G(k)` by deletion–contraction down to edgeless graphs (`k^N`).
pub fn chromatic_polynomial(g: &Graph) -> IntPolynomial {
    let mut memo = HashMap::new();
    chromatic_memo(g, &mut memo)
}

fn chromatic_memo(g: &Graph, memo: &mut HashMap<Graph, IntPolynomial>) -> IntPolynomial {
    let Some((u, v)) = g.edges().last() else {
        let mut coeffs = vec![BigInt::zero(); g.num_vertices()];
        coeffs.push(BigInt::from(1));
        return IntPolynomial::new(coeffs);
    };
    if let Some(p) = memo.get(g) {
        return p.clone();
    }
    let deleted = g.delete_edge(u, v).expect("edge present");
    let contracted = g.contract_edge(u, v).expect("edge present");
    let p = chromatic_memo(&deleted, memo) - chromatic_memo(&contracted, memo);
    memo.insert(g.clone(), p.clone());
    p
}

/// Number of proper completions of `fixed` as a polynomial in `k`, by counting
/// at consecutive `k ≥ max(N, k′)` and interpolating with degree bound
/// `N − |V′|`.
pub fn restricted_chromatic(g: &Graph, fixed: &PartialColoring) -> Result<IntPolynomial> {
    let n = g.num_vertices();
    let s = n - fixed.len();
    let start = n.max(fixed.max_color()).max(1);
    let points = (start..=start + s + 1)
        .map(|k| Ok((k as i64, BigInt::from(count_extensions(g, fixed, k)?))))
        .collect::<Result<Vec<_>>>()?;
    interpolate(&points, s)
}

/// How acyclicity is judged for restricted compatible pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompatibilityRule {
    /// Acyclic on the graph itself, plus: for each free vertex, edges to
    /// fixed neighbours sharing one color point the same way.
    Literal,
    /// Fixed vertices sharing a color act as a single node when testing for
    /// cycles. This is what the lattice-point count behind reciprocity sees:
    /// all hyperplanes `x_v = c` with the same `c` meet in common flats.
    #[default]
    MergedFixedColors,
}

/// Pairs (acyclic orientation, `k`-coloring extending `fixed`, not
/// necessarily proper) with colors weakly increasing along every oriented
/// edge, counted under [`CompatibilityRule::MergedFixedColors`].
pub fn count_compatible_pairs_restricted(g: &Graph, fixed: &PartialColoring, k: usize) -> Result<BigInt> {
    count_compatible_pairs_with(g, fixed, k, CompatibilityRule::default())
}

/// [`count_compatible_pairs_restricted`] under an explicit rule.
pub fn count_compatible_pairs_with(
    g: &Graph,
    fixed: &PartialColoring,
    k: usize,
    rule: CompatibilityRule,
) -> Result<BigInt> {
    check_fixed(g, fixed, k)?;
    let n = g.num_vertices();
    let free: Vec<usize> = (0..n).filter(|&v| fixed.get(v).is_none()).collect();
    let candidates = (k as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
    if candidates > CANDIDATE_LIMIT {
        return Err(Error::TooLarge {
            what: "compatible-pair colorings",
            size: candidates,
            limit: CANDIDATE_LIMIT,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    // groups of edges {v, u} with v free and u fixed, keyed by (v, color of u)
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (idx, &(a, b)) in edges.iter().enumerate() {
        match (fixed.get(a), fixed.get(b)) {
            (None, Some(c)) => groups.entry((a, c)).or_default().push(idx),
            (Some(c), None) => groups.entry((b, c)).or_default().push(idx),
            _ => {}
        }
    }
    let groups: Vec<(usize, Vec<usize>)> = groups
        .into_iter()
        .filter(|(_, es)| es.len() >= 2)
        .map(|((v, _), es)| (v, es))
        .collect();

    // node used for cycle detection: fixed vertices of one color share the
    // first such vertex under the merged rule
    let node: Vec<usize> = (0..n)
        .map(|v| match (rule, fixed.get(v)) {
            (CompatibilityRule::MergedFixedColors, Some(c)) => {
                (0..n).find(|&u| fixed.get(u) == Some(c)).unwrap_or(v)
            }
            _ => v,
        })
        .collect();
    let mut colors: Vec<usize> = fixed.as_slots(n).into_iter().map(|c| c.unwrap_or(1)).collect();
    if k == 0 {
        return Ok(if free.is_empty() && n == 0 { BigInt::from(1) } else { BigInt::zero() });
    }
    let mut total = BigInt::zero();
    loop {
        total += orientations_for(&edges, &groups, &colors, &node)?;
        // odometer over the free vertices
        let mut i = 0;
        loop {
            if i == free.len() {
                return Ok(total);
            }
            let v = free[i];
            if colors[v] < k {
                colors[v] += 1;
                break;
            }
            colors[v] = 1;
            i += 1;
        }
    }
}

// Edges with distinct endpoint colors are forced from the smaller color to the
// larger one; a directed cycle must stay on one color, so only equal-colored
// edges are enumerated and only they can close a cycle.
fn orientations_for(
    edges: &[(usize, usize)],
    groups: &[(usize, Vec<usize>)],
    colors: &[usize],
    node: &[usize],
) -> Result<u64> {
    let free_edges: Vec<usize> = (0..edges.len())
        .filter(|&i| colors[edges[i].0] == colors[edges[i].1])
        .collect();
    if free_edges.len() > ORIENTATION_EDGE_LIMIT {
        return Err(Error::TooLarge {
            what: "equal-colored edges to orient",
            size: free_edges.len() as u128,
            limit: ORIENTATION_EDGE_LIMIT as u128,
        });
    }
    // direction of edge i: true = first endpoint towards second
    let mut forward = vec![false; edges.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        forward[i] = colors[a] < colors[b];
    }
    let mut count = 0;
    for mask in 0u64..(1u64 << free_edges.len()) {
        for (bit, &e) in free_edges.iter().enumerate() {
            forward[e] = mask >> bit & 1 == 1;
        }
        let grouped_ok = groups.iter().all(|(v, grp)| {
            let towards_free = |e: usize| (edges[e].1 == *v) == forward[e];
            let first = towards_free(grp[0]);
            grp.iter().all(|&e| towards_free(e) == first)
        });
        if grouped_ok && is_acyclic(node, edges, &free_edges, &forward) {
            count += 1;
        }
    }
    Ok(count)
}

fn is_acyclic(node: &[usize], edges: &[(usize, usize)], subset: &[usize], forward: &[bool]) -> bool {
    let n = node.len();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &e in subset {
        let (a, b) = edges[e];
        let (a, b) = (node[a], node[b]);
        let (from, to) = if forward[e] { (a, b) } else { (b, a) };
        out[from].push(to);
        indeg[to] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen == n
}

/// Number of acyclic orientations (compatible pairs with one color).
pub fn count_acyclic_orientations(g: &Graph) -> Result<BigInt> {
    count_compatible_pairs_restricted(g, &PartialColoring::empty(), 1)
}

/// Adjacency structure on the proper `k`-colorings of `G`: two colorings are
/// joined when they differ at every vertex. Stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullTransferMatrix {
    pub colorings: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
}

impl FullTransferMatrix {
    pub fn size(&self) -> usize {
        self.colorings.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        u8::from(self.neighbors[i].binary_search(&j).is_ok())
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.size())
            .map(|i| (0..self.size()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn index_of(&self, coloring: &[usize]) -> Option<usize> {
        self.colorings.binary_search_by(|c| c.as_slice().cmp(coloring)).ok()
    }

    /// `v ↦ A·v` over the integers.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.neighbors
            .iter()
            .map(|ns| ns.iter().fold(BigInt::zero(), |acc, &j| acc + &v[j]))
            .collect()
    }

    pub fn dominant_eigenvalue(&self) -> Result<f64> {
        eigen::power_iteration(self.size(), |x, y| {
            for (ns, out) in self.neighbors.iter().zip(y.iter_mut()) {
                *out = ns.iter().map(|&j| x[j]).sum();
            }
        })
    }
}

pub fn full_transfer_matrix(g: &Graph, k: usize) -> Result<FullTransferMatrix> {
    let size = count_proper_colorings(g, k);
    if size > FULL_TRANSFER_LIMIT as u64 {
        return Err(Error::TooLarge {
            what: "full transfer matrix",
            size: size.into(),
            limit: FULL_TRANSFER_LIMIT as u128,
        });
    }
    let colorings = enumerate_proper_colorings(g, k);
    let neighbors = colorings
        .iter()
        .map(|a| {
            colorings
                .iter()
                .enumerate()
                .filter(|(_, b)| a.iter().zip(b.iter()).all(|(x, y)| x != y))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    Ok(FullTransferMatrix { colorings, neighbors })
}

/// Proper `k`-colorings of `G × P_n` as `1ᵀ A^{n−1} 1`.
pub fn count_colorings_path(g: &Graph, n: usize, k: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidSize { what: "path length", value: n });
    }
    let a = full_transfer_matrix(g, k)?;
    let mut v = vec![BigInt::from(1); a.size()];
    for _ in 1..n {
        v = a.apply(&v);
    }
    Ok(v.into_iter().sum())
}

/// Closed walks of length `n` in the compatibility graph, `tr(A^n)`; for
/// `n ≥ 3` this counts proper `k`-colorings of `G × C_n`.
pub fn count_colorings_cycle(g: &Graph, n: usize, k: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidSize { what: "cycle length", value: n });
    }
    let a = full_transfer_matrix(g, k)?;
    let mut trace = BigInt::zero();
    for i in 0..a.size() {
        let mut v = vec![BigInt::zero(); a.size()];
        v[i] = BigInt::from(1);
        for _ in 0..n {
            v = a.apply(&v);
        }
        trace += &v[i];
    }
    Ok(trace)
}
