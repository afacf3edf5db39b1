//! Colorings up to color permutation are partitions of `V` into independent
//! sets. This module enumerates them, groups them under graph automorphisms
//! and counts them.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};
use crate::poly::IntPolynomial;

/// Partition of `0..N` stored as a restricted-growth string: `rgs[v]` is the
/// block index of `v`, blocks numbered by first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndependentPartition {
    rgs: Vec<usize>,
}

impl IndependentPartition {
    /// Canonicalizes any labelling (block ids or colors) into RGS form.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: HashMap<usize, usize> = HashMap::new();
        let rgs = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        IndependentPartition { rgs }
    }

    /// Like [`from_labels`](Self::from_labels) but checks independence in `g`.
    pub fn new(g: &Graph, labels: &[usize]) -> Result<Self> {
        if labels.len() != g.num_vertices() {
            return Err(Error::DimensionMismatch { expected: g.num_vertices(), got: labels.len() });
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| labels[u] == labels[v]) {
            return Err(Error::ImproperColoring(u, v));
        }
        Ok(Self::from_labels(labels))
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn num_vertices(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (v, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(v);
        }
        blocks
    }

    /// Coloring with colors `1..=s` assigned by first appearance.
    pub fn representative_coloring(&self) -> Vec<usize> {
        self.rgs.iter().map(|b| b + 1).collect()
    }

    /// `σ·π`: vertex `σ(v)` goes to the block of `v`.
    pub fn act(&self, sigma: &Permutation) -> Self {
        let mut labels = vec![0; self.rgs.len()];
        for (v, &b) in self.rgs.iter().enumerate() {
            labels[sigma.apply(v)] = b;
        }
        Self::from_labels(&labels)
    }
}

impl fmt::Display for IndependentPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{{{}}}", parts.join("|"))
    }
}

/// One automorphism class of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitClass {
    /// Sorted; the first member is the representative.
    pub members: Vec<IndependentPartition>,
    pub representative: IndependentPartition,
    pub multiplicity: usize,
    pub colors: usize,
}

impl OrbitClass {
    /// `m · k(k−1)···(k−s+1)`: colorings of `G` lying in this class.
    pub fn weight(&self) -> IntPolynomial {
        orbit_weight(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSet {
    pub sk_orbits: Vec<IndependentPartition>,
    /// Ordered by representative.
    pub orbits: Vec<OrbitClass>,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn max_colors(&self) -> usize {
        self.orbits.iter().map(|o| o.colors).max().unwrap_or(0)
    }

    /// Index of the class containing `partition`.
    pub fn class_of(&self, partition: &IndependentPartition) -> Option<usize> {
        self.orbits
            .iter()
            .position(|o| o.members.binary_search(partition).is_ok())
    }

    pub fn class_index(&self) -> HashMap<IndependentPartition, usize> {
        self.orbits
            .iter()
            .enumerate()
            .flat_map(|(i, o)| o.members.iter().map(move |m| (m.clone(), i)))
            .collect()
    }

    pub fn weights(&self) -> Vec<IntPolynomial> {
        self.orbits.iter().map(orbit_weight).collect()
    }
}

/// Every partition of `V(g)` into nonempty independent sets, in RGS
/// lexicographic order.
pub fn color_orbits(g: &Graph) -> Vec<IndependentPartition> {
    let n = g.num_vertices();
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut rgs = Vec::with_capacity(n);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    extend_partition(&adj, n, &mut rgs, &mut blocks, &mut out);
    out
}

fn extend_partition(
    adj: &[Vec<usize>],
    n: usize,
    rgs: &mut Vec<usize>,
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<IndependentPartition>,
) {
    let v = rgs.len();
    if v == n {
        out.push(IndependentPartition { rgs: rgs.clone() });
        return;
    }
    for b in 0..=blocks.len() {
        if b < blocks.len() && blocks[b].iter().any(|u| adj[v].contains(u)) {
            continue;
        }
        if b == blocks.len() {
            blocks.push(Vec::new());
        }
        blocks[b].push(v);
        rgs.push(b);
        extend_partition(adj, n, rgs, blocks, out);
        rgs.pop();
        blocks[b].pop();
        if blocks[b].is_empty() {
            blocks.pop();
        }
    }
}

/// Groups `partitions` into classes under `group`, which must consist of
/// automorphisms of `g`.
pub fn quotient_by_automorphisms(
    g: &Graph,
    partitions: &[IndependentPartition],
    group: &[Permutation],
) -> Result<OrbitSet> {
    for sigma in group {
        if sigma.len() != g.num_vertices() {
            return Err(Error::DimensionMismatch { expected: g.num_vertices(), got: sigma.len() });
        }
        if let Some((u, v)) = sigma.violating_edge(g) {
            return Err(Error::NotAutomorphism { perm: sigma.images().to_vec(), u, v });
        }
    }
    let mut sk_orbits = partitions.to_vec();
    sk_orbits.sort();
    sk_orbits.dedup();

    let mut assigned: HashSet<&IndependentPartition> = HashSet::new();
    let mut by_rep: BTreeMap<IndependentPartition, Vec<IndependentPartition>> = BTreeMap::new();
    for p in &sk_orbits {
        if assigned.contains(p) {
            continue;
        }
        // closure under the action, so a generating set suffices
        let mut seen: HashSet<IndependentPartition> = HashSet::from([p.clone()]);
        let mut stack = vec![p.clone()];
        while let Some(q) = stack.pop() {
            for s in group {
                let img = q.act(s);
                if seen.insert(img.clone()) {
                    stack.push(img);
                }
            }
        }
        let mut members: Vec<IndependentPartition> = seen.into_iter().collect();
        members.sort();
        for m in &members {
            let Ok(idx) = sk_orbits.binary_search(m) else {
                return Err(Error::Invariant(format!("image {m} is not among the input partitions")));
            };
            assigned.insert(&sk_orbits[idx]);
        }
        by_rep.insert(members[0].clone(), members);
    }
    let orbits = by_rep
        .into_iter()
        .map(|(rep, members)| OrbitClass {
            multiplicity: members.len(),
            colors: rep.num_blocks(),
            representative: rep,
            members,
        })
        .collect();
    Ok(OrbitSet { sk_orbits, orbits })
}

/// Convenience: all partitions of `g` quotiented by `group`.
pub fn orbit_set(g: &Graph, group: &[Permutation]) -> Result<OrbitSet> {
    quotient_by_automorphisms(g, &color_orbits(g), group)
}

pub fn orbit_weight(o: &OrbitClass) -> IntPolynomial {
    IntPolynomial::falling_factorial(o.colors).scale(&BigInt::from(o.multiplicity))
}

/// Bell number via the Bell triangle.
pub fn bell_number(n: usize) -> BigInt {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("nonempty").clone());
        for x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// `F(G)`, the number of partitions of `V` into independent sets, by
/// `F(G) = F(G − e) − F(G / e)` down to edgeless graphs (`Bell(N)`).
pub fn orbit_count_f(g: &Graph) -> BigInt {
    let mut memo = HashMap::new();
    orbit_count_memo(g, &mut memo)
}

fn orbit_count_memo(g: &Graph, memo: &mut HashMap<Graph, BigInt>) -> BigInt {
    let Some((u, v)) = g.edges().last() else {
        return bell_number(g.num_vertices());
    };
    if let Some(x) = memo.get(g) {
        return x.clone();
    }
    let deleted = g.delete_edge(u, v).expect("edge present");
    let contracted = g.contract_edge(u, v).expect("edge present");
    let f = orbit_count_memo(&deleted, memo) - orbit_count_memo(&contracted, memo);
    memo.insert(g.clone(), f.clone());
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphism_group, cycle_graph, path_graph};

    #[test]
    fn p3_partitions() {
        let parts = color_orbits(&path_graph(3).unwrap());
        let blocks: Vec<_> = parts.iter().map(|p| p.blocks()).collect();
        assert_eq!(blocks, vec![vec![vec![0, 2], vec![1]], vec![vec![0], vec![1], vec![2]]]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(color_orbits(&cycle_graph(5).unwrap()).len(), 11);
        assert_eq!(color_orbits(&Graph::complete(3)).len(), 1);
        assert_eq!(color_orbits(&Graph::empty(4)).len(), 15);
    }

    #[test]
    fn c5_quotient() {
        let g = cycle_graph(5).unwrap();
        let os = orbit_set(&g, &automorphism_group(&g, None).unwrap()).unwrap();
        let mut mult: Vec<_> = os.orbits.iter().map(|o| o.multiplicity).collect();
        mult.sort();
        assert_eq!(mult, vec![1, 5, 5]);
        let reps: Vec<_> = os.orbits.iter().map(|o| o.representative.rgs().to_vec()).collect();
        assert_eq!(reps, vec![vec![0, 1, 0, 1, 2], vec![0, 1, 0, 2, 3], vec![0, 1, 2, 3, 4]]);
        assert_eq!(os.orbits.iter().map(|o| o.multiplicity).sum::<usize>(), os.sk_orbits.len());
    }

    #[test]
    fn trivial_group_keeps_everything() {
        let g = cycle_graph(5).unwrap();
        let os = orbit_set(&g, &[Permutation::identity(5)]).unwrap();
        assert_eq!(os.len(), 11);
        assert!(os.orbits.iter().all(|o| o.multiplicity == 1));
    }

    #[test]
    fn rejects_non_automorphism() {
        let g = path_graph(3).unwrap();
        let bad = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(matches!(orbit_set(&g, &[bad]), Err(Error::NotAutomorphism { .. })));
    }

    #[test]
    fn weights() {
        let g = path_graph(3).unwrap();
        let os = orbit_set(&g, &automorphism_group(&g, None).unwrap()).unwrap();
        assert_eq!(os.len(), 2);
        assert_eq!(os.orbits[0].weight(), IntPolynomial::from_descending(&[1, -1, 0]));
        let c5 = cycle_graph(5).unwrap();
        let os = orbit_set(&c5, &automorphism_group(&c5, None).unwrap()).unwrap();
        assert_eq!(os.orbits[0].weight(), IntPolynomial::falling_factorial(3).scale(&5.into()));
        assert_eq!(os.orbits[2].weight(), IntPolynomial::falling_factorial(5));
    }

    #[test]
    fn action_and_display() {
        let p = IndependentPartition::from_labels(&[7, 3, 7]);
        assert_eq!(p.rgs(), &[0, 1, 0]);
        assert_eq!(p.to_string(), "{0,2|1}");
        let swap = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(p.act(&swap).rgs(), &[0, 1, 1]);
    }

    #[test]
    fn bell_values() {
        let v: Vec<u64> = (0..8).map(|n| bell_number(n).try_into().unwrap()).collect();
        assert_eq!(v, vec![1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn deletion_contraction_counts() {
        assert_eq!(orbit_count_f(&Graph::empty(4)), BigInt::from(15));
        assert_eq!(orbit_count_f(&path_graph(5).unwrap()), BigInt::from(15));
        assert_eq!(orbit_count_f(&cycle_graph(4).unwrap()), BigInt::from(4));
        assert_eq!(orbit_count_f(&Graph::complete(4)), BigInt::from(1));
    }
}
