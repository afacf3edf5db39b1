//! Simple undirected graphs on vertices `0..N`, standard families, Cartesian
//! products, deletion/contraction and automorphism groups.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count for which the automorphism group is found by trying
/// every permutation.
pub const BRUTE_FORCE_AUTOMORPHISM_LIMIT: usize = 9;

/// Simple undirected graph. Edges are stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { n, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Adjacency lists, indexed by vertex.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.edges.remove(&(u.min(v), u.max(v)));
        Ok(g)
    }

    /// Merges the endpoints of `{u, v}` into the smaller index, shifts the
    /// later vertices down by one and drops loops and parallel edges.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |x: usize| match x.cmp(&gone) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => x - 1,
        };
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        Ok(Graph { n: self.n - 1, edges })
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    /// Edge-list text: a header `N M` then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "missing `N M` header".into(),
        })?;
        let head = parse_usizes(header, hline + 1)?;
        let [n, m] = head[..] else {
            return Err(Error::Parse {
                line: hline + 1,
                column: 1,
                message: format!("expected `N M`, found {} fields", head.len()),
            });
        };
        let mut edges = Vec::with_capacity(m);
        for (idx, line) in lines.by_ref().take(m) {
            let f = parse_usizes(line, idx + 1)?;
            let [u, v] = f[..] else {
                return Err(Error::Parse {
                    line: idx + 1,
                    column: 1,
                    message: format!("expected `u v`, found {} fields", f.len()),
                });
            };
            for x in [u, v] {
                if x >= n {
                    return Err(Error::Parse {
                        line: idx + 1,
                        column: column_of(line, &x.to_string()),
                        message: format!("vertex {x} out of range 0..{n}"),
                    });
                }
            }
            if u == v {
                return Err(Error::Parse {
                    line: idx + 1,
                    column: 1,
                    message: format!("self-loop at vertex {u}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count() + 1,
                column: 1,
                message: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        if let Some((idx, _)) = lines.next() {
            return Err(Error::Parse { line: idx + 1, column: 1, message: "trailing data".into() });
        }
        Graph::new(n, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

fn column_of(line: &str, token: &str) -> usize {
    line.find(token).map_or(1, |c| c + 1)
}

pub(crate) fn parse_usizes(line: &str, lineno: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut col = 0;
    for tok in line.split_whitespace() {
        let start = line[col..].find(tok).map_or(col, |p| col + p);
        col = start + tok.len();
        out.push(tok.parse::<usize>().map_err(|_| Error::Parse {
            line: lineno,
            column: start + 1,
            message: format!("expected a nonnegative integer, found `{tok}`"),
        })?);
    }
    Ok(out)
}

/// `P_n`: vertices `0..n`, edges `{i, i+1}`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize { what: "path graph", value: n });
    }
    Graph::new(n, (0..n - 1).map(|i| (i, i + 1)))
}

/// `C_n` for `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSize { what: "cycle graph", value: n });
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Cartesian product. Vertex `(u, v)` is encoded as `u * |V(g2)| + v`, so for
/// `cartesian_product(&path_graph(n)?, g)` layer `i` occupies the contiguous
/// block `i*N .. (i+1)*N`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.n;
    let mut edges = BTreeSet::new();
    for u in 0..g1.n {
        for &(a, b) in &g2.edges {
            edges.insert((u * n2 + a, u * n2 + b));
        }
    }
    for &(a, b) in &g1.edges {
        for v in 0..n2 {
            edges.insert((a * n2 + v, b * n2 + v));
        }
    }
    Graph { n: g1.n * n2, edges }
}

/// `n` stacked copies of `g` joined layer to layer: `P_n × G` with layer `i`
/// on vertices `i*N .. (i+1)*N`.
pub fn layered_path_product(g: &Graph, n: usize) -> Result<Graph> {
    Ok(cartesian_product(&path_graph(n)?, g))
}

/// Bijection on `0..N`, stored as the image of each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(n));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&v| self.images[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (v, &w) in self.images.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { images: inv }
    }

    /// Returns the first edge sent to a non-edge, if any.
    pub fn violating_edge(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .find(|&(u, v)| !g.has_edge(self.apply(u), self.apply(v)))
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.len() == g.num_vertices() && self.violating_edge(g).is_none()
    }

    pub fn parse_lines(text: &str, n: usize) -> Result<Vec<Permutation>> {
        let mut out = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let images = parse_usizes(line, idx + 1)?;
            if images.len() != n {
                return Err(Error::Parse {
                    line: idx + 1,
                    column: 1,
                    message: format!("expected {n} images, found {}", images.len()),
                });
            }
            out.push(Permutation::new(images).map_err(|e| Error::Parse {
                line: idx + 1,
                column: 1,
                message: e.to_string(),
            })?);
        }
        Ok(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All automorphisms of `g`, sorted.
///
/// With `generators`, each one is checked against the edge set and the group
/// they generate is returned. Without, every permutation is tried, which is
/// only allowed up to [`BRUTE_FORCE_AUTOMORPHISM_LIMIT`] vertices.
pub fn automorphism_group(g: &Graph, generators: Option<&[Permutation]>) -> Result<Vec<Permutation>> {
    let n = g.num_vertices();
    match generators {
        Some(gens) => {
            for p in gens {
                if p.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, got: p.len() });
                }
                if let Some((u, v)) = p.violating_edge(g) {
                    return Err(Error::NotAutomorphism { perm: p.images.clone(), u, v });
                }
            }
            Ok(close_group(n, gens))
        }
        None => {
            if n > BRUTE_FORCE_AUTOMORPHISM_LIMIT {
                return Err(Error::TooLarge {
                    what: "brute-force automorphism search (vertices)",
                    size: n as u128,
                    limit: BRUTE_FORCE_AUTOMORPHISM_LIMIT as u128,
                });
            }
            let adj = g.adjacency();
            let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
            let mut found = Vec::new();
            let mut images = vec![usize::MAX; n];
            let mut used = vec![false; n];
            search_automorphisms(g, &adj, &degree, 0, &mut images, &mut used, &mut found);
            found.sort();
            Ok(found)
        }
    }
}

// Depth-first over partial permutations, pruning on degree and on edges among
// already-mapped vertices.
fn search_automorphisms(
    g: &Graph,
    adj: &[Vec<usize>],
    degree: &[usize],
    v: usize,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Permutation>,
) {
    let n = images.len();
    if v == n {
        found.push(Permutation { images: images.clone() });
        return;
    }
    for w in 0..n {
        if used[w] || degree[w] != degree[v] {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(images[u], w));
        if !consistent {
            continue;
        }
        images[v] = w;
        used[w] = true;
        search_automorphisms(g, adj, degree, v + 1, images, used, found);
        used[w] = false;
    }
    images[v] = usize::MAX;
}

fn close_group(n: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for gen in gens {
            let q = gen.compose(&p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_basics() {
        let p1 = path_graph(1).unwrap();
        assert_eq!((p1.num_vertices(), p1.num_edges()), (1, 0));
        let p3 = path_graph(3).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let p6 = path_graph(6).unwrap();
        assert_eq!((p6.num_vertices(), p6.num_edges()), (6, 5));
        assert!(path_graph(0).is_err());
    }

    #[test]
    fn cycle_basics() {
        assert_eq!(cycle_graph(3).unwrap().num_edges(), 3);
        let c5 = cycle_graph(5).unwrap();
        assert_eq!((c5.num_vertices(), c5.num_edges()), (5, 5));
        assert!(cycle_graph(2).is_err());
        assert_eq!(
            cycle_graph(2).unwrap_err(),
            Error::InvalidSize { what: "cycle graph", value: 2 }
        );
    }

    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        // brute force, fine for the tiny graphs used here
        if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
            return false;
        }
        let n = a.num_vertices();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v])) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn products() {
        let p2 = path_graph(2).unwrap();
        assert!(isomorphic(&cartesian_product(&p2, &p2), &cycle_graph(4).unwrap()));
        let g = cartesian_product(&path_graph(3).unwrap(), &path_graph(6).unwrap());
        assert_eq!((g.num_vertices(), g.num_edges()), (18, 27));
        let c5 = cycle_graph(5).unwrap();
        let p1 = path_graph(1).unwrap();
        assert_eq!(cartesian_product(&c5, &p1), c5);
        assert_eq!(cartesian_product(&p1, &c5), c5);
    }

    #[test]
    fn product_commutes_under_reindexing() {
        let a = cycle_graph(3).unwrap();
        let b = path_graph(4).unwrap();
        let ab = cartesian_product(&a, &b);
        let ba = cartesian_product(&b, &a);
        let swap = |x: usize| (x % 4) * 3 + x / 4;
        assert!(ab.edges().all(|(u, v)| ba.has_edge(swap(u), swap(v))));
        assert_eq!(ab.num_edges(), ba.num_edges());
    }

    #[test]
    fn layers_are_contiguous() {
        let g = layered_path_product(&path_graph(3).unwrap(), 2).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(3, 4) && g.has_edge(0, 3) && g.has_edge(2, 5));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn deletion_and_contraction() {
        let p2 = path_graph(2).unwrap();
        assert_eq!(p2.delete_edge(0, 1).unwrap(), Graph::empty(2));
        let k3 = Graph::complete(3);
        assert_eq!(k3.contract_edge(0, 1).unwrap(), path_graph(2).unwrap());
        let p3 = path_graph(3).unwrap();
        assert_eq!(p3.contract_edge(1, 0).unwrap(), path_graph(2).unwrap());
        assert_eq!(p3.delete_edge(0, 2).unwrap_err(), Error::NotAnEdge(0, 2));
        assert_eq!(p3.contract_edge(0, 2).unwrap_err(), Error::NotAnEdge(0, 2));
    }

    #[test]
    fn automorphism_orders() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(automorphism_group(&c5, None).unwrap().len(), 10);
        assert_eq!(automorphism_group(&path_graph(3).unwrap(), None).unwrap().len(), 2);
        assert_eq!(automorphism_group(&path_graph(1).unwrap(), None).unwrap().len(), 1);
        for n in 2..=8 {
            assert_eq!(automorphism_group(&path_graph(n).unwrap(), None).unwrap().len(), 2);
        }
        for n in 3..=8 {
            assert_eq!(automorphism_group(&cycle_graph(n).unwrap(), None).unwrap().len(), 2 * n);
        }
        assert_eq!(automorphism_group(&Graph::complete(4), None).unwrap().len(), 24);
    }

    #[test]
    fn generated_group_matches_brute_force() {
        let c5 = cycle_graph(5).unwrap();
        let rot = Permutation::new(vec![1, 2, 3, 4, 0]).unwrap();
        let refl = Permutation::new(vec![0, 4, 3, 2, 1]).unwrap();
        let generated = automorphism_group(&c5, Some(&[rot, refl])).unwrap();
        assert_eq!(generated, automorphism_group(&c5, None).unwrap());
    }

    #[test]
    fn group_is_closed() {
        let g = cycle_graph(6).unwrap();
        let group = automorphism_group(&g, None).unwrap();
        let set: HashSet<_> = group.iter().cloned().collect();
        assert!(set.contains(&Permutation::identity(6)));
        for a in &group {
            assert!(a.is_automorphism(&g));
            assert!(set.contains(&a.inverse()));
            for b in &group {
                assert!(set.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn bad_generator_reports_edge() {
        let p3 = path_graph(3).unwrap();
        let bad = Permutation::new(vec![1, 0, 2]).unwrap();
        match automorphism_group(&p3, Some(&[bad])).unwrap_err() {
            Error::NotAutomorphism { u, v, .. } => assert_eq!((u, v), (1, 2)),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn brute_force_limit() {
        assert!(matches!(
            automorphism_group(&path_graph(10).unwrap(), None),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn edge_list_roundtrip_and_errors() {
        let g = cycle_graph(5).unwrap();
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        let err = Graph::parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { line: 3, column: 3, message: "expected a nonnegative integer, found `x`".into() }
        );
        assert!(matches!(Graph::parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn permutation_lines() {
        let perms = Permutation::parse_lines("1 2 0\n# comment\n0 2 1\n", 3).unwrap();
        assert_eq!(perms.len(), 2);
        assert!(Permutation::parse_lines("0 0 1\n", 3).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
    }
}
