//! Simple undirected graphs with stable edge indices.

mod canon;
mod enumerate;
pub mod generators;
mod report;
mod tree;

pub use canon::{canonical_form, canonical_relabeling, CanonicalForm};
pub use enumerate::{rooted_trees, RootedTreeEnumerator, TreeEnumerator};
pub use report::{cycle_stats, structural_report, CycleStats, Girth, StructuralReport};
pub use tree::{
    are_isomorphic_brute_force, canonical_tree_code, centroid, rooted_tree_code, tree_centers,
    vertex_weights,
};

use std::collections::VecDeque;
use std::fmt;

use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored as `(u, v)` with `u < v`; edge `i` keeps its endpoints for
/// the lifetime of the value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalising each pair to `u < v`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    fn push_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        let e = (u.min(v), u.max(v));
        if self.edges.contains(&e) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                e.0, e.1
            )));
        }
        self.edges.push(e);
        Ok(self.edges.len() - 1)
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v` with
    /// `u < v < n`. Edge indices follow line order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line \"n m\"".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut g = Graph::empty(n);
        for (line, body) in lines {
            let (u, v) = parse_pair(line, body)?;
            if u >= v {
                return Err(Error::Parse {
                    line,
                    message: if u == v {
                        format!("self-loop at vertex {u}")
                    } else {
                        format!("endpoints must satisfy u < v, got {u} {v}")
                    },
                });
            }
            g.push_edge(u, v).map_err(|e| Error::Parse {
                line,
                message: match e {
                    Error::InvalidGraph(msg) => msg,
                    other => other.to_string(),
                },
            })?;
        }
        if g.edge_count() != m {
            return Err(Error::Parse {
                line: 1,
                message: format!("header declares {m} edges, found {}", g.edge_count()),
            });
        }
        Ok(g)
    }

    /// Renders the edge-list format, newline-terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Option<(usize, usize)> {
        self.edges.get(index).copied()
    }

    /// Index of the edge joining `u` and `v`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.iter().position(|&x| x == e)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Neighbour lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Neighbour lists carrying the connecting edge index.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((v, i));
            inc[v].push((u, i));
        }
        inc
    }

    /// A copy without the listed edges; survivors keep their relative order.
    pub fn without_edges(&self, removed: &[usize]) -> Graph {
        Graph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !removed.contains(i))
                .map(|(_, &e)| e)
                .collect(),
        }
    }

    /// A copy with edge `uv` appended as the last index.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.push_edge(u, v)?;
        Ok(g)
    }

    /// Applies `map` to every endpoint, keeping edge order.
    pub fn relabeled(&self, map: &[usize]) -> Result<Graph> {
        if map.len() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "expected {} images, got {}",
                self.n,
                map.len()
            )));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (map[u], map[v])))
    }

    /// Number of connected components of `(V, E)`.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.component_sizes().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        self.edges.iter().all(|&(u, v)| uf.union(u, v))
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_forest()
    }

    pub(crate) fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Components of `(V, S)` as a partition of the vertex count (π(S)).
    pub fn pi_type(&self, subset: &EdgeSubset) -> Partition {
        let mut uf = UnionFind::new(self.n);
        for i in subset.iter() {
            let (u, v) = self.edges[i];
            uf.union(u, v);
        }
        Partition::from_sizes(uf.component_sizes())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split(' ');
    let bad = || Error::Parse {
        line,
        message: format!("expected two non-negative integers, got {body:?}"),
    };
    let a = it.next().ok_or_else(bad)?;
    let b = it.next().ok_or_else(bad)?;
    if it.next().is_some() {
        return Err(bad());
    }
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
    if !digits(a) || !digits(b) {
        return Err(bad());
    }
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

/// A set of edge indices of one graph.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct EdgeSubset {
    words: Vec<u64>,
}

impl EdgeSubset {
    pub fn new() -> Self {
        Self::default()
    }

    /// The subset encoded by the low bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        EdgeSubset { words: vec![mask] }
    }

    /// All indices `0..m`.
    pub fn full(m: usize) -> Self {
        (0..m).collect()
    }

    pub fn insert(&mut self, index: usize) {
        let (w, b) = (index / 64, index % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, index: usize) {
        let (w, b) = (index / 64, index % 64);
        if let Some(word) = self.words.get_mut(w) {
            *word &= !(1 << b);
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        let (w, b) = (index / 64, index % 64);
        self.words.get(w).is_some_and(|word| word >> b & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }

    /// The indices of `0..m` not in this set.
    pub fn complement(&self, m: usize) -> EdgeSubset {
        (0..m).filter(|&i| !self.contains(i)).collect()
    }

    /// Largest index plus one, or zero when empty.
    pub fn bound(&self) -> usize {
        self.iter().last().map_or(0, |i| i + 1)
    }
}

impl FromIterator<usize> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSubset::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}
