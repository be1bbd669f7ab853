use std::collections::VecDeque;
use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// Length of a shortest cycle, or `Infinite` for acyclic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Invariants counted directly on the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Weakly decreasing.
    pub degree_sequence: Vec<usize>,
    pub sum_squared_degrees: u64,
    pub triangle_count: u64,
    pub girth: Girth,
    /// `matching_counts[k - 1]` is the number of `k`-edge matchings, up to the
    /// largest matching size.
    pub matching_counts: Vec<u64>,
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    let mut degree_sequence = g.degrees();
    degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
    let sum_squared_degrees = degree_sequence.iter().map(|&d| (d * d) as u64).sum();
    StructuralReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        degree_sequence,
        sum_squared_degrees,
        triangle_count: triangle_count(g),
        girth: girth(g),
        matching_counts: matching_counts(g),
    }
}

fn triangle_count(g: &Graph) -> u64 {
    let adj = g.adjacency();
    let mut count = 0;
    for &(u, v) in g.edges() {
        // Common neighbours above both endpoints count each triangle once.
        let hi = u.max(v);
        count += adj[u]
            .iter()
            .filter(|&&w| w > hi && adj[v].binary_search(&w).is_ok())
            .count() as u64;
    }
    count
}

fn girth(g: &Graph) -> Girth {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best.map_or(Girth::Infinite, Girth::Finite)
}

fn matching_counts(g: &Graph) -> Vec<u64> {
    fn rec(edges: &[(usize, usize)], start: usize, used: &mut Vec<bool>, size: usize, counts: &mut Vec<u64>) {
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if used[u] || used[v] {
                continue;
            }
            if counts.len() <= size {
                counts.push(0);
            }
            counts[size] += 1;
            used[u] = true;
            used[v] = true;
            rec(edges, i + 1, used, size + 1, counts);
            used[u] = false;
            used[v] = false;
        }
    }
    let mut counts = Vec::new();
    let mut used = vec![false; g.vertex_count()];
    rec(g.edges(), 0, &mut used, 0, &mut counts);
    counts
}

/// Cycle length `p`, leaf count `L` and the number `I` of degree-2 vertices
/// on the cycle of a connected unicyclic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleStats {
    pub cycle_length: usize,
    pub leaf_count: usize,
    pub degree2_on_cycle: usize,
}

impl CycleStats {
    /// `(p - 1) L + I`, which equal chromatic symmetric functions preserve.
    pub fn relation_value(&self) -> usize {
        (self.cycle_length - 1) * self.leaf_count + self.degree2_on_cycle
    }
}

pub fn cycle_stats(g: &Graph) -> Result<CycleStats> {
    if g.vertex_count() < 3 || g.vertex_count() != g.edge_count() || !g.is_connected() {
        return Err(Error::NotUnicyclic);
    }
    let degrees = g.degrees();
    let adj = g.adjacency();
    // Peel leaves; what survives is the cycle.
    let mut remaining = degrees.clone();
    let mut alive = vec![true; g.vertex_count()];
    let mut stack: Vec<usize> = (0..g.vertex_count()).filter(|&v| remaining[v] == 1).collect();
    while let Some(v) = stack.pop() {
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                remaining[w] -= 1;
                if remaining[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let cycle: Vec<usize> = (0..g.vertex_count()).filter(|&v| alive[v]).collect();
    Ok(CycleStats {
        cycle_length: cycle.len(),
        leaf_count: degrees.iter().filter(|&&d| d == 1).count(),
        degree2_on_cycle: cycle.iter().filter(|&&v| degrees[v] == 2).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;
    use crate::fixtures;

    #[test]
    fn unicyclic_pair_reports() {
        let left = structural_report(&fixtures::unicyclic_left());
        assert_eq!(left.degree_sequence, vec![4, 2, 2, 2, 1, 1]);
        assert_eq!(left.sum_squared_degrees, 30);
        assert_eq!(left.triangle_count, 1);
        assert_eq!(left.girth, Girth::Finite(3));
        let right = structural_report(&fixtures::unicyclic_right());
        assert_eq!(right.degree_sequence, vec![3, 3, 3, 1, 1, 1]);
        assert_eq!(right.sum_squared_degrees, 30);
        assert_eq!(right.triangle_count, 1);
        assert_eq!(right.girth, Girth::Finite(3));
    }

    #[test]
    fn triangle_report() {
        let r = structural_report(&generators::complete(3));
        assert_eq!(r.sum_squared_degrees, 12);
        assert_eq!(r.triangle_count, 1);
        assert_eq!(r.girth, Girth::Finite(3));
        assert_eq!(r.matching_counts, vec![3]);
    }

    #[test]
    fn girth_and_matchings_of_small_families() {
        assert_eq!(girth(&generators::path(6)), Girth::Infinite);
        assert_eq!(girth(&generators::cycle(7)), Girth::Finite(7));
        // Petersen-free sanity: K4 has 4 triangles and 3 perfect matchings.
        let k4 = structural_report(&generators::complete(4));
        assert_eq!(k4.triangle_count, 4);
        assert_eq!(k4.matching_counts, vec![6, 3]);
        assert_eq!(k4.girth, Girth::Finite(3));
        // C6: 6 single edges, 9 two-matchings, 2 perfect matchings.
        assert_eq!(matching_counts(&generators::cycle(6)), vec![6, 9, 2]);
        assert!(matching_counts(&Graph::empty(4)).is_empty());
    }

    #[test]
    fn girth_of_cycle_with_chord() {
        let g = generators::cycle(6).with_edge(0, 3).unwrap();
        assert_eq!(girth(&g), Girth::Finite(4));
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let r = structural_report(&generators::complete(5));
        assert_eq!(r.degree_sequence.iter().sum::<usize>(), 2 * r.edge_count);
    }

    #[test]
    fn unicyclic_pair_cycle_stats() {
        let left = cycle_stats(&fixtures::unicyclic_left()).unwrap();
        assert_eq!((left.cycle_length, left.leaf_count, left.degree2_on_cycle), (3, 2, 2));
        assert_eq!(left.relation_value(), 6);
        let right = cycle_stats(&fixtures::unicyclic_right()).unwrap();
        assert_eq!((right.cycle_length, right.leaf_count, right.degree2_on_cycle), (3, 3, 0));
        assert_eq!(right.relation_value(), 6);
        let k3 = cycle_stats(&generators::complete(3)).unwrap();
        assert_eq!((k3.cycle_length, k3.leaf_count, k3.degree2_on_cycle), (3, 0, 3));
    }

    #[test]
    fn cycle_stats_rejects_other_graphs() {
        assert_eq!(cycle_stats(&generators::path(4)), Err(Error::NotUnicyclic));
        assert_eq!(cycle_stats(&generators::complete(4)), Err(Error::NotUnicyclic));
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(cycle_stats(&two_triangles), Err(Error::NotUnicyclic));
    }
}
