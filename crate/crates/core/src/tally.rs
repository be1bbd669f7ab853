//! Counting edge subsets by the component type `π(S)` they induce.
//!
//! The fast path walks the subset tree depth first with an undoable
//! union-find, carrying an additive hash of the component sizes. Every
//! partition of the vertex count is hashed up front and the walk is only used
//! when those hashes are pairwise distinct, so lookups are exact.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::dsu::UnionFind;
use crate::graph::Graph;
use crate::partition::{partitions_of, Partition};

/// Number of even-size and odd-size edge subsets of each component type.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct ParityCounts {
    pub even: u64,
    pub odd: u64,
}

pub(crate) type Tally = HashMap<Partition, ParityCounts>;

/// Edges enumerated inside one parallel task.
const CHUNK_BITS: usize = 14;

/// Largest number of non-isolated vertices handled by the walk.
const MAX_WALK_VERTICES: usize = 40;

/// Tallies `π(S)` over all `2^m` edge subsets; `m` must be below 64.
pub(crate) fn tally(g: &Graph) -> Tally {
    let n = g.vertex_count();
    let mut relabel = vec![usize::MAX; n];
    let mut next = 0;
    let mut edges = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        for x in [u, v] {
            if relabel[x] == usize::MAX {
                relabel[x] = next;
                next += 1;
            }
        }
        edges.push((relabel[u], relabel[v]));
    }
    let core = next;
    if core > MAX_WALK_VERTICES {
        return tally_by_mask(g);
    }
    let Some(index) = PartitionIndex::new(core) else {
        return tally_by_mask(g);
    };
    let counts = walk_all(&edges, core, &index);
    let isolated = n - core;
    index
        .partitions
        .iter()
        .zip(counts)
        .filter(|(_, c)| c[0] + c[1] > 0)
        .map(|(p, c)| {
            let mut sizes = p.parts().to_vec();
            sizes.extend(std::iter::repeat_n(1, isolated));
            (Partition::from_sizes(sizes), ParityCounts { even: c[0], odd: c[1] })
        })
        .collect()
}

fn size_weight(s: usize) -> u64 {
    if s == 1 {
        return 0;
    }
    // splitmix64
    let mut z = (s as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d1_049b_b133_111e);
    z ^ (z >> 31)
}

/// Open-addressing map from size hashes to partitions of `n`.
struct PartitionIndex {
    partitions: Vec<Partition>,
    weights: Vec<u64>,
    keys: Vec<u64>,
    slots: Vec<u32>,
    shift: u32,
}

impl PartitionIndex {
    /// `None` when two partitions share a hash.
    fn new(n: usize) -> Option<Self> {
        let partitions = partitions_of(n);
        let weights: Vec<u64> = (0..=n).map(size_weight).collect();
        let bits = (partitions.len() * 4).next_power_of_two().trailing_zeros().max(4);
        let mut index = PartitionIndex {
            keys: vec![0; 1 << bits],
            slots: vec![u32::MAX; 1 << bits],
            shift: 64 - bits,
            partitions: Vec::new(),
            weights,
        };
        for (i, p) in partitions.iter().enumerate() {
            let h = p.parts().iter().fold(0u64, |h, &s| h.wrapping_add(index.weights[s]));
            let mut at = index.home(h);
            while index.slots[at] != u32::MAX {
                if index.keys[at] == h {
                    return None;
                }
                at = (at + 1) & (index.slots.len() - 1);
            }
            index.keys[at] = h;
            index.slots[at] = i as u32;
        }
        index.partitions = partitions;
        Some(index)
    }

    fn home(&self, h: u64) -> usize {
        (h.wrapping_mul(0x9e37_79b9_7f4a_7c15) >> self.shift) as usize
    }

    fn lookup(&self, h: u64) -> usize {
        let mut at = self.home(h);
        while self.keys[at] != h {
            at = (at + 1) & (self.slots.len() - 1);
        }
        self.slots[at] as usize
    }
}

/// Union-find without path compression, so merges can be undone.
struct Walker<'a> {
    edges: &'a [(usize, usize)],
    index: &'a PartitionIndex,
    parent: Vec<usize>,
    size: Vec<usize>,
    hash: u64,
    counts: Vec<[u64; 2]>,
}

impl<'a> Walker<'a> {
    fn new(edges: &'a [(usize, usize)], n: usize, index: &'a PartitionIndex) -> Self {
        Walker {
            edges,
            index,
            parent: (0..n).collect(),
            size: vec![1; n],
            hash: 0,
            counts: vec![[0; 2]; index.partitions.len()],
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.size.fill(1);
        self.hash = 0;
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the roots of edge `i`; returns the absorbed root.
    fn join(&mut self, i: usize) -> Option<usize> {
        let (u, v) = self.edges[i];
        let (mut a, mut b) = (self.find(u), self.find(v));
        if a == b {
            return None;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let w = &self.index.weights;
        let (sa, sb) = (self.size[a], self.size[b]);
        self.hash = self.hash.wrapping_add(w[sa + sb]).wrapping_sub(w[sa]).wrapping_sub(w[sb]);
        self.parent[b] = a;
        self.size[a] = sa + sb;
        Some(b)
    }

    fn split(&mut self, b: usize) {
        let a = self.parent[b];
        let w = &self.index.weights;
        let (sa, sb) = (self.size[a] - self.size[b], self.size[b]);
        self.hash = self.hash.wrapping_add(w[sa]).wrapping_add(w[sb]).wrapping_sub(w[sa + sb]);
        self.size[a] = sa;
        self.parent[b] = b;
    }

    fn walk(&mut self, i: usize, odd: usize) {
        if i == self.edges.len() {
            let at = self.index.lookup(self.hash);
            self.counts[at][odd] += 1;
            return;
        }
        self.walk(i + 1, odd);
        match self.join(i) {
            Some(b) => {
                self.walk(i + 1, odd ^ 1);
                self.split(b);
            }
            None => self.walk(i + 1, odd ^ 1),
        }
    }
}

fn walk_all(edges: &[(usize, usize)], n: usize, index: &PartitionIndex) -> Vec<[u64; 2]> {
    let prefix = edges.len().saturating_sub(CHUNK_BITS);
    (0..1u64 << prefix)
        .into_par_iter()
        .fold(
            || Walker::new(edges, n, index),
            |mut walker, mask| {
                walker.reset();
                for i in 0..prefix {
                    if mask >> i & 1 == 1 {
                        walker.join(i);
                    }
                }
                walker.walk(prefix, (mask.count_ones() % 2) as usize);
                walker
            },
        )
        .map(|w| w.counts)
        .reduce(
            || vec![[0; 2]; index.partitions.len()],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    x[0] += y[0];
                    x[1] += y[1];
                }
                a
            },
        )
}

/// Rebuilds the components of every subset mask from scratch.
pub(crate) fn tally_by_mask(g: &Graph) -> Tally {
    let m = g.edge_count();
    let chunk = 1u64 << CHUNK_BITS.min(m);
    let chunks = (1u64 << m) / chunk;
    let edges = g.edges();
    let n = g.vertex_count();

    (0..chunks)
        .into_par_iter()
        .fold(
            || (Tally::new(), UnionFind::new(n), Vec::new()),
            |(mut map, mut uf, mut sizes), c| {
                for mask in c * chunk..(c + 1) * chunk {
                    uf.reset();
                    let mut bits = mask;
                    while bits != 0 {
                        let i = bits.trailing_zeros() as usize;
                        let (u, v) = edges[i];
                        uf.union(u, v);
                        bits &= bits - 1;
                    }
                    uf.component_sizes_into(&mut sizes);
                    sizes.sort_unstable_by(|a, b| b.cmp(a));
                    let slot = match map.get_mut(sizes.as_slice()) {
                        Some(slot) => slot,
                        None => map.entry(Partition::from_sizes(sizes.clone())).or_default(),
                    };
                    if mask.count_ones() % 2 == 0 {
                        slot.even += 1;
                    } else {
                        slot.odd += 1;
                    }
                }
                (map, uf, sizes)
            },
        )
        .map(|(map, _, _)| map)
        .reduce(Tally::new, |mut a, b| {
            for (k, v) in b {
                let slot = a.entry(k).or_default();
                slot.even += v.even;
                slot.odd += v.odd;
            }
            a
        })
}
