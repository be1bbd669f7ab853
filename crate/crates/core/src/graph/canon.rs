//! Canonical forms for small general graphs.
//!
//! Vertices are first split into classes by colour refinement, which is
//! isomorphism invariant. The canonical labelling is then the one, among all
//! labellings that respect the class order, whose sorted edge list is
//! lexicographically smallest. Cost grows with the product of class-size
//! factorials, so this is meant for graphs of roughly ten vertices or fewer.

use std::fmt;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::new(self.vertex_count, self.edges.iter().copied()).expect("canonical edges are simple")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.vertex_count)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

fn refine_colors(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut colors: Vec<usize> = g.degrees();
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adj[v].iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let next_classes = distinct.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// `map[old] = new` for the canonical labelling of `g`.
pub fn canonical_relabeling(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let colors = refine_colors(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    // Class boundaries in `order`.
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || colors[order[i]] != colors[order[start]] {
            blocks.push((start, i));
            start = i;
        }
    }

    struct Search<'a> {
        g: &'a Graph,
        order: Vec<usize>,
        blocks: Vec<(usize, usize)>,
        best: Option<(Vec<(usize, usize)>, Vec<usize>)>,
    }

    impl Search<'_> {
        fn run(&mut self, block: usize, pos: usize) {
            if block == self.blocks.len() {
                let mut map = vec![0; self.order.len()];
                for (new, &old) in self.order.iter().enumerate() {
                    map[old] = new;
                }
                let mut edges: Vec<(usize, usize)> = self
                    .g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
                    .collect();
                edges.sort_unstable();
                if self.best.as_ref().is_none_or(|(b, _)| edges < *b) {
                    self.best = Some((edges, map));
                }
                return;
            }
            let (_, end) = self.blocks[block];
            if pos == end {
                let next_start = self.blocks.get(block + 1).map_or(end, |b| b.0);
                self.run(block + 1, next_start);
                return;
            }
            for i in pos..end {
                self.order.swap(pos, i);
                self.run(block, pos + 1);
                self.order.swap(pos, i);
            }
        }
    }

    let mut search = Search {
        g,
        order,
        blocks,
        best: None,
    };
    search.run(0, 0);
    search.best.map(|(_, map)| map).unwrap_or_default()
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let map = canonical_relabeling(g);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
        .collect();
    edges.sort_unstable();
    CanonicalForm {
        vertex_count: g.vertex_count(),
        edges,
    }
}
