//! Standard graph families and seeded random graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// Star with centre 0 and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (0, i))).expect("star is simple")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    )
    .expect("complete graph is simple")
}

/// Erdős–Rényi G(n, p), with the edges shuffled so indices carry no structure.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    edges.shuffle(rng);
    Graph::new(n, edges).expect("sampled pairs are distinct")
}

/// G(n, m): exactly `m` distinct edges chosen uniformly.
pub fn gnm<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    all.shuffle(rng);
    all.truncate(m);
    Graph::new(n, all).expect("sampled pairs are distinct")
}

/// Decodes a Prüfer sequence of length `n - 2` into a labelled tree.
pub fn from_prufer(sequence: &[usize]) -> Graph {
    let n = sequence.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in sequence {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in sequence {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// Uniform random labelled tree on `n` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        2 => path(2),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            from_prufer(&seq)
        }
    }
}

/// G(n, p) forced to contain the triangle on three random vertices; returns
/// the graph and the indices of the triangle's edges. Requires `n >= 3`.
pub fn planted_triangle<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> (Graph, [usize; 3]) {
    let [a, b, c] = three_vertices(n, rng);
    let g = plant(n, p, rng, &[(a, b), (a, c), (b, c)], &[]);
    let idx = [(a, b), (a, c), (b, c)].map(|(u, v)| g.edge_index(u, v).expect("planted"));
    (g, idx)
}

/// G(n, p) forced to contain edges `va`, `vb` and to miss `ab`; returns the
/// graph and the indices of the two planted edges. Requires `n >= 3`.
pub fn planted_open_wedge<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> (Graph, [usize; 2]) {
    let [v, a, b] = three_vertices(n, rng);
    let g = plant(n, p, rng, &[(v, a), (v, b)], &[(a.min(b), a.max(b))]);
    let idx = [(v, a), (v, b)].map(|(x, y)| g.edge_index(x, y).expect("planted"));
    (g, idx)
}

fn three_vertices<R: Rng + ?Sized>(n: usize, rng: &mut R) -> [usize; 3] {
    assert!(n >= 3, "need at least three vertices");
    let picked: Vec<usize> = rand::seq::index::sample(rng, n, 3).into_vec();
    [picked[0], picked[1], picked[2]]
}

fn plant<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
    required: &[(usize, usize)],
    forbidden: &[(usize, usize)],
) -> Graph {
    let norm = |(u, v): (usize, usize)| (u.min(v), u.max(v));
    let required: Vec<(usize, usize)> = required.iter().copied().map(norm).collect();
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| required.contains(e) || (!forbidden.contains(e) && rng.gen_bool(p)))
        .collect();
    edges.shuffle(rng);
    Graph::new(n, edges).expect("sampled pairs are distinct")
}
