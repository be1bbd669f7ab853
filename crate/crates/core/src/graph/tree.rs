use super::Graph;
use crate::error::{Error, Result};

/// Weight of each vertex: the order of the largest component left after
/// deleting it, i.e. the most edges in a subtree having that vertex as a leaf.
pub fn vertex_weights(t: &Graph) -> Result<Vec<usize>> {
    t.require_tree()?;
    let n = t.vertex_count();
    let adj = t.adjacency();
    let (order, parent) = dfs_order(&adj, 0);
    let mut below = vec![1usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            below[p] += below[v];
        }
    }
    Ok((0..n)
        .map(|v| {
            let children = adj[v]
                .iter()
                .filter(|&&w| parent[w] == Some(v))
                .map(|&w| below[w]);
            let up = n - below[v];
            children.chain(std::iter::once(up)).max().unwrap_or(0)
        })
        .collect())
}

/// Vertices of minimum weight, ascending. One vertex or two adjacent ones.
pub fn centroid(t: &Graph) -> Result<Vec<usize>> {
    let w = vertex_weights(t)?;
    let min = *w.iter().min().expect("trees have a vertex");
    Ok((0..w.len()).filter(|&v| w[v] == min).collect())
}

/// Preorder from `root` with parent pointers.
pub(crate) fn dfs_order(adj: &[Vec<usize>], root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut parent = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut order = Vec::with_capacity(adj.len());
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                stack.push(w);
            }
        }
    }
    (order, parent)
}

/// Centre vertices (one or two) found by repeated leaf stripping.
pub fn tree_centers(t: &Graph) -> Result<Vec<usize>> {
    t.require_tree()?;
    let n = t.vertex_count();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let adj = t.adjacency();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// AHU encoding of `t` rooted at `root`: each vertex becomes `(` followed by
/// the sorted codes of its children and `)`. Equal codes iff the rooted
/// trees are isomorphic.
pub fn rooted_tree_code(t: &Graph, root: usize) -> Result<String> {
    t.require_tree()?;
    if root >= t.vertex_count() {
        return Err(Error::InvalidGraph(format!("root {root} out of range")));
    }
    let adj = t.adjacency();
    Ok(rooted_code_unchecked(&adj, root))
}

pub(crate) fn rooted_code_unchecked(adj: &[Vec<usize>], root: usize) -> String {
    let (order, parent) = dfs_order(adj, root);
    let mut codes: Vec<String> = vec![String::new(); adj.len()];
    for &v in order.iter().rev() {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| parent[w] == Some(v))
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        kids.sort_unstable();
        let mut code = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        code.push('(');
        for k in kids {
            code.push_str(&k);
        }
        code.push(')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

/// Isomorphism-invariant code of a free tree: the smallest rooted code over
/// its centres.
pub fn canonical_tree_code(t: &Graph) -> Result<String> {
    let centers = tree_centers(t)?;
    let adj = t.adjacency();
    Ok(centers
        .into_iter()
        .map(|c| rooted_code_unchecked(&adj, c))
        .min()
        .expect("a tree has a centre"))
}

/// Exhaustive isomorphism test over vertex bijections, pruned only by degree.
/// Intended for graphs of at most about ten vertices.
pub fn are_isomorphic_brute_force(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.vertex_count();
    let (da, db) = (a.degrees(), b.degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let adj_a = adjacency_matrix(a);
    let adj_b = adjacency_matrix(b);

    fn extend(
        v: usize,
        n: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        da: &[usize],
        db: &[usize],
        adj_a: &[Vec<bool>],
        adj_b: &[Vec<bool>],
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || da[v] != db[w] {
                continue;
            }
            if (0..v).any(|x| adj_a[v][x] != adj_b[w][map[x]]) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if extend(v + 1, n, map, used, da, db, adj_a, adj_b) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }

    extend(0, n, &mut Vec::with_capacity(n), &mut vec![false; n], &da, &db, &adj_a, &adj_b)
}

pub(crate) fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}
