//! Enumeration of rooted and free trees by canonical level sequences.

use super::tree::{canonical_tree_code, rooted_code_unchecked, tree_centers};
use super::Graph;

/// Every rooted tree on `n` vertices exactly once up to rooted isomorphism,
/// via successor steps on level sequences starting from the path and ending
/// at the star. The root is always vertex 0.
#[derive(Debug, Clone)]
pub struct RootedTreeEnumerator {
    levels: Vec<usize>,
    done: bool,
}

impl RootedTreeEnumerator {
    pub fn new(n: usize) -> Self {
        RootedTreeEnumerator {
            levels: (1..=n).collect(),
            done: n == 0,
        }
    }

    fn advance(&mut self) {
        let l = &mut self.levels;
        let Some(p) = l.iter().rposition(|&x| x > 2) else {
            self.done = true;
            return;
        };
        let q = l[..p]
            .iter()
            .rposition(|&x| x == l[p] - 1)
            .expect("a vertex one level up precedes p");
        let shift = p - q;
        for i in p..l.len() {
            l[i] = l[i - shift];
        }
    }
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    let mut last_at_level: Vec<usize> = vec![0; levels.len() + 2];
    for (i, &lv) in levels.iter().enumerate() {
        if i > 0 {
            edges.push((last_at_level[lv - 1], i));
        }
        last_at_level[lv] = i;
    }
    Graph::new(levels.len(), edges).expect("level sequences describe trees")
}

impl Iterator for RootedTreeEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let tree = tree_from_levels(&self.levels);
        self.advance();
        Some(tree)
    }
}

/// All rooted trees on `n` vertices as `(tree, root)` pairs.
pub fn rooted_trees(n: usize) -> Vec<(Graph, usize)> {
    RootedTreeEnumerator::new(n).map(|t| (t, 0)).collect()
}

/// Free trees on `n` vertices, one per isomorphism class.
///
/// Walks the rooted level sequences and keeps a sequence only when its root
/// is the centre whose rooted code is the tree's canonical code.
#[derive(Debug, Clone)]
pub struct TreeEnumerator {
    rooted: RootedTreeEnumerator,
}

impl TreeEnumerator {
    pub fn new(n: usize) -> Self {
        TreeEnumerator {
            rooted: RootedTreeEnumerator::new(n),
        }
    }
}

impl Iterator for TreeEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        for t in self.rooted.by_ref() {
            let centers = tree_centers(&t).expect("enumerated graphs are trees");
            if !centers.contains(&0) {
                continue;
            }
            let adj = t.adjacency();
            let canonical = canonical_tree_code(&t).expect("enumerated graphs are trees");
            if rooted_code_unchecked(&adj, 0) == canonical {
                return Some(t);
            }
        }
        None
    }
}
