//! Pairs of graphs with equal chromatic symmetric functions.
//!
//! If `uz, wz, vw` are edges of `G`, `uw, vz, uv` are not, and some
//! automorphism `φ` of `G - wz` swaps `{u, w}` with `{v, z}`, then adding
//! `uw` and adding `vz` give graphs with the same `X`. Gluing two copies each
//! of two rooted trees onto a path `u - z - w - v` always yields such a
//! configuration.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection on `0..n`, stored as the image of each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPermutation {
    image: Vec<usize>,
}

impl VertexPermutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{image:?} is not a bijection on 0..{}",
                    image.len()
                )));
            }
        }
        Ok(VertexPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// True when `uv` is an edge of `g` exactly when its image is.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.len() == g.vertex_count()
            && g.edges()
                .iter()
                .all(|&(u, v)| g.has_edge(self.apply(u), self.apply(v)))
    }
}

/// A tree with a distinguished root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Graph,
    root: usize,
}

impl RootedTree {
    pub fn new(tree: Graph, root: usize) -> Result<Self> {
        tree.require_tree()?;
        if root >= tree.vertex_count() {
            return Err(Error::InvalidGraph(format!(
                "root {root} out of range for {} vertices",
                tree.vertex_count()
            )));
        }
        Ok(RootedTree { tree, root })
    }

    /// The one-vertex tree.
    pub fn point() -> Self {
        RootedTree {
            tree: Graph::empty(1),
            root: 0,
        }
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }
}

/// Why a configuration fails the swap criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum P1Failure {
    /// Corner vertices repeated or out of range.
    CornersNotDistinct,
    MissingEdge(usize, usize),
    ForbiddenEdge(usize, usize),
    /// `φ` has the wrong size or does not preserve `G - wz`.
    NotAnAutomorphism,
    /// `φ` does not exchange `{u, w}` and `{v, z}`.
    CornersNotSwapped,
}

impl fmt::Display for P1Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Failure::CornersNotDistinct => f.write_str("corner vertices are not distinct"),
            P1Failure::MissingEdge(a, b) => write!(f, "required edge {a}-{b} is missing"),
            P1Failure::ForbiddenEdge(a, b) => write!(f, "edge {a}-{b} must be absent"),
            P1Failure::NotAnAutomorphism => f.write_str("permutation is not an automorphism of G - wz"),
            P1Failure::CornersNotSwapped => f.write_str("permutation does not swap {u, w} with {v, z}"),
        }
    }
}

fn check_edges(g: &Graph, u: usize, v: usize, w: usize, z: usize) -> std::result::Result<(), P1Failure> {
    let n = g.vertex_count();
    let corners = [u, v, w, z];
    if corners.iter().any(|&x| x >= n) || (0..4).any(|i| (i + 1..4).any(|j| corners[i] == corners[j])) {
        return Err(P1Failure::CornersNotDistinct);
    }
    for (a, b) in [(u, z), (w, z), (v, w)] {
        if !g.has_edge(a, b) {
            return Err(P1Failure::MissingEdge(a, b));
        }
    }
    for (a, b) in [(u, w), (v, z), (u, v)] {
        if g.has_edge(a, b) {
            return Err(P1Failure::ForbiddenEdge(a, b));
        }
    }
    Ok(())
}

/// Checks every hypothesis of the swap criterion, reporting the first that
/// fails.
pub fn verify_p1(
    g: &Graph,
    u: usize,
    v: usize,
    w: usize,
    z: usize,
    phi: &VertexPermutation,
) -> std::result::Result<(), P1Failure> {
    check_edges(g, u, v, w, z)?;
    let wz = g.edge_index(w, z).expect("checked above");
    if phi.len() != g.vertex_count() || !phi.is_automorphism_of(&g.without_edges(&[wz])) {
        return Err(P1Failure::NotAnAutomorphism);
    }
    let set = |a: usize, b: usize| {
        let (x, y) = (phi.apply(a), phi.apply(b));
        (x.min(y), x.max(y))
    };
    if set(u, w) != (v.min(z), v.max(z)) || set(v, z) != (u.min(w), u.max(w)) {
        return Err(P1Failure::CornersNotSwapped);
    }
    Ok(())
}

/// `(G + uw, G + vz)`. Only the edge conditions are checked.
pub fn build_pair(g: &Graph, u: usize, v: usize, w: usize, z: usize) -> Result<(Graph, Graph)> {
    check_edges(g, u, v, w, z).map_err(|f| Error::Precondition(f.to_string()))?;
    Ok((
        g.with_edge(u, w).expect("uw is absent"),
        g.with_edge(v, z).expect("vz is absent"),
    ))
}

/// Output of [`glue_rooted_trees`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedPair {
    pub base: Graph,
    pub h: Graph,
    pub j: Graph,
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub z: usize,
    pub phi: VertexPermutation,
}

/// Hangs copies of `t1` at `u` and `z` and copies of `t2` at `v` and `w` on
/// the path `u - z - w - v`, then closes the triangle two ways.
///
/// Vertices are numbered `u = 0, z = 1, v = 2, w = 3`, followed by the
/// non-root vertices of the copies at `u`, `z`, `v`, `w` in that order, each
/// block in the source tree's vertex order.
pub fn glue_rooted_trees(t1: &RootedTree, t2: &RootedTree) -> GluedPair {
    let (u, z, v, w) = (0, 1, 2, 3);
    let n1 = t1.tree.vertex_count();
    let n2 = t2.tree.vertex_count();
    let n = 2 * n1 + 2 * n2;
    let mut edges = vec![(u, z), (w, z), (v, w)];
    let mut phi = vec![0; n];
    phi[u] = z;
    phi[z] = u;
    phi[v] = w;
    phi[w] = v;

    // Block start for each copy, and the vertex map of each copy.
    let copy_map = |t: &RootedTree, corner: usize, start: usize| -> Vec<usize> {
        let mut next = start;
        (0..t.tree.vertex_count())
            .map(|x| {
                if x == t.root {
                    corner
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect()
    };
    let s_u = 4;
    let s_z = s_u + n1 - 1;
    let s_v = s_z + n1 - 1;
    let s_w = s_v + n2 - 1;
    let maps = [
        copy_map(t1, u, s_u),
        copy_map(t1, z, s_z),
        copy_map(t2, v, s_v),
        copy_map(t2, w, s_w),
    ];
    for (i, (t, map)) in [t1, t1, t2, t2].into_iter().zip(&maps).enumerate() {
        edges.extend(t.tree.edges().iter().map(|&(a, b)| (map[a], map[b])));
        let partner = &maps[i ^ 1];
        for x in 0..t.tree.vertex_count() {
            phi[map[x]] = partner[x];
        }
    }

    let base = Graph::new(n, edges).expect("glued copies are disjoint");
    let h = base.with_edge(u, w).expect("uw is absent");
    let j = base.with_edge(v, z).expect("vz is absent");
    GluedPair {
        base,
        h,
        j,
        u,
        v,
        w,
        z,
        phi: VertexPermutation::new(phi).expect("copies are matched bijectively"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csf::{chromatic_symmetric_function, csf_equal};
    use crate::fixtures;
    use crate::graph::{are_isomorphic_brute_force, canonical_form, cycle_stats, generators, rooted_trees};

    fn edge_tree() -> RootedTree {
        RootedTree::new(generators::path(2), 0).unwrap()
    }

    #[test]
    fn permutations_validate() {
        assert!(VertexPermutation::new(vec![1, 0, 2]).is_ok());
        assert!(VertexPermutation::new(vec![1, 1, 2]).is_err());
        assert!(VertexPermutation::new(vec![0, 3]).is_err());
        assert!(VertexPermutation::identity(3).is_automorphism_of(&generators::path(3)));
        assert!(!VertexPermutation::new(vec![1, 0, 2])
            .unwrap()
            .is_automorphism_of(&generators::path(3)));
    }

    #[test]
    fn rooted_tree_validation() {
        assert!(RootedTree::new(generators::cycle(3), 0).is_err());
        assert!(RootedTree::new(generators::path(3), 3).is_err());
    }

    #[test]
    fn glue_reproduces_unicyclic_pair() {
        let pair = glue_rooted_trees(&RootedTree::point(), &edge_tree());
        assert_eq!(pair.h.vertex_count(), 6);
        assert_eq!(
            canonical_form(&pair.h),
            canonical_form(&fixtures::unicyclic_left())
        );
        assert_eq!(
            canonical_form(&pair.j),
            canonical_form(&fixtures::unicyclic_right())
        );
        assert_eq!(verify_p1(&pair.base, pair.u, pair.v, pair.w, pair.z, &pair.phi), Ok(()));
        let x_h = chromatic_symmetric_function(&pair.h).unwrap();
        assert!(csf_equal(&x_h, &chromatic_symmetric_function(&pair.j).unwrap()));
    }

    #[test]
    fn verify_reports_failed_clause() {
        let pair = glue_rooted_trees(&RootedTree::point(), &edge_tree());
        let id = VertexPermutation::identity(6);
        assert_eq!(
            verify_p1(&pair.base, 0, 2, 3, 1, &id),
            Err(P1Failure::CornersNotSwapped)
        );
        let no_wz = pair.base.without_edges(&[1]);
        assert_eq!(
            verify_p1(&no_wz, 0, 2, 3, 1, &pair.phi),
            Err(P1Failure::MissingEdge(3, 1))
        );
        assert_eq!(
            verify_p1(&pair.h, 0, 2, 3, 1, &pair.phi),
            Err(P1Failure::ForbiddenEdge(0, 3))
        );
        assert_eq!(
            verify_p1(&pair.base, 0, 0, 3, 1, &pair.phi),
            Err(P1Failure::CornersNotDistinct)
        );
        let swap_leaves = VertexPermutation::new(vec![1, 0, 3, 2, 4, 5]).unwrap();
        assert_eq!(
            verify_p1(&pair.base, 0, 2, 3, 1, &swap_leaves),
            Err(P1Failure::NotAnAutomorphism)
        );
    }

    #[test]
    fn smallest_instance() {
        let base = Graph::new(4, [(0, 1), (3, 1), (2, 3)]).unwrap();
        let (h, j) = build_pair(&base, 0, 2, 3, 1).unwrap();
        assert!(h.has_edge(0, 3) && !h.has_edge(2, 1));
        assert!(j.has_edge(2, 1) && !j.has_edge(0, 3));
        assert!(are_isomorphic_brute_force(&h, &j));
        assert!(build_pair(&h, 0, 2, 3, 1).is_err());
    }

    #[test]
    fn identical_points_give_isomorphic_outputs() {
        let pair = glue_rooted_trees(&RootedTree::point(), &RootedTree::point());
        assert!(are_isomorphic_brute_force(&pair.h, &pair.j));
        assert_eq!(
            chromatic_symmetric_function(&pair.h).unwrap(),
            chromatic_symmetric_function(&pair.j).unwrap()
        );
    }

    #[test]
    fn path_and_star_glue() {
        let p3 = RootedTree::new(generators::path(3), 0).unwrap();
        let k13 = RootedTree::new(generators::star(4), 0).unwrap();
        let pair = glue_rooted_trees(&p3, &k13);
        assert_eq!(pair.h.vertex_count(), 14);
        assert_eq!(verify_p1(&pair.base, 0, 2, 3, 1, &pair.phi), Ok(()));
        assert_eq!(
            chromatic_symmetric_function(&pair.h).unwrap(),
            chromatic_symmetric_function(&pair.j).unwrap()
        );
    }

    #[test]
    fn all_small_rooted_trees() {
        let mut trees = Vec::new();
        for n in 1..=4 {
            for (t, r) in rooted_trees(n) {
                trees.push(RootedTree::new(t, r).unwrap());
            }
        }
        for a in &trees {
            for b in &trees {
                let pair = glue_rooted_trees(a, b);
                assert_eq!(verify_p1(&pair.base, 0, 2, 3, 1, &pair.phi), Ok(()));
                let (sh, sj) = (cycle_stats(&pair.h).unwrap(), cycle_stats(&pair.j).unwrap());
                assert_eq!(sh.cycle_length, 3);
                assert_eq!(sj.cycle_length, 3);
                assert_eq!(sh.relation_value(), sj.relation_value());
                assert_eq!(
                    chromatic_symmetric_function(&pair.h).unwrap(),
                    chromatic_symmetric_function(&pair.j).unwrap()
                );
            }
        }
    }
}
