use std::cmp::Ordering;

use csfkit::graph::{
    are_isomorphic_brute_force, canonical_tree_code, centroid, generators, structural_report, Graph, TreeEnumerator,
};
use csfkit::treedata::{
    attracts, attracts_from_theta, forest_type_counts, placement_order, reconstruct_from_pairs,
    reconstruct_from_theta, reconstruct_in_order, theta, theta_tables,
};
use csfkit::{chromatic_symmetric_function, compare_balanced, extract_invariants, EdgeSubset, Partition};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn trees(n: usize) -> Vec<Graph> {
    TreeEnumerator::new(n).collect()
}

fn re(v: [usize; 3]) -> Option<Partition> {
    if v.contains(&0) {
        return None;
    }
    Partition::rearrange(v.map(|x| x as i64)).ok()
}

#[test]
fn centroids_are_one_vertex_or_an_edge() {
    for n in 1..=12 {
        for t in trees(n) {
            let c = centroid(&t).unwrap();
            assert!(c.len() == 1 || (c.len() == 2 && t.has_edge(c[0], c[1])));
        }
    }
}

#[test]
fn tree_codes_agree_with_brute_force() {
    let mut rng = StdRng::seed_from_u64(41);
    for n in 1..=7 {
        let ts = trees(n);
        let relabeled: Vec<Graph> = ts
            .iter()
            .map(|t| {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                t.relabeled(&perm).unwrap()
            })
            .collect();
        for a in &ts {
            for b in &relabeled {
                assert_eq!(
                    canonical_tree_code(a).unwrap() == canonical_tree_code(b).unwrap(),
                    are_isomorphic_brute_force(a, b)
                );
            }
        }
    }
}

#[test]
fn theta_has_one_more_part_than_edges_removed() {
    for n in 1..=8 {
        for t in trees(n) {
            for mask in 0u64..1 << t.edge_count() {
                let s = EdgeSubset::from_mask(mask);
                assert_eq!(theta(&t, &s).unwrap().len(), s.len() + 1);
            }
        }
    }
}

#[test]
fn pair_images_split_two_ways() {
    for n in 3..=10 {
        for t in trees(n) {
            let table = theta_tables(&t).unwrap();
            let single = centroid(&t).unwrap().len() == 1;
            for a in 0..t.edge_count() {
                for b in a + 1..t.edge_count() {
                    let (sa, sb) = (table.singleton(a).unwrap(), table.singleton(b).unwrap());
                    let (mut i, mut k) = (sa.parts()[1], sb.parts()[1]);
                    if i < k {
                        std::mem::swap(&mut i, &mut k);
                    }
                    let pair = table.pair(a, b).unwrap();
                    let candidates = [re([n - i - k, i, k]), re([n - i, i - k, k])];
                    assert!(candidates.iter().flatten().any(|c| c == pair));
                    let literal = attracts(&t, a, b).unwrap();
                    if single {
                        assert_eq!(literal, attracts_from_theta(n, sa, sb, pair).unwrap());
                        if sa == sb {
                            assert!(!literal);
                        }
                    }
                }
            }
        }
    }
}

/// Edges on the path from `from` to the far endpoint of `e`, in order.
fn path_edges(t: &Graph, from: usize, e: usize) -> Vec<usize> {
    let (u, v) = t.edge(e).unwrap();
    let dist = t.distances_from(from);
    let far = if dist[u] > dist[v] { u } else { v };
    let inc = t.incidence();
    let mut out = Vec::new();
    let mut x = far;
    while x != from {
        let &(y, idx) = inc[x]
            .iter()
            .find(|&&(y, _)| dist[y].unwrap() + 1 == dist[x].unwrap())
            .unwrap();
        out.push(idx);
        x = y;
    }
    out
}

#[test]
fn separating_edges_are_more_balanced() {
    for n in 3..=10 {
        for t in trees(n) {
            let c = centroid(&t).unwrap();
            if c.len() != 1 {
                continue;
            }
            let table = theta_tables(&t).unwrap();
            for b in 0..t.edge_count() {
                for a in path_edges(&t, c[0], b) {
                    if a != b {
                        let order = compare_balanced(table.singleton(a).unwrap(), table.singleton(b).unwrap());
                        assert_eq!(order.unwrap(), Ordering::Greater);
                    }
                }
            }
        }
    }
}

#[test]
fn balanced_edge_joins_the_two_centroids() {
    for n in (2..=12).step_by(2) {
        let half = Partition::new(vec![n / 2, n / 2]).unwrap();
        for t in trees(n) {
            let table = theta_tables(&t).unwrap();
            let balanced: Vec<usize> = (0..t.edge_count())
                .filter(|&e| table.singleton(e) == Some(&half))
                .collect();
            assert!(balanced.len() <= 1);
            let c = centroid(&t).unwrap();
            if let Some(&e) = balanced.first() {
                assert_eq!(t.edge(e), Some((c[0], c[1])));
            } else {
                assert_eq!(c.len(), 1);
            }
        }
    }
}

#[test]
fn forests_with_equal_functions_have_equal_type_counts() {
    for n in 1..=9 {
        let ts = trees(n);
        let data: Vec<_> = ts
            .iter()
            .map(|t| (chromatic_symmetric_function(t).unwrap(), forest_type_counts(t).unwrap()))
            .collect();
        for (xa, ca) in &data {
            for (xb, cb) in &data {
                assert_eq!(xa == xb, ca == cb);
            }
        }
    }
}

#[test]
fn reconstruction_round_trips() {
    for n in 1..=10 {
        for t in trees(n) {
            if centroid(&t).unwrap().len() != 1 {
                continue;
            }
            let code = canonical_tree_code(&t).unwrap();
            let table = theta_tables(&t).unwrap();
            let full = reconstruct_from_theta(&table).unwrap();
            assert_eq!(canonical_tree_code(&full.tree).unwrap(), code);
            let pairs = reconstruct_from_pairs(&table.pairs_only()).unwrap();
            assert_eq!(canonical_tree_code(&pairs.tree).unwrap(), code);

            // Ties broken the other way give the same tree up to isomorphism.
            let singles = table.singletons().unwrap();
            let mut order = placement_order(singles);
            order.sort_by(|&a, &b| {
                compare_balanced(&singles[b], &singles[a]).unwrap().then(b.cmp(&a))
            });
            let other = reconstruct_in_order(&table, &order).unwrap();
            assert_eq!(canonical_tree_code(&other.tree).unwrap(), code);
        }
    }
}

#[test]
fn extraction_matches_structure_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..100 {
        let n = rng.gen_range(1..=9);
        let g = generators::gnp(n, rng.gen_range(0.1..0.6), &mut rng);
        let r = extract_invariants(&chromatic_symmetric_function(&g).unwrap()).unwrap();
        let s = structural_report(&g);
        assert_eq!(r.edge_count, BigInt::from(s.edge_count));
        assert_eq!(
            r.matching_counts,
            s.matching_counts.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()
        );
        assert_eq!(r.sum_squared_degrees, BigInt::from(s.sum_squared_degrees));
        assert_eq!(r.triangle_count, BigInt::from(s.triangle_count));
        assert_eq!(r.s22.clone() + r.s3.clone(), BigInt::from(s.edge_count * s.edge_count.saturating_sub(1) / 2));
    }
}
