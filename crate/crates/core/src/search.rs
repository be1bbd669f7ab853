//! Exhaustive search for non-isomorphic graphs sharing a chromatic symmetric
//! function.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::csf::{chromatic_symmetric_function_with, CsfConfig};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_tree_code, Graph, TreeEnumerator};

/// Largest vertex count searched for each class.
pub const MAX_UNICYCLIC_VERTICES: usize = 10;
pub const MAX_ALL_VERTICES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchClass {
    /// Trees, one per isomorphism class.
    Tree,
    /// Connected graphs with exactly one cycle.
    Unicyclic,
    /// Every simple graph.
    All,
}

impl fmt::Display for SearchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchClass::Tree => "tree",
            SearchClass::Unicyclic => "unicyclic",
            SearchClass::All => "all",
        })
    }
}

impl FromStr for SearchClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" => Ok(SearchClass::Tree),
            "unicyclic" => Ok(SearchClass::Unicyclic),
            "all" => Ok(SearchClass::All),
            _ => Err(Error::Precondition(format!(
                "unknown class {s:?}; expected tree, unicyclic or all"
            ))),
        }
    }
}

/// Groups of pairwise non-isomorphic graphs with one shared `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionReport {
    pub n: usize,
    pub class: SearchClass,
    /// Number of isomorphism classes examined.
    pub graphs: usize,
    /// Each group lists at least two graph descriptions `n:u-v,...`, sorted.
    pub groups: Vec<Vec<String>>,
    pub elapsed: Duration,
}

impl CollisionReport {
    /// Deterministic text form; the elapsed time is left out.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "search n={} class={} graphs={} groups={}\n",
            self.n,
            self.class,
            self.graphs,
            self.groups.len()
        );
        for (i, g) in self.groups.iter().enumerate() {
            out.push_str(&format!("group {}\n", i + 1));
            for member in g {
                out.push_str(&format!("  {member}\n"));
            }
        }
        out
    }
}

/// `n:u-v,...` with the edge list sorted.
pub fn describe(g: &Graph) -> String {
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    let body: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{}:{}", g.vertex_count(), body.join(","))
}

/// One representative per isomorphism class of the requested class.
pub fn enumerate_class(n: usize, class: SearchClass) -> Result<Vec<Graph>> {
    match class {
        SearchClass::Tree => Ok(TreeEnumerator::new(n).collect()),
        SearchClass::Unicyclic => {
            if n > MAX_UNICYCLIC_VERTICES {
                return Err(Error::ResourceLimit {
                    what: "vertex count for unicyclic search",
                    size: n as u128,
                    limit: MAX_UNICYCLIC_VERTICES as u128,
                });
            }
            let trees: Vec<Graph> = TreeEnumerator::new(n).collect();
            let candidates: Vec<Graph> = trees
                .par_iter()
                .flat_map_iter(|t| {
                    (0..n)
                        .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
                        .filter(|&(u, v)| !t.has_edge(u, v))
                        .map(|(u, v)| t.with_edge(u, v).expect("non-edge"))
                        .collect::<Vec<_>>()
                })
                .collect();
            Ok(dedup_by_canonical_form(candidates))
        }
        SearchClass::All => {
            if n > MAX_ALL_VERTICES {
                return Err(Error::ResourceLimit {
                    what: "vertex count for exhaustive search",
                    size: n as u128,
                    limit: MAX_ALL_VERTICES as u128,
                });
            }
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let graphs: Vec<Graph> = (0..1u64 << pairs.len())
                .into_par_iter()
                .map(|mask| {
                    Graph::new(n, (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]))
                        .expect("distinct pairs")
                })
                .collect();
            Ok(dedup_by_canonical_form(graphs))
        }
    }
}

fn dedup_by_canonical_form(graphs: Vec<Graph>) -> Vec<Graph> {
    let forms: Vec<_> = graphs.par_iter().map(canonical_form).collect();
    let mut seen = HashSet::new();
    let mut out: Vec<Graph> = forms
        .into_iter()
        .filter(|f| seen.insert(f.clone()))
        .map(|f| f.to_graph())
        .collect();
    out.sort_by_cached_key(describe);
    out
}

/// Enumerates `class` on `n` vertices, computes every `X`, and groups
/// non-isomorphic graphs whose functions coincide.
pub fn search(n: usize, class: SearchClass, config: &CsfConfig) -> Result<CollisionReport> {
    let start = Instant::now();
    let graphs = enumerate_class(n, class)?;
    let fingerprints: Vec<String> = graphs
        .par_iter()
        .map(|g| chromatic_symmetric_function_with::<BigInt>(g, config).map(|x| x.to_text()))
        .collect::<Result<_>>()?;

    let mut buckets: HashMap<&str, Vec<usize>> = HashMap::new();
    for (i, f) in fingerprints.iter().enumerate() {
        buckets.entry(f.as_str()).or_default().push(i);
    }
    let mut groups: Vec<Vec<String>> = Vec::new();
    for members in buckets.into_values() {
        if members.len() < 2 {
            continue;
        }
        let mut distinct: Vec<&Graph> = Vec::new();
        let mut keys = HashSet::new();
        for &i in &members {
            let key = match class {
                SearchClass::Tree => canonical_tree_code(&graphs[i])?,
                _ => canonical_form(&graphs[i]).to_string(),
            };
            if keys.insert(key) {
                distinct.push(&graphs[i]);
            }
        }
        if distinct.len() >= 2 {
            let mut names: Vec<String> = distinct.into_iter().map(describe).collect();
            names.sort();
            groups.push(names);
        }
    }
    groups.sort();
    Ok(CollisionReport {
        n,
        class,
        graphs: graphs.len(),
        groups,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn class_counts() {
        // Connected unicyclic graphs on 3..=7 vertices.
        let expected = [1, 2, 5, 13, 33];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 3;
            let graphs = enumerate_class(n, SearchClass::Unicyclic).unwrap();
            assert_eq!(graphs.len(), want, "n = {n}");
        }
        // All simple graphs on 1..=5 vertices.
        let expected = [1, 2, 4, 11, 34];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_class(i + 1, SearchClass::All).unwrap().len(), want);
        }
    }

    #[test]
    fn small_trees_have_no_collisions() {
        for n in 1..=9 {
            let r = search(n, SearchClass::Tree, &CsfConfig::default()).unwrap();
            assert!(r.groups.is_empty(), "n = {n}");
        }
    }

    #[test]
    fn unicyclic_six_contains_known_pair() {
        let r = search(6, SearchClass::Unicyclic, &CsfConfig::default()).unwrap();
        let left = canonical_form(&fixtures::unicyclic_left()).to_graph();
        let right = canonical_form(&fixtures::unicyclic_right()).to_graph();
        let (dl, dr) = (describe(&left), describe(&right));
        assert!(r
            .groups
            .iter()
            .any(|g| g.contains(&dl) && g.contains(&dr)));
    }

    #[test]
    fn all_graphs_on_five_vertices_collide() {
        let r = search(5, SearchClass::All, &CsfConfig::default()).unwrap();
        assert!(!r.groups.is_empty());
        assert!(r.to_text().starts_with("search n=5 class=all graphs=34 groups="));
    }

    #[test]
    fn limits() {
        assert!(enumerate_class(11, SearchClass::Unicyclic).unwrap_err().is_resource_limit());
        assert!(enumerate_class(7, SearchClass::All).unwrap_err().is_resource_limit());
        assert_eq!("tree".parse::<SearchClass>().unwrap(), SearchClass::Tree);
        assert!("forest".parse::<SearchClass>().is_err());
    }
}
