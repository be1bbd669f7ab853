//! θ-images of tree edges and reconstruction of single-centroid trees.
//!
//! For a tree `T` and edges `S`, `θ_T(S)` is the type of the forest
//! `T - S`. Single edges map to two-part partitions `(n - i, i)` and pairs
//! to three-part partitions. Two edges *attract* when some path ending at a
//! centroid contains both; otherwise they *repel*.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::csf::{subset_type_tally, CsfConfig};
use crate::error::{Error, Result};
use crate::graph::{centroid, EdgeSubset, Graph};
use crate::partition::{compare_balanced, Partition};

/// θ-images of single edges (optional) and of all edge pairs, keyed by label
/// position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaTable {
    n: usize,
    labels: Vec<String>,
    singletons: Option<Vec<Partition>>,
    /// Row-major upper triangle: pair `(i, j)` with `i < j`.
    pairs: Vec<Option<Partition>>,
}

fn pair_slot(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < m);
    i * m - i * (i + 1) / 2 + (j - i - 1)
}

impl ThetaTable {
    /// An empty pair table over `labels`, with singleton images if known.
    pub fn new(n: usize, labels: Vec<String>, singletons: Option<Vec<Partition>>) -> Result<Self> {
        let m = labels.len();
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InconsistentData(format!("label {} repeated", w[0])));
        }
        if let Some(bad) = labels
            .iter()
            .find(|l| l.is_empty() || l.contains(char::is_whitespace))
        {
            return Err(Error::InconsistentData(format!(
                "label {bad:?} must be non-empty without whitespace"
            )));
        }
        if let Some(s) = &singletons {
            if s.len() != m {
                return Err(Error::InconsistentData(format!(
                    "{} singleton images for {m} labels",
                    s.len()
                )));
            }
            for (l, p) in labels.iter().zip(s) {
                check_shape(n, 2, p).map_err(|e| Error::InconsistentData(format!("{l}: {e}")))?;
            }
        }
        Ok(ThetaTable {
            n,
            labels,
            singletons,
            pairs: vec![None; m * m.saturating_sub(1) / 2],
        })
    }

    pub fn set_pair(&mut self, i: usize, j: usize, image: Partition) -> Result<()> {
        let m = self.labels.len();
        if i == j || i >= m || j >= m {
            return Err(Error::InconsistentData(format!("no label pair ({i}, {j})")));
        }
        check_shape(self.n, 3, &image).map_err(|e| {
            Error::InconsistentData(format!("{} {}: {e}", self.labels[i], self.labels[j]))
        })?;
        self.pairs[pair_slot(m, i.min(j), i.max(j))] = Some(image);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn singletons(&self) -> Option<&[Partition]> {
        self.singletons.as_deref()
    }

    pub fn singleton(&self, i: usize) -> Option<&Partition> {
        self.singletons.as_ref().map(|s| &s[i])
    }

    /// Image of the pair `{i, j}`, if set.
    pub fn pair(&self, i: usize, j: usize) -> Option<&Partition> {
        if i == j {
            return None;
        }
        self.pairs[pair_slot(self.labels.len(), i.min(j), i.max(j))].as_ref()
    }

    fn require_pair(&self, i: usize, j: usize) -> Result<&Partition> {
        self.pair(i, j).ok_or_else(|| {
            Error::InconsistentData(format!(
                "missing pair image for {} {}",
                self.labels[i.min(j)],
                self.labels[i.max(j)]
            ))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.pairs.iter().all(Option::is_some)
    }

    /// The same table without singleton images.
    pub fn pairs_only(&self) -> ThetaTable {
        ThetaTable {
            singletons: None,
            ..self.clone()
        }
    }

    /// The same pair images with the given singleton images attached.
    pub fn with_singletons(&self, singletons: Vec<Partition>) -> Result<ThetaTable> {
        let mut t = ThetaTable::new(self.n, self.labels.clone(), Some(singletons))?;
        t.pairs = self.pairs.clone();
        Ok(t)
    }

    /// All set pair images, sorted.
    pub fn pair_multiset(&self) -> Vec<Partition> {
        let mut v: Vec<Partition> = self.pairs.iter().flatten().cloned().collect();
        v.sort();
        v
    }

    /// Header `theta n=<n> m=<m>`, singleton lines `label key` (if known),
    /// then pair lines `label1 label2 key` in row-major order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let header_err = |h: &str| Error::Parse {
            line: 1,
            message: format!("expected header \"theta n=<n> m=<m>\", got {h:?}"),
        };
        let (_, header) = lines.next().ok_or_else(|| header_err(""))?;
        let (n, m) = header
            .strip_prefix("theta n=")
            .and_then(|rest| rest.split_once(" m="))
            .and_then(|(n, m)| Some((n.parse::<usize>().ok()?, m.parse::<usize>().ok()?)))
            .ok_or_else(|| header_err(header))?;

        let mut singles: Vec<(usize, String, Partition)> = Vec::new();
        let mut pairs: Vec<(usize, String, String, Partition)> = Vec::new();
        for (line, body) in lines {
            let err = |message: String| Error::Parse { line, message };
            let tokens: Vec<&str> = body.split(' ').collect();
            let key = |t: &str| Partition::from_key(t).map_err(|e| err(e.to_string()));
            match tokens.as_slice() {
                [l, k] => {
                    if !pairs.is_empty() {
                        return Err(err("singleton lines must precede pair lines".into()));
                    }
                    singles.push((line, l.to_string(), key(k)?));
                }
                [a, b, k] => pairs.push((line, a.to_string(), b.to_string(), key(k)?)),
                _ => return Err(err(format!("cannot read {body:?}"))),
            }
        }

        let labels: Vec<String> = if singles.is_empty() {
            let mut seen: Vec<String> = Vec::new();
            for (_, a, b, _) in &pairs {
                for l in [a, b] {
                    if !seen.contains(l) {
                        seen.push(l.clone());
                    }
                }
            }
            seen
        } else {
            singles.iter().map(|(_, l, _)| l.clone()).collect()
        };
        if labels.len() != m && !(m <= 1 && singles.is_empty() && labels.is_empty()) {
            return Err(Error::Parse {
                line: 1,
                message: format!("header says m={m} but {} labels were found", labels.len()),
            });
        }
        let labels = if labels.is_empty() {
            (1..=m).map(|i| format!("e{i}")).collect()
        } else {
            labels
        };
        let singletons = (!singles.is_empty()).then(|| singles.iter().map(|(_, _, p)| p.clone()).collect());
        let mut table = ThetaTable::new(n, labels, singletons).map_err(|e| Error::Parse {
            line: singles.first().map_or(1, |s| s.0),
            message: e.to_string(),
        })?;
        let expected = m * m.saturating_sub(1) / 2;
        if pairs.len() != expected {
            return Err(Error::Parse {
                line: 1,
                message: format!("expected {expected} pair lines, found {}", pairs.len()),
            });
        }
        for (line, a, b, p) in pairs {
            let err = |message: String| Error::Parse { line, message };
            let i = table.index_of(&a).ok_or_else(|| err(format!("unknown label {a}")))?;
            let j = table.index_of(&b).ok_or_else(|| err(format!("unknown label {b}")))?;
            if table.pair(i, j).is_some() {
                return Err(err(format!("pair {a} {b} repeated")));
            }
            table.set_pair(i, j, p).map_err(|e| err(e.to_string()))?;
        }
        Ok(table)
    }
}

impl fmt::Display for ThetaTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.labels.len();
        writeln!(f, "theta n={} m={m}", self.n)?;
        if let Some(s) = &self.singletons {
            for (l, p) in self.labels.iter().zip(s) {
                writeln!(f, "{l} {p}")?;
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if let Some(p) = self.pair(i, j) {
                    writeln!(f, "{} {} {p}", self.labels[i], self.labels[j])?;
                }
            }
        }
        Ok(())
    }
}

fn check_shape(n: usize, parts: usize, p: &Partition) -> std::result::Result<(), String> {
    if p.len() != parts || p.degree() != n {
        return Err(format!("({p}) is not a {parts}-part partition of {n}"));
    }
    Ok(())
}

/// `θ_T(S)`: the component type of `T - S`.
pub fn theta(t: &Graph, s: &EdgeSubset) -> Result<Partition> {
    t.require_tree()?;
    if s.iter().any(|i| i >= t.edge_count()) {
        return Err(Error::Precondition("edge subset refers to a missing edge".into()));
    }
    Ok(t.pi_type(&s.complement(t.edge_count())))
}

/// Singleton and pair images of every edge of `t`, labelled `e1, e2, ...`
/// in edge order.
pub fn theta_tables(t: &Graph) -> Result<ThetaTable> {
    t.require_tree()?;
    let m = t.edge_count();
    let n = t.vertex_count();
    let full = EdgeSubset::full(m);
    let without = |drop: &[usize]| {
        let mut s = full.clone();
        for &i in drop {
            s.remove(i);
        }
        t.pi_type(&s)
    };
    let singletons: Vec<Partition> = (0..m).map(|i| without(&[i])).collect();
    let labels = (1..=m).map(|i| format!("e{i}")).collect();
    let mut table = ThetaTable::new(n, labels, Some(singletons))?;
    let images: Vec<(usize, usize, Partition)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, j)| (i, j, without(&[i, j])))
        .collect();
    for (i, j, p) in images {
        table.set_pair(i, j, p)?;
    }
    Ok(table)
}

/// Whether some path with a centroid as an endpoint contains both edges.
pub fn attracts(t: &Graph, ea: usize, eb: usize) -> Result<bool> {
    if ea == eb || ea >= t.edge_count() || eb >= t.edge_count() {
        return Err(Error::Precondition(format!(
            "need two distinct edges of the tree, got {ea} and {eb}"
        )));
    }
    let centroids = centroid(t)?;
    let inc = t.incidence();
    for c in centroids {
        // The edges on the path from c to x, for every x.
        let mut stack = vec![(c, usize::MAX, false, false)];
        while let Some((x, parent, has_a, has_b)) = stack.pop() {
            if has_a && has_b {
                return Ok(true);
            }
            for &(y, e) in &inc[x] {
                if y != parent {
                    stack.push((y, x, has_a || e == ea, has_b || e == eb));
                }
            }
        }
    }
    Ok(false)
}

/// Decides attraction from θ-images alone, for a tree with a single
/// centroid.
///
/// With `θa = (n - i, i)`, `θb = (n - k, k)` and `i >= k`, the pair image is
/// `re(n - i, i - k, k)` when the edges attract and `re(n - i - k, i, k)`
/// when they repel. Edges with equal images always repel.
pub fn attracts_from_theta(n: usize, theta_a: &Partition, theta_b: &Partition, theta_ab: &Partition) -> Result<bool> {
    for (p, parts) in [(theta_a, 2), (theta_b, 2), (theta_ab, 3)] {
        check_shape(n, parts, p).map_err(Error::InconsistentData)?;
    }
    let (mut i, mut k) = (theta_a.parts()[1], theta_b.parts()[1]);
    if i < k {
        std::mem::swap(&mut i, &mut k);
    }
    let re = |v: [usize; 3]| Partition::rearrange(v.map(|x| x as i64)).ok();
    let repel = re([n - i - k, i, k]);
    if i == k {
        if repel.as_ref() == Some(theta_ab) {
            return Ok(false);
        }
        return Err(Error::InconsistentData(format!(
            "equal images ({theta_a}) require pair image ({}), got ({theta_ab})",
            repel.map_or_else(|| "none".to_string(), |p| p.key())
        )));
    }
    let attract = re([n - i, i - k, k]);
    if attract.as_ref() == Some(theta_ab) {
        Ok(true)
    } else if repel.as_ref() == Some(theta_ab) {
        Ok(false)
    } else {
        Err(Error::InconsistentData(format!(
            "pair image ({theta_ab}) fits neither split of ({theta_a}) and ({theta_b})"
        )))
    }
}

/// A reconstructed tree; edge `i` carries `labels[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub tree: Graph,
    pub labels: Vec<String>,
}

/// Label indices sorted for placement: most balanced image first, ties by
/// ascending index.
pub fn placement_order(singletons: &[Partition]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..singletons.len()).collect();
    order.sort_by(|&a, &b| {
        compare_balanced(&singletons[b], &singletons[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    order
}

/// Rebuilds the single-centroid tree described by a full θ-table.
pub fn reconstruct_from_theta(table: &ThetaTable) -> Result<Reconstruction> {
    let singletons = table
        .singletons()
        .ok_or_else(|| Error::Precondition("table has no singleton images".into()))?;
    reconstruct_in_order(table, &placement_order(singletons))
}

/// Like [`reconstruct_from_theta`], placing labels in the given order. The
/// order must list every label once with non-increasing balance.
pub fn reconstruct_in_order(table: &ThetaTable, order: &[usize]) -> Result<Reconstruction> {
    let n = table.vertex_count();
    let m = table.label_count();
    let singletons = table
        .singletons()
        .ok_or_else(|| Error::Precondition("table has no singleton images".into()))?;
    if n == 0 || m + 1 != n {
        return Err(Error::InconsistentData(format!(
            "a tree on {n} vertices has {} edges, table has {m}",
            n.saturating_sub(1)
        )));
    }
    if n.is_multiple_of(2) && singletons.iter().any(|p| p.parts() == [n / 2, n / 2]) {
        return Err(Error::TwoCentroids);
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..m).collect::<Vec<_>>() {
        return Err(Error::Precondition("placement order is not a permutation of the labels".into()));
    }
    for w in order.windows(2) {
        if compare_balanced(&singletons[w[0]], &singletons[w[1]])? == Ordering::Less {
            return Err(Error::Precondition(format!(
                "placement order puts {} before the more balanced {}",
                table.labels()[w[0]],
                table.labels()[w[1]]
            )));
        }
    }

    // (parent, child) per placed label; the child is farther from the centroid.
    let mut placed: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut depth = vec![0usize; n];
    let mut placed_labels: Vec<usize> = Vec::with_capacity(m);
    let mut next_vertex = 1;
    for &x in order {
        let mut path: Vec<usize> = Vec::new();
        for &y in &placed_labels {
            let pair = table.require_pair(x, y)?;
            let attract = attracts_from_theta(n, &singletons[x], &singletons[y], pair).map_err(|e| {
                Error::InconsistentData(format!("{} {}: {e}", table.labels()[y], table.labels()[x]))
            })?;
            if attract {
                path.push(y);
            }
        }
        path.sort_by_key(|&y| depth[placed[y].expect("placed").1]);
        let mut at = 0;
        for &y in &path {
            let (p, c) = placed[y].expect("placed");
            if p != at {
                return Err(Error::InconsistentData(format!(
                    "edges attracting {} do not form a path from the centroid",
                    table.labels()[x]
                )));
            }
            at = c;
        }
        let v = next_vertex;
        next_vertex += 1;
        depth[v] = depth[at] + 1;
        placed[x] = Some((at, v));
        placed_labels.push(x);
    }

    let tree = Graph::new(n, placed.iter().map(|e| e.expect("every label placed")))?;
    let recomputed = theta_tables(&tree)?;
    for i in 0..m {
        if recomputed.singleton(i) != table.singleton(i) {
            return Err(Error::InconsistentData(format!(
                "no tree matches the image of {}",
                table.labels()[i]
            )));
        }
        for j in i + 1..m {
            if recomputed.pair(i, j) != table.pair(i, j) {
                return Err(Error::InconsistentData(format!(
                    "no tree matches the image of {} {}",
                    table.labels()[i],
                    table.labels()[j]
                )));
            }
        }
    }
    Ok(Reconstruction {
        tree,
        labels: table.labels().to_vec(),
    })
}

/// Labels (as indices) with at least two partners whose pair image is
/// `(n - 2, 1, 1)`: exactly the leaf edges when `n > 4`.
pub fn leaf_edges_from_pairs(table: &ThetaTable) -> Result<Vec<usize>> {
    let n = table.vertex_count();
    if n <= 4 {
        return Err(Error::SmallInstance(n));
    }
    let m = table.label_count();
    let target = Partition::new(vec![n - 2, 1, 1]).expect("n > 4");
    let mut partners = vec![0usize; m];
    for i in 0..m {
        for j in i + 1..m {
            if table.require_pair(i, j)? == &target {
                partners[i] += 1;
                partners[j] += 1;
            }
        }
    }
    Ok((0..m).filter(|&i| partners[i] >= 2).collect())
}

/// Singleton images recovered from pair images: `(n - 1, 1)` on leaf edges,
/// and `(a, n - a)` elsewhere with `a` the largest part among the images of
/// pairs with a leaf edge.
pub fn singletons_from_pairs(table: &ThetaTable) -> Result<Vec<Partition>> {
    let n = table.vertex_count();
    let leaves = leaf_edges_from_pairs(table)?;
    if leaves.is_empty() {
        return Err(Error::InconsistentData("no leaf edges found".into()));
    }
    (0..table.label_count())
        .map(|k| {
            if leaves.contains(&k) {
                return Ok(Partition::new(vec![n - 1, 1]).expect("n > 4"));
            }
            let mut a = 0;
            for &l in &leaves {
                a = a.max(table.require_pair(k, l)?.largest().unwrap_or(0));
            }
            if a == 0 || a >= n {
                return Err(Error::InconsistentData(format!(
                    "cannot recover the image of {}",
                    table.labels()[k]
                )));
            }
            Ok(Partition::rearrange([a as i64, (n - a) as i64]).expect("positive parts"))
        })
        .collect()
}

/// Rebuilds a single-centroid tree from pair images alone.
pub fn reconstruct_from_pairs(table: &ThetaTable) -> Result<Reconstruction> {
    let n = table.vertex_count();
    let m = table.label_count();
    if n == 0 || m + 1 != n {
        return Err(Error::InconsistentData(format!(
            "a tree on {n} vertices has {} edges, table has {m}",
            n.saturating_sub(1)
        )));
    }
    if n <= 4 {
        // Up to four vertices there is one single-centroid tree per order.
        let tree = match n {
            1 => Graph::empty(1),
            2 => return Err(Error::TwoCentroids),
            _ => Graph::new(n, (1..n).map(|i| (0, i))).expect("star"),
        };
        let recomputed = theta_tables(&tree)?;
        if recomputed.pair_multiset() != table.pair_multiset() {
            return Err(Error::InconsistentData(format!(
                "pair images do not describe a tree on {n} vertices"
            )));
        }
        return Ok(Reconstruction {
            tree,
            labels: table.labels().to_vec(),
        });
    }
    let full = table.with_singletons(singletons_from_pairs(table)?)?;
    reconstruct_from_theta(&full)
}

/// Number of edge subsets of each component type, for a forest.
pub fn forest_type_counts(f: &Graph) -> Result<BTreeMap<Partition, u64>> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let tally: HashMap<_, _> = subset_type_tally(f, &CsfConfig::default())?;
    Ok(tally
        .into_iter()
        .map(|(p, c)| (p, c.even + c.odd))
        .collect())
}
