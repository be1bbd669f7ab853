//! Deletion identities for `X_G` as rewriting rules on formal sums of graphs.
//!
//! Each rule returns a combination whose chromatic symmetric function equals
//! that of the input graph. Output graphs keep the input's vertex set; edges
//! that survive keep their relative order and an added closing edge is
//! appended last.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::csf::{chromatic_symmetric_function_with, CsfConfig, PowerSumPolynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{from_i64, Coefficient};

/// A formal sum `Σ c_i G_i` with non-zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCombination<C = BigInt> {
    terms: Vec<(C, Graph)>,
}

impl<C: Coefficient> Default for GraphCombination<C> {
    fn default() -> Self {
        GraphCombination { terms: Vec::new() }
    }
}

impl<C: Coefficient> GraphCombination<C> {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[+1 · g]`.
    pub fn single(g: Graph) -> Self {
        let mut c = Self::new();
        c.push(C::one(), g);
        c
    }

    /// Appends a term; zero coefficients are dropped.
    pub fn push(&mut self, coefficient: C, g: Graph) {
        if !coefficient.is_zero() {
            self.terms.push((coefficient, g));
        }
    }

    pub fn terms(&self) -> &[(C, Graph)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common vertex count of the members; `None` when empty.
    pub fn vertex_count(&self) -> Result<Option<usize>> {
        let mut it = self.terms.iter().map(|(_, g)| g.vertex_count());
        let Some(first) = it.next() else {
            return Ok(None);
        };
        for n in it {
            if n != first {
                return Err(Error::MixedVertexCounts(first, n));
            }
        }
        Ok(Some(first))
    }

    /// Replaces term `index` by `replacement` scaled by that term's coefficient.
    pub fn substitute(&self, index: usize, replacement: &GraphCombination<C>) -> Self {
        let mut out = Self::new();
        for (i, (c, g)) in self.terms.iter().enumerate() {
            if i == index {
                for (d, h) in &replacement.terms {
                    out.push(c.clone() * d.clone(), h.clone());
                }
            } else {
                out.push(c.clone(), g.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> FromIterator<(C, Graph)> for GraphCombination<C> {
    fn from_iter<I: IntoIterator<Item = (C, Graph)>>(iter: I) -> Self {
        let mut c = Self::new();
        for (k, g) in iter {
            c.push(k, g);
        }
        c
    }
}

fn endpoints(g: &Graph, e: usize) -> Result<(usize, usize)> {
    g.edge(e).ok_or_else(|| {
        Error::Precondition(format!(
            "edge index {e} out of range for a graph with {} edges",
            g.edge_count()
        ))
    })
}

fn require_triangle(g: &Graph, e1: usize, e2: usize, e3: usize) -> Result<()> {
    if e1 == e2 || e1 == e3 || e2 == e3 {
        return Err(Error::Precondition(format!(
            "edges {e1}, {e2}, {e3} are not distinct"
        )));
    }
    let mut vertices = Vec::with_capacity(6);
    for e in [e1, e2, e3] {
        let (u, v) = endpoints(g, e)?;
        vertices.extend([u, v]);
    }
    vertices.sort_unstable();
    vertices.dedup();
    // Three distinct edges of a simple graph on three vertices are a triangle.
    if vertices.len() != 3 {
        return Err(Error::Precondition(format!(
            "edges {e1}, {e2}, {e3} do not form a triangle"
        )));
    }
    Ok(())
}

/// For a triangle `e1, e2, e3`:
/// `X_G = X_{G - e1} + X_{G - e2} - X_{G - e1 - e2}`.
pub fn triangle_split(g: &Graph, e1: usize, e2: usize, e3: usize) -> Result<GraphCombination> {
    require_triangle(g, e1, e2, e3)?;
    Ok([
        (BigInt::from(1), g.without_edges(&[e1])),
        (BigInt::from(1), g.without_edges(&[e2])),
        (BigInt::from(-1), g.without_edges(&[e1, e2])),
    ]
    .into_iter()
    .collect())
}

/// For adjacent edges `e1 = v v1`, `e2 = v v2` whose closing edge
/// `e3 = v1 v2` is absent:
/// `X_G = X_{G - e1 + e3} + X_{G - e2} - X_{G - e1 - e2 + e3}`.
pub fn path_split(g: &Graph, e1: usize, e2: usize) -> Result<GraphCombination> {
    if e1 == e2 {
        return Err(Error::Precondition(format!("edge {e1} given twice")));
    }
    let (a, b) = endpoints(g, e1)?;
    let (c, d) = endpoints(g, e2)?;
    let (v1, v2) = match (a == c, a == d, b == c, b == d) {
        (true, _, _, _) => (b, d),
        (_, true, _, _) => (b, c),
        (_, _, true, _) => (a, d),
        (_, _, _, true) => (a, c),
        _ => {
            return Err(Error::Precondition(format!(
                "edges {e1} and {e2} do not share an endpoint"
            )))
        }
    };
    if g.has_edge(v1, v2) {
        return Err(Error::Precondition(format!(
            "closing edge {}-{} is already present",
            v1.min(v2),
            v1.max(v2)
        )));
    }
    let close = |h: Graph| h.with_edge(v1, v2).expect("closing edge is absent");
    Ok([
        (BigInt::from(1), close(g.without_edges(&[e1]))),
        (BigInt::from(1), g.without_edges(&[e2])),
        (BigInt::from(-1), close(g.without_edges(&[e1, e2]))),
    ]
    .into_iter()
    .collect())
}

/// For a triangle `e1, e2, e3`:
/// `X_G = 2 X_{G - e3} + X_{G - e1 - e2} - X_{G - e2 - e3} - X_{G - e1 - e3}`.
pub fn wedge_split(g: &Graph, e1: usize, e2: usize, e3: usize) -> Result<GraphCombination> {
    require_triangle(g, e1, e2, e3)?;
    Ok([
        (BigInt::from(2), g.without_edges(&[e3])),
        (BigInt::from(1), g.without_edges(&[e1, e2])),
        (BigInt::from(-1), g.without_edges(&[e2, e3])),
        (BigInt::from(-1), g.without_edges(&[e1, e3])),
    ]
    .into_iter()
    .collect())
}

/// `Σ c_i X_{G_i}`, computing member functions in parallel.
pub fn combination_csf<C: Coefficient>(
    combination: &GraphCombination<C>,
    config: &CsfConfig,
) -> Result<PowerSumPolynomial<C>> {
    let n = combination.vertex_count()?.unwrap_or(0);
    let parts: Vec<PowerSumPolynomial<C>> = combination
        .terms()
        .par_iter()
        .map(|(c, g)| chromatic_symmetric_function_with::<C>(g, config).map(|x| x.scaled(c)))
        .collect::<Result<_>>()?;
    let mut total = PowerSumPolynomial::zero(n);
    for p in &parts {
        total = total.checked_add(p)?;
    }
    Ok(total)
}

/// Converts the small integer coefficients of a rule's output into `C`.
pub fn convert_coefficients<C: Coefficient>(combination: &GraphCombination) -> GraphCombination<C> {
    combination
        .terms()
        .iter()
        .map(|(c, g)| {
            let k = i64::try_from(c).expect("rule coefficients are small");
            (from_i64::<C>(k), g.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csf::chromatic_symmetric_function;
    use crate::fixtures;
    use crate::graph::{canonical_form, cycle_stats, generators, CanonicalForm};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn x(c: &GraphCombination) -> PowerSumPolynomial<BigInt> {
        combination_csf(c, &CsfConfig::default()).unwrap()
    }

    fn shapes(c: &GraphCombination) -> Vec<(BigInt, CanonicalForm)> {
        let mut v: Vec<_> = c.terms().iter().map(|(k, g)| (k.clone(), canonical_form(g))).collect();
        v.sort();
        v
    }

    #[test]
    fn triangle_on_k3() {
        let k3 = generators::complete(3);
        let c = triangle_split(&k3, 0, 1, 2).unwrap();
        let p3 = canonical_form(&generators::path(3));
        let k2v = canonical_form(&Graph::new(3, [(0, 1)]).unwrap());
        let mut expected = vec![
            (BigInt::from(1), p3.clone()),
            (BigInt::from(1), p3),
            (BigInt::from(-1), k2v),
        ];
        expected.sort();
        assert_eq!(shapes(&c), expected);
        assert_eq!(x(&c), chromatic_symmetric_function(&k3).unwrap());
    }

    #[test]
    fn triangle_rejects_non_triangles() {
        let p4 = generators::path(4);
        assert!(matches!(triangle_split(&p4, 0, 1, 2), Err(Error::Precondition(_))));
        let k3 = generators::complete(3);
        assert!(triangle_split(&k3, 0, 0, 1).is_err());
        assert!(triangle_split(&k3, 0, 1, 7).is_err());
        assert!(wedge_split(&p4, 0, 1, 2).is_err());
    }

    #[test]
    fn labelled_triangles_decompose_to_the_same_forests() {
        let (top, [t1, t2, t3]) = fixtures::labelled_triangle_top();
        let (bottom, [b1, b2, b3]) = fixtures::labelled_triangle_bottom();
        let top_c = triangle_split(&top, t1, t2, t3).unwrap();
        let bottom_c = triangle_split(&bottom, b1, b2, b3).unwrap();
        assert!(top_c.terms().iter().all(|(_, g)| g.is_forest()));
        assert_eq!(shapes(&top_c), shapes(&bottom_c));
        assert_eq!(x(&top_c), x(&bottom_c));
        assert_eq!(x(&top_c), chromatic_symmetric_function(&top).unwrap());
    }

    #[test]
    fn path_split_on_p3() {
        let p3 = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        let c = path_split(&p3, 0, 1).unwrap();
        let edges: Vec<(i64, Vec<(usize, usize)>)> = c
            .terms()
            .iter()
            .map(|(k, g)| (i64::try_from(k).unwrap(), g.edges().to_vec()))
            .collect();
        assert_eq!(
            edges,
            vec![
                (1, vec![(0, 2), (1, 2)]),
                (1, vec![(0, 1)]),
                (-1, vec![(1, 2)]),
            ]
        );
        assert_eq!(x(&c), chromatic_symmetric_function(&p3).unwrap());
    }

    #[test]
    fn path_split_on_five_cycle() {
        let (c5, [e1, e2]) = fixtures::labelled_five_cycle();
        let c = path_split(&c5, e1, e2).unwrap();
        let [(_, g23), (_, g1), (_, g3)] = c.terms() else {
            panic!("three terms expected");
        };
        let s = cycle_stats(g23).unwrap();
        assert_eq!((s.cycle_length, s.leaf_count), (4, 1));
        assert_eq!(canonical_form(g1), canonical_form(&generators::path(5)));
        assert_eq!(g3.edge_count(), 4);
        assert_eq!(g3.degree(4), 0);
        assert_eq!(g3.degrees()[..4], [2, 2, 2, 2]);
        assert_eq!(x(&c), chromatic_symmetric_function(&c5).unwrap());
    }

    #[test]
    fn path_split_preconditions() {
        let k3 = generators::complete(3);
        assert!(path_split(&k3, 0, 1).is_err());
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(path_split(&two_edges, 0, 1).is_err());
        assert!(path_split(&two_edges, 0, 0).is_err());
    }

    #[test]
    fn wedge_on_labelled_triangle() {
        let k3 = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let c = wedge_split(&k3, 0, 1, 2).unwrap();
        let edges: Vec<(i64, Vec<(usize, usize)>)> = c
            .terms()
            .iter()
            .map(|(k, g)| (i64::try_from(k).unwrap(), g.edges().to_vec()))
            .collect();
        assert_eq!(
            edges,
            vec![
                (2, vec![(0, 1), (0, 2)]),
                (1, vec![(1, 2)]),
                (-1, vec![(0, 1)]),
                (-1, vec![(0, 2)]),
            ]
        );
        assert_eq!(x(&c), chromatic_symmetric_function(&k3).unwrap());
    }

    #[test]
    fn identities_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..30 {
            let n = rng.gen_range(3..8);
            let (g, [a, b, c]) = generators::planted_triangle(n, 0.4, &mut rng);
            let want = chromatic_symmetric_function(&g).unwrap();
            let t = triangle_split(&g, a, b, c).unwrap();
            assert!(t.terms().iter().all(|(_, h)| h.edge_count() < g.edge_count()));
            assert_eq!(x(&t), want);
            assert_eq!(x(&wedge_split(&g, a, b, c).unwrap()), want);

            let (g, [e1, e2]) = generators::planted_open_wedge(n, 0.4, &mut rng);
            let p = path_split(&g, e1, e2).unwrap();
            let counts: Vec<usize> = p.terms().iter().map(|(_, h)| h.edge_count()).collect();
            let m = g.edge_count();
            assert_eq!(counts, vec![m, m - 1, m - 1]);
            assert_eq!(x(&p), chromatic_symmetric_function(&g).unwrap());
        }
    }

    #[test]
    fn wedge_follows_from_triangle_then_path() {
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..20 {
            let n = rng.gen_range(3..8);
            let (g, [e1, e2, e3]) = generators::planted_triangle(n, 0.4, &mut rng);
            let (a, b) = (g.edge(e2).unwrap(), g.edge(e3).unwrap());
            let step = triangle_split(&g, e3, e1, e2).unwrap();
            // Term 1 is G - e1, where e2 and e3 now form an open wedge closed by e1.
            let g1 = &step.terms()[1].1;
            let i3 = g1.edge_index(b.0, b.1).unwrap();
            let i2 = g1.edge_index(a.0, a.1).unwrap();
            let chain = step.substitute(1, &path_split(g1, i3, i2).unwrap());
            assert_eq!(x(&chain), x(&wedge_split(&g, e1, e2, e3).unwrap()));
        }
    }

    #[test]
    fn combination_checks_vertex_counts() {
        let mut c = GraphCombination::<BigInt>::new();
        c.push(BigInt::from(1), generators::path(3));
        c.push(BigInt::from(0), generators::path(9));
        assert_eq!(c.len(), 1);
        c.push(BigInt::from(1), generators::path(4));
        assert_eq!(
            combination_csf(&c, &CsfConfig::default()),
            Err(Error::MixedVertexCounts(3, 4))
        );
        let single = GraphCombination::<i64>::single(generators::path(4));
        let p: PowerSumPolynomial<i64> = combination_csf(&single, &CsfConfig::default()).unwrap();
        assert_eq!(p.to_text(), chromatic_symmetric_function(&generators::path(4)).unwrap().to_text());
    }

    #[test]
    fn coefficient_conversion() {
        let c = wedge_split(&generators::complete(3), 0, 1, 2).unwrap();
        let small: GraphCombination<i64> = convert_coefficients(&c);
        let p = combination_csf(&small, &CsfConfig::default()).unwrap();
        assert_eq!(p.to_text(), x(&c).to_text());
    }
}
