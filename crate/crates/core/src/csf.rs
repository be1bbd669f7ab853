//! The chromatic symmetric function `X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{π(S)}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::scalar::{from_i64, from_u64, Coefficient};

/// Widest edge set the subset enumeration can address.
pub const HARD_EDGE_LIMIT: usize = 62;

/// A homogeneous polynomial in the power-sum basis, stored sparsely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSumPolynomial<C> {
    degree: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coefficient> PowerSumPolynomial<C> {
    pub fn zero(degree: usize) -> Self {
        PowerSumPolynomial {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Sums the given terms; fails if a partition has the wrong degree.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, C)>) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (lambda, c) in terms {
            p.add_term(lambda, c)?;
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `p_lambda`, zero when absent.
    pub fn coefficient(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    /// Non-zero terms in output order: descending lexicographic on the part
    /// lists, so `(n)` comes first and `(1^n)` last.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) -> Result<()> {
        if lambda.degree() != self.degree {
            return Err(Error::MalformedPolynomial(format!(
                "term ({lambda}) does not have degree {}",
                self.degree
            )));
        }
        self.add_unchecked(lambda, c);
        Ok(())
    }

    fn add_unchecked(&mut self, lambda: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, factor: &C) -> Self {
        let mut out = Self::zero(self.degree);
        if factor.is_zero() {
            return out;
        }
        for (lambda, c) in &self.terms {
            out.terms.insert(lambda.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Adds `other`; the degrees must agree.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::MixedVertexCounts(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_unchecked(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    /// Evaluates at `x_1 = ... = x_k = 1`, every other variable 0, giving
    /// the chromatic polynomial at `k` when this is `X_G`.
    pub fn specialize(&self, k: u64) -> C {
        let base: C = from_u64(k);
        let mut total = C::zero();
        for (lambda, c) in &self.terms {
            total = total + c.clone() * num_traits::pow(base.clone(), lambda.len());
        }
        total
    }

    /// The first term, in output order, where the two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Partition, C, C)> {
        let mut keys: Vec<&Partition> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.coefficient(k), other.coefficient(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }

    /// `csf n=<n>` followed by one `<partition> <coefficient>` line per term.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Inverse of [`PowerSumPolynomial::to_text`]. Terms may come in any
    /// order but each partition at most once.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let degree = header
            .strip_prefix("csf n=")
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse {
                line: 1,
                message: format!("expected header \"csf n=<n>\", got {header:?}"),
            })?;
        let mut out = Self::zero(degree);
        for (line, body) in lines {
            let err = |message: String| Error::Parse { line, message };
            let (key, coef) = body
                .split_once(' ')
                .ok_or_else(|| err(format!("expected \"<partition> <coefficient>\", got {body:?}")))?;
            let lambda = Partition::from_key(key).map_err(|e| err(e.to_string()))?;
            let c: C = coef
                .parse()
                .map_err(|_| err(format!("bad coefficient {coef:?}")))?;
            if c.is_zero() {
                return Err(err("zero coefficients are not stored".into()));
            }
            if out.terms.contains_key(&lambda) {
                return Err(err(format!("partition ({lambda}) repeated")));
            }
            out.add_term(lambda, c).map_err(|e| err(e.to_string()))?;
        }
        Ok(out)
    }
}

impl<C: Coefficient> fmt::Display for PowerSumPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "csf n={}", self.degree)?;
        for (lambda, c) in self.terms() {
            writeln!(f, "{lambda} {c}")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for PowerSumPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms()).finish()
    }
}

impl<C: Coefficient> Add for &PowerSumPolynomial<C> {
    type Output = PowerSumPolynomial<C>;

    /// Panics on mismatched degrees; see [`PowerSumPolynomial::checked_add`].
    fn add(self, rhs: Self) -> PowerSumPolynomial<C> {
        self.checked_add(rhs).expect("degrees must match")
    }
}

impl<C: Coefficient> Neg for &PowerSumPolynomial<C> {
    type Output = PowerSumPolynomial<C>;

    fn neg(self) -> PowerSumPolynomial<C> {
        self.scaled(&-C::one())
    }
}

impl<C: Coefficient> Sub for &PowerSumPolynomial<C> {
    type Output = PowerSumPolynomial<C>;

    fn sub(self, rhs: Self) -> PowerSumPolynomial<C> {
        self + &(-rhs)
    }
}

/// Limits for the exponential computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CsfConfig {
    /// Largest edge count accepted by subset enumeration.
    pub max_edges: usize,
}

impl Default for CsfConfig {
    fn default() -> Self {
        CsfConfig { max_edges: 30 }
    }
}

impl CsfConfig {
    pub const ENV_VAR: &'static str = "CSFKIT_MAX_EDGES";

    /// Default limits, with `max_edges` taken from `CSFKIT_MAX_EDGES` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(v) => {
                let max_edges = v.trim().parse::<usize>().map_err(|_| {
                    Error::Precondition(format!("{} must be an integer, got {v:?}", Self::ENV_VAR))
                })?;
                Ok(CsfConfig { max_edges })
            }
            Err(_) => Ok(CsfConfig::default()),
        }
    }

    pub(crate) fn check(&self, edges: usize) -> Result<()> {
        let limit = self.max_edges.min(HARD_EDGE_LIMIT);
        if edges > limit {
            return Err(Error::ResourceLimit {
                what: "edge count",
                size: edges as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }
}

pub(crate) use crate::tally::ParityCounts;

pub(crate) fn subset_type_tally(g: &Graph, config: &CsfConfig) -> Result<HashMap<Partition, ParityCounts>> {
    config.check(g.edge_count())?;
    Ok(crate::tally::tally(g))
}

/// `X_G` with arbitrary-precision coefficients and default limits.
pub fn chromatic_symmetric_function(g: &Graph) -> Result<PowerSumPolynomial<BigInt>> {
    chromatic_symmetric_function_with(g, &CsfConfig::default())
}

/// `X_G` over any coefficient ring. Fails with a resource-limit error when
/// `g` has more edges than `config` allows.
pub fn chromatic_symmetric_function_with<C: Coefficient>(
    g: &Graph,
    config: &CsfConfig,
) -> Result<PowerSumPolynomial<C>> {
    let tally = subset_type_tally(g, config)?;
    let mut out = PowerSumPolynomial::zero(g.vertex_count());
    for (lambda, counts) in tally {
        let c = from_i64::<C>(counts.even as i64) - from_i64::<C>(counts.odd as i64);
        out.add_unchecked(lambda, c);
    }
    Ok(out)
}

/// Largest `k^n` search space [`count_proper_colorings`] accepts.
pub const COLORING_LIMIT: u128 = 1 << 40;

/// Counts maps `V -> {1..k}` that give adjacent vertices different colours,
/// by direct backtracking over vertex assignments.
pub fn count_proper_colorings(g: &Graph, k: u64) -> Result<u128> {
    let n = g.vertex_count();
    let space = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space > COLORING_LIMIT {
        return Err(Error::ResourceLimit {
            what: "colouring search space",
            size: space,
            limit: COLORING_LIMIT,
        });
    }
    // Only neighbours coloured earlier constrain vertex v.
    let earlier: Vec<Vec<usize>> = g
        .adjacency()
        .into_iter()
        .enumerate()
        .map(|(v, nb)| nb.into_iter().filter(|&w| w < v).collect())
        .collect();

    fn rec(v: usize, k: u64, earlier: &[Vec<usize>], colour: &mut Vec<u64>) -> u128 {
        if v == earlier.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            if earlier[v].iter().all(|&w| colour[w] != c) {
                colour[v] = c;
                total += rec(v + 1, k, earlier, colour);
            }
        }
        total
    }

    Ok(rec(0, k, &earlier, &mut vec![0; n]))
}

/// Graph invariants read off the coefficients of `X_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedReport<C> {
    pub vertex_count: usize,
    pub edge_count: C,
    /// `matching_counts[k - 1]` is the number of `k`-edge matchings.
    pub matching_counts: Vec<C>,
    /// Spanning subgraphs made of two disjoint edges.
    pub s22: C,
    /// Spanning subgraphs made of two edges sharing a vertex.
    pub s3: C,
    pub sum_squared_degrees: C,
    pub triangle_count: C,
}

pub fn extract_invariants<C: Coefficient>(x: &PowerSumPolynomial<C>) -> Result<ExtractedReport<C>> {
    let n = x.degree();
    if x.coefficient(&Partition::ones(n)) != C::one() {
        return Err(Error::MalformedPolynomial(format!(
            "coefficient of p_(1^{n}) is {}, expected 1",
            x.coefficient(&Partition::ones(n))
        )));
    }
    let at = |lambda: Option<Partition>| lambda.map_or_else(C::zero, |l| x.coefficient(&l));
    let edge_count = at((n >= 2).then(|| Partition::hook(2, n))).abs();
    let mut matching_counts = Vec::new();
    for k in 1..=n / 2 {
        let c = x.coefficient(&Partition::twos(k, n)).abs();
        if c.is_zero() {
            break;
        }
        matching_counts.push(c);
    }
    let s22 = at((n >= 4).then(|| Partition::twos(2, n)));
    let two: C = from_i64(2);
    let pairs = edge_count.clone() * (edge_count.clone() - C::one()) / two.clone();
    let s3 = pairs - s22.clone();
    let sum_squared_degrees = two.clone() * s3.clone() + two * edge_count.clone();
    let triangle_count = s3.clone() - at((n >= 3).then(|| Partition::hook(3, n)));
    Ok(ExtractedReport {
        vertex_count: n,
        edge_count,
        matching_counts,
        s22,
        s3,
        sum_squared_degrees,
        triangle_count,
    })
}

/// Exact equality of degree and every coefficient.
pub fn csf_equal<C: Coefficient>(a: &PowerSumPolynomial<C>, b: &PowerSumPolynomial<C>) -> bool {
    a == b
}
