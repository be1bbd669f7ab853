//! Integer partitions: the value type for component types, θ-images and
//! power-sum indices.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
///
/// The derived ordering is ascending lexicographic on the part list. Output
/// files list terms in the reverse of this order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Wraps parts that are already a partition.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::InvalidPart(p as i64));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Incomparable(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive integers into a partition (the "re" map).
    pub fn rearrange<I>(values: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let mut parts = Vec::new();
        for v in values {
            let v: i64 = v.into();
            if v <= 0 {
                return Err(Error::InvalidPart(v));
            }
            parts.push(v as usize);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Sorts component sizes; all entries must already be positive.
    pub(crate) fn from_sizes(mut sizes: Vec<usize>) -> Self {
        debug_assert!(sizes.iter().all(|&s| s > 0));
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition(sizes)
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// `(head, 1, ..., 1)` of total `n`; requires `1 <= head <= n`.
    pub fn hook(head: usize, n: usize) -> Self {
        assert!(head >= 1 && head <= n, "hook head out of range");
        let mut parts = vec![head];
        parts.extend(std::iter::repeat_n(1, n - head));
        Partition(parts)
    }

    /// `(2^k, 1^(n-2k))`; requires `2k <= n`.
    pub fn twos(k: usize, n: usize) -> Self {
        assert!(2 * k <= n, "too many 2-parts");
        let mut parts = vec![2; k];
        parts.extend(std::iter::repeat_n(1, n - 2 * k));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// Comma-joined parts; the empty partition renders as "".
    pub fn key(&self) -> String {
        let mut out = String::new();
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&p.to_string());
        }
        out
    }

    /// Inverse of [`Partition::key`].
    pub fn from_key(key: &str) -> Result<Self> {
        if key.is_empty() {
            return Ok(Partition::default());
        }
        let parts = key
            .split(',')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Incomparable(format!("bad partition key {key:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    /// For a two-part partition `(n - i, i)`, the smaller part `i`.
    pub fn smaller_part(&self) -> Option<usize> {
        match self.0.as_slice() {
            [_, b] => Some(*b),
            _ => None,
        }
    }
}

/// Order on two-part partitions of the same total: `(n-i, i) > (n-j, j)` iff
/// `i > j`.
pub fn compare_balanced(a: &Partition, b: &Partition) -> Result<Ordering> {
    if a.len() != 2 || b.len() != 2 {
        return Err(Error::Incomparable(format!(
            "({a}) and ({b}) must both have two parts"
        )));
    }
    if a.degree() != b.degree() {
        return Err(Error::Incomparable(format!(
            "({a}) and ({b}) have different totals"
        )));
    }
    Ok(a.0[1].cmp(&b.0[1]))
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl Borrow<[usize]> for Partition {
    fn borrow(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::from_key(s.trim())
    }
}
