//! Partitions in the `r x (n-r)` box and their strictly increasing index
//! tuples.
//!
//! A box partition `λ = (λ_1 >= ... >= λ_r >= 0)` with `λ_1 <= n - r`
//! corresponds to the subset `k_i = λ_{r-i+1} + i` of `{1, ..., n}`. The
//! canonical matrix order used throughout the crate is the lexicographic
//! order on partitions (colexicographic on subsets), a linear extension of
//! containment.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which validity rules a tuple of parts must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Weakly decreasing and nonnegative.
    Partition,
    /// Weakly decreasing, entries may be negative (a `GL_r` dominant weight).
    Weight,
}

/// A weakly decreasing tuple of integers.
///
/// Trailing zeros are kept, so a partition built for `Gr(r, n)` always has
/// exactly `r` parts. The same type carries `GL_r` weights, which may have
/// negative entries; see [`Regime`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        Self::with_regime(parts, Regime::Partition)
    }

    pub fn weight(parts: Vec<i64>) -> Result<Self> {
        Self::with_regime(parts, Regime::Weight)
    }

    pub fn with_regime(parts: Vec<i64>, regime: Regime) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition { parts, reason: "parts must be weakly decreasing" });
        }
        if regime == Regime::Partition && parts.last().is_some_and(|&p| p < 0) {
            return Err(Error::InvalidPartition { parts, reason: "parts must be nonnegative" });
        }
        Ok(Partition { parts })
    }

    /// The all-zero partition of length `len`.
    pub fn zero(len: usize) -> Self {
        Partition { parts: vec![0; len] }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn num_rows(&self) -> usize {
        self.parts.iter().take_while(|&&p| p != 0).count()
            + self.parts.iter().rev().take_while(|&&p| p < 0).count()
    }

    pub fn first(&self) -> i64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn last(&self) -> i64 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.last() >= 0
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> Partition {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Pads with zeros (or trims trailing zeros) to exactly `len` parts.
    ///
    /// Returns `None` if that would drop a nonzero part.
    pub fn padded(&self, len: usize) -> Option<Partition> {
        if self.parts.len() > len && self.parts[len..].iter().any(|&p| p != 0) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Some(Partition { parts })
    }

    /// Adds `c` to every part.
    pub fn shifted(&self, c: i64) -> Partition {
        Partition { parts: self.parts.iter().map(|p| p + c).collect() }
    }

    pub fn fits_box(&self, ctx: BoxContext) -> bool {
        self.parts.len() == ctx.r
            && self.is_nonnegative()
            && self.first() <= (ctx.n - ctx.r) as i64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.parts.iter())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"2,1,0"`. Negative entries are accepted as a weight.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list::<i64>(s)?;
        Partition::weight(parts)
    }
}

/// A strictly increasing tuple `1 <= k_1 < ... < k_r <= n` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetIndex {
    indices: Vec<usize>,
}

impl SubsetIndex {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSubset { indices, reason: "indices must be strictly increasing" });
        }
        if indices.first().is_some_and(|&k| k < 1) || indices.last().is_some_and(|&k| k > n) {
            return Err(Error::InvalidSubset { indices, reason: "indices must lie in 1..=n" });
        }
        Ok(SubsetIndex { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `k_i <= l_i` for all `i`, where `self = K` and `other = L`.
    pub fn dominated_by(&self, other: &SubsetIndex) -> bool {
        self.indices.len() == other.indices.len()
            && self.indices.iter().zip(&other.indices).all(|(k, l)| k <= l)
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.indices.iter())
    }
}

impl FromStr for SubsetIndex {
    type Err = Error;

    /// Parses `"1,3"`. The upper bound is not known here, so only ordering and
    /// positivity are checked.
    fn from_str(s: &str) -> Result<Self> {
        let indices = parse_list::<usize>(s)?;
        SubsetIndex::new(indices, usize::MAX)
    }
}

/// The pair `(r, n)` naming `Gr(r, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxContext {
    pub r: usize,
    pub n: usize,
}

impl BoxContext {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::InvalidContext { r, n });
        }
        Ok(BoxContext { r, n })
    }

    /// Width `n - r` of the box.
    pub fn width(&self) -> usize {
        self.n - self.r
    }

    /// `C(n, r)`, the number of box partitions, as a machine integer.
    pub fn size(&self) -> usize {
        let k = self.r.min(self.n - self.r);
        (0..k).fold(1usize, |acc, i| acc * (self.n - i) / (i + 1))
    }
}

/// All box partitions in ascending lexicographic order of their parts,
/// i.e. subsets compared from the largest index down. For `Gr(2, 4)` this is
/// `12, 13, 23, 14, 24, 34`.
pub fn enumerate_box(ctx: BoxContext) -> Vec<Partition> {
    fn extend(parts: &mut Vec<i64>, r: usize, cap: i64, out: &mut Vec<Partition>) {
        if parts.len() == r {
            out.push(Partition { parts: parts.clone() });
            return;
        }
        for p in 0..=cap {
            parts.push(p);
            extend(parts, r, p, out);
            parts.pop();
        }
    }
    let mut out = Vec::with_capacity(ctx.size());
    extend(&mut Vec::with_capacity(ctx.r), ctx.r, ctx.width() as i64, &mut out);
    out
}

/// The subsets of the box partitions, in the canonical order of [`enumerate_box`].
pub fn enumerate_subsets(ctx: BoxContext) -> Vec<SubsetIndex> {
    enumerate_box(ctx)
        .iter()
        .map(|p| partition_to_subset(p, ctx).expect("enumerated partitions fit the box"))
        .collect()
}

/// `k_i = λ_{r-i+1} + i`.
pub fn partition_to_subset(lambda: &Partition, ctx: BoxContext) -> Result<SubsetIndex> {
    if !lambda.fits_box(ctx) {
        return Err(Error::OutsideBox { parts: lambda.parts.clone(), r: ctx.r, width: ctx.width() });
    }
    let r = ctx.r;
    let indices = (1..=r).map(|i| (lambda.parts[r - i] + i as i64) as usize).collect();
    Ok(SubsetIndex { indices })
}

/// Inverse of [`partition_to_subset`]: `λ_i = k_{r-i+1} - (r-i+1)`.
pub fn subset_to_partition(k: &SubsetIndex, ctx: BoxContext) -> Partition {
    debug_assert_eq!(k.len(), ctx.r);
    let r = k.len();
    let parts = (1..=r).map(|i| (k.indices[r - i] - (r - i + 1)) as i64).collect();
    Partition { parts }
}

/// `μ^c = (μ_1 - μ_r, μ_1 - μ_{r-1}, ..., μ_1 - μ_2, 0)`.
pub fn complement(mu: &Partition) -> Partition {
    let top = mu.first();
    Partition { parts: mu.parts.iter().rev().map(|p| top - p).collect() }
}

/// Whether the diagram of `mu` contains that of `lambda`.
///
/// Shorter tuples are read as padded with zeros.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    let len = mu.len().max(lambda.len());
    (0..len).all(|i| lambda.part(i) <= mu.part(i))
}

fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<T>().map_err(|_| Error::parse(format!("bad integer {tok:?}")))
        })
        .collect()
}
