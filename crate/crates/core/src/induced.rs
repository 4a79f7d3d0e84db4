//! Finitely described partitions of the positive integers, their type
//! vectors and truncations, the large/small classification, irreducibility
//! and factor criteria, explicit decompositions, and limit spectral weights.
//!
//! A `PartitionSpec` lists finitely many explicit finite blocks, finitely
//! many infinite blocks given as eventually-periodic membership patterns,
//! and an optional rule chopping every remaining integer into consecutive
//! blocks of a fixed size (`rest_block_size`; size 1 is the singleton rule).
//! This family keeps type vectors, truncations, and tail equivalence
//! decidable while realizing every block type the classification theorems
//! distinguish.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::kostka::kostka;
use crate::partition::{factorial, partitions_of, Composition, Partition};
use crate::{Error, Result};

/// Guard against degenerate period blowup when aligning many patterns.
const MAX_ALIGNED_PERIOD: usize = 1 << 20;

/// Eventually periodic membership indicator over the positive integers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawPattern", into = "RawPattern")]
pub struct BlockPattern {
    prefix: Vec<bool>,
    period: Vec<bool>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawPattern {
    prefix: String,
    period: String,
}

impl TryFrom<RawPattern> for BlockPattern {
    type Error = Error;
    fn try_from(raw: RawPattern) -> Result<Self> {
        BlockPattern::new(&raw.prefix, &raw.period)
    }
}

impl From<BlockPattern> for RawPattern {
    fn from(p: BlockPattern) -> Self {
        let render = |bits: &[bool]| bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        RawPattern {
            prefix: render(&p.prefix),
            period: render(&p.period),
        }
    }
}

fn parse_bits(text: &str) -> Result<Vec<bool>> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Parse(format!(
                "membership patterns use only 0/1, found {other:?}"
            ))),
        })
        .collect()
}

impl BlockPattern {
    /// Builds a pattern from 0/1 strings. The period must be nonempty and
    /// contain a 1: every pattern block is an infinite set.
    pub fn new(prefix: &str, period: &str) -> Result<Self> {
        let prefix = parse_bits(prefix)?;
        let period = parse_bits(period)?;
        if period.is_empty() {
            return Err(Error::InvalidSpec("pattern period must be nonempty".into()));
        }
        if !period.contains(&true) {
            return Err(Error::InvalidSpec(
                "pattern period contains no 1: the block would be finite".into(),
            ));
        }
        Ok(BlockPattern { prefix, period })
    }

    /// Membership of the 1-based integer `i`.
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i >= 1);
        if i <= self.prefix.len() {
            self.prefix[i - 1]
        } else {
            self.period[(i - self.prefix.len() - 1) % self.period.len()]
        }
    }

    /// Smallest member.
    pub fn min_element(&self) -> usize {
        (1..)
            .find(|&i| self.contains(i))
            .expect("period contains a 1")
    }

    /// Number of members not exceeding `n`.
    pub fn count_up_to(&self, n: usize) -> usize {
        (1..=n).filter(|&i| self.contains(i)).count()
    }

    fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    fn period_len(&self) -> usize {
        self.period.len()
    }

    /// True iff the two patterns agree from some point on. Decided on one
    /// aligned period window past both prefixes.
    pub fn eventually_equal(&self, other: &BlockPattern) -> bool {
        let start = self.prefix_len().max(other.prefix_len());
        let window = self.period_len().lcm(&other.period_len());
        (start + 1..=start + window).all(|i| self.contains(i) == other.contains(i))
    }
}

/// A finitely described partition of the positive integers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct PartitionSpec {
    finite_blocks: Vec<Vec<u32>>,
    patterns: Vec<BlockPattern>,
    rest_block_size: Option<u32>,
    // derived at validation time
    rest_infinite: bool,
    finite_rest_count: usize,
}

/// Wire format. `rest_singletons: true` is shorthand for
/// `rest_block_size: 1`; block sizes above 1 realize types with infinitely
/// many equal-size finite blocks.
#[derive(Clone, Serialize, Deserialize)]
struct RawSpec {
    #[serde(default)]
    finite_blocks: Vec<Vec<u32>>,
    #[serde(default)]
    infinite_blocks: Vec<BlockPattern>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    rest_singletons: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rest_block_size: Option<u32>,
}

impl TryFrom<RawSpec> for PartitionSpec {
    type Error = Error;
    fn try_from(raw: RawSpec) -> Result<Self> {
        let rest = match (raw.rest_singletons, raw.rest_block_size) {
            (true, Some(1)) | (true, None) => Some(1),
            (true, Some(other)) => {
                return Err(Error::InvalidSpec(format!(
                    "rest_singletons conflicts with rest_block_size = {other}"
                )))
            }
            (false, v) => v,
        };
        PartitionSpec::new(raw.finite_blocks, raw.infinite_blocks, rest)
    }
}

impl From<PartitionSpec> for RawSpec {
    fn from(s: PartitionSpec) -> Self {
        RawSpec {
            finite_blocks: s.finite_blocks.clone(),
            infinite_blocks: s.patterns.clone(),
            rest_singletons: s.rest_block_size == Some(1),
            rest_block_size: match s.rest_block_size {
                Some(1) | None => None,
                other => other,
            },
        }
    }
}

impl PartitionSpec {
    /// Validates that the described blocks are pairwise disjoint and cover
    /// every positive integer exactly once. The check runs on a finite
    /// window wide enough that the purely periodic continuation repeats.
    pub fn new(
        finite_blocks: Vec<Vec<u32>>,
        patterns: Vec<BlockPattern>,
        rest_block_size: Option<u32>,
    ) -> Result<Self> {
        let mut blocks = Vec::with_capacity(finite_blocks.len());
        for raw in finite_blocks {
            if raw.is_empty() {
                return Err(Error::InvalidSpec("empty finite block".into()));
            }
            if raw.contains(&0) {
                return Err(Error::InvalidSpec("blocks contain positive integers".into()));
            }
            let mut sorted = raw;
            sorted.sort_unstable();
            sorted.dedup();
            blocks.push(sorted);
        }
        if rest_block_size == Some(0) {
            return Err(Error::InvalidSpec("rest block size must be positive".into()));
        }

        let mut spec = PartitionSpec {
            finite_blocks: blocks,
            patterns,
            rest_block_size,
            rest_infinite: false,
            finite_rest_count: 0,
        };

        let (window, aligned_period) = spec.verification_window()?;
        let mut uncovered_in_tail = 0usize;
        let mut uncovered_total = 0usize;
        for i in 1..=window {
            let explicit = spec
                .finite_blocks
                .iter()
                .filter(|b| b.binary_search(&(i as u32)).is_ok())
                .count();
            let patterned = spec.patterns.iter().filter(|p| p.contains(i)).count();
            let c = explicit + patterned;
            if c > 1 {
                return Err(Error::InvalidSpec(format!(
                    "integer {i} is covered {c} times"
                )));
            }
            if c == 0 {
                if spec.rest_block_size.is_none() {
                    return Err(Error::InvalidSpec(format!(
                        "integer {i} is covered by no block and no rest rule is set"
                    )));
                }
                uncovered_total += 1;
                if i > window - aligned_period {
                    uncovered_in_tail += 1;
                }
            }
        }
        spec.rest_infinite = uncovered_in_tail > 0;
        if spec.rest_infinite {
            spec.finite_rest_count = 0;
        } else {
            spec.finite_rest_count = uncovered_total;
            if let Some(s) = spec.rest_block_size {
                if !uncovered_total.is_multiple_of(s as usize) {
                    return Err(Error::InvalidSpec(format!(
                        "{uncovered_total} leftover integers do not split into blocks of {s}"
                    )));
                }
            }
        }
        if spec.patterns.is_empty() && !spec.rest_infinite && spec.finite_rest_count == 0 {
            // finitely many finite blocks cannot cover all positive integers
            return Err(Error::InvalidSpec(
                "spec covers only finitely many integers".into(),
            ));
        }
        Ok(spec)
    }

    /// Convenience constructor: the two-block partition read off a binary
    /// indicator (1s form one block, 0s the other).
    pub fn two_block(ones: BlockPattern) -> Result<Self> {
        let zeros = BlockPattern {
            prefix: ones.prefix.iter().map(|b| !b).collect(),
            period: ones.period.iter().map(|b| !b).collect(),
        };
        if !zeros.period.contains(&true) {
            return Err(Error::InvalidSpec(
                "complement pattern has no 1s: not a two-block partition".into(),
            ));
        }
        PartitionSpec::new(Vec::new(), vec![ones, zeros], None)
    }

    pub fn finite_blocks(&self) -> &[Vec<u32>] {
        &self.finite_blocks
    }

    pub fn patterns(&self) -> &[BlockPattern] {
        &self.patterns
    }

    pub fn rest_block_size(&self) -> Option<u32> {
        self.rest_block_size
    }

    fn verification_window(&self) -> Result<(usize, usize)> {
        let mut aligned = 1usize;
        for p in &self.patterns {
            aligned = aligned.lcm(&p.period_len());
            if aligned > MAX_ALIGNED_PERIOD {
                return Err(Error::InvalidSpec(format!(
                    "aligned pattern period exceeds {MAX_ALIGNED_PERIOD}"
                )));
            }
        }
        let max_prefix = self
            .patterns
            .iter()
            .map(BlockPattern::prefix_len)
            .max()
            .unwrap_or(0);
        let max_explicit = self
            .finite_blocks
            .iter()
            .flat_map(|b| b.iter())
            .copied()
            .max()
            .unwrap_or(0) as usize;
        Ok((max_prefix.max(max_explicit).max(1) + 2 * aligned, aligned))
    }

    fn in_rest(&self, i: usize) -> bool {
        self.rest_block_size.is_some()
            && !self
                .finite_blocks
                .iter()
                .any(|b| b.binary_search(&(i as u32)).is_ok())
            && !self.patterns.iter().any(|p| p.contains(i))
    }

    /// Rest elements up to `n`, ascending.
    fn rest_elements_up_to(&self, n: usize) -> Vec<usize> {
        (1..=n).filter(|&i| self.in_rest(i)).collect()
    }

    /// Exact census of block sizes.
    pub fn type_vector(&self) -> TypeVector {
        let mut finite: BTreeMap<u32, BlockCount> = BTreeMap::new();
        for b in &self.finite_blocks {
            let size = b.len() as u32;
            match finite.entry(size).or_insert(BlockCount::Finite(0)) {
                BlockCount::Finite(c) => *c += 1,
                BlockCount::Infinite => {}
            }
        }
        if let Some(s) = self.rest_block_size {
            if self.rest_infinite {
                finite.insert(s, BlockCount::Infinite);
            } else if self.finite_rest_count > 0 {
                let extra = self.finite_rest_count / s as usize;
                match finite.entry(s).or_insert(BlockCount::Finite(0)) {
                    BlockCount::Finite(c) => *c += extra,
                    BlockCount::Infinite => {}
                }
            }
        }
        TypeVector {
            k_infinity: self.patterns.len(),
            finite,
        }
    }

    /// Large or small, per the block census. `MixedUnresolved` is reserved
    /// for partitions with infinitely many finite blocks all of finite
    /// multiplicity; that case is not expressible in this finite description
    /// (infinitely many finite blocks only arise from the rest rule, which
    /// makes one size infinitely repeated), so the classifier never returns
    /// it.
    pub fn classify(&self) -> Classification {
        if self.rest_infinite {
            Classification::Small
        } else {
            Classification::Large
        }
    }

    /// Total number of finite blocks, None when infinite.
    fn finite_block_count(&self) -> Option<usize> {
        if self.rest_infinite {
            None
        } else {
            let chunk_count = self
                .rest_block_size
                .map(|s| self.finite_rest_count / s as usize)
                .unwrap_or(0);
            Some(self.finite_blocks.len() + chunk_count)
        }
    }

    /// Irreducibility criterion for large partitions: at most one finite
    /// block. Errors on small partitions.
    pub fn is_irreducible(&self) -> Result<bool> {
        match self.finite_block_count() {
            Some(count) => Ok(count <= 1),
            None => Err(Error::WrongClassification(
                "irreducibility criterion applies to large partitions only".into(),
            )),
        }
    }

    /// The diagram of the relevant finite blocks: all finite blocks for a
    /// large partition, finite blocks of finite multiplicity for a small
    /// one.
    pub fn finite_shape(&self) -> Partition {
        let mut sizes: Vec<u32> = self.finite_blocks.iter().map(|b| b.len() as u32).collect();
        if self.rest_infinite {
            // sizes with infinite multiplicity drop out of the diagram
            if let Some(s) = self.rest_block_size {
                sizes.retain(|&x| x != s);
            }
        } else if let Some(s) = self.rest_block_size {
            for _ in 0..self.finite_rest_count / s as usize {
                sizes.push(s);
            }
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(sizes).expect("sorted positive sizes")
    }

    /// Factor criterion for small partitions satisfying the classification
    /// theorem hypotheses: true iff the finite-multiplicity diagram has at
    /// most one row.
    pub fn is_factor(&self) -> Result<bool> {
        self.require_factor_hypotheses()?;
        Ok(self.finite_shape().num_rows() <= 1)
    }

    fn require_factor_hypotheses(&self) -> Result<()> {
        if !self.rest_infinite {
            return Err(Error::HypothesesUnmet(
                "no finite block size has infinite multiplicity (the partition is large)".into(),
            ));
        }
        Ok(())
    }

    /// Decomposition of the induced representation of a large partition into
    /// irreducibles: one entry per diagram dominating the finite shape, with
    /// Kostka multiplicity.
    pub fn decompose_large(&self) -> Result<DecompositionReport> {
        if self.classify() != Classification::Large {
            return Err(Error::WrongClassification(
                "irreducible decomposition applies to large partitions only".into(),
            ));
        }
        let lambda = self.finite_shape();
        let k_inf = self.patterns.len();
        let mut entries = Vec::new();
        for mu in partitions_of(lambda.size()) {
            if !mu.dominates(&lambda)? {
                continue;
            }
            let mult = kostka(&mu, lambda.rows())?;
            debug_assert!(mult >= BigUint::one());
            entries.push(DecompositionEntry {
                label: format!("pi^{k_inf}_({mu})", mu = rows_text(&mu)),
                multiplicity: mult,
                mu,
            });
        }
        Ok(DecompositionReport {
            kind: ReportKind::IrreducibleSum,
            entries,
        })
    }

    /// Central decomposition of a small partition satisfying the factor
    /// hypotheses: one factor per diagram dominating the finite-multiplicity
    /// shape.
    pub fn central_decomposition_small(&self) -> Result<DecompositionReport> {
        self.require_factor_hypotheses()?;
        let nu = self.finite_shape();
        let mut entries = Vec::new();
        for mu in partitions_of(nu.size()) {
            if !mu.dominates(&nu)? {
                continue;
            }
            entries.push(DecompositionEntry {
                label: format!("factor_({})", rows_text(&mu)),
                multiplicity: BigUint::one(),
                mu,
            });
        }
        Ok(DecompositionReport {
            kind: ReportKind::CentralFactorSum,
            entries,
        })
    }

    /// Limit spectral weights of the distinguished cyclic vector for a large
    /// partition with exactly one infinite block and finite shape `lambda`:
    /// the weight of `mu` is `K_{mu,lambda} * dim(mu) * prod(lambda_i!) / k!`.
    /// Weights sum to exactly 1.
    pub fn limit_weights(&self, shape_bound: usize) -> Result<BTreeMap<Partition, BigRational>> {
        if self.classify() != Classification::Large {
            return Err(Error::WrongClassification(
                "limit weights apply to large partitions".into(),
            ));
        }
        if self.patterns.len() != 1 {
            return Err(Error::WrongClassification(format!(
                "limit weights need exactly one infinite block, found {}",
                self.patterns.len()
            )));
        }
        let lambda = self.finite_shape();
        let k = lambda.size();
        if k > shape_bound {
            return Err(Error::EnumerationBound {
                size: k,
                bound: shape_bound,
            });
        }
        let block_fact: BigUint = lambda.rows().iter().map(|&r| factorial(r as usize)).product();
        let mut out = BTreeMap::new();
        for mu in partitions_of(k) {
            if !mu.dominates(&lambda)? {
                continue;
            }
            let numer = kostka(&mu, lambda.rows())? * mu.dimension() * &block_fact;
            let w = BigRational::new(BigInt::from(numer), BigInt::from(factorial(k)));
            out.insert(mu, w);
        }
        debug_assert_eq!(
            out.values().cloned().sum::<BigRational>(),
            BigRational::one()
        );
        Ok(out)
    }

    /// Block sizes of the partition restricted to `{1..n}`, in order of
    /// smallest element; blocks missing the window are dropped.
    pub fn truncate(&self, n: usize) -> Composition {
        let mut pieces: Vec<(usize, u32)> = Vec::new();
        for b in &self.finite_blocks {
            let size = b.iter().filter(|&&x| x as usize <= n).count() as u32;
            if size > 0 {
                pieces.push((b[0] as usize, size));
            }
        }
        for p in &self.patterns {
            let size = p.count_up_to(n) as u32;
            if size > 0 {
                pieces.push((p.min_element(), size));
            }
        }
        if let Some(s) = self.rest_block_size {
            let rest = self.rest_elements_up_to(n);
            for chunk in rest.chunks(s as usize) {
                pieces.push((chunk[0], chunk.len() as u32));
            }
        }
        pieces.sort_unstable();
        Composition::new(pieces.into_iter().map(|(_, s)| s).collect())
            .expect("positive sizes by construction")
    }

    /// Decides whether a finite permutation of the positive integers maps
    /// this partition onto `other`. See module notes: infinite blocks must
    /// pair up with finite symmetric difference and matching prefix counts,
    /// the rest streams must align, and the remaining finite blocks must
    /// match as a multiset of sizes.
    pub fn tail_equivalent(&self, other: &PartitionSpec) -> Result<bool> {
        if self.patterns.len() != other.patterns.len() {
            return Ok(false);
        }
        // Patterns within one spec are pairwise disjoint, hence pairwise not
        // eventually equal; the matching, when total, is forced.
        let mut matched: Vec<&BlockPattern> = Vec::with_capacity(self.patterns.len());
        for p in &self.patterns {
            match other.patterns.iter().find(|q| p.eventually_equal(q)) {
                Some(q) => matched.push(q),
                None => return Ok(false),
            }
        }

        // All disagreements live inside the common horizon.
        let horizon = self.tail_horizon(other);

        for (p, q) in self.patterns.iter().zip(&matched) {
            if p.count_up_to(horizon) != q.count_up_to(horizon) {
                return Ok(false);
            }
        }

        match (self.rest_infinite, other.rest_infinite) {
            (true, true) => {
                let sa = self.rest_block_size.expect("infinite rest has a rule");
                let sb = other.rest_block_size.expect("infinite rest has a rule");
                if sa != sb {
                    return Ok(false);
                }
                let ca = self.rest_elements_up_to(horizon).len();
                let cb = other.rest_elements_up_to(horizon).len();
                if ca % sa as usize != cb % sa as usize {
                    return Ok(false);
                }
                // extend to a simultaneous chunk boundary, then compare the
                // finite blocks up to it
                let pending = (sa as usize - ca % sa as usize) % sa as usize;
                let mut cut = horizon;
                let mut seen = 0usize;
                while seen < pending {
                    cut += 1;
                    if self.in_rest(cut) {
                        seen += 1;
                    }
                }
                Ok(self.finite_sizes_within(cut) == other.finite_sizes_within(cut))
            }
            (false, false) => {
                Ok(self.finite_sizes_within(horizon) == other.finite_sizes_within(horizon))
            }
            // matched patterns force the rests to agree eventually, so mixed
            // finiteness cannot occur here; report it as inequivalent anyway
            _ => Ok(false),
        }
    }

    /// First index past every prefix, explicit element, rest end, and one
    /// aligned period of both specs.
    fn tail_horizon(&self, other: &PartitionSpec) -> usize {
        let wa = self
            .verification_window()
            .expect("validated at construction")
            .0;
        let wb = other
            .verification_window()
            .expect("validated at construction")
            .0;
        wa.max(wb)
    }

    /// Multiset of finite-block sizes with any element in `[1..=cut]`:
    /// explicit blocks plus rest chunks. Chunks beyond `cut` are excluded;
    /// the caller picks `cut` at a chunk boundary.
    fn finite_sizes_within(&self, cut: usize) -> BTreeMap<u32, usize> {
        let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
        for b in &self.finite_blocks {
            if b.iter().any(|&x| (x as usize) <= cut) {
                *sizes.entry(b.len() as u32).or_insert(0) += 1;
            }
        }
        if let Some(s) = self.rest_block_size {
            let rest = self.rest_elements_up_to(cut);
            let whole_chunks = rest.len() / s as usize;
            if whole_chunks > 0 {
                *sizes.entry(s).or_insert(0) += whole_chunks;
            }
        }
        sizes
    }
}

/// Spectral weight of `lambda` in the representation induced from the Young
/// subgroup with the given blocks, computed by the closed decomposition
/// formula: `K_{lambda, sorted(blocks)} * dim(lambda) * prod(blocks_i!) / n!`.
///
/// This is the route that scales to large degrees; the character oracle
/// computes the same quantity independently at desk scale and the
/// verification suites pin the two routes together.
pub fn kostka_spectral_weight(lambda: &Partition, blocks: &Composition) -> Result<BigRational> {
    let n = blocks.size();
    if lambda.size() != n {
        return Err(Error::SizeMismatch(format!(
            "spectral weight needs |lambda| = sum(blocks), got {} and {n}",
            lambda.size()
        )));
    }
    let mult = kostka(lambda, blocks.parts())?;
    let numer = mult * lambda.dimension() * blocks.block_factorial();
    Ok(BigRational::new(
        BigInt::from(numer),
        BigInt::from(factorial(n)),
    ))
}

/// Census of block sizes: how many blocks of each size, with infinity
/// markers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TypeVector {
    pub k_infinity: usize,
    pub finite: BTreeMap<u32, BlockCount>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BlockCount {
    Finite(usize),
    Infinite,
}

impl Serialize for BlockCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BlockCount::Finite(c) => s.serialize_u64(*c as u64),
            BlockCount::Infinite => s.serialize_str("inf"),
        }
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.k_infinity > 0 {
            parts.push(if self.k_infinity == 1 {
                "inf".to_string()
            } else {
                format!("inf^{}", self.k_infinity)
            });
        }
        for (size, count) in &self.finite {
            match count {
                BlockCount::Finite(0) => {}
                BlockCount::Finite(1) => parts.push(format!("{size}")),
                BlockCount::Finite(c) => parts.push(format!("{size}^{c}")),
                BlockCount::Infinite => parts.push(format!("{size}^inf")),
            }
        }
        write!(f, "({})", parts.join(", "))
    }
}

/// Classification of a partition of the positive integers by its finite
/// block census.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Large,
    Small,
    /// Infinitely many finite blocks, all of finite multiplicity. Whether the
    /// induced representation is of type II is open; the criteria refuse the
    /// case rather than guess. Not constructible in this description family.
    MixedUnresolved,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Large => write!(f, "large"),
            Classification::Small => write!(f, "small"),
            Classification::MixedUnresolved => write!(f, "mixed-unresolved"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    IrreducibleSum,
    CentralFactorSum,
}

/// One component of a decomposition: diagram, multiplicity, opaque label.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DecompositionEntry {
    pub mu: Partition,
    #[serde(serialize_with = "crate::numfmt::serialize_biguint_string")]
    pub multiplicity: BigUint,
    pub label: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DecompositionReport {
    pub kind: ReportKind,
    pub entries: Vec<DecompositionEntry>,
}

fn rows_text(p: &Partition) -> String {
    p.rows()
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    fn pattern(prefix: &str, period: &str) -> BlockPattern {
        BlockPattern::new(prefix, period).unwrap()
    }

    fn p(rows: &[u32]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    /// one infinite block, explicit finite blocks, nothing else
    fn large_spec(finite: &[&[u32]]) -> PartitionSpec {
        let max = finite
            .iter()
            .flat_map(|b| b.iter())
            .copied()
            .max()
            .unwrap_or(0) as usize;
        // infinite block: everything past the explicit elements, plus the
        // gaps the finite blocks leave inside their range
        let mut prefix = String::new();
        for i in 1..=max {
            let used = finite.iter().any(|b| b.contains(&(i as u32)));
            prefix.push(if used { '0' } else { '1' });
        }
        PartitionSpec::new(
            finite.iter().map(|b| b.to_vec()).collect(),
            vec![pattern(&prefix, "1")],
            None,
        )
        .unwrap()
    }

    /// singletons everywhere except the explicit finite blocks
    fn small_spec(finite: &[&[u32]]) -> PartitionSpec {
        PartitionSpec::new(finite.iter().map(|b| b.to_vec()).collect(), vec![], Some(1)).unwrap()
    }

    #[test]
    fn validation_rejects_overlap_and_gap() {
        // overlap between explicit blocks
        assert!(PartitionSpec::new(vec![vec![1, 2], vec![2, 3]], vec![], Some(1)).is_err());
        // overlapping patterns
        assert!(PartitionSpec::new(
            vec![],
            vec![pattern("", "1"), pattern("", "01")],
            None
        )
        .is_err());
        // gap without a rest rule
        assert!(PartitionSpec::new(vec![vec![1]], vec![pattern("00", "01")], None).is_err());
        // all-zero period is not an infinite block
        assert!(BlockPattern::new("1", "0").is_err());
        // finite blocks alone cannot partition the positive integers
        assert!(PartitionSpec::new(vec![vec![1, 2]], vec![], None).is_err());
        // leftover count not divisible by the rest block size
        assert!(PartitionSpec::new(
            vec![vec![2]],
            vec![pattern("0000", "1")],
            Some(2)
        )
        .is_err());
    }

    #[test]
    fn type_vector_examples() {
        // one infinite block + block {1,2}
        let s = large_spec(&[&[1, 2]]);
        let tv = s.type_vector();
        assert_eq!(tv.k_infinity, 1);
        assert_eq!(tv.finite[&2], BlockCount::Finite(1));
        assert_eq!(tv.to_string(), "(inf, 2)");

        // all singletons
        let s = PartitionSpec::new(vec![], vec![], Some(1)).unwrap();
        let tv = s.type_vector();
        assert_eq!(tv.k_infinity, 0);
        assert_eq!(tv.finite[&1], BlockCount::Infinite);
        assert_eq!(tv.to_string(), "(1^inf)");

        // two infinite blocks: evens and odds
        let s = PartitionSpec::new(vec![], vec![pattern("", "10"), pattern("", "01")], None)
            .unwrap();
        let tv = s.type_vector();
        assert_eq!(tv.k_infinity, 2);
        assert!(tv.finite.is_empty());

        // pairs forever
        let s = PartitionSpec::new(vec![], vec![], Some(2)).unwrap();
        assert_eq!(s.type_vector().finite[&2], BlockCount::Infinite);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(large_spec(&[&[1], &[2], &[3]]).classify(), Classification::Large);
        assert_eq!(small_spec(&[&[1, 2, 3]]).classify(), Classification::Small);
        // (inf, 2^inf): one pattern plus pairs in the rest
        let s = PartitionSpec::new(vec![], vec![pattern("", "10")], Some(2)).unwrap();
        assert_eq!(s.classify(), Classification::Small);
        // identity partition: the single block is all of N
        let s = PartitionSpec::new(vec![], vec![pattern("", "1")], None).unwrap();
        assert_eq!(s.classify(), Classification::Large);
    }

    #[test]
    fn irreducibility_criterion() {
        // two infinite blocks, no finite ones
        let two = PartitionSpec::new(vec![], vec![pattern("", "10"), pattern("", "01")], None)
            .unwrap();
        assert!(two.is_irreducible().unwrap());
        // one finite block
        assert!(large_spec(&[&[1, 2, 3]]).is_irreducible().unwrap());
        // two singleton blocks
        assert!(!large_spec(&[&[1], &[2]]).is_irreducible().unwrap());
        // refuses small specs
        assert!(small_spec(&[]).is_irreducible().is_err());
    }

    #[test]
    fn factor_criterion() {
        // hook with finite hand and infinite leg
        assert!(small_spec(&[&[1, 2, 3, 4]]).is_factor().unwrap());
        // nu = (3,2): two rows
        assert!(!small_spec(&[&[1, 2, 3], &[4, 5]]).is_factor().unwrap());
        // pairs forever: nu empty
        let pairs = PartitionSpec::new(vec![], vec![], Some(2)).unwrap();
        assert!(pairs.is_factor().unwrap());
        // large spec: hypotheses unmet
        assert!(matches!(
            large_spec(&[&[1]]).is_factor(),
            Err(Error::HypothesesUnmet(_))
        ));
    }

    #[test]
    fn finite_shape_examples() {
        assert_eq!(large_spec(&[&[1], &[2], &[3]]).finite_shape(), p(&[1, 1, 1]));
        assert_eq!(
            small_spec(&[&[1, 2], &[3, 4, 5]]).finite_shape(),
            p(&[3, 2])
        );
        let two = PartitionSpec::new(vec![], vec![pattern("", "10"), pattern("", "01")], None)
            .unwrap();
        assert_eq!(two.finite_shape(), Partition::empty());
        // explicit singleton melts into the infinite singleton family
        let s = PartitionSpec::new(vec![vec![5]], vec![], Some(1)).unwrap();
        assert_eq!(s.finite_shape(), Partition::empty());
    }

    #[test]
    fn decompose_large_examples() {
        // (inf, 1^2)
        let s = large_spec(&[&[1], &[2]]);
        let report = s.decompose_large().unwrap();
        assert_eq!(report.kind, ReportKind::IrreducibleSum);
        assert_eq!(report.entries.len(), 2);
        assert_eq!(report.entries[0].mu, p(&[2]));
        assert_eq!(report.entries[0].multiplicity, BigUint::one());
        assert_eq!(report.entries[0].label, "pi^1_(2)");
        assert_eq!(report.entries[1].mu, p(&[1, 1]));
        assert_eq!(report.entries[1].label, "pi^1_(1,1)");

        // single finite block: exactly the one-row entry
        let s = large_spec(&[&[1, 2, 3]]);
        let report = s.decompose_large().unwrap();
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].mu, p(&[3]));

        // (inf, 1^3): multiplicities are dimensions
        let s = large_spec(&[&[1], &[2], &[3]]);
        let report = s.decompose_large().unwrap();
        let by_mu: BTreeMap<_, _> = report
            .entries
            .iter()
            .map(|e| (e.mu.clone(), e.multiplicity.clone()))
            .collect();
        assert_eq!(by_mu[&p(&[3])], BigUint::from(1u32));
        assert_eq!(by_mu[&p(&[2, 1])], BigUint::from(2u32));
        assert_eq!(by_mu[&p(&[1, 1, 1])], BigUint::from(1u32));

        // irreducible specs decompose into a single multiplicity-one entry
        for spec in [large_spec(&[&[1, 2]]), large_spec(&[])] {
            if spec.is_irreducible().unwrap() {
                let r = spec.decompose_large().unwrap();
                assert_eq!(r.entries.len(), 1);
                assert_eq!(r.entries[0].multiplicity, BigUint::one());
            }
        }
    }

    #[test]
    fn central_decomposition_examples() {
        let s = small_spec(&[&[1, 2, 3]]);
        let r = s.central_decomposition_small().unwrap();
        assert_eq!(r.kind, ReportKind::CentralFactorSum);
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].label, "factor_(3)");

        let s = small_spec(&[&[1, 2], &[3, 4, 5]]);
        let r = s.central_decomposition_small().unwrap();
        let labels: Vec<_> = r.entries.iter().map(|e| e.label.clone()).collect();
        assert_eq!(labels, vec!["factor_(5)", "factor_(4,1)", "factor_(3,2)"]);

        // nu = (2,1): a singleton block keeps finite multiplicity when the
        // rest is chopped into 3-blocks instead of singletons
        let s = PartitionSpec::new(vec![vec![1, 2], vec![3]], vec![], Some(3)).unwrap();
        assert_eq!(s.finite_shape(), p(&[2, 1]));
        assert!(!s.is_factor().unwrap());
        let r = s.central_decomposition_small().unwrap();
        let mus: Vec<_> = r.entries.iter().map(|e| e.mu.clone()).collect();
        assert_eq!(mus, vec![p(&[3]), p(&[2, 1])]);
        assert!(r.entries.iter().all(|e| e.multiplicity == BigUint::one()));

        // nu empty: one trivial factor
        let pairs = PartitionSpec::new(vec![], vec![], Some(2)).unwrap();
        let r = pairs.central_decomposition_small().unwrap();
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].mu, Partition::empty());
    }

    #[test]
    fn limit_weights_examples() {
        // hook: lambda = (1,1,1), weights are dim^2 / 3!
        let s = large_spec(&[&[1], &[2], &[3]]);
        let w = s.limit_weights(10).unwrap();
        let sixth = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(6));
        assert_eq!(w[&p(&[3])], sixth(1));
        assert_eq!(w[&p(&[2, 1])], sixth(4));
        assert_eq!(w[&p(&[1, 1, 1])], sixth(1));

        // single block: all the mass on itself
        let s = large_spec(&[&[1, 2, 3, 4]]);
        let w = s.limit_weights(10).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[&p(&[4])], BigRational::one());

        // lambda = (2,1)
        let s = large_spec(&[&[1, 2], &[3]]);
        let w = s.limit_weights(10).unwrap();
        assert_eq!(w[&p(&[3])], BigRational::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(
            w[&p(&[2, 1])],
            BigRational::new(BigInt::from(2), BigInt::from(3))
        );

        // needs exactly one infinite block
        let two = PartitionSpec::new(vec![], vec![pattern("", "10"), pattern("", "01")], None)
            .unwrap();
        assert!(two.limit_weights(10).is_err());
    }

    #[test]
    fn truncate_examples() {
        // even/odd two-block spec: odds first (smallest element 1)
        let s = PartitionSpec::new(vec![], vec![pattern("", "10"), pattern("", "01")], None)
            .unwrap();
        assert_eq!(s.truncate(5), Composition::new(vec![3, 2]).unwrap());

        // (inf, 1^2) with blocks {1}, {2}
        let s = large_spec(&[&[1], &[2]]);
        assert_eq!(s.truncate(5), Composition::new(vec![1, 1, 3]).unwrap());

        // all singletons
        let s = PartitionSpec::new(vec![], vec![], Some(1)).unwrap();
        assert_eq!(s.truncate(4), Composition::new(vec![1, 1, 1, 1]).unwrap());

        // pairs: partial chunk at the cut
        let s = PartitionSpec::new(vec![], vec![], Some(2)).unwrap();
        assert_eq!(s.truncate(3), Composition::new(vec![2, 1]).unwrap());
    }

    #[test]
    fn truncation_weights_match_oracle_at_desk_scale() {
        let oracle = Oracle::new();
        let s = large_spec(&[&[1, 2], &[3]]);
        for n in 4..=8 {
            let blocks = s.truncate(n);
            for lam in partitions_of(n) {
                assert_eq!(
                    kostka_spectral_weight(&lam, &blocks).unwrap(),
                    oracle.spectral_weight_exact(&lam, &blocks).unwrap(),
                    "lambda = {lam}, blocks = {blocks}"
                );
            }
        }
    }

    #[test]
    fn tail_equivalence_examples() {
        // {1,2} replaced by {1,3} with the singleton absorbing the swap
        let a = small_spec(&[&[1, 2]]);
        let b = small_spec(&[&[1, 3]]);
        assert!(a.tail_equivalent(&b).unwrap());
        assert!(b.tail_equivalent(&a).unwrap());
        assert!(a.tail_equivalent(&a).unwrap());

        // different densities of the infinite blocks
        let even_odd =
            PartitionSpec::new(vec![], vec![pattern("", "10"), pattern("", "01")], None).unwrap();
        let sparse = PartitionSpec::new(
            vec![],
            vec![pattern("", "1000"), pattern("", "0111")],
            None,
        )
        .unwrap();
        assert!(!even_odd.tail_equivalent(&sparse).unwrap());

        // patterns differing in infinitely many positions
        let evens = PartitionSpec::new(vec![], vec![pattern("", "01")], Some(1)).unwrap();
        let odds = PartitionSpec::new(vec![], vec![pattern("", "10")], Some(1)).unwrap();
        assert!(!evens.tail_equivalent(&odds).unwrap());

        // dropping {2,4} from the evens block shifts its counting function
        // by two forever; no finite permutation undoes that
        let late_evens =
            PartitionSpec::new(vec![], vec![pattern("0000", "01")], Some(1)).unwrap();
        assert!(!evens.tail_equivalent(&late_evens).unwrap());

        // trading {4} for {3} inside the infinite block keeps the counts and
        // is absorbed by one transposition
        let traded = PartitionSpec::new(vec![], vec![pattern("0110", "01")], Some(1)).unwrap();
        assert!(evens.tail_equivalent(&traded).unwrap());
        assert!(traded.tail_equivalent(&evens).unwrap());

        // block size mismatch in the infinite rest
        let singles = PartitionSpec::new(vec![], vec![], Some(1)).unwrap();
        let pairs = PartitionSpec::new(vec![], vec![], Some(2)).unwrap();
        assert!(!singles.tail_equivalent(&pairs).unwrap());

        // phase-shifted pairs: {1},{2,3},{4,5}... vs {1,2},{3,4}...
        let shifted = PartitionSpec::new(vec![vec![1]], vec![], Some(2)).unwrap();
        let aligned = PartitionSpec::new(vec![], vec![], Some(2)).unwrap();
        assert!(!shifted.tail_equivalent(&aligned).unwrap());
        // but an explicit pair block upstream keeps the phase
        let repaired = PartitionSpec::new(vec![vec![1, 4]], vec![], Some(2)).unwrap();
        assert!(repaired.tail_equivalent(&aligned).unwrap());

        // finite-block size multisets must match
        let a = small_spec(&[&[1, 2, 3]]);
        let b = small_spec(&[&[1, 2]]);
        assert!(!a.tail_equivalent(&b).unwrap());
    }

    #[test]
    fn spec_json_round_trip() {
        let json = r#"{"finite_blocks":[[1,2],[3]],"infinite_blocks":[{"prefix":"000111","period":"01"}],"rest_singletons":true}"#;
        let spec: PartitionSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec.finite_blocks(), &[vec![1, 2], vec![3]]);
        assert_eq!(spec.rest_block_size(), Some(1));
        let back = serde_json::to_string(&spec).unwrap();
        let again: PartitionSpec = serde_json::from_str(&back).unwrap();
        assert_eq!(spec, again);

        // invalid: overlapping coverage must fail at parse time
        let bad = r#"{"finite_blocks":[[1]],"infinite_blocks":[{"prefix":"1","period":"1"}]}"#;
        assert!(serde_json::from_str::<PartitionSpec>(bad).is_err());
    }
}
