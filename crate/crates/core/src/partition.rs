//! Young diagrams (integer partitions), the dominance order, hook-length
//! dimensions, and the covering relation of the Young graph.
//!
//! Partitions are normalized on construction: trailing zeros are stripped and
//! rows must be weakly decreasing. The empty diagram prints as `[]`; nonempty
//! diagrams print as comma-separated rows, e.g. `4,2,1`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A Young diagram: weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Rows must be weakly
    /// decreasing once zeros are removed.
    pub fn new(mut rows: Vec<u32>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "interior zero row in {rows:?}"
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "rows not weakly decreasing: {rows:?}"
            )));
        }
        Ok(Partition { rows })
    }

    /// The unique size-0 diagram.
    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// Builds the two-row diagram (n-k, k). Requires 0 <= k <= n-k.
    pub fn two_row(n: u32, k: u32) -> Result<Self> {
        if k > n.saturating_sub(k) {
            return Err(Error::InvalidPartition(format!(
                "two_row requires k <= n-k, got n={n}, k={k}"
            )));
        }
        Partition::new(vec![n - k, k])
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Row length at `i`, zero-padded past the last row.
    pub fn row(&self, i: usize) -> u32 {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|&r| r as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Diagram inclusion: every row of `other` fits inside this diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.num_rows()).all(|i| self.row(i) >= other.row(i))
    }

    /// The transposed diagram. Involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.row(0) as usize;
        let mut rows = Vec::with_capacity(cols);
        for j in 0..cols {
            rows.push(self.rows.iter().filter(|&&r| r as usize > j).count() as u32);
        }
        Partition { rows }
    }

    /// Dominance order: true iff every prefix sum of `self` is at least the
    /// corresponding prefix sum of `other` (rows zero-padded). Both diagrams
    /// must have the same size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!(
                "dominance compares equal sizes, got |{self}| = {} and |{other}| = {}",
                self.size(),
                other.size()
            )));
        }
        let len = self.num_rows().max(other.num_rows());
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..len {
            a += u64::from(self.row(i));
            b += u64::from(other.row(i));
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hook length of the cell in (0-indexed) row `i`, column `j`.
    fn hook(&self, conj: &Partition, i: usize, j: usize) -> u64 {
        u64::from(self.row(i)) - j as u64 + u64::from(conj.row(j)) - i as u64 - 1
    }

    /// Number of standard tableaux of this shape, by the hook length formula.
    pub fn dimension(&self) -> BigUint {
        let n = self.size();
        let conj = self.conjugate();
        let mut numer = factorial(n);
        let mut hooks = BigUint::one();
        for i in 0..self.num_rows() {
            for j in 0..self.row(i) as usize {
                hooks *= BigUint::from(self.hook(&conj, i, j));
            }
        }
        debug_assert!((&numer % &hooks) == BigUint::from(0u32));
        numer /= hooks;
        numer
    }

    /// All diagrams covering this one in the Young graph, in decreasing
    /// lexicographic order of row lists.
    pub fn up_neighbors(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.num_rows() {
            let can_grow = i == 0 || self.row(i) < self.row(i - 1);
            if can_grow {
                let mut rows = self.rows.clone();
                if i == self.num_rows() {
                    rows.push(1);
                } else {
                    rows[i] += 1;
                }
                out.push(Partition { rows });
            }
        }
        out
    }

    /// All diagrams covered by this one, in decreasing lexicographic order.
    pub fn down_neighbors(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.num_rows() {
            let is_corner = i + 1 == self.num_rows() || self.row(i) > self.row(i + 1);
            if is_corner {
                let mut rows = self.rows.clone();
                rows[i] -= 1;
                if rows[i] == 0 {
                    rows.pop();
                }
                out.push(Partition { rows });
            }
        }
        out.reverse(); // corners from bottom row up = decreasing lex
        out
    }

    /// For a diagram with at most two rows, the second-row length `k` of
    /// `(n-k, k)`. `None` if there are three or more rows.
    pub fn two_row_k(&self) -> Option<u32> {
        match self.num_rows() {
            0 | 1 => Some(0),
            2 => Some(self.row(1)),
            _ => None,
        }
    }

    /// Parses the text form: comma-separated rows (`4,2,1`); `[]` or the
    /// empty string denote the empty diagram.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "[]" {
            return Ok(Partition::empty());
        }
        let rows = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad row {p:?} in partition {text:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "[]");
        }
        let text = self
            .rows
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{text}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<u32>::deserialize(d)?;
        Partition::new(rows).map_err(D::Error::custom)
    }
}

/// A composition: positive parts, order significant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "zero part in {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The parts sorted decreasingly, as a partition.
    pub fn sorted(&self) -> Partition {
        let mut rows = self.parts.clone();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(rows).expect("sorted positive parts form a partition")
    }

    /// Product of the factorials of the parts: the order of the Young
    /// subgroup with these block sizes.
    pub fn block_factorial(&self) -> BigUint {
        self.parts
            .iter()
            .map(|&p| factorial(p as usize))
            .product()
    }

    /// Parses comma-separated parts, e.g. `2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "[]" {
            return Composition::new(Vec::new());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {p:?} in composition {text:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "[]");
        }
        let text = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{text}")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Composition::new(parts).map_err(D::Error::custom)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.rows().to_vec(),
        }
    }
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                rows: current.clone(),
            });
            return;
        }
        let cap = remaining.min(max_part);
        for part in (1..=cap).rev() {
            current.push(part as u32);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}
