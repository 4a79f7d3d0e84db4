//! Standard Young tableaux as saturated chains in the Young graph, explicit
//! enumeration up to a configurable bound, and exact path counts that work
//! far beyond it.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::{Error, Result, DEFAULT_ENUMERATION_BOUND};

/// A path in the Young graph from the empty diagram: `path[i]` has `i` cells
/// and `path[i+1]` covers `path[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardTableau {
    path: Vec<Partition>,
}

impl StandardTableau {
    /// Validates that the diagram sequence starts empty and grows by one
    /// covering step at a time.
    pub fn new(path: Vec<Partition>) -> Result<Self> {
        if path.first().is_none_or(|p| !p.is_empty()) {
            return Err(Error::InvalidPartition(
                "tableau path must start at the empty diagram".into(),
            ));
        }
        for w in path.windows(2) {
            if !w[0].up_neighbors().contains(&w[1]) {
                return Err(Error::InvalidPartition(format!(
                    "{} does not cover {} in the Young graph",
                    w[1], w[0]
                )));
            }
        }
        Ok(StandardTableau { path })
    }

    /// The trivial path consisting of the empty diagram alone.
    pub fn trivial() -> Self {
        StandardTableau {
            path: vec![Partition::empty()],
        }
    }

    pub fn path(&self) -> &[Partition] {
        &self.path
    }

    /// Number of cells of the final shape.
    pub fn levels(&self) -> usize {
        self.path.len() - 1
    }

    /// The final diagram.
    pub fn shape(&self) -> &Partition {
        self.path.last().expect("path is nonempty")
    }

    /// Shape at level `n` (n cells); `None` past the end.
    pub fn at_level(&self, n: usize) -> Option<&Partition> {
        self.path.get(n)
    }

    /// Extends the path by one covering step. The caller guarantees the
    /// covering relation; checked in debug builds.
    pub(crate) fn push_unchecked(&mut self, next: Partition) {
        debug_assert!(self.shape().up_neighbors().contains(&next));
        self.path.push(next);
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps = self
            .path
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" -> ");
        write!(f, "{steps}")
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StandardTableau({self})")
    }
}

/// All standard tableaux of shape `p` with the default enumeration bound.
pub fn standard_tableaux(p: &Partition) -> Result<Vec<StandardTableau>> {
    standard_tableaux_bounded(p, DEFAULT_ENUMERATION_BOUND)
}

/// All standard tableaux of shape `p`, refusing sizes above `bound`.
/// Deterministic order: at each level, continuations follow the
/// decreasing-lex order of `down_neighbors`, unwound from the top.
pub fn standard_tableaux_bounded(p: &Partition, bound: usize) -> Result<Vec<StandardTableau>> {
    if p.size() > bound {
        return Err(Error::EnumerationBound {
            size: p.size(),
            bound,
        });
    }
    fn rec(p: &Partition, out: &mut Vec<Vec<Partition>>) {
        if p.is_empty() {
            out.push(vec![Partition::empty()]);
            return;
        }
        for down in p.down_neighbors() {
            let mut sub = Vec::new();
            rec(&down, &mut sub);
            for mut path in sub {
                path.push(p.clone());
                out.push(path);
            }
        }
    }
    let mut raw = Vec::new();
    rec(p, &mut raw);
    Ok(raw
        .into_iter()
        .map(|path| StandardTableau { path })
        .collect())
}

/// Number of saturated chains from `mu` to `lambda` in the Young graph:
/// 1 on equality, 0 when `mu` is not contained in `lambda`. Computed by the
/// down-neighbor recurrence with memoization, so it scales well past the
/// enumeration bound.
pub fn count_paths(mu: &Partition, lambda: &Partition) -> BigUint {
    fn rec(mu: &Partition, lam: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
        if lam.size() == mu.size() {
            return if lam == mu {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        if !lam.contains(mu) {
            return BigUint::zero();
        }
        if let Some(v) = memo.get(lam) {
            return v.clone();
        }
        let mut acc = BigUint::zero();
        for down in lam.down_neighbors() {
            if down.contains(mu) {
                acc += rec(mu, &down, memo);
            }
        }
        memo.insert(lam.clone(), acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    rec(mu, lambda, &mut memo)
}
