//! Kostka numbers by dynamic programming over column-strict fillings.
//!
//! `kostka(mu, w)` counts semistandard tableaux of shape `mu` and content
//! `w`. The DP walks the content one letter at a time; the states are the
//! intermediate shapes and each letter extends them by a horizontal strip,
//! so the count needs no explicit tableau enumeration and handles first rows
//! in the hundreds.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, Partition};
use crate::tableau::count_paths;
use crate::{Error, Result};

/// Number of semistandard Young tableaux of shape `mu` and content `weight`.
/// Invariant under permuting the weight parts; zero unless `mu` dominates
/// the sorted weight. Errors when the sizes differ.
pub fn kostka(mu: &Partition, weight: &[u32]) -> Result<BigUint> {
    let total: usize = weight.iter().map(|&w| w as usize).sum();
    if total != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "kostka needs |shape| = |weight|, got |{mu}| = {} and {total}",
            mu.size()
        )));
    }
    // Sorting the content leaves the count unchanged and prunes the DP fast:
    // a large first letter collapses the state space immediately.
    let mut content: Vec<u32> = weight.iter().copied().filter(|&w| w > 0).collect();
    content.sort_unstable_by(|a, b| b.cmp(a));

    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::new();
    states.insert(Vec::new(), BigUint::one());
    for &letter in &content {
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (shape, count) in &states {
            for grown in horizontal_strip_extensions(shape, letter, mu) {
                *next.entry(grown).or_insert_with(BigUint::zero) += count;
            }
        }
        states = next;
        if states.is_empty() {
            return Ok(BigUint::zero());
        }
    }
    Ok(states
        .remove(mu.rows())
        .unwrap_or_else(BigUint::zero))
}

/// All shapes obtained from `base` by adding a horizontal strip of `cells`
/// boxes while staying inside `bound`. A horizontal strip adds at most one
/// box per column: row i of the result may not exceed row i-1 of the base.
fn horizontal_strip_extensions(base: &[u32], cells: u32, bound: &Partition) -> Vec<Vec<u32>> {
    let max_rows = bound.num_rows();
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(max_rows);
    fn rec(
        base: &[u32],
        bound: &Partition,
        row: usize,
        remaining: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if row == bound.num_rows() {
            if remaining == 0 {
                let mut shape = current.clone();
                while shape.last() == Some(&0) {
                    shape.pop();
                }
                out.push(shape);
            }
            return;
        }
        let old = base.get(row).copied().unwrap_or(0);
        // strip condition: new row length stays <= previous base row
        let row_cap = if row == 0 {
            bound.row(0)
        } else {
            bound.row(row).min(base.get(row - 1).copied().unwrap_or(0))
        };
        if row_cap < old {
            return; // base does not fit under the bound here
        }
        let max_add = (row_cap - old).min(remaining);
        for add in 0..=max_add {
            current.push(old + add);
            rec(base, bound, row + 1, remaining - add, current, out);
            current.pop();
        }
    }
    rec(base, bound, 0, cells, &mut current, &mut out);
    out
}

/// Checks the padding identity that glues the finite mixture weights to the
/// Kostka numbers of the padded content: for every `lambda` with `big_n`
/// cells,
/// `K_{lambda, nu_N} = sum over mu dominating nu of count_paths(mu, lambda) * K_{mu, nu}`
/// where `nu_N` is `nu` padded with 1s up to `big_n` cells.
pub fn kostka_padding_identity_check(nu: &Partition, big_n: usize) -> Result<bool> {
    let n = nu.size();
    if big_n < n {
        return Err(Error::SizeMismatch(format!(
            "padding level {big_n} below |nu| = {n}"
        )));
    }
    let padded = padded_content(nu, big_n);
    let dominating: Vec<Partition> = partitions_of(n)
        .into_iter()
        .filter(|mu| mu.dominates(nu).expect("equal sizes"))
        .collect();
    for lambda in partitions_of(big_n) {
        let lhs = kostka(&lambda, &padded)?;
        let mut rhs = BigUint::zero();
        for mu in &dominating {
            rhs += count_paths(mu, &lambda) * kostka(mu, nu.rows())?;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `nu` padded with rows of length 1 up to `big_n` cells, as a content vector.
pub fn padded_content(nu: &Partition, big_n: usize) -> Vec<u32> {
    let mut content = nu.rows().to_vec();
    content.resize(content.len() + (big_n - nu.size()), 1);
    content
}
