//! Cross-module invariants that tie the closed combinatorial formulas to the
//! character oracle and to each other.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use young_spectra::induced::{BlockPattern, PartitionSpec};
use young_spectra::markov::{mixture_weights, BinarySequence, TransitionKernel, TwoBlockKernel};
use young_spectra::oracle::Oracle;
use young_spectra::partition::{partitions_of, Composition, Partition};
use young_spectra::verify::one_infinite_block_spec;

/// Truncations of a two-infinite-block partition have multiplicity-free
/// decompositions: the spectrum over the Gelfand-Tsetlin tower is simple.
#[test]
fn two_block_truncations_are_multiplicity_free() {
    let oracle = Oracle::new();
    for n in 1..=10usize {
        for a in 1..n {
            let blocks = Composition::new(vec![a as u32, (n - a) as u32]).unwrap();
            for lambda in partitions_of(n) {
                let mult = oracle.induced_multiplicity(&lambda, &blocks).unwrap();
                assert!(
                    mult <= BigUint::one(),
                    "multiplicity {mult} at lambda={lambda}, blocks={blocks}"
                );
            }
        }
    }
}

/// The limit weights of a one-infinite-block partition and the mixture
/// weights of its finite shape are the same rational map.
#[test]
fn limit_weights_bridge_to_mixture_weights() {
    for k in 0..=6usize {
        for lambda in partitions_of(k) {
            let spec = one_infinite_block_spec(&lambda);
            let limits = spec.limit_weights(10).unwrap();
            let mixture = mixture_weights(&lambda).unwrap();
            assert_eq!(limits, mixture, "shape {lambda}");
        }
    }
}

/// Decomposition reports carry exactly the oracle's induced multiplicities
/// of the finite part.
#[test]
fn decomposition_multiplicities_match_the_oracle() {
    let oracle = Oracle::new();
    for k in 1..=5usize {
        for lambda in partitions_of(k) {
            let spec = one_infinite_block_spec(&lambda);
            let report = spec.decompose_large().unwrap();
            let blocks = Composition::from(&lambda);
            // every entry matches the oracle, and non-entries vanish
            for mu in partitions_of(k) {
                let oracle_mult = oracle.induced_multiplicity(&mu, &blocks).unwrap();
                match report.entries.iter().find(|e| e.mu == mu) {
                    Some(entry) => assert_eq!(entry.multiplicity, oracle_mult, "mu={mu}"),
                    None => assert_eq!(oracle_mult, BigUint::from(0u32), "mu={mu}"),
                }
            }
        }
    }
}

/// Two-block kernels stay exactly normalized along every reachable state up
/// to level 30, for a non-trivial mix of prefixes and periods.
#[test]
fn two_block_kernels_normalize_far_out() {
    for (prefix, period) in [("", "01"), ("0010", "011000"), ("1", "0"), ("", "001")] {
        let xi = BinarySequence::new(prefix, period).unwrap();
        let kernel = TwoBlockKernel::new(xi.clone());
        for n in 0..=30usize {
            let m = xi.ones_up_to(n);
            for k in 0..=m.min(n - m) {
                let shape = Partition::two_row(n as u32, k as u32).unwrap();
                let transitions = kernel.transitions(n, &shape).unwrap();
                let total: BigRational = transitions.iter().map(|(_, p)| p.clone()).sum();
                assert_eq!(total, BigRational::one(), "xi={prefix}:{period}, n={n}, k={k}");
            }
        }
    }
}

/// The truncations of the even/odd two-block partition feed the kernel
/// verification: spec-level truncate agrees with the prefix count.
#[test]
fn two_block_spec_truncations_match_prefix_counts() {
    let ones = BlockPattern::new("", "01").unwrap();
    let spec = PartitionSpec::two_block(ones).unwrap();
    for n in 1..=20usize {
        let blocks = spec.truncate(n);
        let m = n / 2; // ones sit at the even positions
        let expected = if m == 0 {
            vec![n as u32]
        } else {
            vec![(n - m) as u32, m as u32] // zeros block starts at 1
        };
        assert_eq!(blocks.parts(), expected.as_slice(), "n={n}");
    }
}
