//! Deterministic 64-bit generator for reproducible sampling.
//!
//! SplitMix64: a fixed-increment Weyl sequence pushed through a finalizer.
//! States derived from `(seed, stream)` give independent streams, so
//! concurrent samplers with distinct stream indices never share state. The
//! exact output sequence is part of the crate's reproducibility contract.

use num_bigint::BigUint;
use num_traits::Zero;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// SplitMix64 stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Stream `index` of the generator family seeded by `seed`. Distinct
    /// indices give unrelated state trajectories.
    pub fn stream(seed: u64, index: u64) -> Self {
        SplitMix64 {
            state: mix(seed ^ mix(index.wrapping_mul(GOLDEN_GAMMA).wrapping_add(GOLDEN_GAMMA))),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform big integer in `[0, bound)` by rejection on the top bits;
    /// `bound` must be positive.
    pub fn below(&mut self, bound: &BigUint) -> BigUint {
        assert!(!bound.is_zero(), "uniform draw needs a positive bound");
        let bits = bound.bits();
        loop {
            let candidate = self.random_bits(bits);
            if &candidate < bound {
                return candidate;
            }
        }
    }

    /// A big integer drawn uniformly from `bits` random bits.
    fn random_bits(&mut self, bits: u64) -> BigUint {
        let words = bits.div_ceil(64);
        let mut digits = Vec::with_capacity(words as usize);
        for _ in 0..words {
            digits.push(self.next_u64());
        }
        let extra = (words * 64 - bits) as u32;
        if extra > 0 {
            let last = digits.last_mut().expect("at least one word");
            *last >>= extra;
        }
        BigUint::from_slice(
            &digits
                .iter()
                .flat_map(|&d| [(d & 0xFFFF_FFFF) as u32, (d >> 32) as u32])
                .collect::<Vec<_>>(),
        )
    }
}
