//! Property tests over randomly drawn diagrams and contents.

use proptest::collection::vec;
use proptest::prelude::*;
use young_spectra::kostka::kostka;
use young_spectra::partition::{Composition, Partition};

/// Weakly decreasing positive rows, up to 8 rows of length up to 12.
fn partitions() -> impl Strategy<Value = Partition> {
    vec(1u32..=12, 0..8).prop_map(|mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(rows).expect("sorted positive rows")
    })
}

/// A partition of exactly `n`, decided by the seed: repeatedly draw a next
/// part no larger than the previous one.
fn random_partition_of(n: usize, seed: u64) -> Partition {
    let mut state = seed;
    let mut rows = Vec::new();
    let mut remaining = n as u32;
    let mut cap = n as u32;
    while remaining > 0 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let part = 1 + ((state >> 33) as u32) % cap.min(remaining);
        rows.push(part);
        remaining -= part;
        cap = part;
    }
    Partition::new(rows).expect("weakly decreasing by construction")
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partitions()) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn conjugation_preserves_size_and_flips_extents(p in partitions()) {
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.num_rows() as u32, p.row(0));
        prop_assert_eq!(c.row(0) as usize, p.num_rows());
    }

    #[test]
    fn dominance_is_antitone_under_conjugation(n in 1usize..30, seeds in (any::<u64>(), any::<u64>())) {
        let a = random_partition_of(n, seeds.0);
        let b = random_partition_of(n, seeds.1);
        let forward = a.dominates(&b).unwrap();
        let backward = b.conjugate().dominates(&a.conjugate()).unwrap();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn kostka_ignores_content_order(p in partitions(), seed in any::<u64>()) {
        prop_assume!(p.size() > 0 && p.size() <= 14);
        let natural = kostka(&p, p.rows()).unwrap();
        prop_assert_eq!(&natural, &num_bigint::BigUint::from(1u32));
        // shuffle the content deterministically from the seed
        let mut content = p.rows().to_vec();
        let mut state = seed;
        for i in (1..content.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            content.swap(i, j);
        }
        prop_assert_eq!(kostka(&p, &content).unwrap(), natural);
    }

    #[test]
    fn partition_survives_json(p in partitions()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: Partition = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn composition_sorts_to_a_dominating_partition(parts in vec(1u32..=9, 1..7)) {
        let c = Composition::new(parts).unwrap();
        let sorted = c.sorted();
        prop_assert_eq!(sorted.size(), c.size());
        // sorting is idempotent through the partition constructor
        prop_assert_eq!(Composition::from(&sorted).sorted(), sorted);
    }
}
