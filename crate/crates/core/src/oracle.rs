//! Brute-force character theory of finite symmetric groups.
//!
//! This module is the independent oracle of the crate: induced multiplicities
//! and spectral weights are computed here straight from character sums (the
//! Frobenius reciprocity route), never through Kostka numbers, so the two
//! routes can be compared exhaustively.
//!
//! Characters are evaluated with the Murnaghan–Nakayama border-strip
//! recursion in its beta-number form: removing a rim hook of length `r`
//! replaces one first-column hook length `b` by `b - r`, with the sign given
//! by the number of beta values jumped over.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::{factorial, partitions_of, Composition, Partition};
use crate::{Error, Result, DEFAULT_ORACLE_BOUND};

/// A conjugacy class of a symmetric group: the cycle lengths and the number
/// of permutations with that cycle structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleType {
    pub cycles: Partition,
    pub class_size: BigUint,
}

/// All cycle types of the symmetric group of degree `n`, with class sizes
/// `n! / z_rho` where `z_rho` is the centralizer order. Sizes sum to `n!`.
pub fn cycle_types(n: usize) -> Vec<CycleType> {
    let nf = factorial(n);
    partitions_of(n)
        .into_iter()
        .map(|cycles| {
            let z = centralizer_order(&cycles);
            let class_size = &nf / z;
            CycleType { cycles, class_size }
        })
        .collect()
}

/// Centralizer order of a cycle type: product over lengths `i` of
/// `i^{m_i} * m_i!` with `m_i` the multiplicity of `i`.
fn centralizer_order(cycles: &Partition) -> BigUint {
    let mut mult: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in cycles.rows() {
        *mult.entry(c).or_insert(0) += 1;
    }
    let mut z = BigUint::one();
    for (len, m) in mult {
        z *= BigUint::from(len as u64).pow(m as u32);
        z *= factorial(m);
    }
    z
}

/// The irreducible character of the symmetric group indexed by `lambda`,
/// evaluated on the class `rho`, by the Murnaghan–Nakayama recursion.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "character needs |lambda| = |rho|, got {} and {}",
            lambda.size(),
            rho.size()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn_character(lambda.rows(), rho.rows(), &mut memo))
}

fn mn_character(
    lambda: &[u32],
    cycles: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>,
) -> BigInt {
    if cycles.is_empty() {
        return BigInt::one(); // empty diagram, empty class
    }
    let key = (lambda.to_vec(), cycles.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = cycles[0];
    let rest = &cycles[1..];
    // beta numbers: strictly decreasing first-column hook lengths
    let len = lambda.len();
    let betas: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &row)| row + (len - 1 - i) as u32)
        .collect();
    let mut total = BigInt::zero();
    for (i, &b) in betas.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if betas.contains(&target) {
            continue;
        }
        // betas are sorted decreasingly; count values strictly between
        let jumped = betas
            .iter()
            .filter(|&&x| x > target && x < b)
            .count();
        let mut new_betas = betas.clone();
        new_betas[i] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let new_lambda = betas_to_partition(&new_betas);
        let term = mn_character(&new_lambda, rest, memo);
        if jumped % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Converts a strictly decreasing beta set back to row lengths, dropping
/// zero rows.
fn betas_to_partition(betas: &[u32]) -> Vec<u32> {
    let len = betas.len();
    let mut rows: Vec<u32> = betas
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i) as u32)
        .collect();
    while rows.last() == Some(&0) {
        rows.pop();
    }
    rows
}

/// The full character table of the symmetric group of degree `n`.
pub struct CharacterTable {
    pub n: usize,
    /// Row order: `partitions_of(n)`; column order: `cycle_types(n)`.
    pub diagrams: Vec<Partition>,
    pub classes: Vec<CycleType>,
    values: BTreeMap<(Partition, Partition), BigInt>,
}

impl CharacterTable {
    pub fn build(n: usize) -> Result<Self> {
        let diagrams = partitions_of(n);
        let classes = cycle_types(n);
        let mut values = BTreeMap::new();
        for lam in &diagrams {
            let mut memo = HashMap::new();
            for class in &classes {
                let chi = mn_character(lam.rows(), class.cycles.rows(), &mut memo);
                values.insert((lam.clone(), class.cycles.clone()), chi);
            }
        }
        Ok(CharacterTable {
            n,
            diagrams,
            classes,
            values,
        })
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<&BigInt> {
        self.values.get(&(lambda.clone(), rho.clone()))
    }
}

impl fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharacterTable(n = {})", self.n)
    }
}

/// The character oracle with its degree bound. Character tables are memoized
/// per degree behind a mutex; the memo is write-once per degree, so fills are
/// idempotent and the cache behaves as if absent.
pub struct Oracle {
    bound: usize,
    tables: Mutex<BTreeMap<usize, std::sync::Arc<CharacterTable>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::with_bound(DEFAULT_ORACLE_BOUND)
    }
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::default()
    }

    pub fn with_bound(bound: usize) -> Self {
        Oracle {
            bound,
            tables: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.bound {
            return Err(Error::OracleBound {
                n,
                bound: self.bound,
            });
        }
        Ok(())
    }

    pub fn character_table(&self, n: usize) -> Result<std::sync::Arc<CharacterTable>> {
        self.check(n)?;
        let mut tables = self.tables.lock().expect("oracle cache poisoned");
        if let Some(t) = tables.get(&n) {
            return Ok(t.clone());
        }
        let table = std::sync::Arc::new(CharacterTable::build(n)?);
        tables.insert(n, table.clone());
        Ok(table)
    }

    pub fn cycle_types(&self, n: usize) -> Result<Vec<CycleType>> {
        if n == 0 {
            return Err(Error::OracleBound { n: 0, bound: 0 });
        }
        self.check(n)?;
        Ok(cycle_types(n))
    }

    /// For each ambient cycle type of the symmetric group of degree `n`, the
    /// number of elements of the Young subgroup with the given block sizes
    /// falling in that class. Computed by convolving the per-block class
    /// distributions, never by element enumeration; values sum to the
    /// subgroup order.
    pub fn subgroup_class_weights(
        &self,
        blocks: &Composition,
    ) -> Result<BTreeMap<Partition, BigUint>> {
        let n = blocks.size();
        self.check(n)?;
        let mut acc: BTreeMap<Partition, BigUint> = BTreeMap::new();
        acc.insert(Partition::empty(), BigUint::one());
        for &b in blocks.parts() {
            let block_types = cycle_types(b as usize);
            let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
            for (ambient, count) in &acc {
                for t in &block_types {
                    let merged = merge_cycle_types(ambient, &t.cycles);
                    let add = count * &t.class_size;
                    *next.entry(merged).or_insert_with(BigUint::zero) += add;
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Multiplicity of the irreducible indexed by `lambda` in the
    /// representation induced from the identity of the Young subgroup with
    /// the given blocks: `(1/|H|) * sum over h in H of chi_lambda(h)`, via
    /// the class weights. Errors if the character sum is not divisible by
    /// `|H|` — that would be an oracle bug, not a caller mistake.
    pub fn induced_multiplicity(
        &self,
        lambda: &Partition,
        blocks: &Composition,
    ) -> Result<BigUint> {
        let n = blocks.size();
        if lambda.size() != n {
            return Err(Error::SizeMismatch(format!(
                "induced multiplicity needs |lambda| = sum(blocks), got {} and {n}",
                lambda.size()
            )));
        }
        self.check(n)?;
        let table = self.character_table(n)?;
        let weights = self.subgroup_class_weights(blocks)?;
        let mut sum = BigInt::zero();
        for (rho, weight) in &weights {
            let chi = table
                .value(lambda, rho)
                .expect("class enumerations agree");
            sum += BigInt::from(weight.clone()) * chi;
        }
        let order = BigInt::from(blocks.block_factorial());
        let (q, r) = num_integer::Integer::div_rem(&sum, &order);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::OracleInconsistency(format!(
                "character sum {sum} not a non-negative multiple of |H| = {order} \
                 for lambda = {lambda}, blocks = {blocks}"
            )));
        }
        Ok(q.to_biguint().expect("checked non-negative"))
    }

    /// Squared norm of the projection of the distinguished cyclic vector of
    /// the induced representation onto the primary component indexed by
    /// `lambda`: `multiplicity * dim(lambda) * |H| / n!`. Always in [0, 1].
    pub fn spectral_weight_exact(
        &self,
        lambda: &Partition,
        blocks: &Composition,
    ) -> Result<BigRational> {
        let n = blocks.size();
        let mult = self.induced_multiplicity(lambda, blocks)?;
        let numer = mult * lambda.dimension() * blocks.block_factorial();
        let weight = BigRational::new(BigInt::from(numer), BigInt::from(factorial(n)));
        debug_assert!(!weight.is_negative() && weight <= BigRational::one());
        Ok(weight)
    }
}

/// Multiset union of two cycle types.
fn merge_cycle_types(a: &Partition, b: &Partition) -> Partition {
    let mut rows: Vec<u32> = a.rows().iter().chain(b.rows().iter()).copied().collect();
    rows.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(rows).expect("merging partitions preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_of, Partition};

    fn p(rows: &[u32]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cycle_type_counts() {
        let t1 = cycle_types(1);
        assert_eq!(t1.len(), 1);
        assert_eq!(t1[0].class_size, BigUint::one());

        let t3 = cycle_types(3);
        let sizes: BTreeMap<String, BigUint> = t3
            .iter()
            .map(|t| (t.cycles.to_string(), t.class_size.clone()))
            .collect();
        assert_eq!(sizes["1,1,1"], BigUint::from(1u32));
        assert_eq!(sizes["2,1"], BigUint::from(3u32));
        assert_eq!(sizes["3"], BigUint::from(2u32));

        for n in 1..=8 {
            let total: BigUint = cycle_types(n).iter().map(|t| t.class_size.clone()).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
        assert_eq!(cycle_types(4).len(), 5);
    }

    #[test]
    fn character_examples() {
        for n in 1..=6 {
            let identity = p(&vec![1u32; n]);
            for lam in partitions_of(n) {
                assert_eq!(
                    character(&lam, &identity).unwrap(),
                    BigInt::from(lam.dimension()),
                    "lambda = {lam}"
                );
                for rho in partitions_of(n) {
                    // trivial representation
                    assert_eq!(character(&p(&[n as u32]), &rho).unwrap(), BigInt::one());
                }
            }
        }
        assert_eq!(character(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(-1));
        assert!(character(&p(&[2]), &p(&[3])).is_err());
    }

    #[test]
    fn sign_character_is_parity() {
        for n in 1..=7 {
            let sign_diagram = p(&vec![1u32; n]);
            for rho in partitions_of(n) {
                let transpositions: usize = rho
                    .rows()
                    .iter()
                    .map(|&cyc| (cyc - 1) as usize)
                    .sum();
                let expected = if transpositions.is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(
                    character(&sign_diagram, &rho).unwrap(),
                    BigInt::from(expected),
                    "rho = {rho}"
                );
            }
        }
    }

    #[test]
    fn orthogonality_relations() {
        for n in 1..=8 {
            let table = CharacterTable::build(n).unwrap();
            let nf = BigInt::from(factorial(n));
            // rows
            for a in &table.diagrams {
                for b in &table.diagrams {
                    let mut sum = BigInt::zero();
                    for class in &table.classes {
                        sum += BigInt::from(class.class_size.clone())
                            * table.value(a, &class.cycles).unwrap()
                            * table.value(b, &class.cycles).unwrap();
                    }
                    let expected = if a == b { nf.clone() } else { BigInt::zero() };
                    assert_eq!(sum, expected, "rows {a}, {b}, n = {n}");
                }
            }
            // columns
            for x in &table.classes {
                for y in &table.classes {
                    let mut sum = BigInt::zero();
                    for lam in &table.diagrams {
                        sum += table.value(lam, &x.cycles).unwrap()
                            * table.value(lam, &y.cycles).unwrap();
                    }
                    if x.cycles == y.cycles {
                        // centralizer order n!/|class|
                        let z = &nf / BigInt::from(x.class_size.clone());
                        assert_eq!(sum, z);
                    } else {
                        assert_eq!(sum, BigInt::zero());
                    }
                }
            }
        }
    }

    #[test]
    fn subgroup_class_weight_examples() {
        let oracle = Oracle::new();
        // full group: class sizes themselves
        let full = oracle.subgroup_class_weights(&c(&[5])).unwrap();
        for t in cycle_types(5) {
            assert_eq!(full[&t.cycles], t.class_size);
        }
        // trivial subgroup: all weight on the identity type
        let trivial = oracle.subgroup_class_weights(&c(&[1, 1, 1])).unwrap();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[&p(&[1, 1, 1])], BigUint::one());
        // S_2 x S_1 inside S_3
        let mixed = oracle.subgroup_class_weights(&c(&[2, 1])).unwrap();
        assert_eq!(mixed.len(), 2);
        assert_eq!(mixed[&p(&[1, 1, 1])], BigUint::one());
        assert_eq!(mixed[&p(&[2, 1])], BigUint::one());
        // totals
        for blocks in [c(&[2, 2]), c(&[3, 2, 1]), c(&[4, 4])] {
            let weights = oracle.subgroup_class_weights(&blocks).unwrap();
            let total: BigUint = weights.values().cloned().sum();
            assert_eq!(total, blocks.block_factorial(), "blocks = {blocks}");
        }
    }

    #[test]
    fn induced_multiplicity_examples() {
        let oracle = Oracle::new();
        // blocks sorted to lambda itself: multiplicity 1
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let blocks = Composition::from(&lam);
                assert_eq!(
                    oracle.induced_multiplicity(&lam, &blocks).unwrap(),
                    BigUint::one(),
                    "lambda = {lam}"
                );
                // trivial representation appears exactly once
                assert_eq!(
                    oracle
                        .induced_multiplicity(&p(&[n as u32]), &blocks)
                        .unwrap(),
                    BigUint::one()
                );
            }
        }
        // regular representation: multiplicity = dimension
        assert_eq!(
            oracle
                .induced_multiplicity(&p(&[2, 1]), &c(&[1, 1, 1]))
                .unwrap(),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn spectral_weight_examples() {
        let oracle = Oracle::new();
        let w = oracle
            .spectral_weight_exact(&p(&[2, 2]), &c(&[2, 2]))
            .unwrap();
        assert_eq!(w, BigRational::new(BigInt::from(1), BigInt::from(3)));
        let id = oracle.spectral_weight_exact(&p(&[5]), &c(&[5])).unwrap();
        assert_eq!(id, BigRational::one());
        // projections resolve the identity
        let total: BigRational = partitions_of(4)
            .iter()
            .map(|lam| oracle.spectral_weight_exact(lam, &c(&[2, 2])).unwrap())
            .sum();
        assert_eq!(total, BigRational::one());
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let oracle = Oracle::with_bound(4);
        assert!(oracle.character_table(4).is_ok());
        assert!(matches!(
            oracle.character_table(5),
            Err(Error::OracleBound { n: 5, bound: 4 })
        ));
        assert!(oracle.cycle_types(0).is_err());
    }
}
