//! Markov transition kernels on the Young graph and the exact measures they
//! generate: the Plancherel measure, the two-block spectral kernel driven by
//! a binary sequence, and the mixture of conditional Plancherel measures
//! attached to a finite diagram.
//!
//! Probabilities never leave exact rational arithmetic. Sampling uses
//! inverse transform over a common denominator against the deterministic
//! generator in [`crate::rng`], so identical seeds give identical paths.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::kostka::{kostka, padded_content};
use crate::partition::{factorial, partitions_of, Partition};
use crate::rng::SplitMix64;
use crate::tableau::{count_paths, standard_tableaux, StandardTableau};
use crate::{Error, Result};

/// An eventually periodic 0/1 sequence driving the two-block kernel.
///
/// The balanced-prefix condition `m(n) <= ceil(n/2)` (with `m(n)` the number
/// of 1s among the first `n` terms) is validated for all `n` at
/// construction: the ones density of the period must not exceed 1/2, and the
/// prefix plus two periods is then a sufficient finite window because with
/// that density the slack `ceil(n/2) - m(n)` never shrinks across whole
/// periods.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinarySequence {
    prefix: Vec<bool>,
    period: Vec<bool>,
}

impl BinarySequence {
    pub fn new(prefix: &str, period: &str) -> Result<Self> {
        let parse = |text: &str| -> Result<Vec<bool>> {
            text.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(Error::Parse(format!(
                        "binary sequences use only 0/1, found {other:?}"
                    ))),
                })
                .collect()
        };
        let prefix = parse(prefix)?;
        let period = parse(period)?;
        if period.is_empty() {
            return Err(Error::Parse("binary sequence period must be nonempty".into()));
        }
        let seq = BinarySequence { prefix, period };
        let ones_in_period = seq.period.iter().filter(|&&b| b).count();
        if 2 * ones_in_period > seq.period.len() {
            return Err(Error::Unbalanced(format!(
                "period carries {ones_in_period} ones in {} slots: density exceeds 1/2",
                seq.period.len()
            )));
        }
        let window = seq.prefix.len() + 2 * seq.period.len();
        for n in 1..=window {
            let m = seq.ones_up_to(n);
            if 2 * m > n + 1 {
                return Err(Error::Unbalanced(format!(
                    "m({n}) = {m} exceeds ceil({n}/2)"
                )));
            }
        }
        Ok(seq)
    }

    /// Parses `PREFIX:PERIOD`, e.g. `01:01` or `:10`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.split_once(':') {
            Some((prefix, period)) => BinarySequence::new(prefix, period),
            None => Err(Error::Parse(format!(
                "binary sequence {text:?} must have the form PREFIX:PERIOD"
            ))),
        }
    }

    /// The alternating sequence 0101...
    pub fn alternating() -> Self {
        BinarySequence::new("", "01").expect("alternating sequence is balanced")
    }

    /// The 1-based term `xi_i`.
    pub fn bit(&self, i: usize) -> bool {
        debug_assert!(i >= 1);
        if i <= self.prefix.len() {
            self.prefix[i - 1]
        } else {
            self.period[(i - self.prefix.len() - 1) % self.period.len()]
        }
    }

    /// `m(n)`: the number of 1s among the first `n` terms.
    pub fn ones_up_to(&self, n: usize) -> usize {
        (1..=n).filter(|&i| self.bit(i)).count()
    }
}

/// A level-indexed transition rule: from a diagram with `level` cells to an
/// exact distribution over its up-neighbors. Probabilities are nonnegative
/// and sum to 1 on the returned support; zero-probability branches are
/// pruned so samplers never reject.
pub trait TransitionKernel: Send + Sync {
    fn transitions(&self, level: usize, shape: &Partition)
        -> Result<Vec<(Partition, BigRational)>>;
}

fn check_level(level: usize, shape: &Partition) -> Result<()> {
    if shape.size() != level {
        return Err(Error::InvalidState(format!(
            "shape {shape} has {} cells, expected level {level}",
            shape.size()
        )));
    }
    Ok(())
}

fn assert_normalized(transitions: &[(Partition, BigRational)]) {
    debug_assert!(transitions
        .iter()
        .all(|(_, p)| p.is_positive() && *p <= BigRational::one()));
    debug_assert_eq!(
        transitions.iter().map(|(_, p)| p.clone()).sum::<BigRational>(),
        BigRational::one()
    );
}

/// The Plancherel growth kernel: `Prob(lambda, Lambda) = dim Lambda /
/// ((n+1) dim lambda)`.
pub struct PlancherelKernel {
    dims: Mutex<HashMap<Partition, BigUint>>,
}

impl PlancherelKernel {
    pub fn new() -> Self {
        PlancherelKernel {
            dims: Mutex::new(HashMap::new()),
        }
    }

    fn dim(&self, p: &Partition) -> BigUint {
        let mut cache = self.dims.lock().expect("dimension cache poisoned");
        if let Some(d) = cache.get(p) {
            return d.clone();
        }
        let d = p.dimension();
        cache.insert(p.clone(), d.clone());
        d
    }
}

impl Default for PlancherelKernel {
    fn default() -> Self {
        Self::new()
    }
}

impl TransitionKernel for PlancherelKernel {
    fn transitions(
        &self,
        level: usize,
        shape: &Partition,
    ) -> Result<Vec<(Partition, BigRational)>> {
        check_level(level, shape)?;
        let denom = BigInt::from(self.dim(shape) * BigUint::from(level as u64 + 1));
        let out: Vec<(Partition, BigRational)> = shape
            .up_neighbors()
            .into_iter()
            .map(|up| {
                let p = BigRational::new(BigInt::from(self.dim(&up)), denom.clone());
                (up, p)
            })
            .collect();
        assert_normalized(&out);
        Ok(out)
    }
}

/// Diagram-cylinder mass of the Plancherel measure: `dim^2(lambda) / n!`.
pub fn plancherel_cylinder(lambda: &Partition) -> BigRational {
    let d = lambda.dimension();
    BigRational::new(
        BigInt::from(&d * &d),
        BigInt::from(factorial(lambda.size())),
    )
}

/// The spectral kernel of a two-block partition encoded by `xi`. States are
/// the two-row diagrams `(n-k, k)`; the step from level `n` reads `xi_{n+1}`
/// and `m(n)`.
pub struct TwoBlockKernel {
    xi: BinarySequence,
}

impl TwoBlockKernel {
    pub fn new(xi: BinarySequence) -> Self {
        TwoBlockKernel { xi }
    }

    pub fn xi(&self) -> &BinarySequence {
        &self.xi
    }
}

impl TransitionKernel for TwoBlockKernel {
    fn transitions(
        &self,
        level: usize,
        shape: &Partition,
    ) -> Result<Vec<(Partition, BigRational)>> {
        check_level(level, shape)?;
        let n = level;
        let k = shape.two_row_k().ok_or_else(|| {
            Error::InvalidState(format!("two-block kernel needs two-row shapes, got {shape}"))
        })? as usize;
        let m = self.xi.ones_up_to(n);
        if k > m || k > n - m {
            return Err(Error::InvalidState(format!(
                "state (n={n}, k={k}) lies outside the support: m(n)={m}"
            )));
        }
        // denominators n-2k+1 >= 1 because k <= min(m, n-m) <= n/2
        let denom = (n - 2 * k + 1) as u64;
        let (stay_numer, up_numer) = if self.xi.bit(n + 1) {
            ((m - k + 1) as u64, (n - m - k) as u64)
        } else {
            ((n - m - k + 1) as u64, (m - k) as u64)
        };
        let mut out = Vec::with_capacity(2);
        if stay_numer > 0 {
            out.push((
                Partition::two_row((n + 1) as u32, k as u32)?,
                BigRational::new(BigInt::from(stay_numer), BigInt::from(denom)),
            ));
        }
        if up_numer > 0 {
            out.push((
                Partition::two_row((n + 1) as u32, (k + 1) as u32)?,
                BigRational::new(BigInt::from(up_numer), BigInt::from(denom)),
            ));
        }
        assert_normalized(&out);
        Ok(out)
    }
}

/// The mixture measure attached to a finite diagram `nu`: a convex
/// combination of Plancherel measures conditioned through the diagrams
/// dominating `nu` at level `|nu|`. Below that level the kernel follows the
/// mixture's own marginals; from `|nu|` on it is exactly Plancherel.
pub struct MixtureKernel {
    nu: Partition,
    fin_weights: Vec<(Partition, BigRational)>,
    plancherel: PlancherelKernel,
    masses: Mutex<HashMap<Partition, BigRational>>,
}

impl MixtureKernel {
    pub fn new(nu: Partition) -> Result<Self> {
        let fin_weights = mixture_weights(&nu)?.into_iter().collect();
        Ok(MixtureKernel {
            nu,
            fin_weights,
            plancherel: PlancherelKernel::new(),
            masses: Mutex::new(HashMap::new()),
        })
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    /// Per-path mass of any path ending at `shape` strictly below the gluing
    /// level: `sum over mu of M_fin(mu) * count_paths(shape, mu) / dim mu`.
    fn path_mass(&self, shape: &Partition) -> BigRational {
        if let Some(m) = self
            .masses
            .lock()
            .expect("mass cache poisoned")
            .get(shape)
        {
            return m.clone();
        }
        let mut total = BigRational::zero();
        for (mu, w) in &self.fin_weights {
            let paths = count_paths(shape, mu);
            if paths.is_zero() {
                continue;
            }
            total += w * BigRational::new(BigInt::from(paths), BigInt::from(mu.dimension()));
        }
        self.masses
            .lock()
            .expect("mass cache poisoned")
            .insert(shape.clone(), total.clone());
        total
    }
}

impl TransitionKernel for MixtureKernel {
    fn transitions(
        &self,
        level: usize,
        shape: &Partition,
    ) -> Result<Vec<(Partition, BigRational)>> {
        check_level(level, shape)?;
        if level >= self.nu.size() {
            return self.plancherel.transitions(level, shape);
        }
        let here = self.path_mass(shape);
        if here.is_zero() {
            return Err(Error::InvalidState(format!(
                "shape {shape} carries no mixture mass at level {level}"
            )));
        }
        let out: Vec<(Partition, BigRational)> = shape
            .up_neighbors()
            .into_iter()
            .filter_map(|up| {
                let mass = self.path_mass(&up);
                if mass.is_zero() {
                    None
                } else {
                    Some((up, mass / &here))
                }
            })
            .collect();
        assert_normalized(&out);
        Ok(out)
    }
}

/// A cylinder to evaluate: all infinite paths through a fixed initial path,
/// or through a fixed diagram at its level.
#[derive(Clone, Debug)]
pub enum CylinderQuery {
    Path(StandardTableau),
    Diagram(Partition),
}

/// Exact mass of a cylinder under the measure generated by `kernel`: the
/// product of transition probabilities along a path, or the sum of those
/// products over all standard tableaux of a diagram (subject to the
/// enumeration bound).
pub fn kernel_cylinder(kernel: &dyn TransitionKernel, query: &CylinderQuery) -> Result<BigRational> {
    match query {
        CylinderQuery::Path(u) => path_product(kernel, u),
        CylinderQuery::Diagram(lambda) => {
            let mut total = BigRational::zero();
            for u in standard_tableaux(lambda)? {
                total += path_product(kernel, &u)?;
            }
            Ok(total)
        }
    }
}

fn path_product(kernel: &dyn TransitionKernel, u: &StandardTableau) -> Result<BigRational> {
    let mut mass = BigRational::one();
    for (level, window) in u.path().windows(2).enumerate() {
        let step = kernel.transitions(level, &window[0]);
        let transitions = match step {
            Ok(t) => t,
            // paths through states outside the support carry zero mass
            Err(Error::InvalidState(_)) => return Ok(BigRational::zero()),
            Err(e) => return Err(e),
        };
        match transitions.iter().find(|(next, _)| next == &window[1]) {
            Some((_, p)) => mass *= p,
            None => return Ok(BigRational::zero()),
        }
    }
    Ok(mass)
}

/// Cylinder mass of the conditional Plancherel measure `P(. | t_n = mu)` on
/// the path cylinder of `u`: `count_paths(shape(u), mu) / dim(mu)` when the
/// shape fits inside `mu`, zero otherwise.
pub fn conditional_plancherel_cylinder(
    u: &StandardTableau,
    n: usize,
    mu: &Partition,
) -> Result<BigRational> {
    if mu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "conditioning diagram {mu} must have {n} cells"
        )));
    }
    if u.levels() > n {
        return Err(Error::SizeMismatch(format!(
            "path reaches level {} beyond the conditioning level {n}",
            u.levels()
        )));
    }
    let paths = count_paths(u.shape(), mu);
    Ok(BigRational::new(
        BigInt::from(paths),
        BigInt::from(mu.dimension()),
    ))
}

/// The finite mixture weights at level `|nu|`: diagram `mu` dominating `nu`
/// carries `K_{mu,nu} * dim(mu) * prod(nu_i!) / n!`. They sum to exactly 1.
pub fn mixture_weights(nu: &Partition) -> Result<std::collections::BTreeMap<Partition, BigRational>> {
    let n = nu.size();
    let block_fact: BigUint = nu.rows().iter().map(|&r| factorial(r as usize)).product();
    let mut out = std::collections::BTreeMap::new();
    for mu in partitions_of(n) {
        if !mu.dominates(nu)? {
            continue;
        }
        let numer = kostka(&mu, nu.rows())? * mu.dimension() * &block_fact;
        out.insert(
            mu,
            BigRational::new(BigInt::from(numer), BigInt::from(factorial(n))),
        );
    }
    debug_assert_eq!(
        out.values().cloned().sum::<BigRational>(),
        BigRational::one()
    );
    Ok(out)
}

/// Diagram-cylinder mass of the mixture measure at level `N = |lambda|`:
/// `prod(nu_i!) / N! * K_{lambda, nu_N} * dim(lambda)` with `nu_N` the
/// diagram `nu` padded by singleton rows. In debug builds the value is
/// recomputed as the mixture of conditional Plancherel masses and the two
/// routes must agree.
pub fn mixture_cylinder(nu: &Partition, lambda: &Partition) -> Result<BigRational> {
    let n = nu.size();
    let big_n = lambda.size();
    if big_n < n {
        return Err(Error::SizeMismatch(format!(
            "cylinder level {big_n} below |nu| = {n}"
        )));
    }
    let block_fact: BigUint = nu.rows().iter().map(|&r| factorial(r as usize)).product();
    let numer = kostka(lambda, &padded_content(nu, big_n))? * lambda.dimension() * block_fact;
    let value = BigRational::new(BigInt::from(numer), BigInt::from(factorial(big_n)));
    #[cfg(debug_assertions)]
    {
        let mut mix = BigRational::zero();
        for (mu, w) in mixture_weights(nu)? {
            let paths = count_paths(&mu, lambda);
            if paths.is_zero() {
                continue;
            }
            let conditional = BigRational::new(
                BigInt::from(factorial(n) * paths * lambda.dimension()),
                BigInt::from(mu.dimension() * factorial(big_n)),
            );
            mix += w * conditional;
        }
        debug_assert_eq!(value, mix, "Kostka route vs mixture route, nu={nu} lambda={lambda}");
    }
    Ok(value)
}

/// Density of the mixture measure against the Plancherel measure on the
/// level-`|nu|` cylinder through `mu`: `K_{mu,nu} * prod(nu_i!) / dim(mu)`;
/// zero when `mu` does not dominate `nu`.
pub fn mixture_density(nu: &Partition, mu: &Partition) -> Result<BigRational> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(format!(
            "density needs |mu| = |nu|, got {} and {}",
            mu.size(),
            nu.size()
        )));
    }
    let block_fact: BigUint = nu.rows().iter().map(|&r| factorial(r as usize)).product();
    let numer = kostka(mu, nu.rows())? * block_fact;
    Ok(BigRational::new(
        BigInt::from(numer),
        BigInt::from(mu.dimension()),
    ))
}

/// The `j = n - 2k` coordinates of a two-row path: a walk on the
/// non-negative integers moving by one at each step. Errors on any shape
/// with three or more rows.
pub fn walk_coordinates(t: &StandardTableau) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(t.levels());
    for (n, shape) in t.path().iter().enumerate().skip(1) {
        let k = shape.two_row_k().ok_or_else(|| {
            Error::InvalidState(format!(
                "walk coordinates need two-row shapes, level {n} has {shape}"
            ))
        })?;
        out.push(n as i64 - 2 * i64::from(k));
    }
    Ok(out)
}

/// Draws a path of the given number of levels with exact inverse-transform
/// sampling. Identical `(kernel, levels, seed)` give identical paths.
pub fn sample_path(
    kernel: &dyn TransitionKernel,
    levels: usize,
    seed: u64,
) -> Result<StandardTableau> {
    sample_path_with(kernel, levels, &mut SplitMix64::new(seed))
}

/// Sampler over a caller-owned generator stream; used to draw independent
/// samples from per-index streams.
pub fn sample_path_with(
    kernel: &dyn TransitionKernel,
    levels: usize,
    rng: &mut SplitMix64,
) -> Result<StandardTableau> {
    let mut path = StandardTableau::trivial();
    for level in 0..levels {
        let transitions = kernel.transitions(level, &path.shape().clone())?;
        if transitions.is_empty() {
            return Err(Error::InvalidState(format!(
                "kernel support is empty at level {level}, shape {}",
                path.shape()
            )));
        }
        // scale all probabilities to a common denominator and draw uniformly
        let denom = transitions
            .iter()
            .fold(BigInt::one(), |acc, (_, p)| acc.lcm(p.denom()));
        let draw = rng.below(&denom.to_biguint().expect("positive lcm"));
        let mut cursor = BigUint::zero();
        let mut chosen = None;
        for (next, p) in &transitions {
            let ticket = (p.numer() * (&denom / p.denom()))
                .to_biguint()
                .expect("positive probability");
            cursor += ticket;
            if draw < cursor {
                chosen = Some(next.clone());
                break;
            }
        }
        let next = chosen.expect("tickets sum to the denominator");
        path.push_unchecked(next);
    }
    Ok(path)
}
