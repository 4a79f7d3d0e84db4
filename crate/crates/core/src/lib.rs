//! Exact-arithmetic toolkit for Young-graph combinatorics and the spectral
//! analysis of symmetric-group representations induced from Young subgroups.
//!
//! Everything that is a count is a big integer and everything that is a
//! probability, weight, or density is an exact rational. Floating point
//! appears only in display helpers and is always labelled as approximate.
//!
//! Module map:
//! - [`partition`]: Young diagrams, dominance, hook-length dimensions, the
//!   Young graph.
//! - [`tableau`]: standard tableaux as paths in the Young graph, path counts.
//! - [`kostka`]: semistandard tableau counts and the padding identity.
//! - [`oracle`]: brute-force character theory of finite symmetric groups
//!   (Murnaghan–Nakayama), induced multiplicities, exact spectral weights.
//! - [`induced`]: finitely described partitions of the positive integers,
//!   type vectors, large/small classification, decompositions, limit weights.
//! - [`markov`]: transition kernels on the Young graph (Plancherel,
//!   two-block, mixture), exact cylinder masses, seeded samplers.
//! - [`verify`]: the cross-validation suites tying the closed forms to the
//!   character oracle.

pub mod induced;
pub mod kostka;
pub mod markov;
pub mod numfmt;
pub mod oracle;
pub mod partition;
pub mod rng;
pub mod tableau;
pub mod verify;

pub use induced::{Classification, DecompositionReport, PartitionSpec, TypeVector};
pub use markov::{BinarySequence, CylinderQuery, TransitionKernel};
pub use oracle::{CharacterTable, CycleType, Oracle};
pub use partition::{Composition, Partition};
pub use tableau::StandardTableau;

/// Default cap for symmetric-group sizes handled by the character oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 10;

/// Default cap for explicit tableau enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

/// Errors surfaced by the library. Domain preconditions are reported with
/// the reason they were violated rather than a generic failure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("enumeration bound exceeded: size {size} > bound {bound}")]
    EnumerationBound { size: usize, bound: usize },
    #[error("oracle bound exceeded: n = {n} > bound {bound}")]
    OracleBound { n: usize, bound: usize },
    #[error("oracle inconsistency: {0}")]
    OracleInconsistency(String),
    #[error("invalid partition spec: {0}")]
    InvalidSpec(String),
    #[error("classification mismatch: {0}")]
    WrongClassification(String),
    #[error("factor criterion hypotheses unmet: {0}")]
    HypothesesUnmet(String),
    #[error("tail equivalence undecidable: {0}")]
    Undecidable(String),
    #[error("unbalanced binary sequence: {0}")]
    Unbalanced(String),
    #[error("state outside the measure's support: {0}")]
    InvalidState(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
