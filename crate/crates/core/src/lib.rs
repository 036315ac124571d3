//! Rough-set approximation algebras over finite binary relations.
//!
//! Given a binary relation `R` on a universe `U` of at most 64 elements, this
//! crate builds the four approximation operators induced by `R` and its
//! inverse, the set families they generate, the poset of rough pairs
//! `(lower, upper)`, and its Dedekind-MacNeille completion, and classifies the
//! resulting structures (distributivity, pseudocomplements, Stone and double
//! Stone laws, Kleene negation, regularity). Every closed-form construction
//! has an independent brute-force counterpart used as an oracle by the test
//! and verification layers.

pub mod approx;
pub mod conditions;
pub mod families;
pub mod lattice;
pub mod relation;
pub mod report;
pub mod roughset;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("universe size {0} out of range (expected 1..=64)")]
    UniverseSize(usize),
    #[error("malformed relation: {0}")]
    Malformed(String),
    #[error("relation is not reflexive: pair ({0}, {0}) is missing")]
    NotReflexive(usize),
    #[error("JSON error at line {line}, column {column}: {msg}", line = .0.line(), column = .0.column(), msg = .0)]
    Json(#[from] serde_json::Error),
    #[error("{what} has {size} elements, exceeding the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("not a lattice: elements {a} and {b} have no {kind}")]
    NotALattice {
        a: usize,
        b: usize,
        kind: &'static str,
    },
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("{0} is not a member of {1}")]
    NotAMember(String, &'static str),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("invalid covering: {0}")]
    InvalidCovering(String),
    #[error("invalid block assignment: {0}")]
    InvalidAssignment(String),
    #[error("precision threshold {0} outside [0, 1]")]
    InvalidBeta(f64),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal invariant violated ({0}); this is a bug")]
    Internal(String),
    #[error("nothing to minimize: input does not fail {0}")]
    NotFailing(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Resource caps for the potentially exponential constructions.
///
/// Every builder that can blow up checks one of these and returns
/// [`Error::CapExceeded`] instead of exhausting memory.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Maximum number of members in a generated set family.
    pub family_members: usize,
    /// Maximum number of candidate pairs scanned when building a completion
    /// from the product of two families.
    pub dm_candidates: usize,
    /// Maximum number of elements in a lattice with dense meet/join tables.
    pub lattice_elements: usize,
    /// Maximum number of cuts in a Dedekind-MacNeille completion of a poset.
    pub cut_elements: usize,
    /// Maximum lattice size accepted by the backtracking isomorphism search.
    pub iso_elements: usize,
    /// Maximum universe size for full `2^n` subset enumeration.
    pub rs_exponent: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            family_members: 1 << 20,
            dm_candidates: 1 << 22,
            lattice_elements: 4096,
            cut_elements: 4096,
            iso_elements: 64,
            rs_exponent: 20,
        }
    }
}

impl Caps {
    /// Default caps, with `ROUGH_LATTICE_MAX_ELEMENTS` (if set and parseable)
    /// applied as in [`Caps::with_max_elements`].
    pub fn from_env() -> Self {
        let caps = Caps::default();
        match std::env::var("ROUGH_LATTICE_MAX_ELEMENTS") {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(m) if m > 0 => caps.with_max_elements(m),
                _ => caps,
            },
            Err(_) => caps,
        }
    }

    /// Cap the element counts of families, lattices, and completions at `m`.
    pub fn with_max_elements(mut self, m: usize) -> Self {
        self.family_members = m;
        self.lattice_elements = m;
        self.cut_elements = m;
        self
    }
}
