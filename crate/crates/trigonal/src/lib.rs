//! Exact-arithmetic toolkit for the monodromy of trigonal curves.
//!
//! Everything here is computed over ℤ or GF(2) — no floats, no tolerances.
//! The crate is organised bottom-up:
//!
//! * [`f2`] — bit-packed GF(2) vectors/matrices and mod-2 quadratic spaces
//!   (Gram pairing + quadratic refinement, radical, Arf invariant).
//! * [`lattice`] — integer Gram blocks (E8, U, D4), Milnor lattices of the
//!   relevant plane curve singularities, Smith normal form.
//! * [`diagram`] — the two intersection diagrams that drive everything:
//!   the chain-with-chords diagram on 2g+2 vertices and the two-row ladder
//!   graph, together with their mod-2 adjacency forms.
//! * [`words`] — free-group words, the two finite presentations built on the
//!   diagrams, the generator dictionary between them, and the paired-letter
//!   bridge identities.
//! * [`sympl`] — transvection representations on the 2g-dimensional quotient,
//!   relator verification, centrality checks, and a deterministic
//!   Schreier–Sims engine for group orders.
//! * [`geom`] — numerology of the branch curve: degree/cusp/node counts,
//!   Plücker duals, Maroni strata.
//! * [`report`] / [`reports`] — structured pass/fail/info reports shared by
//!   the CLI and the C ABI.
//!
//! Determinism is part of the contract: every function here produces
//! identical output for identical input, including iteration orders.

pub mod diagram;
pub mod export;
pub mod f2;
pub mod geom;
pub mod lattice;
pub mod report;
pub mod reports;
pub mod sympl;
pub mod words;

/// Seed used by sampled (non-exhaustive) checks when the caller does not
/// supply one. Fixed so that default runs are byte-reproducible.
pub const DEFAULT_SEED: u64 = 0x5eed_2a71;

/// Crate-wide error type. Programmer errors (dimension mismatches,
/// out-of-range indices) panic instead; these variants are for conditions a
/// caller can reasonably trigger or must be able to report.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The genus does not satisfy the precondition of the requested
    /// construction (e.g. the chain diagram needs g ≡ 1 mod 3).
    #[error("invalid genus {g}: {reason}")]
    InvalidGenus { g: u64, reason: &'static str },

    /// Maroni invariant out of range or of the wrong parity.
    #[error("invalid Maroni invariant {m}: {reason}")]
    InvalidMaroni { m: i64, reason: &'static str },

    /// A quadratic-space operation received structurally unsuitable data.
    #[error("quadratic form: {0}")]
    Form(&'static str),

    /// Exact integer arithmetic left the representable range.
    #[error("integer overflow during {0}")]
    Overflow(&'static str),

    /// Plücker dual data violates the hypotheses (negative computed count).
    #[error("Plücker hypotheses fail: {0}")]
    Plucker(String),

    /// Stabilizer-chain point encoding only supports small dimensions.
    #[error("dimension {dim} exceeds supported bound {max} for stabilizer chains")]
    DimTooLarge { dim: usize, max: usize },

    /// A matrix expected to be invertible is singular.
    #[error("matrix is not invertible")]
    NotInvertible,

    /// An internal cross-check that should be unconditionally true failed.
    /// Seeing this means a bug, not bad input.
    #[error("internal consistency check failed: {0}")]
    SelfCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
