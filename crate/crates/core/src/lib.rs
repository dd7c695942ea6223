//! Exact combinatorics of Dyck paths counted jointly by peaks (`UD`-factors)
//! and doublerises-into-peaks (`UUD`-factors).
//!
//! The crate provides four layers that cross-check each other:
//!
//! * brute-force oracles over explicitly enumerated Dyck words ([`dyck`],
//!   [`oracle`]),
//! * exact closed-form counts with arbitrary-precision integers ([`count`]),
//! * bijections through plane trees, extended-leaf necklaces, and cyclic
//!   compositions ([`trees`], [`necklace`], [`bijection`]),
//! * a truncated trivariate generating-series solver ([`series`]) and exact
//!   polynomial analysis: Sturm chains, interlacing, gamma expansions, and
//!   symmetric decompositions ([`poly`], [`realroot`], [`symmetric`]).
//!
//! Everything is integer or rational arithmetic; no floating point is used
//! anywhere. The [`verify`] module packages the cross-checks into named
//! suites, and [`conjectures`] runs bounded sweeps for open questions without
//! asserting them.

pub mod bijection;
pub mod composition;
pub mod conjectures;
pub mod count;
pub mod dyck;
pub mod necklace;
pub mod oracle;
pub mod poly;
pub mod realroot;
pub mod series;
pub mod symmetric;
pub mod trees;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The operation needs a nonempty word.
    #[error("empty word")]
    EmptyWord,
    /// A marker sequence did not have k circles and k+1 squares.
    #[error("marker sequence must have k circles and k+1 squares, got {circles} circles and {squares} squares")]
    BadCounts { circles: usize, squares: usize },
    /// Malformed textual input (step words, trees, compositions).
    #[error("parse error: {0}")]
    Parse(String),
    /// A composition did not have the demanded sum or part count.
    #[error("bad shape: {0}")]
    BadShape(String),
    /// A necklace marking was out of range or had the wrong cardinality.
    #[error("bad marking: {0}")]
    BadMarking(String),
    /// The tree consists of a single vertex and has no leaves.
    #[error("single-vertex tree has no leaves")]
    NoLeaves,
    /// A tree did not match the vertex/leaf profile an operation requires.
    #[error("bad profile: {0}")]
    BadProfile(String),
    /// The zero polynomial was passed where a nonzero one is required.
    #[error("zero polynomial")]
    ZeroPolynomial,
    /// Interlacing inputs must be real-rooted.
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    /// Gamma expansion needs a polynomial symmetric about the given center.
    #[error("polynomial is not symmetric about degree {center}")]
    NotSymmetric { center: usize },
    /// An internal invariant of the symmetric decomposition failed.
    #[error("decomposition bug: {0}")]
    DecompositionBug(String),
    /// Truncated series operands must share one truncation order.
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    /// A sweep parameter was outside the supported range.
    #[error("bad range: {0}")]
    BadRange(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
