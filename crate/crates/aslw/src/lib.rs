#![forbid(unsafe_code)]
//! Affine standard Lyndon words for untwisted affine root systems.
//!
//! This crate computes *standard Lyndon words* attached to the positive roots
//! of an untwisted affine Kac–Moody algebra, for an arbitrary total order on
//! the extended simple-root alphabet, and mechanically verifies the structural
//! properties of the resulting convex order: convexity, chain monotonicity,
//! flag compatibility across imaginary levels, and the periodic structure of
//! imaginary words.
//!
//! # Layout
//!
//! * [`words`] — order-parametric combinatorics on words: lexicographic
//!   comparison, Lyndon testing, canonical (Duval), costandard and standard
//!   factorizations, plus a suite of testable factorization laws.
//! * [`rootsystem`] — finite root-system data for types A–G, affinization,
//!   degree arithmetic, and enumeration of extended affine roots.
//! * [`liealg`] — scalar-free evaluation of standard bracketings in the
//!   positive loop algebra, and exact rational independence tracking.
//! * [`slw`] — the generalized Leclerc engine producing the table of affine
//!   standard Lyndon words together with the per-level flags.
//! * [`analysis`] — the structural apparatus over a computed table:
//!   `M_k`/`m_k`, interaction sets, W-sets, convexity/monotonicity/flag-shift
//!   verifiers, the imaginary-word conjecture checker, block-format parsing,
//!   and periodicity detection.
//! * [`oracle`] — independent cross-checks: brute-force word enumeration and
//!   a full-scalar matrix model of the loop algebra for small types.
//!
//! # Quick start
//!
//! ```
//! use aslw::rootsystem::AffineSystem;
//! use aslw::slw::SLTable;
//!
//! // G_2 with the alphabet order 0 < 1 < 2 on (alpha_0, alpha_1, alpha_2).
//! let sys = AffineSystem::from_descriptor("G2:0,1,2")?;
//! let mut table = SLTable::new(sys);
//! table.generate_up_to(1)?;
//!
//! let delta_words = table.imaginary_words(1).unwrap();
//! assert_eq!(delta_words[0].to_string(), "012221");
//! assert_eq!(delta_words[1].to_string(), "012212");
//! # Ok::<(), aslw::Error>(())
//! ```

pub mod analysis;
pub mod liealg;
pub mod oracle;
pub mod rootsystem;
pub mod slw;
pub mod words;

use thiserror::Error;

/// Top-level error type aggregating the per-module failures.
#[derive(Debug, Error)]
pub enum Error {
    /// A word-level failure (empty word, bad parse, non-Lyndon input, …).
    #[error(transparent)]
    Word(#[from] words::WordError),
    /// A root-system failure (invalid type/rank, bad descriptor, …).
    #[error(transparent)]
    RootSystem(#[from] rootsystem::RootSystemError),
    /// A Lie-algebra failure (zero vector inserted into a span, …).
    #[error(transparent)]
    Lie(#[from] liealg::LieError),
    /// A standard-Lyndon-engine failure (uncomputed root, cache mismatch, …).
    #[error(transparent)]
    Slw(#[from] slw::SlwError),
    /// An analysis failure (insufficient generation depth, …).
    #[error(transparent)]
    Analysis(#[from] analysis::AnalysisError),
    /// An oracle failure (unsupported type, model self-check, …).
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
}
