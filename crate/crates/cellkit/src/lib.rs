//! Exact combinatorics of cells for signed permutation groups and the
//! associated Schur-type algebras.
//!
//! The crate has two independent computational routes and keeps them
//! separate on purpose:
//!
//! * a combinatorial route (`signed_perm`, `tableaux`, `symbols`, `cosets`)
//!   built on Robinson–Schensted insertion, symbol arithmetic and
//!   double-coset matrices, and
//! * an algebraic oracle (`hecke`) that computes canonical bases and cell
//!   preorders from scratch with exact Laurent-polynomial arithmetic.
//!
//! Integration tests cross-validate one route against the other at small
//! rank; nothing in the combinatorial route ever feeds the oracle or vice
//! versa.

pub mod cosets;
pub mod hecke;
pub mod laurent;
pub mod report;
pub mod signed_perm;
pub mod symbols;
pub mod tableaux;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("rank bound exceeded: {0}")]
    Bound(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inexact division: {0}")]
    Division(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
