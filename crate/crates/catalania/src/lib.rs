//! Exact symbolic computation of Catalan functions and generalized Kostka
//! polynomials attached to root ideals.
//!
//! The library works in the character ring of the rank-`n` torus extended by a
//! loop grading `q` and a level: every [`character::GradedCharacter`] is an
//! integer Laurent polynomial in `x_1..x_n` and `q`, tagged with one global
//! level. Level-aware Demazure operators (`demazure`) act on these characters;
//! two operator pipelines (`catalan::m_route`, `catalan::n_route`) build the
//! same graded character of a generalized Demazure module from a root ideal, a
//! partition, and a permutation. Independent combinatorial oracles (`oracle`)
//! cross-check everything: charge-statistic Kostka-Foulkes polynomials,
//! tableau enumeration, division-based Demazure operators, and a truncated
//! raising-operator expansion.
//!
//! Modules
//! - [`lattice`]: partitions, affine weights with level, reflections,
//!   permutations, reduced words.
//! - [`root_ideal`]: Dyck-path root ideals and their invariants.
//! - [`character`]: the exact character ring, Schur polynomials, Schur
//!   expansion.
//! - [`demazure`]: string-formula Demazure operators and composition plans.
//! - [`catalan`]: the two route constructions, Catalan functions `H`, and
//!   Kostka polynomial extraction.
//! - [`oracle`]: brute-force reference implementations used for validation.

pub mod catalan;
pub mod character;
pub mod demazure;
pub mod lattice;
pub mod oracle;
pub mod root_ideal;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for rank {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: i64, right: i64 },

    #[error("rank {n} too small: affine operators need n >= 2")]
    RankTooSmall { n: usize },

    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("partition has {len} parts, more than rank {n}")]
    PartitionTooLong { len: usize, n: usize },

    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },

    #[error("invalid interval [{a}, {b}] for rank {n}")]
    InvalidInterval { a: usize, b: usize, n: usize },

    #[error("not a root ideal: {reason}")]
    NotAnIdeal { reason: String },

    #[error("root ({i},{j}) out of range: need 1 <= i < j <= {n}")]
    RootOutOfRange { i: usize, j: usize, n: usize },

    #[error("negative multiplicity {mult} in character twist")]
    NegativeMultiplicity { mult: i64 },

    #[error("character is not symmetric in x")]
    NotSymmetric,

    #[error("character has a negative exponent; Schur expansion needs polynomial input")]
    NegativeExponent,

    #[error("exact division failed: operator engine and oracle disagree")]
    DivisionNotExact,

    #[error("size mismatch: |shape| = {shape} but |content| = {content}")]
    SizeMismatch { shape: i64, content: i64 },

    #[error("content is not a partition: {reason}")]
    NonPartitionContent { reason: String },

    #[error("invalid word letter {letter} for rank {n}: {reason}")]
    InvalidWordLetter {
        letter: usize,
        n: usize,
        reason: String,
    },

    #[error("invalid composition index: i = {i}, e = {e} for rank {n}")]
    InvalidCompositionIndex { i: usize, e: usize, n: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
