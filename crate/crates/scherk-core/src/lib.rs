//! Exact combinatorics of iterated differential operators.
//!
//! The crate expands powers of `f(x) D` (with `D = d/dx`) into normal-ordered
//! form, computes the integer coefficient families that appear there —
//! Stirling and Eulerian numbers, the tree counts `gamma_{p;a}`, and the
//! generalized Stirling coefficients `alpha_{pm}(k)` / `beta_{pm}(k)` — and
//! cross-checks every closed form against independent enumeration oracles
//! (increasing trees, ball/urn distributions, `(p,k)`-forests) and a
//! truncated formal-power-series engine over exact rationals.
//!
//! Everything is `no_std` + `alloc`; there is no floating point anywhere.

#![no_std]

extern crate alloc;

pub mod alpha_beta;
pub mod exact_numbers;
pub mod gamma;
pub mod increasing_trees;
pub mod multi_index;
pub mod operator_engine;
pub mod pk_forests;
pub mod report;

use core::fmt;

/// Errors raised by operations whose preconditions can be violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An argument fell outside the documented range for the operation.
    OutOfRange(&'static str),
    /// A coefficient was requested for a multi-index outside its support.
    NotInSupport,
    /// A series has no trustworthy coefficients left to differentiate.
    SeriesExhausted,
    /// A series does not carry enough valid coefficients for the request.
    InsufficientValidity { needed: usize, available: usize },
    /// A vertex sequence is not a DFS code of an increasing tree.
    InvalidDfsSequence(&'static str),
    /// A ball/urn assignment violates a placement rule.
    InvalidDistribution(&'static str),
    /// A forest or colored tree violates a structural invariant.
    InvalidStructure(&'static str),
    /// An enumeration would exceed the configured object budget.
    BudgetExceeded { budget: u64 },
    /// The coloring machinery needs `k >= 2`; `k = 1` reduces to `x D`.
    UnsupportedK,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange(what) => write!(f, "argument out of range: {what}"),
            Error::NotInSupport => write!(f, "multi-index outside the coefficient support"),
            Error::SeriesExhausted => write!(f, "series validity exhausted"),
            Error::InsufficientValidity { needed, available } => {
                write!(f, "series validity {available} too small, need {needed}")
            }
            Error::InvalidDfsSequence(why) => write!(f, "invalid DFS sequence: {why}"),
            Error::InvalidDistribution(why) => write!(f, "invalid distribution: {why}"),
            Error::InvalidStructure(why) => write!(f, "invalid structure: {why}"),
            Error::BudgetExceeded { budget } => {
                write!(f, "enumeration exceeds budget of {budget} objects")
            }
            Error::UnsupportedK => write!(f, "k = 1 is not supported here; use the xD expansion"),
        }
    }
}

pub use exact_numbers::{Integer, Rational};
