//! Exact chromatic-polynomial machinery for K4-homeomorphs.
//!
//! A K4-homeomorph K4(a,b,c,d,e,f) is the complete graph on four vertices
//! with each edge replaced by a path; the six positive integers are the path
//! lengths. This crate computes the essential polynomial and the chromatic
//! polynomial of such graphs exactly, decides chromatic equivalence and
//! isomorphism, replays the supporting identities in Z[x]/(x^3 + x + 1), and
//! exhaustively verifies the catalog of chromatically non-unique girth-7
//! homeomorphs up to a size bound.
//!
//! Modules are layered bottom-up: [`polyring`] (sparse integer polynomials)
//! underpins [`chromatic`] and [`cubicfield`]; [`k4homeo`] models the graphs;
//! [`classify`] runs enumeration, equivalence grouping and the catalog
//! checks; [`cli`] is the command-line front end.

pub mod chromatic;
pub mod classify;
pub mod cli;
pub mod cubicfield;
pub mod k4homeo;
pub mod polyring;

use thiserror::Error;

/// Errors surfaced by the library.
///
/// Every refusal is descriptive: parse errors name the offending token,
/// domain errors name the violated constraint.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A polynomial was constructed with a negative exponent.
    #[error("negative exponent {0} in polynomial term")]
    NegativeExponent(i64),

    /// Exact division failed because the divisor does not divide the dividend.
    #[error("not divisible: remainder is nonzero after {0} elimination steps")]
    NotDivisible(usize),

    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,

    /// A polynomial (or tuple, or cubic element) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A homeomorph parameter was outside its domain.
    #[error("invalid path length {value} at position {position}: every path length must be at least 1")]
    InvalidPathLength { position: usize, value: i64 },

    /// The deletion-contraction oracle was asked for a graph above its budget.
    #[error("oracle budget exceeded: graph has {edges} edges, budget is {budget}")]
    OracleBudget { edges: usize, budget: usize },

    /// The closed-form chromatic pipeline failed its own consistency check.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    /// An enumeration or search size was outside the supported domain.
    #[error("size {size} out of range: {reason}")]
    SizeOutOfRange { size: u64, reason: String },

    /// An unknown catalog family id.
    #[error("unknown family id {0:?}")]
    UnknownFamily(String),

    /// A catalog family was instantiated outside its parameter constraints.
    #[error("family {family}: constraint violated: {constraint}")]
    FamilyConstraint { family: String, constraint: String },

    /// Search budget refusal for uniqueness verification.
    #[error("search budget exceeded: size {size} is over the budget {budget}")]
    SearchBudget { size: u64, budget: u64 },
}

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;
